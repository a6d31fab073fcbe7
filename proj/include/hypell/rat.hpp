#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "hypell/errors.hpp"

namespace hypell {

// Exact arbitrary-precision integers and rationals. Rat is always kept in
// lowest terms with positive denominator (mpq_class canonicalizes).
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, long e);

// Exact integer square root test; if root != nullptr it receives the
// nonnegative root on success.
bool is_square(const Int& n, Int* root = nullptr);
bool is_square(const Rat& q, Rat* root = nullptr);

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw domain_error("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int factorial(unsigned long n);

// n is assumed to fit; throws capability_error otherwise. Used where the
// contract bounds the value (exponents, degrees, small counts).
long to_long(const Int& n);

// Parses "n" or "n/d" with optional sign, exact. Throws io_error on any
// malformed input including d == 0.
Rat parse_rat(const std::string& s);

// Inverse of parse_rat: "n" when the denominator is 1, else "n/d".
std::string format_rat(const Rat& q);

// Legendre symbol via GMP; p must be an odd prime.
int legendre(const Int& a, const Int& p);

bool is_probable_prime(const Int& n);

// Deterministic enumeration order for Q used by all samplers: ascending
// height max(|num|, den), then ascending den, then ascending num.
std::optional<Rat> next_rational(const Rat& q);
Rat first_rational();

} // namespace hypell
