#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypell/qpoly.hpp"

namespace hypell {

// Modular arithmetic on machine words; p is an odd prime below 2^31 so all
// products fit in int64 before reduction.
int64_t mod_pow(int64_t b, int64_t e, int64_t p);
int64_t mod_inv(int64_t a, int64_t p);

// Dense univariate polynomial over F_p, coefficients in [0, p), trimmed.
class FpPoly {
  public:
    FpPoly() : p_(0) {}
    explicit FpPoly(int64_t p) : p_(p) {}
    FpPoly(int64_t p, std::vector<int64_t> coeffs);

    static FpPoly x(int64_t p);
    static FpPoly constant(int64_t p, int64_t c);
    static FpPoly monomial(int64_t p, int n, int64_t c = 1);

    int64_t p() const { return p_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int64_t operator[](int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[i];
    }
    int64_t lc() const;
    const std::vector<int64_t>& coeffs() const { return c_; }

    FpPoly operator-() const;
    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly operator*(int64_t s) const;
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    FpPoly monic() const;
    FpPoly derivative() const;
    int64_t eval(int64_t t) const;
    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    int64_t p_;
    std::vector<int64_t> c_;
};

struct FpDivRem {
    FpPoly quot, rem;
};
FpDivRem fp_divrem(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b); // monic
FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly fp_powmod(const FpPoly& a, const Int& e, const FpPoly& m);
int64_t fp_resultant(const FpPoly& a, const FpPoly& b);

bool fp_is_squarefree(const FpPoly& f);
bool fp_is_irreducible(const FpPoly& f);

// Reduction of a rational polynomial at a prime of good denominator; any
// denominator divisible by p raises bad_reduction_error.
FpPoly reduce_mod_p(const QPoly& f, int64_t p);
int64_t reduce_mod_p(const Rat& c, int64_t p);

struct FpFactor {
    FpPoly factor; // monic irreducible
    int multiplicity;
};

// Complete factorization over F_p: f == lc * prod factor^multiplicity.
// Deterministic: the splitting RNG is seeded from `seed` only, and the
// output is sorted by (degree, coefficient order from the top).
std::vector<FpFactor> factor_fp(const FpPoly& f, uint64_t seed = 0x5eed);
std::vector<FpFactor> factor_fp(const QPoly& f, int64_t p, uint64_t seed = 0x5eed);

bool fp_poly_less(const FpPoly& a, const FpPoly& b);

} // namespace hypell
