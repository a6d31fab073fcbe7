#pragma once

#include <string>
#include <vector>

#include "hypell/rat.hpp"

namespace hypell {

// Dense univariate polynomial over Q, coefficients stored low-to-high and
// kept trimmed (no trailing zeros). The zero polynomial has degree -1.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(const Rat& c);
    explicit QPoly(long c);
    explicit QPoly(std::vector<Rat> coeffs); // low-to-high, trimmed on entry

    static QPoly x();
    static QPoly monomial(int n, const Rat& c = Rat(1));
    static QPoly from_desc(std::vector<Rat> coeffs); // high-to-low convenience

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of x^i; zero outside the stored range.
    const Rat& operator[](int i) const;
    const Rat& lc() const; // leading coefficient; throws on zero polynomial
    const std::vector<Rat>& coeffs() const { return c_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    QPoly operator/(const Rat& s) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return c_ != o.c_; }

    QPoly monic() const;
    QPoly derivative() const;
    Rat eval(const Rat& t) const;
    QPoly compose(const QPoly& inner) const;
    QPoly pow(unsigned long e) const;
    QPoly shift_up(int n) const;   // multiply by x^n
    QPoly truncate(int n) const;   // drop terms of degree >= n
    QPoly reverse(int n) const;    // x^n * p(1/x); requires n >= deg

    // Content (gcd of numerators / lcm of denominators, sign of lc) and the
    // primitive integer part: *this == content() * primitive_z().
    Rat content() const;
    QPoly primitive_z() const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

// Quotient and remainder with deg rem < deg divisor; divisor must be nonzero.
struct QPolyDivRem {
    QPoly quot;
    QPoly rem;
};
QPolyDivRem divrem(const QPoly& a, const QPoly& b);
QPoly operator/(const QPoly& a, const QPoly& b); // requires exact division
QPoly operator%(const QPoly& a, const QPoly& b);

// Monic gcd, computed with a primitive PRS over Z to keep coefficients tame.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

// g = gcd(a,b) monic with s*a + t*b = g.
struct XgcdResult {
    QPoly g, s, t;
};
XgcdResult poly_xgcd(const QPoly& a, const QPoly& b);

// Inverse of a modulo m; throws domain_error when gcd(a, m) != 1.
QPoly inverse_mod(const QPoly& a, const QPoly& m);
QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m);
QPoly powmod(const QPoly& a, const Int& e, const QPoly& m);

// Resultant via the subresultant PRS over Z, rescaled exactly for rational
// inputs. resultant(a, b) == lc(b)^deg(a) * prod a(beta_i) over roots of b.
Rat resultant(const QPoly& a, const QPoly& b);
Rat discriminant(const QPoly& f);

bool is_squarefree(const QPoly& f);

// Yun decomposition: f == lc * prod parts[i].factor^parts[i].multiplicity
// with the factors monic, squarefree, pairwise coprime, multiplicities
// strictly increasing.
struct SquarefreePart {
    QPoly factor;
    int multiplicity;
};
std::vector<SquarefreePart> squarefree_decomposition(const QPoly& f);

// Total ordering used wherever deterministic output order is promised:
// by degree, then coefficient-wise from the top.
bool poly_less(const QPoly& a, const QPoly& b);

} // namespace hypell
