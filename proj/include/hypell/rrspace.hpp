#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypell/curve.hpp"
#include "hypell/qpoly.hpp"

namespace hypell {

// Formal Z-linear combination of places. Entries are kept sorted by
// place_less with nonzero multiplicities, so equal divisors compare equal.
class Divisor {
  public:
    Divisor() = default;
    static Divisor single(const Place& P, int mult = 1);

    void add(const Place& P, int mult);
    int coeff(const Place& P) const;
    const std::vector<std::pair<Place, int>>& entries() const { return e_; }

    int degree() const; // sum of mult * deg P
    bool is_zero() const { return e_.empty(); }
    bool is_effective() const;

    Divisor operator+(const Divisor& o) const;
    Divisor operator-() const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator*(int k) const;
    bool operator==(const Divisor& o) const { return e_ == o.e_; }
    bool operator!=(const Divisor& o) const { return e_ != o.e_; }

    std::string str() const;

  private:
    std::vector<std::pair<Place, int>> e_;
};

// Function (a + b*y) / den on the curve. Normal form: den monic, and
// gcd(gcd(a, b), den) = 1. The zero function is (0 + 0*y) / 1.
struct CurveFunction {
    QPoly a, b, den;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool operator==(const CurveFunction& o) const {
        return a == o.a && b == o.b && den == o.den;
    }
    std::string str() const;
};

CurveFunction make_function(const QPoly& a, const QPoly& b, const QPoly& den = QPoly(1));
CurveFunction fn_add(const CurveFunction& x, const CurveFunction& y);
CurveFunction fn_scale(const CurveFunction& x, const Rat& c);
// 1/phi; requires phi != 0.
CurveFunction fn_inverse(const HyperCurve& C, const CurveFunction& phi);

// Exact valuation of phi at the place P. On the two rational branches
// above infinity of an even-degree model, index 0 is the branch where
// y / x^{g+1} tends to +sqrt(lc f) and index 1 the one tending to the
// negative root. Throws precondition_error for the zero function.
int valuation(const HyperCurve& C, const Place& P, const CurveFunction& phi);

// div(phi) as a degree-zero divisor; verified to sum to degree zero.
Divisor principal_divisor(const HyperCurve& C, const CurveFunction& phi);

struct RRSpace {
    Divisor D;
    std::vector<CurveFunction> basis;
    int h0 = 0;
    std::optional<Divisor> base_locus; // filled by base_locus()
};

// Basis of L(D) = { phi : div(phi) + D >= 0 } together with its dimension.
// Every basis element is re-verified against D place by place, and the
// dimension is checked against deg D + 1 - g when deg D > 2g - 2.
// Requires |deg D| <= 6g + 6 (capability guard).
RRSpace riemann_roch_basis(const HyperCurve& C, const Divisor& D);

int h0(const HyperCurve& C, const Divisor& D);

// (g - 1) times the x-pullback of infinity; h0 = g is verified on every
// construction before the divisor is returned.
Divisor canonical_divisor(const HyperCurve& C);

// For deg D = 0: a function with div(phi) = D when the class is trivial,
// nullopt otherwise. Throws precondition_error for deg D != 0.
std::optional<CurveFunction> is_principal(const HyperCurve& C, const Divisor& D);

// Largest effective B with B <= div(phi) + D for every phi in L(D).
// Throws domain_error when h0(D) = 0 (empty linear system).
Divisor base_locus(const HyperCurve& C, const Divisor& D);

// Certificate that |D| is base point free: two members of L(D) whose
// effective divisors div(phi) + D share no place. Throws domain_error when
// the system is empty or has base points.
std::pair<CurveFunction, CurveFunction> base_point_free_pair(const HyperCurve& C, const Divisor& D);

enum class PointClass { P1Parameterized, P1Isolated };

struct PointClassification {
    PointClass cls = PointClass::P1Isolated;
    int h0_x = 0;
    // Nonconstant function with pole divisor exactly the point, i.e. a
    // degree-deg(x) map to the line; present iff P1Parameterized.
    std::optional<CurveFunction> witness;
};

// A closed point x is P1-parameterized when h0([x]) >= 2 (the point moves
// in a pencil) and P1-isolated when h0([x]) = 1 (x is the unique effective
// divisor in its class).
PointClassification classify_point(const HyperCurve& C, const Place& P);

struct ReducibilityReport {
    bool certified = false;
    int h0_x = 0;
    int degree = 0;
    std::vector<std::pair<int, int>> partitions;
};

// For a P1-isolated point x of degree d: certifies that the class [x] is
// not a sum [D_e] + [D_{d-e}] of effective classes for each requested
// partition (e, d-e), because the unique effective representative of [x]
// is the single place x itself. Refuses (precondition_error) when the
// point is P1-parameterized. An empty partition list means all partitions
// with 1 <= e <= d - e.
ReducibilityReport reducibility_image_test(const HyperCurve& C, const Place& P,
                                           std::vector<std::pair<int, int>> partitions = {});

} // namespace hypell
