#pragma once

#include <vector>

#include "hypell/curve.hpp"
#include "hypell/rat.hpp"

namespace hypell {

// F_{p^k} for an odd prime p with p^k <= 10^7 (the counting contract).
// Elements are indices in [0, q): the index's base-p digits are the
// coefficients of the residue polynomial, low degree first. The modulus is
// the least monic irreducible of degree k, "least" in the lexicographic
// order on the coefficient string read from the top: candidates are
// enumerated as n = 0..p^k-1 with coefficient i equal to digit i of n.
class Fq {
public:
    long p = 0;
    int k = 0;
    long q = 0;
    std::vector<long> modulus; // low-to-high, length k+1, monic

    static Fq make(long p, int k);

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long pow(long a, Int e) const;
    long inv(long a) const;
    // the image of x under the degree-k extension, i.e. index p (or 0 if k=1)
    long gen() const { return k == 1 ? 0 : p; }
    long frobenius(long a) const { return pow(a, p); }
    bool is_square(long a) const; // true for a = 0
    std::vector<long> digits(long a) const;
    long from_digits(const std::vector<long>& d) const;
    // evaluate a polynomial with F_p coefficients (low-to-high) at a
    long eval(const std::vector<long>& coeffs, long x) const;
};

// Throws bad_reduction_error unless p is odd, every coefficient of f is
// p-integral, the degree of f is preserved mod p, and f stays squarefree.
void validate_good_prime(const HyperCurve& C, long p);
bool is_good_prime(const HyperCurve& C, long p);

// f reduced mod a good p, coefficients in [0, p), low-to-high.
std::vector<long> reduce_curve_mod_p(const HyperCurve& C, long p);

// #C(F_{p^k}) on the smooth projective model. The default entry point runs
// the table-driven kernel (parallel when built with OpenMP); the serial
// reference is an independent implementation using Euler's criterion and
// exists as a cross-check oracle.
Int count_points(const HyperCurve& C, long p, int k);
Int count_points_serial(const HyperCurve& C, long p, int k);

struct ZetaData {
    long p = 0;
    int genus = 0;
    std::vector<Int> counts; // N_1..N_g
    std::vector<Int> L;      // a_0..a_2g, a_0 = 1
    Int picard_order;        // L(1) = #Pic^0(F_p)
};

// L-polynomial from the point counts N_1..N_g via the power-sum recursion
// and the functional equation a_{2g-i} = p^{g-i} a_i. Verifies integrality,
// count recovery, Hasse-Weil bounds and L(1) > 0; failures raise
// internal_error since they indicate a counting bug.
ZetaData zeta_L_polynomial(const HyperCurve& C, long p);

// N_1..N_kmax reconstructed from the L-polynomial alone.
std::vector<Int> recover_counts(const ZetaData& z, int kmax);

// B_1..B_dmax where B_d = number of degree-d closed points of the
// reduction; checks sum_{e|d} e B_e = N_d.
std::vector<Int> closed_point_counts_fq(const HyperCurve& C, long p, int dmax);

// A_d = number of effective divisors of degree d, computed both as a zeta
// series coefficient and by multiset bookkeeping over closed points; the
// two must agree (internal_error otherwise). Requires d <= 2g+2.
Int effective_divisor_count_fq(const HyperCurve& C, long p, int d);

// Base-change decomposition of every degree-d closed point to F_{p^e}:
// each splits into gcd(d,e) closed points of degree d/gcd(d,e). Verified
// point by point with Frobenius-orbit enumeration over F_{p^lcm(d,e)}.
struct SplittingReport {
    long p = 0;
    int d = 0, e = 0;
    Int closed_points;        // number of degree-d closed points over F_p
    int components_per_point = 0; // gcd(d, e)
    int component_degree = 0;     // d / gcd(d, e)
};

SplittingReport splitting_spectrum_fq(const HyperCurve& C, long p, int d, int e);

} // namespace hypell
