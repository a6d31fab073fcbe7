#include "hypell/fq.hpp"

#include <algorithm>
#include <numeric>

#include "hypell/errors.hpp"
#include "hypell/fppoly.hpp"

namespace hypell {

namespace {

constexpr long kCountingCap = 10'000'000; // largest permitted field size

long checked_power(long p, int k) {
    long q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > kCountingCap / p)
            throw capability_error("field size p^k exceeds the counting contract of 10^7");
        q *= p;
    }
    return q;
}

Int binom(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

int mobius(int n) {
    int m = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        n /= d;
        if (n % d == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

} // namespace

Fq Fq::make(long p, int k) {
    if (p < 3 || !is_probable_prime(Int(p)))
        throw precondition_error("field characteristic must be an odd prime");
    if (k < 1) throw precondition_error("extension degree must be positive");
    Fq F;
    F.p = p;
    F.k = k;
    F.q = checked_power(p, k);
    // least monic irreducible: the candidate for n has coefficient i equal
    // to base-p digit i of n, so n ascending walks the coefficient strings
    // (c_{k-1},...,c_0) in lexicographic order
    for (long n = 0; n < F.q; ++n) {
        std::vector<int64_t> c(k + 1, 0);
        long m = n;
        for (int i = 0; i < k; ++i) {
            c[i] = m % p;
            m /= p;
        }
        c[k] = 1;
        if (fp_is_irreducible(FpPoly(p, c))) {
            F.modulus.assign(c.begin(), c.end());
            return F;
        }
    }
    throw internal_error("no irreducible polynomial found"); // unreachable
}

std::vector<long> Fq::digits(long a) const {
    std::vector<long> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

long Fq::from_digits(const std::vector<long>& d) const {
    long a = 0;
    for (int i = k - 1; i >= 0; --i) {
        long c = i < static_cast<int>(d.size()) ? d[i] % p : 0;
        if (c < 0) c += p;
        a = a * p + c;
    }
    return a;
}

long Fq::add(long a, long b) const {
    long r = 0, pw = 1;
    for (int i = 0; i < k; ++i) {
        long s = (a % p + b % p) % p;
        r += s * pw;
        pw *= p;
        a /= p;
        b /= p;
    }
    return r;
}

long Fq::neg(long a) const {
    long r = 0, pw = 1;
    for (int i = 0; i < k; ++i) {
        long c = a % p;
        r += (c ? p - c : 0) * pw;
        pw *= p;
        a /= p;
    }
    return r;
}

long Fq::sub(long a, long b) const { return add(a, neg(b)); }

long Fq::mul(long a, long b) const {
    // k <= 14 under the size cap, so fixed buffers suffice; convolution
    // values stay below 14 * p^2 <= 1.4e8 for k >= 2 and p^2 <= 1e14 for
    // k = 1, both well inside int64
    long da[16], db[16], t[31];
    for (int i = 0; i < k; ++i) {
        da[i] = a % p;
        a /= p;
        db[i] = b % p;
        b /= p;
    }
    for (int i = 0; i < 2 * k - 1; ++i) t[i] = 0;
    for (int i = 0; i < k; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < k; ++j) t[i + j] += da[i] * db[j];
    }
    for (int i = 2 * k - 2; i >= k; --i) {
        long c = t[i] % p;
        if (!c) continue;
        for (int j = 0; j < k; ++j) t[i - k + j] -= c * modulus[j];
    }
    long r = 0, pw = 1;
    for (int j = 0; j < k; ++j) {
        long c = t[j] % p;
        if (c < 0) c += p;
        r += c * pw;
        pw *= p;
    }
    return r;
}

long Fq::pow(long a, Int e) const {
    if (e < 0) throw precondition_error("negative exponent");
    long r = 1, b = a;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

long Fq::inv(long a) const {
    if (a == 0) throw domain_error("inverse of zero");
    return pow(a, Int(q - 2));
}

bool Fq::is_square(long a) const {
    if (a == 0) return true;
    return pow(a, Int((q - 1) / 2)) == 1;
}

long Fq::eval(const std::vector<long>& coeffs, long x) const {
    long r = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        r = add(mul(r, x), coeffs[i]);
    return r;
}

bool is_good_prime(const HyperCurve& C, long p) {
    if (p < 2 || !is_probable_prime(Int(p))) return false;
    if (p == 2) return false;
    try {
        FpPoly fp = reduce_mod_p(C.f, p);
        return fp.deg() == C.f.deg() && fp_is_squarefree(fp);
    } catch (const bad_reduction_error&) {
        return false;
    }
}

void validate_good_prime(const HyperCurve& C, long p) {
    if (p < 2 || !is_probable_prime(Int(p)))
        throw precondition_error("modulus must be prime");
    if (p == 2)
        throw bad_reduction_error("p = 2: even-characteristic reductions are unsupported");
    FpPoly fp = reduce_mod_p(C.f, p); // throws on p-divisible denominators
    if (fp.deg() != C.f.deg())
        throw bad_reduction_error("p divides the leading coefficient of f");
    if (!fp_is_squarefree(fp))
        throw bad_reduction_error("p divides disc(f): the reduction is singular");
}

std::vector<long> reduce_curve_mod_p(const HyperCurve& C, long p) {
    validate_good_prime(C, p);
    FpPoly fp = reduce_mod_p(C.f, p);
    std::vector<long> c(fp.coeffs().begin(), fp.coeffs().end());
    return c;
}

// Points above x = infinity on the reduction: 1 for odd degree, else 2 or 0
// according to whether lc(f) mod p is a square in F_{p^k}.
static long infinity_count(const Fq& F, const std::vector<long>& fc, int deg_f) {
    if (deg_f % 2 == 1) return 1;
    return F.is_square(fc.back()) ? 2 : 0;
}

Int count_points_serial(const HyperCurve& C, long p, int k) {
    std::vector<long> fc = reduce_curve_mod_p(C, p);
    Fq F = Fq::make(p, k);
    long total = 0;
    for (long x = 0; x < F.q; ++x) {
        long z = F.eval(fc, x);
        if (z == 0)
            total += 1;
        else if (F.is_square(z))
            total += 2;
    }
    return Int(total + infinity_count(F, fc, C.f.deg()));
}

Int count_points(const HyperCurve& C, long p, int k) {
    std::vector<long> fc = reduce_curve_mod_p(C, p);
    Fq F = Fq::make(p, k);
    const long q = F.q;
    // mark squares: a bit per field element
    std::vector<uint64_t> sq((q + 63) / 64, 0);
#pragma omp parallel for schedule(static)
    for (long y = 0; y < q; ++y) {
        long s = F.mul(y, y);
        uint64_t bit = uint64_t(1) << (s & 63);
#pragma omp atomic update
        sq[s >> 6] |= bit;
    }
    long zeros = 0, squares = 0;
#pragma omp parallel for schedule(static) reduction(+ : zeros, squares)
    for (long x = 0; x < q; ++x) {
        long z = F.eval(fc, x);
        if (z == 0)
            ++zeros;
        else if (sq[z >> 6] >> (z & 63) & 1)
            ++squares;
    }
    return Int(zeros + 2 * squares + infinity_count(F, fc, C.f.deg()));
}

std::vector<Int> recover_counts(const ZetaData& z, int kmax) {
    if (kmax < 0) throw precondition_error("kmax must be nonnegative");
    int m = static_cast<int>(z.L.size()) - 1;
    std::vector<Int> P(kmax + 1), N(kmax);
    for (int k = 1; k <= kmax; ++k) {
        Int s = k <= m ? Int(k) * z.L[k] : Int(0);
        for (int j = 1; j < k && j <= m; ++j) s += z.L[j] * P[k - j];
        P[k] = -s;
        N[k - 1] = int_pow(Int(z.p), k) + 1 - P[k];
    }
    return N;
}

ZetaData zeta_L_polynomial(const HyperCurve& C, long p) {
    int g = C.genus;
    if (g > 5) throw capability_error("zeta computation is capped at genus 5");
    ZetaData z;
    z.p = p;
    z.genus = g;
    for (int k = 1; k <= g; ++k) z.counts.push_back(count_points(C, p, k));
    // power sums of the Frobenius eigenvalues from the counts, then the
    // coefficients by Newton's recursion; integrality is a hard invariant
    std::vector<Int> P(g + 1);
    for (int k = 1; k <= g; ++k) P[k] = int_pow(Int(p), k) + 1 - z.counts[k - 1];
    z.L.assign(2 * g + 1, Int(0));
    z.L[0] = 1;
    for (int k = 1; k <= g; ++k) {
        Int s = 0;
        for (int j = 1; j <= k; ++j) s += P[j] * z.L[k - j];
        if (s % k != 0)
            throw internal_error("zeta recursion produced a non-integer coefficient");
        z.L[k] = -s / k;
    }
    for (int i = g - 1; i >= 0; --i) z.L[2 * g - i] = int_pow(Int(p), g - i) * z.L[i];
    // consistency gates: recover the inputs, Hasse-Weil, positivity
    std::vector<Int> back = recover_counts(z, g);
    for (int k = 1; k <= g; ++k) {
        if (back[k - 1] != z.counts[k - 1])
            throw internal_error("L-polynomial does not reproduce the point counts");
        Int dev = z.counts[k - 1] - int_pow(Int(p), k) - 1;
        if (dev * dev > Int(4) * g * g * int_pow(Int(p), k))
            throw internal_error("point count violates the Hasse-Weil bound");
    }
    for (const Int& a : z.L) z.picard_order += a;
    if (z.picard_order <= 0) throw internal_error("L(1) must be positive");
    return z;
}

std::vector<Int> closed_point_counts_fq(const HyperCurve& C, long p, int dmax) {
    if (dmax < 1) throw precondition_error("dmax must be positive");
    std::vector<Int> N(dmax + 1);
    for (int d = 1; d <= dmax; ++d) N[d] = count_points(C, p, d);
    std::vector<Int> B(dmax);
    for (int d = 1; d <= dmax; ++d) {
        Int s = 0;
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) s += mobius(d / e) * N[e];
        if (s % d != 0) throw internal_error("Moebius inversion of the counts failed");
        B[d - 1] = s / d;
    }
    for (int d = 1; d <= dmax; ++d) {
        Int s = 0;
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) s += Int(e) * B[e - 1];
        if (s != N[d]) throw internal_error("closed point counts do not resum to N_d");
    }
    return B;
}

Int effective_divisor_count_fq(const HyperCurve& C, long p, int d) {
    int g = C.genus;
    if (d < 0) throw precondition_error("divisor degree must be nonnegative");
    if (d > 2 * g + 2)
        throw precondition_error("effective divisor counting is contracted to d <= 2g+2");
    ZetaData z = zeta_L_polynomial(C, p);
    // (i) coefficient of t^d in L(t) / ((1-t)(1-pt))
    Int a_d = 0;
    for (int i = 0; i <= d && i <= 2 * g; ++i) {
        Int geo = 0; // sum_{j<=d-i} p^j
        for (int j = 0; j <= d - i; ++j) geo += int_pow(Int(p), j);
        a_d += z.L[i] * geo;
    }
    // (ii) multiset bookkeeping over closed points: the product of
    // (1-t^e)^(-B_e) expanded to degree d
    std::vector<Int> N(d + 1);
    for (int e = 1; e <= d; ++e) {
        long qe = 1;
        bool direct = true;
        for (int i = 0; i < e; ++i) {
            if (qe > kCountingCap / p) {
                direct = false;
                break;
            }
            qe *= p;
        }
        N[e] = direct ? count_points(C, p, e) : recover_counts(z, e)[e - 1];
    }
    std::vector<Int> B(d + 1);
    for (int e = 1; e <= d; ++e) {
        Int s = 0;
        for (int c = 1; c <= e; ++c)
            if (e % c == 0) s += mobius(e / c) * N[c];
        if (s % e != 0) throw internal_error("Moebius inversion of the counts failed");
        B[e] = s / e;
    }
    std::vector<Int> A(d + 1, Int(0));
    A[0] = 1;
    for (int e = 1; e <= d; ++e) {
        std::vector<Int> next(d + 1, Int(0));
        for (int j = 0; j <= d; ++j) {
            if (A[j] == 0) continue;
            for (int m = 0; j + m * e <= d; ++m)
                next[j + m * e] += A[j] * binom(B[e] + m - 1, m);
        }
        A = next;
    }
    if (A[d] != a_d)
        throw internal_error("effective divisor counts disagree between the zeta series and the multiset count");
    return a_d;
}

SplittingReport splitting_spectrum_fq(const HyperCurve& C, long p, int d, int e) {
    if (d < 1 || e < 1) throw precondition_error("degrees must be positive");
    int L = std::lcm(d, e);
    std::vector<long> fc = reduce_curve_mod_p(C, p);
    Fq F = Fq::make(p, L); // enforces the size cap on p^lcm(d,e)
    const long q = F.q;
    const int gde = std::gcd(d, e);
    SplittingReport rep;
    rep.p = p;
    rep.d = d;
    rep.e = e;
    rep.components_per_point = gde;
    rep.component_degree = d / gde;

    // verify the decomposition of one closed point from its x-orbit data:
    // the observed multiset of component degrees over F_{p^e} must be
    // gcd(d,e) copies of d/gcd(d,e)
    auto check_components = [&](const std::vector<int>& degrees) {
        if (static_cast<int>(degrees.size()) != gde)
            throw internal_error("base change produced an unexpected component count");
        for (int cd : degrees)
            if (cd != d / gde)
                throw internal_error("base change produced an unexpected component degree");
    };

    Int found = 0;
    std::vector<uint64_t> seen((q + 63) / 64, 0);
    std::vector<long> orbit;
    for (long x0 = 0; x0 < q; ++x0) {
        if (seen[x0 >> 6] >> (x0 & 63) & 1) continue;
        orbit.clear();
        long x = x0;
        do {
            seen[x >> 6] |= uint64_t(1) << (x & 63);
            orbit.push_back(x);
            x = F.pow(x, Int(p));
        } while (x != x0);
        int s = static_cast<int>(orbit.size()); // degree of x0 over F_p
        long z = F.eval(fc, x0);
        // closed points of C above this x-orbit: degrees s (one or two of
        // them) when y lives in F_{p^s}, otherwise a single one of degree 2s
        bool split_here = z != 0 && F.pow(z, Int((checked_power(p, s) - 1) / 2)) == 1;
        int cp_degree = (z == 0 || split_here) ? s : 2 * s;
        if (cp_degree != d) continue;
        int cp_count = split_here ? 2 : 1;
        found += cp_count;

        // base change to F_{p^e}: the x-orbit splits into gcd(s,e) cycles
        // under the e-th Frobenius power (members with index = r mod gcd)
        int gse = std::gcd(s, e);
        int s2 = s / gse; // x-degree of each cycle over F_{p^e}
        std::vector<int> comp_degrees;
        for (int r = 0; r < gse; ++r) {
            long zr = F.eval(fc, orbit[r]);
            if (zr == 0) {
                comp_degrees.push_back(s2);
                continue;
            }
            long ext = checked_power(p, std::lcm(s, e)); // = p^(e*s2), divides p^L
            bool sq = F.pow(zr, Int((ext - 1) / 2)) == 1;
            if (sq) {
                comp_degrees.push_back(s2);
                comp_degrees.push_back(s2);
            } else {
                comp_degrees.push_back(2 * s2);
            }
        }
        if (split_here) {
            // two closed points sharing the orbit; the involution swaps the
            // branches, so the components divide evenly between them
            if (static_cast<int>(comp_degrees.size()) != 2 * gde)
                throw internal_error("base change produced an unexpected component count");
            std::vector<int> half(comp_degrees.begin(),
                                  comp_degrees.begin() + gde);
            check_components(half);
            check_components(std::vector<int>(comp_degrees.begin() + gde,
                                              comp_degrees.end()));
        } else {
            check_components(comp_degrees);
        }
    }

    // places above x = infinity, handled from the model: the square class
    // of lc(f) mod p decides their degrees, and over F_{p^e} squareness
    // only depends on the parity of e
    if (C.f.deg() % 2 == 1) {
        if (d == 1) found += 1; // rational branch point; trivially stable
    } else {
        bool lc_square_fp = mod_pow(fc.back(), (p - 1) / 2, p) == 1;
        if (lc_square_fp) {
            if (d == 1) found += 2;
        } else if (d == 2) {
            found += 1;
            bool lc_square_fpe = e % 2 == 0 || lc_square_fp;
            std::vector<int> comp = lc_square_fpe ? std::vector<int>{1, 1}
                                                  : std::vector<int>{2};
            check_components(comp);
        }
    }

    rep.closed_points = found;
    // independent cross-check of the census against Moebius counting
    std::vector<Int> B = closed_point_counts_fq(C, p, d);
    if (B[d - 1] != found)
        throw internal_error("orbit census disagrees with the Moebius point count");
    return rep;
}

} // namespace hypell
