#include "hypell/factor.hpp"

#include <algorithm>

#include "hypell/qmatrix.hpp"

namespace hypell {

namespace {

// ---- integer polynomials modulo P (P = p^k, Int modulus) ----------------

using MP = std::vector<Int>; // low-to-high, trimmed

void mp_trim(MP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Int mod_p(const Int& a, const Int& P) {
    Int r = a % P;
    if (r < 0) r += P;
    return r;
}

MP mp_reduce(MP a, const Int& P) {
    for (auto& c : a) c = mod_p(c, P);
    mp_trim(a);
    return a;
}

MP mp_add(const MP& a, const MP& b, const Int& P) {
    MP r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_p(r[i] + b[i], P);
    mp_trim(r);
    return r;
}

MP mp_sub(const MP& a, const MP& b, const Int& P) {
    MP r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_p(r[i] - b[i], P);
    mp_trim(r);
    return r;
}

MP mp_mul(const MP& a, const MP& b, const Int& P) {
    if (a.empty() || b.empty()) return {};
    MP r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return mp_reduce(std::move(r), P);
}

// Division with remainder by a monic divisor; everything stays integral.
void mp_divrem_monic(const MP& a, const MP& h, const Int& P, MP& q, MP& r) {
    r = a;
    int dh = static_cast<int>(h.size()) - 1;
    q.assign(std::max<size_t>(1, a.size() > h.size() ? a.size() - h.size() + 1 : 1), Int(0));
    mp_trim(r);
    while (static_cast<int>(r.size()) - 1 >= dh) {
        int k = static_cast<int>(r.size()) - 1 - dh;
        Int c = r.back();
        q[k] = c;
        for (int i = 0; i <= dh; ++i) r[k + i] = mod_p(r[k + i] - c * h[i], P);
        mp_trim(r);
    }
    mp_trim(q);
}

MP mp_scale(const MP& a, const Int& s, const Int& P) {
    MP r = a;
    for (auto& c : r) c = mod_p(c * s, P);
    mp_trim(r);
    return r;
}

Int symmetric(const Int& a, const Int& P) {
    Int r = mod_p(a, P);
    if (2 * r > P) r -= P;
    return r;
}

MP from_fp(const FpPoly& f) {
    MP r(f.deg() + 1);
    for (int i = 0; i <= f.deg(); ++i) r[i] = f[i];
    mp_trim(r);
    return r;
}

// One quadratic Hensel step: f == g*h (mod m), s*g + t*h == 1 (mod m),
// h monic; afterwards the same relations hold mod m^2 with h still monic.
void hensel_step(const MP& f, MP& g, MP& h, MP& s, MP& t, const Int& m) {
    Int m2 = m * m;
    MP e = mp_sub(mp_reduce(f, m2), mp_mul(g, h, m2), m2);
    MP q, r;
    mp_divrem_monic(mp_mul(s, e, m2), h, m2, q, r);
    g = mp_add(g, mp_add(mp_mul(t, e, m2), mp_mul(q, g, m2), m2), m2);
    h = mp_add(h, r, m2);
    MP one{Int(1)};
    MP b = mp_sub(mp_add(mp_mul(s, g, m2), mp_mul(t, h, m2), m2), one, m2);
    MP c, d;
    mp_divrem_monic(mp_mul(s, b, m2), h, m2, c, d);
    s = mp_sub(s, d, m2);
    t = mp_sub(t, mp_add(mp_mul(t, b, m2), mp_mul(c, g, m2), m2), m2);
}

// Lift the modular factorization F == lc(F) * prod(monic factors) from p to
// P = p^(2^j) >= target, recursing on a binary split of the factor list.
void hensel_lift_tree(const MP& F, const std::vector<FpPoly>& factors, int64_t p,
                      const Int& target, std::vector<MP>& out) {
    if (factors.size() == 1) {
        // lc(F) is invertible mod P; normalize the branch to monic.
        Int lc = F.back();
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
        if (g != 1) throw internal_error("leading coefficient not invertible in Hensel leaf");
        out.push_back(mp_scale(F, s, target));
        return;
    }
    size_t half = factors.size() / 2;
    std::vector<FpPoly> L(factors.begin(), factors.begin() + half);
    std::vector<FpPoly> R(factors.begin() + half, factors.end());
    FpPoly gp = FpPoly::constant(p, static_cast<int64_t>(mod_p(F.back(), Int(static_cast<long>(p))).get_si()));
    for (const auto& f : L) gp = gp * f;
    FpPoly hp = FpPoly::constant(p, 1);
    for (const auto& f : R) hp = hp * f;
    // Bezout pair mod p for the two branches.
    FpPoly u = gp, v = hp;
    FpPoly s0 = FpPoly::constant(p, 1), s1 = FpPoly::constant(p, 0);
    FpPoly t0 = FpPoly::constant(p, 0), t1 = FpPoly::constant(p, 1);
    while (!v.is_zero()) {
        auto [q, r] = fp_divrem(u, v);
        FpPoly ns = s0 - q * s1, nt = t0 - q * t1;
        u = v; v = r;
        s0 = s1; s1 = ns;
        t0 = t1; t1 = nt;
    }
    if (u.deg() != 0) throw internal_error("Hensel branches not coprime");
    int64_t inv = mod_inv(u.lc(), p);
    MP g = from_fp(gp), h = from_fp(hp);
    MP s = from_fp(s0 * inv), t = from_fp(t0 * inv);
    Int m(static_cast<long>(p));
    while (m < target) {
        hensel_step(F, g, h, s, t, m);
        m = m * m;
    }
    g = mp_reduce(g, target);
    h = mp_reduce(h, target);
    hensel_lift_tree(g, L, p, target, out);
    hensel_lift_tree(h, R, p, target, out);
}

QPoly from_mp_symmetric(const MP& a, const Int& P) {
    std::vector<Rat> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = Rat(symmetric(a[i], P));
    return QPoly(std::move(c));
}

MP to_mp(const QPoly& f, const Int& P) {
    MP r(f.deg() + 1);
    for (int i = 0; i <= f.deg(); ++i) {
        if (f[i].get_den() != 1) throw internal_error("non-integer coefficient in lift input");
        r[i] = mod_p(f[i].get_num(), P);
    }
    mp_trim(r);
    return r;
}

Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Factor a primitive squarefree integer polynomial (positive lc, deg >= 1)
// into primitive irreducible integer polynomials.
std::vector<QPoly> factor_squarefree_z(const QPoly& G) {
    if (G.deg() == 1) return {G};
    // Good prime: odd, keeps the degree, keeps squarefreeness. Among the
    // first few, prefer the one giving the fewest modular factors.
    Int lc = G.lc().get_num();
    std::vector<std::pair<int64_t, std::vector<FpFactor>>> cands;
    Int p(2);
    while (cands.size() < 3) {
        p = next_prime(p);
        if (lc % p == 0) continue;
        FpPoly gp = reduce_mod_p(G, p.get_si());
        if (!fp_is_squarefree(gp)) continue;
        cands.emplace_back(p.get_si(), factor_fp(gp));
        if (cands.back().second.size() == 1) break;
    }
    auto best = std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
        return a.first < b.first;
    });
    int64_t pp = best->first;
    std::vector<FpPoly> mod_factors;
    for (const auto& mf : best->second) mod_factors.push_back(mf.factor);
    if (mod_factors.size() == 1) return {G};

    // Landau-Mignotte: coefficients of any integer factor are bounded by
    // 2^n * sqrt(n+1) * height(G) * |lc(G)|.
    int n = G.deg();
    Int H(0);
    for (int i = 0; i <= n; ++i) {
        Int a = abs(G[i].get_num());
        if (a > H) H = a;
    }
    Int B = (isqrt_floor(Int(n + 1) * H * H) + 1) * int_pow(Int(2), n) * abs(lc);
    Int P(pp);
    while (P <= 2 * B) P *= pp;
    // The tree lifts through repeated squaring; push P itself to p^(2^j).
    Int target(pp);
    while (target < P) target = target * target;
    P = target;

    std::vector<MP> lifted;
    hensel_lift_tree(to_mp(G, P), mod_factors, pp, P, lifted);

    // Zassenhaus recombination over subsets of the lifted factors.
    std::vector<QPoly> result;
    QPoly remaining = G;
    std::vector<MP> active = lifted;
    size_t s = 1;
    while (2 * s <= active.size()) {
        bool found = false;
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            MP prod{mod_p(remaining.lc().get_num(), P)};
            for (size_t i : idx) prod = mp_mul(prod, active[i], P);
            QPoly cand = from_mp_symmetric(prod, P);
            if (!cand.is_zero()) {
                cand = cand.primitive_z();
                auto [q, r] = divrem(remaining, cand);
                if (r.is_zero()) {
                    result.push_back(cand);
                    remaining = q.primitive_z();
                    std::vector<MP> rest;
                    for (size_t i = 0, k = 0; i < active.size(); ++i) {
                        if (k < idx.size() && idx[k] == i) { ++k; continue; }
                        rest.push_back(active[i]);
                    }
                    active = std::move(rest);
                    found = true;
                    break;
                }
            }
            // next subset of size s in lex order
            bool advanced = false;
            for (size_t j = s; j-- > 0;) {
                if (idx[j] + 1 <= active.size() - (s - j)) {
                    ++idx[j];
                    for (size_t k2 = j + 1; k2 < s; ++k2) idx[k2] = idx[k2 - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        if (!found) ++s;
    }
    if (remaining.deg() > 0) result.push_back(remaining);
    QPoly check(Rat(1));
    for (const auto& f : result) check *= f;
    if (!(check == G)) throw internal_error("recombination product check failed");
    return result;
}

} // namespace

QFactorization factor_q(const QPoly& f) {
    if (f.is_zero()) throw domain_error("factor of zero polynomial");
    if (f.deg() > 64) throw capability_error("factor_q supports degree <= 64");
    QFactorization out;
    out.unit = f.deg() == 0 ? f[0] : f.lc();
    if (f.deg() == 0) return out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& g : factor_squarefree_z(part.primitive_z()))
            out.factors.push_back({g.monic(), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const QFactor& a, const QFactor& b) {
        if (!(a.factor == b.factor)) return poly_less(a.factor, b.factor);
        return a.multiplicity < b.multiplicity;
    });
    QPoly check(out.unit);
    for (const auto& [g, m] : out.factors) check *= g.pow(m);
    if (!(check == f)) throw internal_error("factor_q product check failed");
    return out;
}

bool is_irreducible_q(const QPoly& f) {
    if (f.deg() < 1) return false;
    auto fac = factor_q(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

QPoly hensel_sqrt_unchecked(const QPoly& f, const QPoly& p, int m, const QPoly& v0) {
    QPoly v = v0 % p;
    QPoly w = inverse_mod(v, p);
    QPoly pcur = p;
    int s = 1;
    while (s < m) {
        QPoly pm = pcur * pcur;
        QPoly two(Rat(2));
        QPoly W = (w * (two - v * w)) % pm;
        QPoly V = ((v + f * W) * Rat(1, 2)) % pm;
        w = (W * (two - V * W)) % pm;
        v = V;
        pcur = pm;
        s *= 2;
    }
    return v % p.pow(m);
}

QPoly hensel_sqrt(const QPoly& f, const QPoly& p, int m, const QPoly& v0) {
    if (p.deg() < 1) throw precondition_error("modulus must be nonconstant");
    if (m < 1) throw precondition_error("precision must be at least 1");
    if (!is_irreducible_q(p)) throw precondition_error("modulus is not irreducible over Q");
    if ((f % p).is_zero()) throw domain_error("f vanishes modulo p (ramified)");
    if (!((v0 * v0 - f) % p).is_zero()) throw precondition_error("v0 is not a square root of f mod p");
    return hensel_sqrt_unchecked(f, p, m, v0);
}

QPoly series_sqrt(const QPoly& F, int n, const Rat& c0) {
    if (n < 1) throw precondition_error("series precision must be at least 1");
    if (F[0] != c0 * c0 || c0 == 0) throw precondition_error("c0 does not match the constant term");
    return hensel_sqrt_unchecked(F.truncate(n), QPoly::x(), n, QPoly(c0));
}

namespace {

// Elements of K[z], K = Q[x]/u: coefficients are residues mod u.
using KPoly = std::vector<QPoly>;

void k_trim(KPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly k_mul(const KPoly& a, const KPoly& b, const QPoly& u) {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += (a[i] * b[j]) % u;
    for (auto& c : r) c = c % u;
    k_trim(r);
    return r;
}

KPoly k_rem(KPoly a, const KPoly& b, const QPoly& u) {
    QPoly lb_inv = inverse_mod(b.back(), u);
    while (a.size() >= b.size()) {
        QPoly c = mulmod(a.back(), lb_inv, u);
        size_t k = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[k + i] = (a[k + i] - c * b[i]) % u;
        k_trim(a);
        if (a.empty()) break;
    }
    return a;
}

KPoly k_gcd(KPoly a, KPoly b, const QPoly& u) {
    k_trim(a);
    k_trim(b);
    while (!b.empty()) {
        KPoly r = k_rem(a, b, u);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        QPoly inv = inverse_mod(a.back(), u);
        for (auto& c : a) c = mulmod(c, inv, u);
    }
    return a;
}

QPoly charpoly(const QMatrix& M) {
    int n = M.rows();
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= n; ++k) {
        QMatrix T = M;
        for (int i = 0; i < n; ++i) T.at(i, i) = Rat(k) - T.at(i, i);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) T.at(i, j) = -T.at(i, j);
        xs.emplace_back(k);
        ys.push_back(T.det());
    }
    QPoly N(lagrange_interpolate(xs, ys));
    if (N.deg() != n || N.lc() != 1) throw internal_error("characteristic polynomial not monic");
    return N;
}

} // namespace

std::optional<QPoly> sqrt_mod_irreducible(const QPoly& f, const QPoly& u0) {
    QPoly u = u0.monic();
    if (u.deg() < 1) throw precondition_error("modulus must be nonconstant");
    QPoly fb = f % u;
    if (fb.is_zero()) throw domain_error("f vanishes modulo u (ramified)");
    if (u.deg() == 1) {
        Rat r;
        if (is_square(fb[0], &r)) return QPoly(r);
        return std::nullopt;
    }
    int n = u.deg();
    for (long c = 0;; ++c) {
        if (c > 8 * n) throw internal_error("no squarefree norm shift found");
        // Multiplication by theta = c*x + y on basis {x^j} U {y*x^j}.
        QMatrix M(2 * n, 2 * n);
        for (int j = 0; j < n; ++j) {
            QPoly cx = (QPoly::monomial(j + 1, Rat(c))) % u; // c*x^(j+1) mod u
            for (int i = 0; i <= cx.deg(); ++i) M.at(i, j) = cx[i];
            M.at(n + j, j) = 1; // y * x^j
            QPoly fx = (fb * QPoly::monomial(j)) % u; // y^2 x^j = f*x^j mod u
            for (int i = 0; i <= fx.deg(); ++i) M.at(i, n + j) = fx[i];
            for (int i = 0; i <= cx.deg(); ++i) M.at(n + i, n + j) = cx[i];
        }
        QPoly N = charpoly(M);
        if (poly_gcd(N, N.derivative()).deg() != 0) continue;
        auto fac = factor_q(N);
        if (fac.factors.size() == 1) return std::nullopt; // inert: z^2 - f irreducible over K
        // Split: recover the root from the first norm factor.
        const QPoly& N1 = fac.factors[0].factor;
        KPoly shifted; // N1(z + c*x) in K[z]
        KPoly zcx = {QPoly::monomial(1, Rat(c)) % u, QPoly(Rat(1))};
        shifted = {QPoly(N1[N1.deg()])};
        for (int i = N1.deg() - 1; i >= 0; --i) {
            shifted = k_mul(shifted, zcx, u);
            if (N1[i] != 0) {
                if (shifted.empty()) shifted = {QPoly(N1[i])};
                else shifted[0] = (shifted[0] + QPoly(N1[i])) % u;
            }
        }
        KPoly target = {(-fb) % u, QPoly(), QPoly(Rat(1))}; // z^2 - f
        KPoly g = k_gcd(target, shifted, u);
        if (g.size() != 2) throw internal_error("norm factor did not produce a linear divisor");
        QPoly w = (-g[0]) % u;
        if (!((w * w - fb) % u).is_zero()) throw internal_error("square root candidate failed verification");
        return w;
    }
}

} // namespace hypell
