#include "hypell/rrspace.hpp"

#include <algorithm>
#include <sstream>

#include "hypell/errors.hpp"
#include "hypell/factor.hpp"
#include "hypell/qmatrix.hpp"

namespace hypell {

namespace {

int floor_div(int a, int b) {
    // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

// Multiplicity of the irreducible u in g; g must be nonzero.
int poly_val(const QPoly& g, const QPoly& u) {
    int v = 0;
    QPoly r = g;
    for (;;) {
        auto qr = divrem(r, u);
        if (!qr.rem.is_zero()) return v;
        r = qr.quot;
        ++v;
    }
}

// v_P(a + b*y) at the split place (u, vbr). The norm (a + by)(a - by)
// bounds the answer: v_P <= v_u(a^2 - f b^2), so the u-adic precision of
// the lifted branch doubles from 2 up to that bound plus one and the first
// window with a nonzero remainder is exact.
int split_num_val(const HyperCurve& C, const QPoly& u, const QPoly& vbr,
                  const QPoly& a, const QPoly& b) {
    if (b.is_zero()) return poly_val(a, u);
    if (a.is_zero()) return poly_val(b, u); // y is a unit at a split place
    QPoly N = a * a - C.f * b * b;
    int cap = poly_val(N, u);
    if (cap == 0) return 0;
    int m = 2;
    for (;;) {
        if (m > cap + 1) m = cap + 1;
        QPoly V = hensel_sqrt_unchecked(C.f, u, m, vbr);
        QPoly w = (a + b * V) % u.pow(static_cast<unsigned long>(m));
        if (!w.is_zero()) return poly_val(w, u);
        if (m == cap + 1)
            throw internal_error("split valuation exceeded its norm bound");
        m = std::min(2 * m, cap + 1);
    }
}

// v_P(a + b*y) at the ramified place over u (u | f): v_P(a) is even,
// v_P(b*y) odd, so the minimum is exact.
int ram_num_val(const QPoly& u, const QPoly& a, const QPoly& b) {
    if (b.is_zero()) return 2 * poly_val(a, u);
    if (a.is_zero()) return 2 * poly_val(b, u) + 1;
    return std::min(2 * poly_val(a, u), 2 * poly_val(b, u) + 1);
}

// v_P(a + b*y) at the inert place over u. The local ring is free with
// basis {1, y} over the u-adic DVR, so u^k divides a + b*y iff it divides
// both coordinates.
int inert_num_val(const QPoly& u, const QPoly& a, const QPoly& b) {
    if (b.is_zero()) return poly_val(a, u);
    if (a.is_zero()) return poly_val(b, u);
    return std::min(poly_val(a, u), poly_val(b, u));
}

Rat branch_root(const HyperCurve& C, int index) {
    Rat s;
    if (!is_square(C.f.lc(), &s))
        throw internal_error("split infinite model without a rational leading root");
    return index == 0 ? s : -s;
}

// t-adic valuation of a nonzero truncated series.
int t_val(const QPoly& w) {
    const auto& c = w.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != Rat(0)) return static_cast<int>(i);
    throw internal_error("t-adic valuation of zero");
}

// v at the infinite branch `index` of a + b*y on a two-branch model.
// In t = 1/x the branch is y = t^{-h} * S(t) with S = sqrt(rev f),
// S(0) = +-sqrt(lc f); precision escalates under the norm bound
// 2*max(deg a, deg b + h) - deg(a^2 - f b^2) exactly as in the finite
// split case.
int inf_split_num_val(const HyperCurve& C, int index, const QPoly& a, const QPoly& b) {
    int h = C.f.deg() / 2;
    if (b.is_zero()) return -a.deg();
    if (a.is_zero()) return -b.deg() - h;
    int M = std::max(a.deg(), b.deg() + h);
    QPoly N = a * a - C.f * b * b;
    int cap = 2 * M - N.deg();
    QPoly revf = C.f.reverse(2 * h);
    Rat c0 = branch_root(C, index);
    int m = 2;
    for (;;) {
        if (m > cap + 1) m = cap + 1;
        QPoly S = series_sqrt(revf, m, c0);
        QPoly w;
        for (int i = 0; i <= a.deg(); ++i)
            w += QPoly::monomial(M - i, a[i]);
        for (int j = 0; j <= b.deg(); ++j)
            w += (S * b[j]).shift_up(M - h - j);
        w = w.truncate(m);
        if (!w.is_zero()) return t_val(w) - M;
        if (m == cap + 1)
            throw internal_error("infinite valuation exceeded its norm bound");
        m = std::min(2 * m, cap + 1);
    }
}

// v at the single infinite place of a + b*y (a, b not both zero).
int inf_num_val(const HyperCurve& C, const Place& P, const QPoly& a, const QPoly& b) {
    switch (C.infinite_model) {
    case InfiniteModel::Ramified:
        if (b.is_zero()) return -2 * a.deg();
        if (a.is_zero()) return -2 * b.deg() - C.f.deg();
        return std::min(-2 * a.deg(), -2 * b.deg() - C.f.deg());
    case InfiniteModel::TwoRational:
        return inf_split_num_val(C, P.infinite_index, a, b);
    case InfiniteModel::OneInert: {
        int h = C.f.deg() / 2;
        // lc f is a nonsquare, so the top coefficients of a and b*y can
        // never cancel and the generic minimum is exact.
        if (b.is_zero()) return -a.deg();
        if (a.is_zero()) return -b.deg() - h;
        return std::min(-a.deg(), -b.deg() - h);
    }
    }
    throw internal_error("unhandled infinite model");
}

int den_val(const HyperCurve& C, const Place& P, const QPoly& den) {
    if (den.is_constant()) return 0;
    switch (P.kind) {
    case PlaceKind::FiniteSplit:
    case PlaceKind::FiniteInert:
        return poly_val(den, P.u);
    case PlaceKind::FiniteRamified:
        return 2 * poly_val(den, P.u);
    case PlaceKind::Infinite:
        return C.infinite_model == InfiniteModel::Ramified ? -2 * den.deg() : -den.deg();
    }
    throw internal_error("unhandled place kind");
}

void validate_entry(const HyperCurve& C, const Place& P) {
    auto fail = [&](const std::string& why) {
        throw precondition_error("divisor entry " + place_str(P) + ": " + why);
    };
    if (P.kind == PlaceKind::Infinite) {
        if (!P.u.is_zero() || P.infinite_index < 0 ||
            P.infinite_index >= C.infinite_place_count())
            fail("invalid infinite branch");
        int want = C.infinite_model == InfiniteModel::OneInert ? 2 : 1;
        if (P.degree != want) fail("wrong degree");
        return;
    }
    if (P.u.is_zero() || P.u.is_constant() || P.u.lc() != Rat(1))
        fail("u must be monic and nonconstant");
    if (!is_irreducible_q(P.u)) fail("u is reducible");
    QPoly fbar = C.f % P.u;
    switch (P.kind) {
    case PlaceKind::FiniteSplit:
        if (fbar.is_zero()) fail("the fiber over u is ramified");
        if (P.v.is_zero() || P.v.deg() >= P.u.deg() || mulmod(P.v, P.v, P.u) != fbar)
            fail("v^2 != f mod u");
        if (P.degree != P.u.deg()) fail("wrong degree");
        break;
    case PlaceKind::FiniteRamified:
        if (!fbar.is_zero()) fail("u does not divide f");
        if (!P.v.is_zero()) fail("y vanishes on a ramified place");
        if (P.degree != P.u.deg()) fail("wrong degree");
        break;
    case PlaceKind::FiniteInert:
        if (fbar.is_zero()) fail("the fiber over u is ramified");
        if (!P.v.is_zero()) fail("inert places carry no v");
        if (sqrt_mod_irreducible(C.f, P.u)) fail("f is a square mod u, the fiber splits");
        if (P.degree != 2 * P.u.deg()) fail("wrong degree");
        break;
    default:
        fail("unknown kind");
    }
}

void validate_divisor(const HyperCurve& C, const Divisor& D) {
    for (const auto& [P, m] : D.entries()) {
        (void)m;
        validate_entry(C, P);
    }
}

// One fiber of the x-map grouped by its defining polynomial u, with the
// multiplicities D assigns to the places above u.
struct Fiber {
    QPoly u;
    PlaceKind kind = PlaceKind::FiniteSplit;
    QPoly v;          // split: branch with multiplicity mult
    int mult = 0;     // split: at (u, v); ramified/inert: at the place
    int mult_conj = 0; // split only: at (u, -v)
    int den_pow = 0;  // exponent of u in the common denominator
};

std::vector<Fiber> group_fibers(const Divisor& D, int n_inf[2]) {
    std::vector<Fiber> fibers;
    n_inf[0] = n_inf[1] = 0;
    for (const auto& [P, m] : D.entries()) {
        if (P.kind == PlaceKind::Infinite) {
            n_inf[P.infinite_index] = m;
            continue;
        }
        Fiber* g = nullptr;
        for (auto& fb : fibers)
            if (fb.u == P.u) { g = &fb; break; }
        if (!g) {
            fibers.push_back({P.u, P.kind, P.v, m, 0, 0});
            continue;
        }
        // second entry above the same u: only the split conjugate is possible
        if (g->kind != PlaceKind::FiniteSplit || P.kind != PlaceKind::FiniteSplit ||
            P.v != -g->v)
            throw precondition_error("conflicting divisor entries above " + g->u.str());
        g->mult_conj = m;
    }
    return fibers;
}

// Rows forcing sum_i a_i * (x^i mod M) + sum_j b_j * ((x^j * V) mod M) = 0,
// i.e. deg M scalar conditions appended to `rows`. Either block may be
// skipped by passing a negative cap.
void add_mod_rows(std::vector<std::vector<Rat>>& rows, int cols, const QPoly& M,
                  int a_off, int Ma, int b_off, int Mb, const QPoly& V) {
    int dim = M.deg();
    size_t base = rows.size();
    rows.insert(rows.end(), static_cast<size_t>(dim), std::vector<Rat>(cols, Rat(0)));
    QPoly cur(1);
    for (int i = 0; i <= Ma; ++i) {
        for (int k = 0; k <= cur.deg(); ++k)
            rows[base + k][a_off + i] += cur[k];
        cur = (cur.shift_up(1)) % M;
    }
    if (Mb >= 0) {
        QPoly curb = V % M;
        for (int j = 0; j <= Mb; ++j) {
            for (int k = 0; k <= curb.deg(); ++k)
                rows[base + k][b_off + j] += curb[k];
            curb = curb.shift_up(1) % M;
        }
    }
}

// Divisor of the polynomial g(x) pulled back through the x-map: zeros above
// each irreducible factor plus the matching poles at infinity.
Divisor poly_pullback(const HyperCurve& C, const QPoly& g) {
    Divisor out;
    if (g.is_constant()) return out;
    for (const auto& fac : factor_q(g).factors) {
        const QPoly& u = fac.factor;
        int m = fac.multiplicity;
        if ((C.f % u).is_zero()) {
            out.add(Place{PlaceKind::FiniteRamified, u, QPoly(), 0, u.deg()}, 2 * m);
        } else if (auto w = sqrt_mod_irreducible(C.f, u)) {
            out.add(make_place(C, u, *w), m);
            out.add(make_place(C, u, -*w), m);
        } else {
            out.add(Place{PlaceKind::FiniteInert, u, QPoly(), 0, 2 * u.deg()}, m);
        }
    }
    int d = g.deg();
    if (C.infinite_model == InfiniteModel::TwoRational) {
        out.add(infinite_place(C, 0), -d);
        out.add(infinite_place(C, 1), -d);
    } else if (C.infinite_model == InfiniteModel::Ramified) {
        out.add(infinite_place(C, 0), -2 * d);
    } else {
        out.add(infinite_place(C, 0), -d);
    }
    return out;
}

} // namespace

Divisor Divisor::single(const Place& P, int mult) {
    Divisor D;
    D.add(P, mult);
    return D;
}

void Divisor::add(const Place& P, int mult) {
    if (mult == 0) return;
    auto it = std::lower_bound(e_.begin(), e_.end(), P,
                               [](const std::pair<Place, int>& ent, const Place& q) {
                                   return place_less(ent.first, q);
                               });
    if (it != e_.end() && it->first == P) {
        it->second += mult;
        if (it->second == 0) e_.erase(it);
    } else {
        e_.insert(it, {P, mult});
    }
}

int Divisor::coeff(const Place& P) const {
    for (const auto& [Q, m] : e_)
        if (Q == P) return m;
    return 0;
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& [P, m] : e_) d += m * P.degree;
    return d;
}

bool Divisor::is_effective() const {
    for (const auto& [P, m] : e_) {
        (void)P;
        if (m < 0) return false;
    }
    return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (const auto& [P, m] : o.e_) r.add(P, m);
    return r;
}

Divisor Divisor::operator-() const {
    Divisor r = *this;
    for (auto& ent : r.e_) ent.second = -ent.second;
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (-o); }

Divisor Divisor::operator*(int k) const {
    if (k == 0) return {};
    Divisor r = *this;
    for (auto& ent : r.e_) ent.second *= k;
    return r;
}

std::string Divisor::str() const {
    if (e_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [P, m] : e_) {
        int a = m < 0 ? -m : m;
        if (first) {
            if (m < 0) os << "-";
            first = false;
        } else {
            os << (m < 0 ? " - " : " + ");
        }
        if (a != 1) os << a << "*";
        os << place_str(P);
    }
    return os.str();
}

CurveFunction make_function(const QPoly& a, const QPoly& b, const QPoly& den) {
    if (den.is_zero()) throw precondition_error("zero denominator");
    if (a.is_zero() && b.is_zero()) return {QPoly(), QPoly(), QPoly(1)};
    Rat s = den.lc();
    CurveFunction phi{a / s, b / s, den.monic()};
    QPoly g = poly_gcd(poly_gcd(phi.a, phi.b), phi.den);
    if (g.deg() > 0) {
        phi.a = phi.a / g;
        phi.b = phi.b / g;
        phi.den = phi.den / g;
    }
    return phi;
}

CurveFunction fn_add(const CurveFunction& x, const CurveFunction& y) {
    QPoly g = poly_gcd(x.den, y.den);
    QPoly xs = y.den / g, ys = x.den / g;
    return make_function(x.a * xs + y.a * ys, x.b * xs + y.b * ys, x.den * xs);
}

CurveFunction fn_scale(const CurveFunction& x, const Rat& c) {
    if (c == Rat(0)) return make_function(QPoly(), QPoly());
    return {x.a * c, x.b * c, x.den};
}

CurveFunction fn_inverse(const HyperCurve& C, const CurveFunction& phi) {
    if (phi.is_zero()) throw precondition_error("inverse of the zero function");
    QPoly N = phi.a * phi.a - C.f * phi.b * phi.b;
    return make_function(phi.den * phi.a, -(phi.den * phi.b), N);
}

std::string CurveFunction::str() const {
    if (is_zero()) return "0";
    std::string num;
    if (b.is_zero()) {
        num = a.str();
    } else {
        std::string ypart = b.is_one() ? "y" : "(" + b.str() + ")*y";
        num = a.is_zero() ? ypart : a.str() + " + " + ypart;
    }
    if (den.is_one()) return num;
    return "(" + num + ") / (" + den.str() + ")";
}

int valuation(const HyperCurve& C, const Place& P, const CurveFunction& phi) {
    if (phi.is_zero()) throw precondition_error("valuation of the zero function");
    int vn;
    switch (P.kind) {
    case PlaceKind::FiniteSplit:
        vn = split_num_val(C, P.u, P.v, phi.a, phi.b);
        break;
    case PlaceKind::FiniteRamified:
        vn = ram_num_val(P.u, phi.a, phi.b);
        break;
    case PlaceKind::FiniteInert:
        vn = inert_num_val(P.u, phi.a, phi.b);
        break;
    case PlaceKind::Infinite:
        vn = inf_num_val(C, P, phi.a, phi.b);
        break;
    default:
        throw internal_error("unhandled place kind");
    }
    return vn - den_val(C, P, phi.den);
}

Divisor principal_divisor(const HyperCurve& C, const CurveFunction& phi) {
    if (phi.is_zero()) throw precondition_error("divisor of the zero function");
    Divisor out = -poly_pullback(C, phi.den);
    if (phi.b.is_zero()) {
        out = out + poly_pullback(C, phi.a);
    } else {
        QPoly g = poly_gcd(phi.a, phi.b);
        QPoly ap = phi.a / g, bp = phi.b / g;
        out = out + poly_pullback(C, g);
        // finite zeros of the primitive part live above factors of its norm
        QPoly N = ap * ap - C.f * bp * bp;
        for (const auto& fac : factor_q(N).factors) {
            const QPoly& u = fac.factor;
            if ((C.f % u).is_zero()) {
                out.add(Place{PlaceKind::FiniteRamified, u, QPoly(), 0, u.deg()},
                        ram_num_val(u, ap, bp));
                continue;
            }
            // u | N with gcd(ap, bp) = 1 forces bp invertible mod u, and the
            // vanishing branch is y = -ap/bp; the conjugate branch is a unit.
            if ((bp % u).is_zero())
                throw internal_error("norm factor with non-invertible b");
            QPoly w = (-(ap * inverse_mod(bp, u))) % u;
            Place Pz = make_place(C, u, w);
            int val = split_num_val(C, u, w, ap, bp);
            if (val != fac.multiplicity)
                throw internal_error("split valuation disagrees with the norm");
            out.add(Pz, val);
        }
        for (const Place& Pi : infinite_places(C))
            out.add(Pi, inf_num_val(C, Pi, ap, bp));
    }
    if (out.degree() != 0) throw internal_error("principal divisor of nonzero degree");
    return out;
}

RRSpace riemann_roch_basis(const HyperCurve& C, const Divisor& D) {
    validate_divisor(C, D);
    int g = C.genus;
    int degD = D.degree();
    if (degD > 6 * g + 6 || -degD > 6 * g + 6)
        throw capability_error("|deg D| > 6g + 6");
    RRSpace out;
    out.D = D;
    if (degD < 0) return out;

    int n_inf[2];
    std::vector<Fiber> fibers = group_fibers(D, n_inf);
    QPoly den(1);
    for (auto& fb : fibers) {
        switch (fb.kind) {
        case PlaceKind::FiniteSplit:
            fb.den_pow = std::max({fb.mult, fb.mult_conj, 0});
            break;
        case PlaceKind::FiniteRamified:
            fb.den_pow = fb.mult > 0 ? (fb.mult + 1) / 2 : 0;
            break;
        default:
            fb.den_pow = std::max(fb.mult, 0);
        }
        if (fb.den_pow > 0) den *= fb.u.pow(static_cast<unsigned long>(fb.den_pow));
    }
    int dd = den.deg();

    // Degree caps on a and b. Averaging any member of L(D) with its image
    // under the hyperelliptic involution shows a/den and (b/den)*y both obey
    // the worst infinite pole bound, so these caps already contain L(D).
    int Ma = 0, Mb = 0;
    int nmax = std::max(n_inf[0], n_inf[1]);
    switch (C.infinite_model) {
    case InfiniteModel::Ramified:
        // v(a) is even and v(b*y) odd at the ramified branch, so the two
        // caps are exact and no condition rows are needed at infinity
        Ma = dd + floor_div(n_inf[0], 2);
        Mb = dd + floor_div(n_inf[0] - C.f.deg(), 2);
        break;
    case InfiniteModel::TwoRational:
        Ma = dd + nmax;
        Mb = Ma - C.f.deg() / 2;
        break;
    case InfiniteModel::OneInert:
        // single place, exact valuation: caps only
        Ma = dd + n_inf[0];
        Mb = Ma - C.f.deg() / 2;
        break;
    }
    int na = Ma >= 0 ? Ma + 1 : 0;
    int nb = Mb >= 0 ? Mb + 1 : 0;
    int cols = na + nb;

    std::vector<std::vector<Rat>> rows;
    for (const auto& fb : fibers) {
        switch (fb.kind) {
        case PlaceKind::FiniteSplit: {
            struct Branch { QPoly v; int mult; };
            for (const Branch& br : {Branch{fb.v, fb.mult}, Branch{-fb.v, fb.mult_conj}}) {
                int r = fb.den_pow - br.mult;
                if (r <= 0) continue;
                QPoly V = hensel_sqrt_unchecked(C.f, fb.u, r, br.v);
                add_mod_rows(rows, cols, fb.u.pow(static_cast<unsigned long>(r)),
                             0, Ma, na, nb > 0 ? Mb : -1, V);
            }
            break;
        }
        case PlaceKind::FiniteRamified: {
            int r = 2 * fb.den_pow - fb.mult;
            if (r <= 0) break;
            int alpha = (r + 1) / 2, beta = r / 2;
            if (alpha > 0)
                add_mod_rows(rows, cols, fb.u.pow(static_cast<unsigned long>(alpha)),
                             0, Ma, na, -1, QPoly());
            if (beta > 0 && nb > 0)
                add_mod_rows(rows, cols, fb.u.pow(static_cast<unsigned long>(beta)),
                             0, -1, na, Mb, QPoly(1));
            break;
        }
        case PlaceKind::FiniteInert: {
            int r = fb.den_pow - fb.mult;
            if (r <= 0) break;
            QPoly ur = fb.u.pow(static_cast<unsigned long>(r));
            add_mod_rows(rows, cols, ur, 0, Ma, na, -1, QPoly());
            if (nb > 0) add_mod_rows(rows, cols, ur, 0, -1, na, Mb, QPoly(1));
            break;
        }
        default:
            throw internal_error("infinite place in a finite fiber group");
        }
    }
    if (C.infinite_model == InfiniteModel::TwoRational && na > 0) {
        QPoly revf = C.f.reverse(C.f.deg());
        int h = C.f.deg() / 2;
        for (int idx = 0; idx < 2; ++idx) {
            int r = nmax - n_inf[idx];
            if (r <= 0) continue;
            QPoly S = series_sqrt(revf, r, branch_root(C, idx));
            size_t base = rows.size();
            rows.insert(rows.end(), static_cast<size_t>(r), std::vector<Rat>(cols, Rat(0)));
            for (int l = 0; l < r; ++l) {
                int i = Ma - l;
                if (i >= 0 && i <= Ma) rows[base + l][i] = Rat(1);
                for (int j = 0; j <= Mb && nb > 0; ++j) {
                    int k = l - (Ma - h - j);
                    if (k >= 0 && k <= S.deg()) rows[base + l][na + j] += S[k];
                }
            }
        }
    }

    QMatrix A(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < cols; ++j) A.at(i, j) = rows[i][j];
    for (const auto& vec : A.nullspace()) {
        std::vector<Rat> ac(vec.begin(), vec.begin() + na);
        std::vector<Rat> bc(vec.begin() + na, vec.end());
        out.basis.push_back(make_function(QPoly(std::move(ac)), QPoly(std::move(bc)), den));
    }
    out.h0 = static_cast<int>(out.basis.size());

    // certify the basis place by place before returning it
    std::vector<Place> checkset = infinite_places(C);
    for (const auto& fb : fibers) {
        switch (fb.kind) {
        case PlaceKind::FiniteSplit:
            checkset.push_back(make_place(C, fb.u, fb.v));
            checkset.push_back(make_place(C, fb.u, -fb.v));
            break;
        case PlaceKind::FiniteRamified:
            checkset.push_back(Place{PlaceKind::FiniteRamified, fb.u, QPoly(), 0, fb.u.deg()});
            break;
        default:
            checkset.push_back(Place{PlaceKind::FiniteInert, fb.u, QPoly(), 0, 2 * fb.u.deg()});
            break;
        }
    }
    for (const auto& phi : out.basis)
        for (const Place& P : checkset)
            if (valuation(C, P, phi) < -D.coeff(P))
                throw internal_error("basis element violates the divisor bound at " +
                                     place_str(P));
    if (degD > 2 * g - 2 && out.h0 != degD + 1 - g)
        throw internal_error("dimension disagrees with the Riemann-Roch count");
    return out;
}

int h0(const HyperCurve& C, const Divisor& D) { return riemann_roch_basis(C, D).h0; }

Divisor canonical_divisor(const HyperCurve& C) {
    Divisor K;
    int c = C.genus - 1;
    switch (C.infinite_model) {
    case InfiniteModel::Ramified:
        K.add(infinite_place(C, 0), 2 * c);
        break;
    case InfiniteModel::TwoRational:
        K.add(infinite_place(C, 0), c);
        K.add(infinite_place(C, 1), c);
        break;
    case InfiniteModel::OneInert:
        K.add(infinite_place(C, 0), c);
        break;
    }
    if (K.degree() != 2 * C.genus - 2 || h0(C, K) != C.genus)
        throw internal_error("canonical divisor failed its dimension check");
    return K;
}

std::optional<CurveFunction> is_principal(const HyperCurve& C, const Divisor& D) {
    if (D.degree() != 0) throw precondition_error("is_principal needs deg D = 0");
    RRSpace R = riemann_roch_basis(C, D);
    if (R.h0 == 0) return std::nullopt;
    if (R.h0 != 1) throw internal_error("degree-zero divisor with h0 > 1");
    // div(basis) = -D exactly (the effective divisor div + D has degree 0),
    // so the inverse realizes D.
    CurveFunction psi = fn_inverse(C, R.basis[0]);
    if (principal_divisor(C, psi) != D)
        throw internal_error("principal witness does not realize the divisor");
    return psi;
}

Divisor base_locus(const HyperCurve& C, const Divisor& D) {
    RRSpace R = riemann_roch_basis(C, D);
    if (R.h0 == 0) throw domain_error("base locus of an empty linear system");
    Divisor A0 = principal_divisor(C, R.basis[0]) + D;
    if (!A0.is_effective()) throw internal_error("member divisor not effective");
    Divisor B;
    for (const auto& [P, m] : A0.entries()) {
        int mn = m;
        for (int i = 1; i < R.h0 && mn > 0; ++i)
            mn = std::min(mn, valuation(C, P, R.basis[i]) + D.coeff(P));
        if (mn > 0) B.add(P, mn);
    }
    return B;
}

std::pair<CurveFunction, CurveFunction> base_point_free_pair(const HyperCurve& C,
                                                             const Divisor& D) {
    RRSpace R = riemann_roch_basis(C, D);
    if (R.h0 == 0) throw domain_error("empty linear system");
    Divisor E0 = principal_divisor(C, R.basis[0]) + D;
    if (E0.is_zero()) return {R.basis[0], R.basis[0]};
    if (R.h0 == 1) throw domain_error("system has base points");
    // Combinations along the moment curve (1, t, t^2, ...): each base-point
    // condition cuts a proper subspace, which such a curve meets only
    // finitely often, so a small t already clears every place of E0.
    int T = 4 * R.h0 * (static_cast<int>(E0.entries().size()) + 1) + 4;
    for (int t = 1; t <= T; ++t) {
        CurveFunction psi = R.basis[0];
        Rat tk(1);
        for (int j = 1; j < R.h0; ++j) {
            tk = tk * Rat(t);
            psi = fn_add(psi, fn_scale(R.basis[j], tk));
        }
        Divisor E = principal_divisor(C, psi) + D;
        bool disjoint = true;
        for (const auto& [P, m] : E.entries()) {
            (void)m;
            if (E0.coeff(P) != 0) { disjoint = false; break; }
        }
        if (disjoint) return {R.basis[0], psi};
    }
    throw domain_error("system has base points");
}

PointClassification classify_point(const HyperCurve& C, const Place& P) {
    RRSpace R = riemann_roch_basis(C, Divisor::single(P));
    PointClassification out;
    out.h0_x = R.h0;
    if (R.h0 < 2) {
        out.cls = PointClass::P1Isolated;
        return out;
    }
    out.cls = PointClass::P1Parameterized;
    for (const auto& phi : R.basis) {
        if (valuation(C, P, phi) != -1) continue;
        Divisor dphi = principal_divisor(C, phi);
        // membership already bounds the poles by P; the valuation check
        // makes the pole divisor exactly the point
        for (const auto& [Q, m] : dphi.entries())
            if (m < 0 && !(Q == P))
                throw internal_error("witness has a stray pole");
        out.witness = phi;
        return out;
    }
    throw internal_error("pencil without a member polar at the point");
}

ReducibilityReport reducibility_image_test(const HyperCurve& C, const Place& P,
                                           std::vector<std::pair<int, int>> partitions) {
    PointClassification cls = classify_point(C, P);
    if (cls.cls != PointClass::P1Isolated)
        throw precondition_error("point is P1-parameterized; the image test requires "
                                 "a P1-isolated point");
    int d = P.degree;
    if (partitions.empty())
        for (int e = 1; 2 * e <= d; ++e) partitions.push_back({e, d - e});
    for (const auto& [e1, e2] : partitions)
        if (e1 < 1 || e2 < 1 || e1 + e2 != d)
            throw precondition_error("invalid degree partition");
    // h0([x]) = 1 makes x the unique effective divisor in its class; a sum
    // of two nonzero effective divisors can never equal the single place x.
    ReducibilityReport rep;
    rep.certified = true;
    rep.h0_x = cls.h0_x;
    rep.degree = d;
    rep.partitions = std::move(partitions);
    return rep;
}

} // namespace hypell
