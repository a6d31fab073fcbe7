#include "hypell/curve.hpp"

#include <algorithm>

#include "hypell/errors.hpp"
#include "hypell/factor.hpp"

namespace hypell {

HyperCurve new_hyperelliptic(const QPoly& f, std::string label) {
    if (f.deg() < 3)
        throw domain_error("hyperelliptic model needs deg f >= 3; genus-0 models are unsupported");
    if (!is_squarefree(f))
        throw domain_error("invalid model: f is not squarefree");
    HyperCurve C;
    C.f = f;
    C.genus = (f.deg() - 1) / 2;
    if (f.deg() % 2 == 1)
        C.infinite_model = InfiniteModel::Ramified;
    else
        C.infinite_model = is_square(f.lc()) ? InfiniteModel::TwoRational
                                             : InfiniteModel::OneInert;
    C.label = std::move(label);
    return C;
}

static int kind_rank(PlaceKind k) {
    switch (k) {
        case PlaceKind::FiniteRamified: return 0;
        case PlaceKind::FiniteSplit: return 1;
        case PlaceKind::FiniteInert: return 2;
        case PlaceKind::Infinite: return 3;
    }
    return 4;
}

bool place_less(const Place& a, const Place& b) {
    bool ia = a.kind == PlaceKind::Infinite, ib = b.kind == PlaceKind::Infinite;
    if (ia != ib) return ib; // finite before infinite
    if (ia) return a.infinite_index < b.infinite_index;
    if (a.u != b.u) return poly_less(a.u, b.u);
    if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
    return poly_less(a.v, b.v);
}

std::string place_str(const Place& P) {
    switch (P.kind) {
        case PlaceKind::Infinite:
            return P.infinite_index == 0 ? "oo" : "oo'";
        case PlaceKind::FiniteRamified:
            return "(" + P.u.str() + ", 0)";
        case PlaceKind::FiniteInert:
            return "(" + P.u.str() + ", inert)";
        case PlaceKind::FiniteSplit:
            return "(" + P.u.str() + ", " + P.v.str() + ")";
    }
    return "?";
}

static void check_u(const QPoly& u) {
    if (u.deg() < 1 || u.lc() != 1)
        throw precondition_error("place needs a monic nonconstant u");
    if (!is_irreducible_q(u))
        throw precondition_error("not a point: u is reducible over Q; factor it into places first");
}

Place make_place(const HyperCurve& C, const QPoly& u, const QPoly& v) {
    check_u(u);
    Place P;
    P.u = u;
    QPoly fbar = C.f % u;
    if (fbar.is_zero()) {
        if (!(v % u).is_zero())
            throw domain_error("not on curve: u divides f, so the place is ramified and needs v = 0");
        P.kind = PlaceKind::FiniteRamified;
        P.degree = u.deg();
        return P;
    }
    QPoly vr = v % u;
    if (mulmod(vr, vr, u) != fbar)
        throw domain_error("not on curve: v^2 != f (mod u)");
    P.kind = PlaceKind::FiniteSplit;
    P.v = vr;
    P.degree = u.deg();
    return P;
}

Place make_inert_place(const HyperCurve& C, const QPoly& u) {
    check_u(u);
    QPoly fbar = C.f % u;
    if (fbar.is_zero())
        throw domain_error("u divides f: the place is ramified, not inert");
    if (sqrt_mod_irreducible(C.f, u))
        throw domain_error("f is a square in Q[x]/u: the fiber splits into two places");
    Place P;
    P.kind = PlaceKind::FiniteInert;
    P.u = u;
    P.degree = 2 * u.deg();
    return P;
}

Place infinite_place(const HyperCurve& C, int index) {
    if (index < 0 || index >= C.infinite_place_count())
        throw precondition_error("infinite place index out of range for this model");
    Place P;
    P.kind = PlaceKind::Infinite;
    P.infinite_index = index;
    P.degree = C.infinite_model == InfiniteModel::OneInert ? 2 : 1;
    return P;
}

std::vector<Place> infinite_places(const HyperCurve& C) {
    std::vector<Place> out;
    for (int i = 0; i < C.infinite_place_count(); ++i) out.push_back(infinite_place(C, i));
    return out;
}

std::vector<Place> decompose_fiber(const HyperCurve& C, const Rat& t) {
    QPoly u = QPoly::from_desc({1, -t});
    Rat ft = C.f.eval(t);
    std::vector<Place> out;
    if (ft == 0) {
        out.push_back(make_place(C, u, QPoly()));
        return out;
    }
    Rat s;
    if (is_square(ft, &s)) {
        out.push_back(make_place(C, u, QPoly::from_desc({-s})));
        out.push_back(make_place(C, u, QPoly::from_desc({s})));
        std::sort(out.begin(), out.end(), place_less);
    } else {
        out.push_back(make_inert_place(C, u));
    }
    return out;
}

long plane_genus_bound(long d) {
    if (d < 1) throw precondition_error("plane curve degree must be >= 1");
    return (d - 1) * (d - 2) / 2;
}

long product_genus_bound(long d1, long g1, long d2, long g2) {
    if (d1 < 1 || d2 < 1 || g1 < 0 || g2 < 0)
        throw precondition_error("product genus bound needs d_i >= 1, g_i >= 0");
    return (d1 - 1) * (d2 - 1) + d1 * g1 + d2 * g2;
}

} // namespace hypell
