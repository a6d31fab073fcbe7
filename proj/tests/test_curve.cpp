#include "hypell/curve.hpp"

#include <doctest.h>

#include "hypell/errors.hpp"
#include "hypell/factor.hpp"

using namespace hypell;

namespace {

QPoly P(std::initializer_list<Rat> descending) {
    return QPoly::from_desc(std::vector<Rat>(descending));
}

// the degree-3 base change data behind the genus-5 cover of
// y^2 = x^3 - x + 1: numerator and denominator of the inner map
const QPoly kNum = P({1, 7, -9, 7}); // t^3 + 7t^2 - 9t + 7
const QPoly kDen = P({1, -1, 0});    // t^2 - t

QPoly genus5_model() {
    // y^2 = den * (num^3 - num*den^2 + den^3), the minimal polynomial model
    // of the fiber product over the x-line
    return kDen * (kNum * kNum * kNum - kNum * kDen * kDen + kDen * kDen * kDen);
}

} // namespace

TEST_CASE("hyperelliptic model validation and genus") {
    HyperCurve r = new_hyperelliptic(P({1, 0, 0, -6, 0, 0, -4, 0, 0, 40}));
    CHECK(r.genus == 4);
    CHECK(r.infinite_model == InfiniteModel::Ramified);
    CHECK(r.infinite_place_count() == 1);

    HyperCurve ueno = new_hyperelliptic(P({1, 0, 8, 0, 22, 0, 25, 0, 10}));
    CHECK(ueno.genus == 3);
    CHECK(ueno.infinite_model == InfiniteModel::TwoRational);
    CHECK(ueno.infinite_place_count() == 2);

    HyperCurve e = new_hyperelliptic(P({1, 0, -16, 16}), "e-distinguished");
    CHECK(e.genus == 1);
    CHECK(e.infinite_model == InfiniteModel::Ramified);
    CHECK(e.label == "e-distinguished");

    HyperCurve g2 = new_hyperelliptic(P({1, 0, 0, 0, 0, 1, 3}));
    CHECK(g2.genus == 2);
    CHECK(g2.infinite_model == InfiniteModel::TwoRational);

    HyperCurve inert_inf = new_hyperelliptic(P({2, 0, 0, 0, 0, 1, 3}));
    CHECK(inert_inf.genus == 2);
    CHECK(inert_inf.infinite_model == InfiniteModel::OneInert);
    CHECK(inert_inf.infinite_place_count() == 1);

    // lc 9/4 is a rational square
    HyperCurve sq_lc = new_hyperelliptic(P({Rat(9, 4), 0, 0, 0, 0, 1, 3}));
    CHECK(sq_lc.infinite_model == InfiniteModel::TwoRational);

    CHECK_THROWS_AS(new_hyperelliptic(P({1, 0, -1})), domain_error);          // deg 2
    CHECK_THROWS_AS(new_hyperelliptic(P({1, 1})), domain_error);              // deg 1
    CHECK_THROWS_AS(new_hyperelliptic(P({1, 0, -2, 0, 1})), domain_error);    // (x^2-1)^2
    CHECK_THROWS_AS(new_hyperelliptic(P({1, 2, 1}) * P({1, 2})), domain_error);
}

TEST_CASE("genus 5 fiber product model") {
    QPoly fC = genus5_model();
    HyperCurve C = new_hyperelliptic(fC);
    CHECK(fC.deg() == 11);
    CHECK(C.genus == 5);
    CHECK(C.infinite_model == InfiniteModel::Ramified);

    // pullback identity: with psi = num/den, (psi^3 - psi + 1) * den^4
    // equals den * f_C up to the den factor used in the model; concretely
    // f_C = den * (num^3 - num*den^2 + den^3)
    QPoly lhs = kNum * kNum * kNum - kNum * kDen * kDen + kDen * kDen * kDen;
    CHECK(fC == kDen * lhs);

    // the model factors as t * (t-1) * (irreducible of degree 9)
    QFactorization fac = factor_q(fC);
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.factors[0].factor == P({1, -1}));
    CHECK(fac.factors[1].factor == QPoly::x());
    CHECK(fac.factors[2].factor ==
          P({1, 21, 119, -18, -767, 2323, -3206, 2723, -1323, 343}));
    for (const auto& qf : fac.factors) CHECK(qf.multiplicity == 1);

    // the three rational Weierstrass points used in the text
    CHECK(fC.eval(Rat(0)) == 0);
    CHECK(fC.eval(Rat(1)) == 0);
    CHECK(C.infinite_place_count() == 1);
}

TEST_CASE("make_place split, ramified, and validation") {
    HyperCurve e = new_hyperelliptic(P({1, 0, -16, 16}));

    Place p0 = make_place(e, QPoly::x(), QPoly(4));
    CHECK(p0.kind == PlaceKind::FiniteSplit);
    CHECK(p0.degree == 1);
    CHECK(p0.v == QPoly(4));

    // v is reduced mod u on entry
    Place p0b = make_place(e, QPoly::x(), QPoly(4) + QPoly::x() * QPoly(9));
    CHECK(p0b == p0);

    // a ramified place from the full (irreducible) branch locus
    Place w = make_place(e, e.f, QPoly());
    CHECK(w.kind == PlaceKind::FiniteRamified);
    CHECK(w.degree == 3);

    CHECK_THROWS_AS(make_place(e, e.f, QPoly(1)), domain_error);       // v != 0 at branch
    CHECK_THROWS_AS(make_place(e, QPoly::x(), QPoly(3)), domain_error); // 9 != 16
    CHECK_THROWS_AS(make_place(e, P({1, 0, -1}), QPoly(1)), precondition_error); // reducible u
    CHECK_THROWS_AS(make_place(e, P({2, 0, 1}), QPoly(1)), precondition_error);  // nonmonic
    CHECK_THROWS_AS(make_place(e, QPoly(5), QPoly(1)), precondition_error);      // constant
}

TEST_CASE("make_place quadratic point on the even-degree example") {
    HyperCurve ueno = new_hyperelliptic(P({1, 0, 8, 0, 22, 0, 25, 0, 10}));
    // u = t^2 + 3/2: f reduces to the constant 1/16 mod u
    QPoly u = P({1, 0, Rat(3, 2)});
    Place pl = make_place(ueno, u, QPoly(Rat(1, 4)));
    CHECK(pl.kind == PlaceKind::FiniteSplit);
    CHECK(pl.degree == 2);
    CHECK((ueno.f % u) == QPoly(Rat(1, 16)));
    CHECK_THROWS_AS(make_place(ueno, u, QPoly(Rat(1, 2))), domain_error);
}

TEST_CASE("inert places") {
    HyperCurve e = new_hyperelliptic(P({1, 0, -16, 16}));
    // f(2) = -8 is not a square, so the fiber above x = 2 is one quadratic point
    Place q = make_inert_place(e, P({1, -2}));
    CHECK(q.kind == PlaceKind::FiniteInert);
    CHECK(q.degree == 2);
    CHECK(q.v.is_zero());

    // f(0) = 16 is a square: the fiber splits
    CHECK_THROWS_AS(make_inert_place(e, QPoly::x()), domain_error);
    // u | f: ramified, not inert
    CHECK_THROWS_AS(make_inert_place(e, e.f), domain_error);
    CHECK_THROWS_AS(make_inert_place(e, P({1, 0, -1})), precondition_error);

    // an inert place of local degree 4: on y^2 = x^5 - x + 1 reduce mod
    // u = x^2 + 2 to get 3x + 1, which is not a square in Q(sqrt(-2));
    // mod x^2 + 1 the same f reduces to 1 and the fiber splits instead
    HyperCurve g2 = new_hyperelliptic(P({1, 0, 0, 0, -1, 1}));
    CHECK((g2.f % P({1, 0, 2})) == P({3, 1}));
    Place q4 = make_inert_place(g2, P({1, 0, 2}));
    CHECK(q4.degree == 4);
    CHECK_THROWS_AS(make_inert_place(g2, P({1, 0, 1})), domain_error);
}

TEST_CASE("fiber decomposition over rational x") {
    HyperCurve e = new_hyperelliptic(P({1, 0, -16, 16}));

    auto split = decompose_fiber(e, Rat(0));
    REQUIRE(split.size() == 2);
    CHECK(split[0].v == QPoly(-4));
    CHECK(split[1].v == QPoly(4));
    CHECK(split[0].degree == 1);
    CHECK(place_less(split[0], split[1]));

    auto inert = decompose_fiber(e, Rat(2));
    REQUIRE(inert.size() == 1);
    CHECK(inert[0].kind == PlaceKind::FiniteInert);
    CHECK(inert[0].degree == 2);

    HyperCurve w = new_hyperelliptic(P({1, 0, -4, 0})); // y^2 = x^3 - 4x
    auto ram = decompose_fiber(w, Rat(2));
    REQUIRE(ram.size() == 1);
    CHECK(ram[0].kind == PlaceKind::FiniteRamified);
    CHECK(ram[0].degree == 1);

    // a fractional fiber: f(1/2) = 1/8 - 8 + 16 = 65/8, nonsquare
    auto frac = decompose_fiber(e, Rat(1, 2));
    REQUIRE(frac.size() == 1);
    CHECK(frac[0].kind == PlaceKind::FiniteInert);
    CHECK(frac[0].u == P({1, Rat(-1, 2)}));

    // every fiber's total local degree is 2
    for (long t = -6; t <= 6; ++t) {
        int total = 0;
        for (const Place& pl : decompose_fiber(e, Rat(t)))
            total += pl.kind == PlaceKind::FiniteRamified ? 2 : pl.degree;
        CHECK(total == 2);
    }
}

TEST_CASE("infinite places per model") {
    HyperCurve ueno = new_hyperelliptic(P({1, 0, 8, 0, 22, 0, 25, 0, 10}));
    auto ii = infinite_places(ueno);
    REQUIRE(ii.size() == 2);
    CHECK(ii[0].degree == 1);
    CHECK(ii[1].degree == 1);
    CHECK(ii[0].infinite_index == 0);
    CHECK(ii[1].infinite_index == 1);
    CHECK(place_less(ii[0], ii[1]));
    CHECK_THROWS_AS(infinite_place(ueno, 2), precondition_error);
    CHECK_THROWS_AS(infinite_place(ueno, -1), precondition_error);

    HyperCurve e = new_hyperelliptic(P({1, 0, -16, 16}));
    auto ie = infinite_places(e);
    REQUIRE(ie.size() == 1);
    CHECK(ie[0].degree == 1);
    CHECK_THROWS_AS(infinite_place(e, 1), precondition_error);

    HyperCurve ni = new_hyperelliptic(P({2, 0, 0, 0, 0, 1, 3}));
    auto in = infinite_places(ni);
    REQUIRE(in.size() == 1);
    CHECK(in[0].degree == 2);
}

TEST_CASE("place ordering and printing") {
    HyperCurve e = new_hyperelliptic(P({1, 0, -16, 16}));
    Place a = make_place(e, QPoly::x(), QPoly(-4));
    Place b = make_place(e, QPoly::x(), QPoly(4));
    Place c = make_inert_place(e, P({1, -2}));
    Place oo = infinite_place(e, 0);

    CHECK(place_less(a, b));
    CHECK(place_less(c, a));  // x - 2 before x
    CHECK(place_less(c, oo)); // finite before infinite
    CHECK_FALSE(place_less(a, a));
    CHECK(a == a);
    CHECK_FALSE(a == b);

    CHECK(place_str(a) == "(x, -4)");
    CHECK(place_str(c) == "(x - 2, inert)");
    CHECK(place_str(oo) == "oo");

    HyperCurve w = new_hyperelliptic(P({1, 0, -4, 0}));
    Place r = make_place(w, P({1, -2}), QPoly());
    Place s = make_place(w, QPoly::x(), QPoly());
    CHECK(place_str(r) == "(x - 2, 0)");
    CHECK(place_less(r, s));
}

TEST_CASE("genus bound formulas") {
    CHECK(plane_genus_bound(1) == 0);
    CHECK(plane_genus_bound(2) == 0);
    CHECK(plane_genus_bound(3) == 1);
    CHECK(plane_genus_bound(4) == 3);
    CHECK(plane_genus_bound(5) == 6);
    CHECK_THROWS_AS(plane_genus_bound(0), precondition_error);

    CHECK(product_genus_bound(3, 1, 2, 0) == 5);
    CHECK(product_genus_bound(1, 2, 3, 4) == 2 + 12);
    CHECK(product_genus_bound(2, 0, 2, 0) == 1);
    CHECK_THROWS_AS(product_genus_bound(0, 1, 2, 0), precondition_error);
    CHECK_THROWS_AS(product_genus_bound(2, -1, 2, 0), precondition_error);
}
