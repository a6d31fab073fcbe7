#include <doctest.h>

#include "hypell/qmatrix.hpp"
#include "hypell/qpoly.hpp"

using namespace hypell;

namespace {
QPoly P(std::vector<long> desc) {
    std::vector<Rat> c;
    for (long v : desc) c.emplace_back(v);
    return QPoly::from_desc(std::move(c));
}
} // namespace

TEST_CASE("arithmetic basics") {
    QPoly f = P({1, 0, -16, 16}); // x^3 - 16x + 16
    CHECK(f.deg() == 3);
    CHECK(f.eval(Rat(2)) == -8);
    CHECK((f * f).deg() == 6);
    CHECK((f - f).is_zero());
    CHECK(f.derivative() == P({3, 0, -16}));
    CHECK(f.str() == "x^3 - 16*x + 16");
    CHECK(P({-1, 0, 1, -2}).str("t") == "-t^3 + t - 2");
    CHECK(QPoly().str() == "0");
    CHECK(f.compose(QPoly::x() + QPoly(Rat(1))).eval(Rat(1)) == f.eval(Rat(2)));
}

TEST_CASE("division with remainder") {
    QPoly a = P({1, 2, 3, 4, 5});
    QPoly b = P({2, 0, -1});
    auto [q, r] = divrem(a, b);
    CHECK(a == q * b + r);
    CHECK(r.deg() < b.deg());
    CHECK_THROWS_AS(divrem(a, QPoly()), domain_error);
    CHECK((a * b) / b == a);
    CHECK_THROWS_AS(a / b, internal_error); // inexact
}

TEST_CASE("gcd via primitive PRS") {
    QPoly g = P({1, 0, 1}) * P({1, -3});
    QPoly h = P({1, 0, 1}) * P({1, 4});
    CHECK(poly_gcd(g, h) == P({1, 0, 1}));
    CHECK(poly_gcd(g, QPoly()) == g.monic());
    CHECK(poly_gcd(P({3, 1}), P({5, 1})).deg() == 0);
    // scale invariance
    CHECK(poly_gcd(g * Rat(7, 3), h * Rat(-2, 5)) == P({1, 0, 1}));
}

TEST_CASE("extended gcd produces a Bezout identity") {
    QPoly f = P({1, 0, -16, 16});
    QPoly fp = f.derivative();
    auto [g, s, t] = poly_xgcd(f, fp);
    CHECK(g.is_one()); // f is squarefree
    CHECK(s * f + t * fp == QPoly(Rat(1)));
    QPoly m = P({1, 0, 1});
    QPoly inv = inverse_mod(P({1, 1}), m); // (x+1)^-1 mod x^2+1
    CHECK(mulmod(inv, P({1, 1}), m).is_one());
    CHECK_THROWS_AS(inverse_mod(m, m), domain_error);
}

TEST_CASE("resultant and discriminant match known values") {
    QPoly f = P({1, 0, -16, 16});
    CHECK(resultant(f, f.derivative()) == Rat(-9472));
    CHECK(discriminant(f) == Rat(9472));
    CHECK(resultant(P({1, 0, 0, 1, 1}), P({1, 0, -3})) == Rat(97));
    CHECK(resultant(P({1, 0, -3}), P({1, 0, 0, 1, 1})) == Rat(97));
    CHECK(resultant(P({1, 1, -2}), P({1, 4, -5})) == Rat(0)); // share x-1
    CHECK(discriminant(P({3, 5, -7})) == Rat(109));
    // res(a, b) = lc(a)^deg b * prod b(alpha): for a = 2x-4, b = x^2+1: 2^2 * b(2)
    CHECK(resultant(P({2, -4}), P({1, 0, 1})) == Rat(20));
}

TEST_CASE("squarefree decomposition (Yun)") {
    QPoly f = P({1, -1}) * P({1, 0, 1}).pow(3) * P({1, 2}).pow(2) * Rat(6);
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].factor == P({1, -1}));
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[1].factor == P({1, 2}));
    CHECK(parts[1].multiplicity == 2);
    CHECK(parts[2].factor == P({1, 0, 1}));
    CHECK(parts[2].multiplicity == 3);
    CHECK(is_squarefree(P({1, 0, -16, 16})));
    CHECK_FALSE(is_squarefree(P({1, 2, 1})));
}

TEST_CASE("content and primitive part") {
    QPoly f = P({6, -4, 10}) * Rat(1, 15);
    CHECK(f.content() == Rat(2, 15));
    CHECK(f.primitive_z() == P({3, -2, 5}));
    QPoly g = P({-2, 4}); // negative lc: content carries the sign
    CHECK(g.content() == Rat(-2));
    CHECK(g.primitive_z() == P({1, -2}));
    CHECK(g.content() * g.primitive_z()[1] == g[1] * Rat(1));
}

TEST_CASE("powmod and series helpers") {
    QPoly m = P({1, 0, 0, 0, 1, 1}); // x^5 + x + 1
    QPoly a = P({1, 2});
    CHECK(powmod(a, Int(11), m) == (a.pow(11)) % m);
    CHECK(P({1, 2, 3}).reverse(2) == P({3, 2, 1}));
    CHECK(P({1, 2, 3}).reverse(4) == P({3, 2, 1, 0, 0}));
    CHECK(P({1, 2, 3, 4}).truncate(2) == P({3, 4}));
    CHECK(P({1, 2, 3}).shift_up(2) == P({1, 2, 3, 0, 0}));
}

TEST_CASE("deterministic polynomial ordering") {
    CHECK(poly_less(P({1, 5}), P({1, 0, 0})));
    CHECK(poly_less(P({1, 2, 3}), P({1, 2, 4})));
    CHECK_FALSE(poly_less(P({1, 2, 3}), P({1, 2, 3})));
    CHECK(poly_less(P({1, -9, 3}), P({1, 2, 3})));
}

TEST_CASE("exact linear algebra") {
    QMatrix m(3, 3);
    long vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Rat(vals[i][j]);
    CHECK(m.det() == Rat(18));
    CHECK(m.rank() == 3);
    QMatrix s(2, 3); // x + y + z = 0, x - z = 0
    s.at(0, 0) = 1; s.at(0, 1) = 1; s.at(0, 2) = 1;
    s.at(1, 0) = 1; s.at(1, 2) = -1;
    auto ns = s.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] * 1 + ns[0][1] * 1 + ns[0][2] == 0);
    CHECK(ns[0][0] - ns[0][2] == 0);
    auto coeffs = lagrange_interpolate({Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(2), Rat(5)});
    CHECK(QPoly(coeffs) == P({1, 0, 1})); // x^2 + 1
}
