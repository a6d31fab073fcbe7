#include <doctest.h>

#include "hypell/factor.hpp"

using namespace hypell;

namespace {
QPoly P(std::vector<long> desc) {
    std::vector<Rat> c;
    for (long v : desc) c.emplace_back(v);
    return QPoly::from_desc(std::move(c));
}
} // namespace

TEST_CASE("factor_q on products of known irreducibles") {
    QPoly fc = P({1, 0, 1}) * P({1, 0, 2}) * P({1, 0, 5, 0, 5});
    auto fac = factor_q(fc);
    CHECK(fac.unit == 1);
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.factors[0].factor == P({1, 0, 1}));
    CHECK(fac.factors[1].factor == P({1, 0, 2}));
    CHECK(fac.factors[2].factor == P({1, 0, 5, 0, 5}));
    for (const auto& f : fac.factors) CHECK(f.multiplicity == 1);
}

TEST_CASE("factor_q needs genuine recombination") {
    // x^4 + 1 is irreducible over Q yet reducible modulo every prime.
    auto fac = factor_q(P({1, 0, 0, 0, 1}));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].factor == P({1, 0, 0, 0, 1}));
    // Swinnerton-Dyer style: three quadratics that never separate cleanly.
    auto swd = factor_q(P({1, 0, -2}) * P({1, 0, -3}) * P({1, 0, -6}));
    REQUIRE(swd.factors.size() == 3);
    CHECK(swd.factors[0].factor == P({1, 0, -6}));
    CHECK(swd.factors[1].factor == P({1, 0, -3}));
    CHECK(swd.factors[2].factor == P({1, 0, -2}));
}

TEST_CASE("factor_q tracks units, multiplicities and rational coefficients") {
    QPoly f = P({2, -1}).pow(2) * P({1, 1, 1}) * P({1, 0, 0, -2}) * Rat(3, 2);
    auto fac = factor_q(f);
    CHECK(fac.unit == Rat(6)); // lc = 3/2 * 4
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.factors[0].factor == P({2, -1}).monic()); // x - 1/2
    CHECK(fac.factors[0].multiplicity == 2);
    CHECK(fac.factors[1].factor == P({1, 1, 1}));
    CHECK(fac.factors[2].factor == P({1, 0, 0, -2}));
    QPoly rebuilt(fac.unit);
    for (const auto& [g, m] : fac.factors) rebuilt *= g.pow(m);
    CHECK(rebuilt == f);
}

TEST_CASE("factor_q degree-11 witness polynomial") {
    QPoly psi1 = P({1, 7, -9, 7});
    QPoly psi2 = P({1, -1, 0});
    QPoly F = psi1.pow(3) * psi2 - psi1 * psi2.pow(3) + psi2.pow(4);
    CHECK(F == P({1, 20, 98, -137, -749, 3090, -5529, 5929, -4046, 1666, -343, 0}));
    auto fac = factor_q(F);
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.factors[0].factor == P({1, -1})); // t - 1 sorts before t
    CHECK(fac.factors[1].factor == P({1, 0}));
    CHECK(fac.factors[2].factor ==
          P({1, 21, 119, -18, -767, 2323, -3206, 2723, -1323, 343}));
    CHECK(is_irreducible_q(fac.factors[2].factor));
}

TEST_CASE("factor_q guards its envelope") {
    CHECK_THROWS_AS(factor_q(QPoly()), domain_error);
    CHECK_THROWS_AS(factor_q(QPoly::monomial(65)), capability_error);
    auto c = factor_q(QPoly(Rat(7)));
    CHECK(c.unit == 7);
    CHECK(c.factors.empty());
    CHECK(is_irreducible_q(P({1, 0, -16, 16})));
    CHECK_FALSE(is_irreducible_q(P({1, 0, -1})));
    CHECK_FALSE(is_irreducible_q(QPoly(Rat(3))));
}

TEST_CASE("hensel_sqrt lifts x at x-1") {
    QPoly f = QPoly::x();
    QPoly p = P({1, -1});
    QPoly v2 = hensel_sqrt(f, p, 2, QPoly(Rat(1)));
    CHECK(v2 == P({1, 1}) * Rat(1, 2));
    QPoly v4 = hensel_sqrt(f, p, 4, QPoly(Rat(1)));
    CHECK(v4 == P({1, -5, 15, 5}) * Rat(1, 16));
    // consistency between precisions
    CHECK(v4 % p.pow(2) == v2);
    // defining property, structurally
    CHECK(((v4 * v4 - f) % p.pow(4)).is_zero());
    QPoly v7 = hensel_sqrt(f, p, 7, QPoly(Rat(1)));
    CHECK(((v7 * v7 - f) % p.pow(7)).is_zero());
    CHECK(v7.deg() < 7);
    // branch choice: v0 = -1 gives the negated root
    CHECK(hensel_sqrt(f, p, 3, QPoly(Rat(-1))) == -hensel_sqrt(f, p, 3, QPoly(Rat(1))));
}

TEST_CASE("hensel_sqrt over a quadratic modulus") {
    QPoly f = P({1, 1, 1}); // x^2 + x + 1
    QPoly p = P({1, 0, -2});
    // f mod p = x + 3; need v0 with v0^2 = x + 3 mod x^2-2: (a+bx)^2 = a^2+2b^2 + 2ab x
    // 2ab = 1, a^2 + 2b^2 = 3 -> a^2 = 1/2(3 ± sqrt(9-8)) -> a=sqrt(2)... not rational; try
    // instead f = (x+1)^2 mod p exactly:
    QPoly g = P({1, 2, 1});
    QPoly v = hensel_sqrt(g, p, 3, P({1, 1}));
    CHECK(((v * v - g) % p.pow(3)).is_zero());
    CHECK((v - P({1, 1})) % p == QPoly());
    CHECK_THROWS_AS(hensel_sqrt(f, P({1, 0, -1}), 2, QPoly(Rat(1))), precondition_error); // reducible
    CHECK_THROWS_AS(hensel_sqrt(P({1, -2}) * P({1, 0, -2}), P({1, 0, -2}), 2, QPoly(Rat(1))),
                    domain_error); // ramified
    CHECK_THROWS_AS(hensel_sqrt(f, P({1, -1}), 2, QPoly(Rat(2))), precondition_error); // wrong v0
}

TEST_CASE("series square root") {
    // F = 1 + x: sqrt = 1 + x/2 - x^2/8 + x^3/16 - ...
    QPoly s = series_sqrt(P({1, 1}), 4, Rat(1));
    CHECK(s[0] == 1);
    CHECK(s[1] == Rat(1, 2));
    CHECK(s[2] == Rat(-1, 8));
    CHECK(s[3] == Rat(1, 16));
    CHECK(((s * s - P({1, 1})).truncate(4)).is_zero());
    // branch with negative constant term
    QPoly n = series_sqrt(P({1, 4}), 5, Rat(-2));
    CHECK(n[0] == -2);
    CHECK(((n * n - P({1, 4})).truncate(5)).is_zero());
    CHECK_THROWS_AS(series_sqrt(P({1, 0}), 3, Rat(1)), precondition_error);
}

TEST_CASE("square roots in number fields") {
    // Linear modulus: rational square test at the root.
    auto r = sqrt_mod_irreducible(QPoly::x(), P({1, -4}));
    REQUIRE(r.has_value());
    CHECK(*r == QPoly(Rat(2)));
    CHECK_FALSE(sqrt_mod_irreducible(QPoly::x(), P({1, -5})).has_value());
    // Q(sqrt 2): 3 + 2*sqrt2 = (1 + sqrt2)^2, while sqrt2 itself is not a square.
    QPoly u = P({1, 0, -2});
    auto w = sqrt_mod_irreducible(P({2, 3}), u);
    REQUIRE(w.has_value());
    CHECK(((*w * *w - P({2, 3})) % u).is_zero());
    CHECK_FALSE(sqrt_mod_irreducible(QPoly::x(), u).has_value());
    // Q(i): x = i has square root? z^2 = i has no solution in Q(i).
    QPoly ui = P({1, 0, 1});
    CHECK_FALSE(sqrt_mod_irreducible(QPoly::x(), ui).has_value());
    // -1 = i^2 is a square in Q(i)
    auto mi = sqrt_mod_irreducible(QPoly(Rat(-1)), ui);
    REQUIRE(mi.has_value());
    CHECK(((*mi * *mi + QPoly(Rat(1))) % ui).is_zero());
    // ramified input refused
    CHECK_THROWS_AS(sqrt_mod_irreducible(u * P({1, 1}), u), domain_error);
    // cubic field: Q[x]/(x^3-2), x is a square iff ... (x^(1/2): 2^(1/6) not in field)
    CHECK_FALSE(sqrt_mod_irreducible(QPoly::x(), P({1, 0, 0, -2})).has_value());
    // but x^2 obviously is
    auto sq = sqrt_mod_irreducible(P({1, 0, 0}), P({1, 0, 0, -2}));
    REQUIRE(sq.has_value());
    CHECK(((*sq * *sq - P({1, 0, 0})) % P({1, 0, 0, -2})).is_zero());
}
