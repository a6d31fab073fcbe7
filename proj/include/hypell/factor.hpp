#pragma once

#include <optional>
#include <vector>

#include "hypell/fppoly.hpp"
#include "hypell/qpoly.hpp"

namespace hypell {

struct QFactor {
    QPoly factor; // monic irreducible
    int multiplicity;
};

struct QFactorization {
    Rat unit; // f == unit * prod factor^multiplicity
    std::vector<QFactor> factors;
};

// Complete factorization over Q via a good prime, Hensel lifting past the
// Landau-Mignotte bound and subset recombination. Deterministic output,
// sorted by (degree, coefficient order). deg f <= 64 by contract.
QFactorization factor_q(const QPoly& f);

bool is_irreducible_q(const QPoly& f);

// Square root of f modulo p^m where p is irreducible over Q and v0 is a
// square root of f mod p selecting the branch. Result v satisfies
// v^2 == f mod p^m, v == v0 mod p, deg v < m * deg p.
// Errors: p reducible or constant -> precondition; p | f -> domain
// (ramified); v0^2 != f mod p -> precondition.
QPoly hensel_sqrt(const QPoly& f, const QPoly& p, int m, const QPoly& v0);

// Same lift without revalidating irreducibility; for callers that already
// proved it (Place construction validates u once).
QPoly hensel_sqrt_unchecked(const QPoly& f, const QPoly& p, int m, const QPoly& v0);

// Truncated power-series square root: s^2 == F mod x^n with s(0) = c0,
// c0^2 == F(0) != 0.
QPoly series_sqrt(const QPoly& F, int n, const Rat& c0);

// Exact square-root test in the number field Q[x]/u (u irreducible, u not
// dividing f): returns w with w^2 == f mod u, or nullopt when f is a
// non-square in the field. Decided via the norm form N(z) = charpoly of
// multiplication by y + c*x on Q[x,y]/(u, y^2 - f): N irreducible over Q
// for a squarefree-shift c iff z^2 - f stays irreducible over the field.
std::optional<QPoly> sqrt_mod_irreducible(const QPoly& f, const QPoly& u);

} // namespace hypell
