#pragma once

#include <string>
#include <vector>

#include "hypell/qpoly.hpp"

namespace hypell {

// Behaviour of the smooth projective model above x = infinity.
//   Ramified:    deg f odd, a single rational branch point.
//   TwoRational: deg f even and lc(f) a square, two rational branches.
//   OneInert:    deg f even and lc(f) a nonsquare, one conjugate pair
//                forming a single closed point of degree 2.
enum class InfiniteModel { Ramified, TwoRational, OneInert };

// y^2 = f(x) with f squarefree of degree >= 3. Immutable once built.
struct HyperCurve {
    QPoly f;
    int genus = 0;
    InfiniteModel infinite_model = InfiniteModel::Ramified;
    std::string label;

    // number of places above infinity (1, 2, or 1)
    int infinite_place_count() const {
        return infinite_model == InfiniteModel::TwoRational ? 2 : 1;
    }
};

// Validates squarefreeness and degree, derives genus and the infinite model.
// Throws domain_error for a non-squarefree f, and for deg f < 3 (genus 0
// models are out of scope).
HyperCurve new_hyperelliptic(const QPoly& f, std::string label = "");

// A closed point of the curve.
//
//   FiniteSplit:    (u, v) with u monic irreducible, v^2 = f mod u,
//                   deg v < deg u; the point has degree deg u.
//   FiniteRamified: u | f and y = 0 on the point; degree deg u.
//   FiniteInert:    u monic irreducible with f a nonsquare in Q[x]/u; the
//                   fiber of the x-map above u is a single point of degree
//                   2 deg u, fixed by the hyperelliptic involution.
//   Infinite:       a branch above x = infinity, indexed 0 or 1 per the
//                   curve's infinite model.
enum class PlaceKind { FiniteSplit, FiniteRamified, FiniteInert, Infinite };

struct Place {
    PlaceKind kind = PlaceKind::FiniteSplit;
    QPoly u;                // zero polynomial for infinite places
    QPoly v;                // zero unless kind == FiniteSplit
    int infinite_index = 0; // meaningful only for kind == Infinite
    int degree = 0;

    bool operator==(const Place& o) const {
        return kind == o.kind && u == o.u && v == o.v &&
               infinite_index == o.infinite_index;
    }
};

// Strict total order (finite places by u then kind then v, infinite last);
// used to keep divisor entries canonical.
bool place_less(const Place& a, const Place& b);

std::string place_str(const Place& P);

// Validated constructors. make_place handles the split and ramified kinds
// from the data (u, v); make_inert_place certifies the nonsquare condition
// with an exact square-root computation in Q[x]/u; infinite_place checks
// the index against the model.
Place make_place(const HyperCurve& C, const QPoly& u, const QPoly& v);
Place make_inert_place(const HyperCurve& C, const QPoly& u);
Place infinite_place(const HyperCurve& C, int index);

// All places above x = infinity (1 or 2 of them).
std::vector<Place> infinite_places(const HyperCurve& C);

// The x-map fiber above a rational t: two degree-1 places when f(t) is a
// nonzero square, one ramified place when f(t) = 0, and one degree-2 inert
// place otherwise. Results are sorted by place_less.
std::vector<Place> decompose_fiber(const HyperCurve& C, const Rat& t);

// Genus of a smooth plane curve of degree d, and the bound for a curve on
// a product of two curves with bidegree (d1, d2).
long plane_genus_bound(long d);
long product_genus_bound(long d1, long g1, long d2, long g2);

} // namespace hypell
