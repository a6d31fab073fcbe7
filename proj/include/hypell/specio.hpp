#pragma once

#include <optional>
#include <string>

#include "hypell/curve.hpp"
#include "hypell/degsets.hpp"
#include "hypell/report.hpp"
#include "hypell/rrspace.hpp"

namespace hypell {

// File formats. Rationals travel as exact decimal strings "p" or "p/q"
// and coefficient lists are ascending in the degree, so index i is the
// x^i coefficient. Round-trips are bit-exact: writing and re-reading any
// record reproduces the same object.

Json poly_to_json(const QPoly& f);
QPoly poly_from_json(const Json& j);

// One-variable polynomial expressions with integer or rational
// coefficients: "x^6 + x + 3", "2t^5-t/2+1", "3". Any single alphabetic
// variable name works; mixing two names in one expression is an error.
QPoly poly_from_string(const std::string& expr);

// {"model": "hyperelliptic", "f": [c0, ...], "label": ...}; label omitted
// when empty. The defining polynomial is revalidated on input.
Json curve_to_json(const HyperCurve& C);
HyperCurve curve_from_json(const Json& j);

// {"kind": "split"|"ramified"|"inert"|"infinite", "u": [...], "v": [...],
// "index": i}; u and v only for finite places, index only for infinite
// ones. Input goes through the validated constructors.
Json place_to_json(const Place& P);
Place place_from_json(const HyperCurve& C, const Json& j);

// {"places": [{"u": [...], "v": [...], "mult": m}, ...],
//  "infinite": [m0, m1]} with one infinite slot per place at infinity.
Json divisor_to_json(const Divisor& D);
Divisor divisor_from_json(const HyperCurve& C, const Json& j);

// {"num": [...], "den": [...]}
Json fibermap_to_json(const FiberMap& m);
FiberMap fibermap_from_json(const Json& j);

// Point argument for the command line, a comma-separated key=value list:
//   "u=x^2-3,kind=inert"   inert place from its u-polynomial
//   "u=x-2,v=5"            finite place from (u, v); kind inferred
//   "x=2,y=5"              shorthand for u=x-2, v=5
//   "infinite=0"           infinite place by index
Place place_from_spec(const HyperCurve& C, const std::string& spec);

// Covering map between two hyperelliptic models,
//   (x, y) |-> (xnum/xden (x), ynum/yden (x) * y).
// marked is the x-coordinate of a source point where total ramification
// should be certified; marked_infinite puts that point over x = infinity.
struct CoverSpec {
    HyperCurve source, target;
    QPoly xnum, xden;
    QPoly ynum, yden;
    std::optional<Rat> marked;
    bool marked_infinite = false;
};

// {"source": curve, "target": curve, "x": map, "y": map,
//  "marked": "p/q" | "oo"} with marked optional.
Json cover_to_json(const CoverSpec& spec);
CoverSpec cover_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace hypell
