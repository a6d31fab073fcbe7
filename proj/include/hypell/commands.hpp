#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypell/lmfdb.hpp"
#include "hypell/specio.hpp"

namespace hypell {

// Exact verification of a covering map (x, y) |-> (xnum/xden, ynum/yden * y).
// identity holds iff difference == 0, where difference is the cleared form
//   ynum^2 * f_src * xden^n  -  (f_tgt composed with xnum/xden) * xden^n * yden^2
// with n = deg f_tgt. degree is the covering degree max(deg xnum, deg xden).
struct CoverCheck {
    bool identity = false;
    int degree = 0;
    QPoly difference;
    std::optional<int> marked_ramification; // e at the marked point, when one is given
    std::optional<bool> marked_weierstrass; // marked point fixed by the involution?
};
CoverCheck check_cover(const CoverSpec& spec);

// Rational points of height <= height_bound (height of p/q in lowest terms
// is max(|p|, q)), by exact integer search over the homogenized model,
// plus the rational branches at infinity. Requires integer coefficients
// and deg f <= 4 (capability guard: the search is quartic-sized).
struct PointCensus {
    std::vector<std::pair<Rat, Rat>> affine; // (x, y), sorted by height
    int infinite = 0;
    long total() const { return static_cast<long>(affine.size()) + infinite; }
};
PointCensus rational_points_bounded(const HyperCurve& C, long height_bound);

// Built-in cover examples, embedded so reproductions run offline. Names:
// genus4-degree3, genus3-degree2, genus5-degree3.
CoverSpec builtin_cover(const std::string& name);
std::vector<std::string> builtin_cover_names();

Report cmd_verify_cover(const CoverSpec& spec);

// Degree-3 cover of a rank-one elliptic curve by a genus-5 model: builds
// the model, certifies genus and the two-torsion classes, compares Picard
// orders mod 5 and 13, and states the conditional Mordell-Weil conclusion.
Report cmd_example_dendegs(const std::optional<RankInput>& rank);

// Genus-3 double cover of a quartic elliptic model: certifies both
// degree-2 maps, runs a bounded point census on the base, and classifies
// the quadratic points above x = -3/2.
Report cmd_example_ueno(const std::optional<RankInput>& rank, long height_bound);

Report cmd_classify(const HyperCurve& C, const Place& P, const std::optional<RankInput>& rank);
Report cmd_fiber_sample(const HyperCurve& C, const FiberMap& psi, int budget);
Report cmd_zeta(const HyperCurve& C, long p);

// problem = {"rank": r, "torsion": [d1, ...], "x": [...],
//            "cosets": [{"y": [...], "gens": [[...], ...]}, ...]}
Report cmd_avoid_cosets(const Json& problem);

Report cmd_positivity_check();
Report cmd_lmfdb_fetch(const std::string& label, const LmfdbOptions& opts);

} // namespace hypell
