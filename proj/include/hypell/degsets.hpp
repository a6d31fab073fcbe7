#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypell/curve.hpp"
#include "hypell/qpoly.hpp"
#include "hypell/rat.hpp"

namespace hypell {

// Degree-set reasoning for closed points: witnessed degrees, gcd bounds,
// and the density rules those bounds feed. Everything returned here is
// either an exactly verified witness or an explicitly labeled bound;
// nothing in this module certifies a full degree set.

enum class TriState { Yes, No, Indeterminate };

// For d >= threshold membership is decided by divisibility by `index`;
// below the threshold the rule has nothing to say.
struct AsymptoticRule {
    long threshold = 1;
    long index = 1;
    TriState contains(long d) const;
};
AsymptoticRule asymptotic_density_rule(long genus, long index);

struct IndexBound {
    int bound = 0;                  // gcd of all witnessed degrees
    std::map<int, Place> witnesses; // degree -> first witness found
};

// Gcd of the degrees of the closed points found by decomposing x-fibers
// over the first `budget` rationals in enumeration order, together with
// the infinite places and the ramification places. Never certified exact:
// more witnesses can only shrink it.
IndexBound index_upper_bound(const HyperCurve& C, int budget);

// Positive multiples of members of S up to `cap`; idempotent.
std::set<long> scalar_closure(const std::set<long>& S, long cap);

// Window [ceil(gon_lower / 2), gon_upper] for the least degree occurring
// in the abelian-variety sense, plus the filter "d admissible only when
// gon <= 2d" carried by the lower bound.
struct GonalityWindow {
    long lo = 1, hi = 1;
    long gon_lower = 1;
    bool av_admissible(long d) const { return gon_lower <= 2 * d; }
};
GonalityWindow gonality_window(long gon_lower, long gon_upper);

enum class RankSource { Config, Lmfdb };

// The Mordell-Weil rank is always an external input; the source tag lets
// reports label verdicts that depend on it.
struct RankInput {
    RankSource source = RankSource::Config;
    std::optional<long> jacobian_rank; // nullopt: unknown
    std::string provenance;
};

enum class AvVerdict { In, Out, Conditional, Indeterminate };

// Membership of d in the abelian-variety degree set, valid for
// d >= genus >= 1: in iff a degree-d witness exists and the rank is
// positive; rank zero excludes every such d; witness with unknown rank
// yields a conditional verdict. Outside the valid range: indeterminate.
AvVerdict av_density_rule(long genus, long d, bool degree_witness, const RankInput& rank);

struct CsCandidate {
    long d3 = 1;
    long genus_bound = 0; // (d1/d3 - 1)(d2/d3 - 1) + (d1/d3) g1 + (d2/d3) g2
    bool holds = false;   // genus_bound < ((sqrt(g)+1)/d3 - 1)^2, decided exactly
};

// One step of the Castelnuovo-Severi descent for two maps of degrees
// d1, d2 onto curves of genus g1, g2 from a genus-g curve. Hypotheses:
// 2 <= di < sqrt(g)+1 and gi < ((sqrt(g)+1)/di - 1)^2, both checked with
// integer arithmetic only. When they hold, the product map factors
// through a map of some proper degree d3 | gcd(d1, d2), and the table
// records the exact inequality check for every candidate d3. Hypothesis
// failures are reported, not thrown, and suppress the verdict.
struct CsResult {
    bool hypotheses_met = false;
    bool factors = false; // meaningful only when hypotheses_met
    std::vector<std::string> failures;
    std::vector<CsCandidate> table;
};
CsResult castelnuovo_severi_step(long g, long d1, long g1, long d2, long g2);

// Re-proves the positivity identity behind the descent step: both sides
// are expanded exactly over Z with two unrelated multiplication routines
// and compared coefficient by coefficient, then swept over rational
// sample points. Throws hypothesis_error on any mismatch.
struct PositivityRecord {
    bool verified = false;
    int monomials = 0; // in the common expansion
    int sweep_points = 0;
    std::string identity;
};
PositivityRecord positivity_claim_verify();

// g (g-1) ... (g-d+1), the symmetric-power incidence degree, exactly.
Int poincare_degree(long g, long d);

// Pushes the witnessed degrees of a base curve through a degree-deg_pi
// cover of a genus-g curve: keeps e with (e deg_pi - 1)^2 < g and scales
// by deg_pi.
std::set<long> single_source_filter(long g, long deg_pi, const std::set<long>& degrees_c0);

// A self-map of the line composed with the x-map; num/den must be
// coprime with max(deg num, deg den) >= 1.
struct FiberMap {
    QPoly num = QPoly::x();
    QPoly den = QPoly(1L);
    static FiberMap x_map();
    int degree() const { return num.deg() > den.deg() ? num.deg() : den.deg(); }
};

struct FiberSampleReport {
    int sampled = 0;
    int integral = 0;             // fibers that are one closed point of full degree
    int full_degree = 0;          // 2 * map degree
    std::vector<Rat> exceptional; // sampled t with a reducible or short fiber
    std::vector<Rat> skipped;     // t where the fiber locus degenerates
    Rat integral_fraction() const;
};

// Samples the fibers of (psi o x) : C -> P^1 over the first `budget`
// rationals in enumeration order and reports how often the fiber is a
// single closed point of degree 2 deg(psi).
FiberSampleReport fiber_sample(const HyperCurve& C, const FiberMap& psi, int budget);

// Squarefree part of the characteristic polynomial of y on the fiber of
// (psi o x) above t, i.e. the reduced y-spectrum of the fiber. Throws
// precondition_error when the fiber locus degenerates (degree drop or a
// repeated x-root).
QPoly fiber_polynomial(const HyperCurve& C, const FiberMap& psi, const Rat& t);

struct CycleTypeRow {
    int64_t p = 0;
    std::vector<int> pattern; // irreducible factor degrees mod p, ascending
    bool skipped = false;     // bad reduction or inseparable image
};

// Degree pattern of the fiber polynomial modulo each listed prime. Raw
// statistics only; no inference about the Galois group is drawn here.
std::vector<CycleTypeRow> cycle_type_statistics(const HyperCurve& C, const FiberMap& psi,
                                                const Rat& t,
                                                const std::vector<int64_t>& primes);

// Everything the sampling layer can say about one curve in one record.
// The asymptotic rule is built from the witnessed index bound, so its
// negative verdicts are conditional on that bound being exact; the notes
// say so.
struct DegreeSetReport {
    std::string label;
    std::map<int, Place> found_degrees;
    int index_upper_bound = 0;
    int gonality_upper_bound = 0;
    AsymptoticRule asymptotic_rule;
    std::vector<std::string> notes;
};
DegreeSetReport degree_set_report(const HyperCurve& C, int budget);

} // namespace hypell
