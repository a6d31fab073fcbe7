#pragma once

#include <optional>
#include <vector>

#include "hypell/rat.hpp"

namespace hypell {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>; // rows

// U * M * V == S with U, V unimodular and S diagonal, diagonal entries
// nonnegative with s_1 | s_2 | ... The identity is re-verified on every
// call before returning.
struct SnfResult {
    IMat U, S, V;
    int rank = 0;
};
SnfResult smith_normal_form(const IMat& M);

// Row-style Hermite normal form with positive pivots, entries above each
// pivot reduced into [0, pivot); zero rows dropped. Canonical for the row
// lattice, used wherever generator lists must be deterministic.
IMat hnf_rows(const IMat& M);

IMat mat_mul(const IMat& A, const IMat& B);
bool mat_eq(const IMat& A, const IMat& B);
IMat identity_mat(int n);

// Finitely generated abelian group presented as Z^n modulo the lattice
// spanned by relation rows. Elements are integer row vectors of length n.
class FgAbGroup {
  public:
    FgAbGroup(int ambient, IMat relations);

    static FgAbGroup free_group(int rank);
    // Z^rank + sum Z/d_i; ambient coordinates list free parts first.
    static FgAbGroup from_invariants(int rank, const std::vector<Int>& torsion);

    int ambient() const { return n_; }
    const IMat& relations() const { return rel_; }

    // Invariant factors d_1 | d_2 | ... (each > 1) of the torsion part.
    std::vector<Int> invariants() const;
    int free_rank() const;
    std::optional<Int> order() const; // nullopt when infinite

    // Canonical coordinates of x in the diagonalizing basis; equal vectors
    // represent equal group elements.
    IVec normal_form(const IVec& x) const;
    bool same_element(const IVec& a, const IVec& b) const;
    bool is_identity(const IVec& x) const;

  private:
    void check_element(const IVec& x) const;
    int n_;
    IMat rel_;
    SnfResult snf_; // of rel_
};

// Subgroups are given by generator rows in the ambient Z^n; the relation
// lattice of the group is implicitly included everywhere.

// x in <rows of H> + relation lattice?
bool membership(const FgAbGroup& B, const IVec& x, const IMat& H);

// [B : H]; nullopt when infinite.
std::optional<Int> subgroup_index(const FgAbGroup& B, const IMat& H);

// B/H with the same ambient coordinates (projection on representatives is
// the identity map).
FgAbGroup quotient(const FgAbGroup& B, const IMat& H);

// Intersection of the row lattices of A and C inside Z^n.
IMat lattice_intersect(const IMat& A, const IMat& C, int n);

struct Coset {
    IVec y;
    IMat gens;
};

struct AvoidResult {
    IMat gens;              // generators of H, Hermite-reduced
    std::vector<Int> mult;  // the multiplier m_i chosen for each coset
};

// Finds a finite-index subgroup H <= B with (x + H) disjoint from every
// y_i + H_i. Requires x - y_i not in H_i (hypothesis_error names the first
// offending index otherwise). For each coset the least m_i >= 2 is chosen
// with x - y_i nonzero in B/(m_i B + H_i); H is the intersection of the
// pulled-back subgroups m_i B + H_i. Disjointness is re-verified before
// returning.
AvoidResult avoid_cosets(const FgAbGroup& B, const IVec& x, const std::vector<Coset>& cosets);

} // namespace hypell
