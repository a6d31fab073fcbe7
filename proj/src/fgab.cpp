#include "hypell/fgab.hpp"

#include <algorithm>

#include "hypell/errors.hpp"

namespace hypell {

IMat identity_mat(int n) {
    IMat I(n, IVec(n, Int(0)));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IMat mat_mul(const IMat& A, const IMat& B) {
    if (A.empty()) return {};
    // B may be a 0 x m matrix (no rows); the product is then all zeros with
    // as many columns as B has, which an empty B can only represent as 0.
    size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
    IMat C(n, IVec(m, Int(0)));
    for (size_t i = 0; i < n; ++i) {
        if (A[i].size() != k) throw internal_error("matrix shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (A[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) C[i][j] += A[i][t] * B[t][j];
        }
    }
    return C;
}

bool mat_eq(const IMat& A, const IMat& B) { return A == B; }

SnfResult smith_normal_form(const IMat& M) {
    int a = static_cast<int>(M.size());
    int b = a ? static_cast<int>(M[0].size()) : 0;
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != b) throw type_error("ragged matrix");
    SnfResult res;
    res.U = identity_mat(a);
    res.V = identity_mat(b);
    res.S = M;
    IMat& U = res.U;
    IMat& S = res.S;
    IMat& V = res.V;
    int t = 0;
    while (t < a && t < b) {
        // Smallest nonzero |entry| in the trailing block becomes the pivot.
        int pi = -1, pj = -1;
        for (int i = t; i < a; ++i)
            for (int j = t; j < b; ++j) {
                if (S[i][j] == 0) continue;
                if (pi < 0 || abs(S[i][j]) < abs(S[pi][pj])) { pi = i; pj = j; }
            }
        if (pi < 0) break;
        std::swap(S[pi], S[t]);
        std::swap(U[pi], U[t]);
        if (pj != t) {
            for (int i = 0; i < a; ++i) std::swap(S[i][pj], S[i][t]);
            for (int i = 0; i < b; ++i) std::swap(V[i][pj], V[i][t]);
        }
        bool clean = true;
        for (int i = t + 1; i < a; ++i) {
            if (S[i][t] == 0) continue;
            Int q = S[i][t] / S[t][t];
            if (q != 0)
                for (int j = 0; j < b; ++j) S[i][j] -= q * S[t][j];
            for (int j = 0; j < a; ++j) U[i][j] -= q * U[t][j];
            if (S[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < b; ++j) {
            if (S[t][j] == 0) continue;
            Int q = S[t][j] / S[t][t];
            if (q != 0)
                for (int i = 0; i < a; ++i) S[i][j] -= q * S[i][t];
            for (int i = 0; i < b; ++i) V[i][j] -= q * V[i][t];
            if (S[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // Divisibility: the pivot must divide the rest of the block.
        bool again = false;
        for (int i = t + 1; i < a && !again; ++i)
            for (int j = t + 1; j < b && !again; ++j)
                if (S[i][j] % S[t][t] != 0) {
                    for (int k = 0; k < b; ++k) S[t][k] += S[i][k];
                    for (int k = 0; k < a; ++k) U[t][k] += U[i][k];
                    again = true;
                }
        if (again) continue;
        if (S[t][t] < 0) {
            for (int k = 0; k < b; ++k) S[t][k] = -S[t][k];
            for (int k = 0; k < a; ++k) U[t][k] = -U[t][k];
        }
        ++t;
    }
    res.rank = t;
    if (!mat_eq(mat_mul(mat_mul(res.U, M), res.V), res.S))
        throw internal_error("Smith reduction identity UMV == S failed");
    return res;
}

IMat hnf_rows(const IMat& M) {
    if (M.empty()) return {};
    IMat A = M;
    int rows = static_cast<int>(A.size());
    int cols = static_cast<int>(A[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclid down column c among rows r.. until one nonzero remains.
        while (true) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (A[i][c] != 0 && (piv < 0 || abs(A[i][c]) < abs(A[piv][c]))) piv = i;
            if (piv < 0) break;
            std::swap(A[piv], A[r]);
            bool done = true;
            for (int i = r + 1; i < rows; ++i) {
                if (A[i][c] == 0) continue;
                Int q = A[i][c] / A[r][c];
                for (int j = 0; j < cols; ++j) A[i][j] -= q * A[r][j];
                if (A[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (A[r][c] == 0) continue;
        if (A[r][c] < 0)
            for (int j = 0; j < cols; ++j) A[r][j] = -A[r][j];
        for (int i = 0; i < r; ++i) {
            Int q = A[i][c] / A[r][c];
            if (A[i][c] % A[r][c] < 0) q -= 1; // floor: keep entries in [0, pivot)
            if (q != 0)
                for (int j = 0; j < cols; ++j) A[i][j] -= q * A[r][j];
        }
        ++r;
    }
    A.resize(r);
    return A;
}

FgAbGroup::FgAbGroup(int ambient, IMat relations) : n_(ambient), rel_(std::move(relations)) {
    if (n_ < 0) throw type_error("negative ambient rank");
    for (const auto& row : rel_)
        if (static_cast<int>(row.size()) != n_) throw type_error("relation row length mismatch");
    if (rel_.empty()) rel_.assign(1, IVec(n_, Int(0))); // keep shapes nonempty
    snf_ = smith_normal_form(rel_);
}

FgAbGroup FgAbGroup::free_group(int rank) { return FgAbGroup(rank, IMat{}); }

FgAbGroup FgAbGroup::from_invariants(int rank, const std::vector<Int>& torsion) {
    int n = rank + static_cast<int>(torsion.size());
    IMat rel;
    for (size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 1) throw type_error("torsion invariant must be positive");
        IVec row(n, Int(0));
        row[rank + i] = torsion[i];
        rel.push_back(std::move(row));
    }
    return FgAbGroup(n, std::move(rel));
}

std::vector<Int> FgAbGroup::invariants() const {
    std::vector<Int> out;
    for (int i = 0; i < snf_.rank; ++i)
        if (snf_.S[i][i] > 1) out.push_back(snf_.S[i][i]);
    return out;
}

int FgAbGroup::free_rank() const { return n_ - snf_.rank; }

std::optional<Int> FgAbGroup::order() const {
    if (free_rank() > 0) return std::nullopt;
    Int o(1);
    for (int i = 0; i < snf_.rank; ++i) o *= snf_.S[i][i];
    return o;
}

void FgAbGroup::check_element(const IVec& x) const {
    if (static_cast<int>(x.size()) != n_) throw type_error("element length does not match ambient rank");
}

IVec FgAbGroup::normal_form(const IVec& x) const {
    check_element(x);
    // Coordinates w = x * V; the relation lattice is diagonal there.
    IVec w(n_, Int(0));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) w[j] += x[i] * snf_.V[i][j];
    for (int i = 0; i < snf_.rank; ++i) {
        Int d = snf_.S[i][i];
        w[i] %= d;
        if (w[i] < 0) w[i] += d;
    }
    return w;
}

bool FgAbGroup::same_element(const IVec& a, const IVec& b) const {
    return normal_form(a) == normal_form(b);
}

bool FgAbGroup::is_identity(const IVec& x) const {
    IVec nf = normal_form(x);
    return std::all_of(nf.begin(), nf.end(), [](const Int& v) { return v == 0; });
}

namespace {

IMat stack_rows(const IMat& A, const IMat& B) {
    IMat out = A;
    out.insert(out.end(), B.begin(), B.end());
    return out;
}

// Lattice of the subgroup <H> + relations inside Z^n.
IMat subgroup_lattice(const FgAbGroup& B, const IMat& H) {
    for (const auto& row : H)
        if (static_cast<int>(row.size()) != B.ambient()) throw type_error("generator length mismatch");
    return stack_rows(H, B.relations());
}

bool lattice_member(const IVec& x, const IMat& L, int n) {
    if (L.empty()) return std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; });
    SnfResult snf = smith_normal_form(L);
    IVec w(n, Int(0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) w[j] += x[i] * snf.V[i][j];
    for (int i = 0; i < n; ++i) {
        if (i < snf.rank) {
            if (w[i] % snf.S[i][i] != 0) return false;
        } else {
            if (w[i] != 0) return false;
        }
    }
    return true;
}

} // namespace

bool membership(const FgAbGroup& B, const IVec& x, const IMat& H) {
    if (static_cast<int>(x.size()) != B.ambient()) throw type_error("element length does not match ambient rank");
    return lattice_member(x, subgroup_lattice(B, H), B.ambient());
}

std::optional<Int> subgroup_index(const FgAbGroup& B, const IMat& H) {
    SnfResult snf = smith_normal_form(subgroup_lattice(B, H));
    if (snf.rank < B.ambient()) return std::nullopt;
    Int idx(1);
    for (int i = 0; i < snf.rank; ++i) idx *= snf.S[i][i];
    return idx;
}

FgAbGroup quotient(const FgAbGroup& B, const IMat& H) {
    return FgAbGroup(B.ambient(), subgroup_lattice(B, H));
}

IMat lattice_intersect(const IMat& A, const IMat& C, int n) {
    if (A.empty()) return {};
    if (C.empty()) return {};
    IMat stacked = stack_rows(A, C);
    SnfResult snf = smith_normal_form(stacked);
    // Rows of U beyond the rank span the left kernel of [A; C]; the A-part
    // of each kernel row recombines A-rows into the intersection.
    IMat out;
    int total = static_cast<int>(stacked.size());
    for (int k = snf.rank; k < total; ++k) {
        IVec v(n, Int(0));
        for (size_t i = 0; i < A.size(); ++i)
            for (int j = 0; j < n; ++j) v[j] += snf.U[k][i] * A[i][j];
        out.push_back(std::move(v));
    }
    return hnf_rows(out);
}

AvoidResult avoid_cosets(const FgAbGroup& B, const IVec& x, const std::vector<Coset>& cosets) {
    int n = B.ambient();
    if (static_cast<int>(x.size()) != n) throw type_error("element length does not match ambient rank");
    AvoidResult result;
    IMat current; // intersection lattice so far
    bool first = true;
    for (size_t i = 0; i < cosets.size(); ++i) {
        if (static_cast<int>(cosets[i].y.size()) != n) throw type_error("coset base point length mismatch");
        IVec z(n);
        for (int j = 0; j < n; ++j) z[j] = x[j] - cosets[i].y[j];
        if (membership(B, z, cosets[i].gens))
            throw hypothesis_error("coset " + std::to_string(i) + ": x - y_i already lies in H_i");
        // Least m >= 2 with z nonzero in B/(mB + H_i). Terminates: z has a
        // free coordinate (fails for m beyond it) or finite order (fails at
        // the exponent of the quotient's torsion).
        Int m(2);
        while (true) {
            IMat gens = cosets[i].gens;
            for (int j = 0; j < n; ++j) {
                IVec e(n, Int(0));
                e[j] = m;
                gens.push_back(std::move(e));
            }
            if (!membership(B, z, gens)) {
                result.mult.push_back(m);
                IMat pulled = subgroup_lattice(B, gens);
                current = first ? hnf_rows(pulled) : lattice_intersect(current, pulled, n);
                first = false;
                break;
            }
            m += 1;
            if (m > Int(1) << 24) throw internal_error("multiplier search did not terminate");
        }
    }
    if (first) {
        // No cosets to avoid: H = B itself.
        current = hnf_rows(stack_rows(identity_mat(n), B.relations()));
    }
    // Mandatory disjointness re-verification: x - y_i must avoid H + H_i.
    for (size_t i = 0; i < cosets.size(); ++i) {
        IVec z(n);
        for (int j = 0; j < n; ++j) z[j] = x[j] - cosets[i].y[j];
        if (membership(B, z, stack_rows(current, cosets[i].gens)))
            throw internal_error("avoidance verification failed for coset " + std::to_string(i));
    }
    result.gens = current;
    return result;
}

} // namespace hypell
