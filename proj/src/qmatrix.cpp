#include "hypell/qmatrix.hpp"

#include "hypell/errors.hpp"

namespace hypell {

Rat QMatrix::det() const {
    if (rows_ != cols_) throw domain_error("determinant of non-square matrix");
    QMatrix m = *this;
    Rat d(1);
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = 1 / m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            Rat f = m.at(r, col) * inv;
            for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

namespace {

// Row-reduce in place; returns pivot column of each pivot row.
std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int QMatrix::rank() const {
    QMatrix m = *this;
    return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rat>> QMatrix::nullspace() const {
    QMatrix m = *this;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw domain_error("interpolation needs matching nonempty points");
    size_t n = xs.size();
    // Newton's divided differences, then expand.
    std::vector<Rat> dd = ys;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) {
            Rat dx = xs[i] - xs[i - k];
            if (dx == 0) throw domain_error("repeated interpolation node");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
            if (i == k) break;
        }
    std::vector<Rat> coeff(n, Rat(0));
    std::vector<Rat> basis(n, Rat(0)); // product (x - xs[0])...(x - xs[k-1])
    basis[0] = 1;
    size_t blen = 1;
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < blen; ++i) coeff[i] += dd[k] * basis[i];
        if (k + 1 < n) {
            // basis *= (x - xs[k])
            for (size_t i = blen; i-- > 0;) {
                basis[i + 1] += basis[i];
                basis[i] *= -xs[k];
            }
            ++blen;
        }
    }
    return coeff;
}

} // namespace hypell
