#pragma once

#include <vector>

#include "hypell/rat.hpp"

namespace hypell {

// Minimal exact dense matrix over Q; just what the RR linear systems and
// characteristic polynomials need.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Rat det() const;                      // square only
    int rank() const;
    // Basis of the right null space {x : A x = 0}, deterministic: free
    // variables in ascending column order, pivot entries back-substituted.
    std::vector<std::vector<Rat>> nullspace() const;

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Coefficients (low-to-high) of the degree-n polynomial through the n+1
// points (xs[i], ys[i]); xs must be distinct.
std::vector<Rat> lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

} // namespace hypell
