#pragma once

#include <optional>
#include <vector>

#include "freelie/scalar.hpp"

namespace freelie {

// Dense exact matrix, row-major.
struct Matrix {
  int rows = 0, cols = 0;
  Field field;
  std::vector<Scalar> a;

  Matrix(int r, int c, const Field& f)
      : rows(r), cols(c), field(f), a(static_cast<size_t>(r) * c, Scalar::zero(f)) {}

  Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// In-place reduced row echelon form; returns the pivot columns (one per
// nonzero row, ascending).
std::vector<int> rref(Matrix& m);

// Basis of {x : Mx = 0}, one vector per free column, ascending.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

// One particular solution of Mx = b, if any.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

// Row space with exact membership tests.
class RowSpace {
 public:
  RowSpace(const Field& f, int width) : m_(0, width, f) {}
  explicit RowSpace(Matrix m);

  int dimension() const { return static_cast<int>(pivots_.size()); }
  bool contains(const std::vector<Scalar>& v) const;

 private:
  Matrix m_;
  std::vector<int> pivots_;
};

}  // namespace freelie
