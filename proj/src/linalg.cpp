#include "freelie/linalg.hpp"

namespace freelie {

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int r = row; r < m.rows; ++r) {
      if (!m.at(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    Scalar inv = m.at(row, col).inverse();
    for (int c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) = m.at(r, c) - f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m_in) {
  Matrix m = m_in;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  std::vector<std::vector<Scalar>> basis;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(m.cols), Scalar::zero(m.field));
    v[static_cast<size_t>(j)] = Scalar::one(m.field);
    for (size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<size_t>(pivots[i])] = -m.at(static_cast<int>(i), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m_in, const std::vector<Scalar>& b) {
  Matrix aug(m_in.rows, m_in.cols + 1, m_in.field);
  for (int r = 0; r < m_in.rows; ++r) {
    for (int c = 0; c < m_in.cols; ++c) aug.at(r, c) = m_in.at(r, c);
    aug.at(r, m_in.cols) = b[static_cast<size_t>(r)];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m_in.cols) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(static_cast<size_t>(m_in.cols), Scalar::zero(m_in.field));
  for (size_t i = 0; i < pivots.size(); ++i)
    x[static_cast<size_t>(pivots[i])] = aug.at(static_cast<int>(i), m_in.cols);
  return x;
}

RowSpace::RowSpace(Matrix m) : m_(std::move(m)) {
  pivots_ = rref(m_);
  m_.rows = static_cast<int>(pivots_.size());  // drop zero rows
  m_.a.resize(static_cast<size_t>(m_.rows) * m_.cols, Scalar::zero(m_.field));
}

bool RowSpace::contains(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != m_.cols)
    raise(ErrorCode::invalid, "RowSpace::contains: width mismatch");
  std::vector<Scalar> r = v;
  for (size_t i = 0; i < pivots_.size(); ++i) {
    int p = pivots_[i];
    if (r[static_cast<size_t>(p)].is_zero()) continue;
    Scalar f = r[static_cast<size_t>(p)];
    for (int c = 0; c < m_.cols; ++c)
      r[static_cast<size_t>(c)] = r[static_cast<size_t>(c)] - f * m_.at(static_cast<int>(i), c);
  }
  for (const Scalar& s : r)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace freelie
