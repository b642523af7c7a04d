#include "leibniz/matrix.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw dimension_mismatch("ragged rows in matrix construction");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_vectorized(const QVector& v, std::size_t rows,
                                 std::size_t cols) {
  if (v.size() != rows * cols)
    throw dimension_mismatch("vectorization length mismatch");
  QMatrix m(rows, cols);
  m.entries_ = v;
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  QVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

QVector QMatrix::col(std::size_t j) const {
  QVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

bool QMatrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rat QMatrix::trace() const {
  if (!is_square()) throw dimension_mismatch("trace of non-square matrix");
  Rat t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw dimension_mismatch("matrix addition shape mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] + o.entries_[k];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw dimension_mismatch("matrix subtraction shape mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] - o.entries_[k];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_)
    throw dimension_mismatch("matrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator*(const Rat& c) const {
  QMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = c * entries_[k];
  return r;
}

QMatrix QMatrix::operator-() const { return *this * Rat(-1); }

QMatrix QMatrix::pow(std::size_t p) const {
  if (!is_square()) throw dimension_mismatch("power of non-square matrix");
  QMatrix acc = identity(rows_);
  for (std::size_t i = 0; i < p; ++i) acc = acc * *this;
  return acc;
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_)
    throw dimension_mismatch("matrix-vector shape mismatch");
  QVector r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

std::string QMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += " ";
      s += rat_to_string(at(i, j));
    }
  }
  return s + "]";
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.mat = m;
  QMatrix& a = res.mat;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(sel, j), a.at(pivot_row, j));
    const Rat inv = 1 / a.at(pivot_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a.at(i, col) == 0) continue;
      const Rat factor = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) -= factor * a.at(pivot_row, j);
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw dimension_mismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return QMatrix();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const RrefResult r = rref(aug);
  // singular iff some pivot escapes the left block
  if (r.pivot_cols.size() < n || r.pivot_cols[n - 1] != n - 1)
    throw precondition_error("matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

}  // namespace leibniz
