#ifndef LEIBNIZ_MATRIX_HPP
#define LEIBNIZ_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Dense row-major matrix over exact rationals. Immutable in spirit: every
/// operation returns a fresh value.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows);
  /// Rebuilds a matrix from its row-major vectorization.
  static QMatrix from_vectorized(const QVector& v, std::size_t rows,
                                 std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  QVector row(std::size_t i) const;
  QVector col(std::size_t j) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  QMatrix transpose() const;
  Rat trace() const;

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rat& c) const;
  QMatrix operator-() const;
  bool operator==(const QMatrix& o) const = default;

  /// m^p with p >= 0; p = 0 gives the identity (square matrices only).
  QMatrix pow(std::size_t p) const;

  /// Matrix-vector product m·v.
  QVector apply(const QVector& v) const;

  /// Row-major flattening, the coordinate system used for operator subspaces.
  QVector vectorized() const { return entries_; }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

struct RrefResult {
  QMatrix mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form: pivots are 1 and are the only nonzero
/// entries in their columns; zero rows sink to the bottom.
RrefResult rref(const QMatrix& m);

/// Inverse via Gauss-Jordan. Throws precondition_error on singular input.
QMatrix inverse(const QMatrix& m);

}  // namespace leibniz

#endif
