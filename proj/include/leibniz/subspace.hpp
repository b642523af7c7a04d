#ifndef LEIBNIZ_SUBSPACE_HPP
#define LEIBNIZ_SUBSPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

/// Linear subspace in canonical form: the basis rows are the reduced
/// row-echelon form of any spanning set, so two subspaces are equal iff
/// their bases agree entrywise.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim,
                       const std::vector<QVector>& vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return dim() == ambient_dim_; }

  const std::vector<QVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }

  bool contains_vector(const QVector& v) const;
  /// True iff other is contained in this subspace.
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const = default;

  /// n x n matrix whose kernel is exactly this subspace: v maps to
  /// v minus its pivot-coordinate reconstruction from the basis rows.
  QMatrix membership_matrix() const;

  /// Standard basis vectors at the non-pivot columns; together with the
  /// basis rows they form a full basis of the ambient space.
  std::vector<std::size_t> complement_cols() const;

  std::string to_string() const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivot_cols_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

}  // namespace leibniz

#endif
