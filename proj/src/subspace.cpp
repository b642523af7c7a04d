#include "leibniz/subspace.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(vec_unit(ambient_dim, i));
    s.pivot_cols_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<QVector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw dimension_mismatch("spanning vector has wrong length");
  if (vectors.empty()) return zero(ambient_dim);
  const RrefResult r = rref(QMatrix::from_rows(vectors));
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.mat.row(i));
  s.pivot_cols_ = r.pivot_cols;
  return s;
}

bool Subspace::contains_vector(const QVector& v) const {
  if (v.size() != ambient_dim_)
    throw dimension_mismatch("vector/ambient dimension mismatch");
  // reduce v by the echelon basis; membership iff the residue is zero
  QVector w = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rat c = w[pivot_cols_[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) w[j] -= c * basis_[r][j];
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_)
    throw dimension_mismatch("ambient dimension mismatch");
  for (const auto& v : other.basis_)
    if (!contains_vector(v)) return false;
  return true;
}

QMatrix Subspace::membership_matrix() const {
  QMatrix m = QMatrix::identity(ambient_dim_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t i = 0; i < ambient_dim_; ++i)
      m.at(i, pivot_cols_[r]) -= basis_[r][i];
  return m;
}

std::vector<std::size_t> Subspace::complement_cols() const {
  std::vector<std::size_t> cols;
  std::size_t next_pivot = 0;
  for (std::size_t j = 0; j < ambient_dim_; ++j) {
    if (next_pivot < pivot_cols_.size() && pivot_cols_[next_pivot] == j)
      ++next_pivot;
    else
      cols.push_back(j);
  }
  return cols;
}

std::string Subspace::to_string() const {
  std::string s = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ", ";
    s += vec_to_string(basis_[i]);
  }
  return s + "} in dim " + std::to_string(ambient_dim_);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw dimension_mismatch("ambient dimension mismatch in sum");
  std::vector<QVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw dimension_mismatch("ambient dimension mismatch in intersection");
  const std::size_t n = a.ambient_dim();
  const std::size_t p = a.dim(), q = b.dim();
  if (p == 0 || q == 0) return Subspace::zero(n);
  // columns are the basis vectors of a followed by the negated basis of b;
  // a kernel vector (alpha, beta) encodes a common element sum(alpha_i a_i)
  QMatrix m(n, p + q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < p; ++r) m.at(i, r) = a.basis()[r][i];
    for (std::size_t r = 0; r < q; ++r) m.at(i, p + r) = -b.basis()[r][i];
  }
  const RrefResult rr = rref(m);
  std::vector<QVector> common;
  // free columns of the stacked system
  std::vector<bool> is_pivot(p + q, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < p + q; ++free) {
    if (is_pivot[free]) continue;
    QVector coeff(p + q, Rat(0));
    coeff[free] = 1;
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
      coeff[rr.pivot_cols[r]] = -rr.mat.at(r, free);
    QVector v = vec_zero(n);
    for (std::size_t r = 0; r < p; ++r)
      if (coeff[r] != 0) v = vec_add(v, vec_scale(coeff[r], a.basis()[r]));
    common.push_back(std::move(v));
  }
  return Subspace::span(n, common);
}

}  // namespace leibniz
