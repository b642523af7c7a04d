#ifndef LEIBNIZ_TABLE_HPP
#define LEIBNIZ_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// Structure-constant table: [e_i, e_j] = sum_k c(i,j,k) e_k. No identity is
/// assumed at construction; the predicates below test them.
class AlgebraTable {
  public:
    AlgebraTable() = default;
    explicit AlgebraTable(std::size_t dim);
    AlgebraTable(std::size_t dim, std::vector<std::string> basis_names);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    Rat& c(std::size_t i, std::size_t j, std::size_t k);
    const Rat& c(std::size_t i, std::size_t j, std::size_t k) const;

    /// [e_i, e_j] as a coordinate vector.
    QVector bracket_basis(std::size_t i, std::size_t j) const;
    /// Bilinear extension.
    QVector bracket(const QVector& u, const QVector& v) const;

    /// ad_x : y -> [y, x]  (column j is [e_j, x])
    QMatrix ad(const QVector& x) const;
    QMatrix ad_basis(std::size_t i) const;
    /// Ad_x : y -> [x, y]  (column j is [x, e_j])
    QMatrix Ad(const QVector& x) const;
    QMatrix Ad_basis(std::size_t i) const;

    /// Table with the arguments swapped: c_op(i,j,k) = c(j,i,k).
    AlgebraTable opposite() const;

    bool operator==(const AlgebraTable&) const = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Rat> c_;
    std::vector<std::string> names_;
};

/// Result of a pointwise identity test; the witness lists the basis indices
/// of the first failing instance.
struct IdentityCheck {
    bool holds = true;
    std::optional<std::vector<std::size_t>> witness;

    static IdentityCheck pass() { return {}; }
    static IdentityCheck fail(std::vector<std::size_t> w) {
        return {false, std::move(w)};
    }
};

/// [x,[y,z]] = [[x,y],z] - [[x,z],y] over all basis triples.
IdentityCheck is_right_leibniz(const AlgebraTable& a);
/// [x,[y,z]] = [[x,y],z] + [y,[x,z]] over all basis triples.
IdentityCheck is_left_leibniz(const AlgebraTable& a);
/// c(i,j,k) = -c(j,i,k) everywhere.
IdentityCheck is_antisymmetric(const AlgebraTable& a);

/// [[a,a],b] = 0, polarized over basis pairs and off-diagonal sums.
IdentityCheck is_left_central(const AlgebraTable& a);
/// [b,[a,a]] = 0, same polarization.
IdentityCheck is_right_central(const AlgebraTable& a);

/// D[y,z] = [Dy,z] + [y,Dz] on basis pairs.
bool is_derivation(const AlgebraTable& a, const QMatrix& d);
/// D[y,z] = [Dy,z] - [Dz,y] on basis pairs.
bool is_anti_derivation(const AlgebraTable& a, const QMatrix& d);

}  // namespace leibniz

#endif
