#ifndef LEIBNIZ_REPS_HPP
#define LEIBNIZ_REPS_HPP

#include <optional>

#include "leibniz/structure.hpp"
#include "leibniz/table.hpp"

namespace leibniz {

/// A Leibniz representation (l, r, V): one left and one right action matrix
/// per algebra basis vector, acting on a module of dimension module_dim.
struct Representation {
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    std::vector<QMatrix> left_maps;
    std::vector<QMatrix> right_maps;

    /// Linear extensions l_x, r_x for an arbitrary algebra element.
    QMatrix left(const QVector& x) const;
    QMatrix right(const QVector& x) const;
};

/// Witness names the first failing axiom (1..3) and basis pair.
struct RepValidation {
    bool valid = true;
    std::optional<std::size_t> axiom;
    std::optional<std::pair<std::size_t, std::size_t>> pair;
};

/// The three module axioms, with juxtaposition read as matrix product
/// (apply the right factor first):
///   r_[x,y] = r_y r_x - r_x r_y
///   l_[x,y] = r_y l_x - l_x r_y
///   l_[x,y] = r_y l_x + l_x l_y
RepValidation validate_representation(const AlgebraTable& a, const Representation& rep);

/// (Ad, ad, L): left_maps[i] = Ad_{e_i}, right_maps[i] = ad_{e_i}.
Representation adjoint_rep(const AlgebraTable& a);

/// Subspace of endomorphisms, stored as vectorized matrices.
struct OperatorSubspace {
    std::size_t module_dim = 0;
    Subspace span;  // ambient module_dim^2

    bool contains(const QMatrix& m) const;
    bool is_zero() const { return span.is_zero(); }
    std::size_t dim() const { return span.dim(); }
    std::vector<QMatrix> basis_matrices() const;
};

OperatorSubspace operator_span(std::size_t module_dim,
                               const std::vector<QMatrix>& mats);
OperatorSubspace operator_sum(const OperatorSubspace& a, const OperatorSubspace& b);
/// Span of pairwise products of basis matrices.
OperatorSubspace operator_product_span(const OperatorSubspace& a,
                                       const OperatorSubspace& b);
/// p-fold product span, p >= 1.
OperatorSubspace operator_power(const OperatorSubspace& a, std::size_t p);

/// delta_{k+1} = r_a^{k+1} r_x - r_x r_a^{k+1} lies in (r_A)^{k+1}, for every
/// basis a of a_sub. Requires x in the normalizer of a_sub.
bool delta_membership(const AlgebraTable& alg, const Representation& rep,
                      const Subspace& a_sub, const QVector& x, std::size_t k);

/// beta_{k+1} = r_x^{k+1} r_a - r_a r_x^{k+1} lies in the staircase
/// r_A r_x^k + ... + r_A r_x + r_A.
bool beta_membership(const AlgebraTable& alg, const Representation& rep,
                     const Subspace& a_sub, const QVector& x, std::size_t k);

/// E_k^p is contained in r_A^p r_x^{pk} + ... + r_A^p, where
/// E_k = sum_j r_A r_x^j over j <= k.
bool staircase_power_containment(const AlgebraTable& alg, const Representation& rep,
                                 const Subspace& a_sub, const QVector& x,
                                 std::size_t k, std::size_t p);

/// f_m = (r_{a + lambda x})^m - sum_k C(m,k) lambda^k r_a^{m-k} r_x^k lies in
/// r_A r_x^m + ... + r_A. Requires a in a_sub and x in its normalizer.
bool binomial_defect(const AlgebraTable& alg, const Representation& rep,
                     const Subspace& a_sub, const QVector& x, const QVector& a,
                     const Rat& lambda, std::size_t m);

/// Some power of the operator span of r over {Rad(L), L} is the zero space.
bool nilpotent_on_rad_bracket(const AlgebraTable& alg, const Representation& rep);

/// l_x^k = (-1)^{k+1} l_x r_x^{k-1}, k >= 1.
bool left_power_identity(const Representation& rep, const QVector& x, std::size_t k);

}  // namespace leibniz

#endif
