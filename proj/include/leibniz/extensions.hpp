#ifndef LEIBNIZ_EXTENSIONS_HPP
#define LEIBNIZ_EXTENSIONS_HPP

#include "leibniz/table.hpp"

namespace leibniz {

/// Solution space of the derivation equations, materialized as matrices.
struct DerivationSpace {
    std::size_t algebra_dim = 0;
    std::vector<QMatrix> basis;

    std::size_t dim() const { return basis.size(); }
};

/// All D with D([e_i,e_j]) = [D e_i, e_j] + [e_i, D e_j]: the kernel of a
/// dim^3-equation, dim^2-unknown system.
DerivationSpace derivation_space(const AlgebraTable& a);

/// One-dimensional extension by a derivation: basis (e_0..e_{n-1}, w) with
/// [e_i, w] = D(e_i), [w, e_j] = -D(e_j), [w, w] = 0, the old table elsewhere.
AlgebraTable semidirect_extension(const AlgebraTable& a, const QMatrix& d);

/// Theorem oracle: D(Rad) lies in Nil for every basis derivation.
bool check_derivation_corollary(const AlgebraTable& a);

}  // namespace leibniz

#endif
