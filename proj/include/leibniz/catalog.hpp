#ifndef LEIBNIZ_CATALOG_HPP
#define LEIBNIZ_CATALOG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/table.hpp"

namespace leibniz {

/// Resolve a catalog name. Accepted: paper-ex-5.1, abelian-<n>,
/// heisenberg-3, sl2, sl2-hemisemidirect-V2, solvable-2-lie,
/// random-solvable(<seed>,<dim>). Throws parse_error on unknown names.
AlgebraTable catalog_entry(const std::string& name);

/// Name patterns for `catalog list`.
std::vector<std::string> catalog_names();

/// Concrete instances used by the verification suites.
std::vector<std::pair<std::string, AlgebraTable>> catalog_default_instances();

/// Iterated semidirect extensions of an abelian line by nilpotent
/// derivations; always a solvable (in fact Lie) table.
AlgebraTable random_solvable(std::uint64_t seed, std::size_t dim);

/// Mixed pool of right Leibniz tables (solvable Lie towers, nilpotent
/// Leibniz, weight-diagonal, hemisemidirect pieces, direct sums) in a
/// scrambled basis.
AlgebraTable random_right_leibniz(std::uint64_t seed, std::size_t dim);

/// Same pool restricted to constructions that are Killing class
/// (Lie algebras, nilpotent Leibniz tables, and their direct sums).
AlgebraTable random_killing_class(std::uint64_t seed, std::size_t dim);

/// Transport the table through a random unimodular change of basis.
AlgebraTable random_basis_change(const AlgebraTable& a, std::uint64_t seed);

}  // namespace leibniz

#endif
