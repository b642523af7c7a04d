#ifndef LEIBNIZ_IO_HPP
#define LEIBNIZ_IO_HPP

#include <string>

#include "leibniz/table.hpp"

namespace leibniz {

/// Parse the JSON algebra document:
/// { "field": "rationals", "dimension": n, "basis_names": [...],
///   "brackets": [ {"left": name, "right": name,
///                  "result": { name: "p/q", ... }}, ... ] }
/// Omitted pairs are zero. Errors carry the offending field in the message.
AlgebraTable parse_algebra(const std::string& text);

/// Inverse of parse_algebra; emits only nonzero brackets, in basis order.
/// parse(serialize(t)) reproduces t exactly.
std::string serialize_algebra(const AlgebraTable& t);

/// Full analysis document (classification, subspaces, Killing data, series,
/// main-theorem report) as deterministic JSON. Requires a right Leibniz
/// table; structure-level verification failures propagate.
std::string build_analysis(const AlgebraTable& t);

/// Classification verdicts only; works on any table.
std::string build_classification(const AlgebraTable& t);

}  // namespace leibniz

#endif
