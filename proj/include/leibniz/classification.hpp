#ifndef LEIBNIZ_CLASSIFICATION_HPP
#define LEIBNIZ_CLASSIFICATION_HPP

#include <optional>

#include "leibniz/table.hpp"

namespace leibniz {

/// One verdict per class predicate; identity-style predicates carry the
/// basis indices of the first failing instance when false.
struct Verdict {
    bool holds = false;
    std::optional<std::vector<std::size_t>> witness;
};

struct ClassificationReport {
    Verdict right_leibniz;
    Verdict left_leibniz;
    Verdict symmetric;      // right and left
    Verdict lie;            // right + antisymmetric table
    Verdict left_central;   // left Leibniz with [[a,a],b] = 0
    Verdict right_central;  // right Leibniz with [b,[a,a]] = 0
    Verdict killing_class;  // witness is a basis pair
    bool solvable = false;
    bool nilpotent = false;
    bool semisimple = false;  // only meaningful when right_leibniz holds
};

ClassificationReport classify(const AlgebraTable& a);

}  // namespace leibniz

#endif
