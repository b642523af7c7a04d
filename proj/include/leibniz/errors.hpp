#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class for all errors raised by the toolkit.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape or ambient-dimension disagreement between operands.
struct dimension_mismatch : error {
  explicit dimension_mismatch(const std::string& what) : error(what) {}
};

/// A documented precondition of an operation does not hold
/// (identity precondition, normalizer membership, invariance, ...).
struct precondition_error : error {
  explicit precondition_error(const std::string& what) : error(what) {}
};

/// Malformed input document. `context` names the offending field or line.
struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

/// A self-verification step of an algorithm failed. This is a hard error:
/// it signals that the algorithm's hypothesis broke on the given input,
/// and no result is returned. `diagnostics` carries the dumped intermediates.
struct verification_error : error {
  verification_error(const std::string& what, std::string diagnostics = {})
      : error(what), diagnostics(std::move(diagnostics)) {}
  std::string diagnostics;
};

/// Internal invariant breach: a bug in the toolkit itself.
struct internal_error : error {
  explicit internal_error(const std::string& what) : error(what) {}
};

}  // namespace leibniz

#endif
