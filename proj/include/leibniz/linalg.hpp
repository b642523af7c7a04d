#ifndef LEIBNIZ_LINALG_HPP
#define LEIBNIZ_LINALG_HPP

#include <string>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/// Null space {v : m v = 0}; dim = cols - rank.
Subspace kernel(const QMatrix& m);

/// Polynomials are coefficient lists in ascending degree; the leading
/// coefficient is nonzero (monic for minimal polynomials).
using Poly = std::vector<Rat>;

Poly poly_derivative(const Poly& p);
Poly poly_gcd(Poly a, Poly b);
QMatrix poly_eval(const Poly& p, const QMatrix& m);
std::string poly_to_string(const Poly& p);

/// Monic least-degree annihilating polynomial, found as the first linear
/// dependency among I, m, m^2, ...
Poly minimal_polynomial(const QMatrix& m);

/// True iff the minimal polynomial is squarefree, i.e. the endomorphism is
/// diagonalizable over the algebraic closure.
bool is_semisimple_endo(const QMatrix& m);

/// True iff m^n = 0 where n is the matrix size.
bool is_nilpotent_endo(const QMatrix& m);

/// Matrix of m restricted to an m-invariant subspace, expressed in the
/// subspace's echelon basis extended by standard vectors at the non-pivot
/// columns. Throws precondition_error if the subspace is not invariant.
QMatrix restriction_matrix(const QMatrix& m, const Subspace& invariant);

/// Oracle for the trace-collapse lemma: with sigma^p mapping everything
/// into v1 and v1 sigma-invariant, tr(sigma) must equal the trace of the
/// restriction to v1. Preconditions are checked and violations reported
/// as precondition_error; a false return on valid input is a bug.
bool trace_collapse_check(const QMatrix& sigma, const Subspace& v1,
                          std::size_t p);

}  // namespace leibniz

#endif
