#ifndef LEIBNIZ_STRUCTURE_HPP
#define LEIBNIZ_STRUCTURE_HPP

#include "leibniz/subspace.hpp"
#include "leibniz/table.hpp"

namespace leibniz {

/// Span of [s_i, t_j] over all basis pairs of the two subspaces.
Subspace bracket_space(const AlgebraTable& a, const Subspace& s, const Subspace& t);

/// Least two-sided ideal containing s: fixed point of
/// s <- s + [s, L] + [L, s].
Subspace ideal_closure(const AlgebraTable& a, const Subspace& s);

bool is_left_ideal(const AlgebraTable& a, const Subspace& s);   // [L, S] in S
bool is_right_ideal(const AlgebraTable& a, const Subspace& s);  // [S, L] in S
bool is_ideal(const AlgebraTable& a, const Subspace& s);

/// n_L(S) = { y : [y, s] in S and [s, y] in S for all s in S }.
Subspace normalizer(const AlgebraTable& a, const Subspace& s);

/// Ideal generated by the squares [x, x] (polarized over the basis).
/// Requires the right Leibniz identity.
Subspace ess(const AlgebraTable& a);

struct SeriesTrace {
    enum class Kind { derived, lower_central };
    Kind kind = Kind::derived;
    std::vector<Subspace> terms;  // terms[0] = L
    bool stabilized = false;      // stopped at a repeated (possibly nonzero) term

    bool terminates_at_zero() const {
        return !terms.empty() && terms.back().is_zero();
    }
};

SeriesTrace derived_series(const AlgebraTable& a);
SeriesTrace lower_central_series(const AlgebraTable& a);

bool is_solvable(const AlgebraTable& a);
bool is_nilpotent(const AlgebraTable& a);

/// Cartan-style criterion: tr(ad_x ad_y) = 0 for all basis x and y in [L,L].
bool solvable_by_trace(const AlgebraTable& a);

/// Largest solvable ideal. Computed as the trace orthogonal of [L,L],
/// then verified (ideal + solvable) and cross-checked against the pullback
/// of the radical of the Lie quotient L/Ess. Any failure throws
/// verification_error.
Subspace radical(const AlgebraTable& a);

/// Largest nilpotent ideal. Computed inside the radical via the trace
/// radical of the associative hull of { ad_r : r in Rad }, then verified:
/// ad-nilpotent basis, ideal, nilpotent restricted table, contains Ess,
/// contains {Rad, L}. Any failure throws verification_error.
Subspace nilradical(const AlgebraTable& a);

/// {Rad(L), L} = [Rad, L] + [L, Rad].
Subspace rad_bracket_ideal(const AlgebraTable& a);

/// Theorem oracle: the ideal {Rad,L} restricts to a nilpotent table and all
/// its elements are ad-nilpotent in L. False indicates a bug, not a property
/// of the input.
bool check_rad_bracket_nilpotent(const AlgebraTable& a);

/// Rad(L) = Ess(L).
bool is_semisimple(const AlgebraTable& a);

/// Table of the bracket restricted to a subalgebra ([S,S] must lie in S),
/// in the coordinates of S's echelon basis.
AlgebraTable restrict_to_subalgebra(const AlgebraTable& a, const Subspace& s);

/// Quotient table L/I on the complement coordinates of the ideal's pivots.
AlgebraTable quotient_by_ideal(const AlgebraTable& a, const Subspace& ideal);

/// Canonical projection to quotient coordinates (kernel = ideal).
QVector quotient_project(const Subspace& ideal, const QVector& v);

/// Preimage of a subspace of the quotient under the canonical projection.
Subspace quotient_preimage(const Subspace& ideal, const Subspace& sub_of_quotient);

}  // namespace leibniz

#endif
