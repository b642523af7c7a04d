#ifndef LEIBNIZ_FORMS_HPP
#define LEIBNIZ_FORMS_HPP

#include <optional>

#include "leibniz/reps.hpp"
#include "leibniz/structure.hpp"
#include "leibniz/table.hpp"

namespace leibniz {

/// Bilinear form in basis coordinates: entry (i,j) = form(e_i, e_j).
struct BilinearForm {
    QMatrix entries;

    std::size_t n() const { return entries.rows(); }
    Rat eval(const QVector& x, const QVector& y) const;
    bool is_symmetric() const;
};

/// K(i,j) = tr(ad_{e_i} o ad_{e_j}).
BilinearForm killing_form(const AlgebraTable& a);

/// (x,y)_r = tr(r_x o r_y).
BilinearForm trace_form_of_rep(const Representation& rep);

/// ([x,y],z) + (y,[x,z]) = 0 over basis triples; witness = first failure.
IdentityCheck is_invariant_form(const AlgebraTable& a, const BilinearForm& b);

/// { v : B v = 0 }.
Subspace form_kernel(const BilinearForm& b);

/// tr((ad_x o ad_y)|_Ess).
Rat restricted_trace(const AlgebraTable& a, const QVector& x, const QVector& y);

struct KillingClassCheck {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Killing class: restricted_trace vanishes on all basis pairs.
KillingClassCheck is_killing_class(const AlgebraTable& a);

/// Theorem oracle: Ess(L) is always inside ker of the Killing form.
bool ess_in_kernel_check(const AlgebraTable& a);

/// The semisimplicity criterion. Inside the Killing class, agreement must
/// hold; outside, it is informational only.
struct MainTheoremReport {
    bool in_killing_class = false;
    bool kernel_equals_ess = false;
    bool semisimple = false;
    bool agreement = false;
};

MainTheoremReport verify_main_theorem(const AlgebraTable& a);

}  // namespace leibniz

#endif
