#include "leibniz/forms.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

Rat BilinearForm::eval(const QVector& x, const QVector& y) const {
    if (x.size() != n() || y.size() != n())
        throw dimension_mismatch("form argument has wrong length");
    Rat acc(0);
    for (std::size_t i = 0; i < n(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n(); ++j)
            if (y[j] != 0) acc += x[i] * entries.at(i, j) * y[j];
    }
    return acc;
}

bool BilinearForm::is_symmetric() const { return entries == entries.transpose(); }

BilinearForm killing_form(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    std::vector<QMatrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(a.ad_basis(i));
    QMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k.at(i, j) = (ads[i] * ads[j]).trace();
    return {k};
}

BilinearForm trace_form_of_rep(const Representation& rep) {
    const std::size_t n = rep.algebra_dim;
    QMatrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            k.at(i, j) = (rep.right_maps[i] * rep.right_maps[j]).trace();
    return {k};
}

IdentityCheck is_invariant_form(const AlgebraTable& a, const BilinearForm& b) {
    const std::size_t n = a.dim();
    if (b.n() != n) throw dimension_mismatch("form size differs from algebra dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rat lhs = b.eval(a.bracket_basis(i, j), vec_unit(n, k)) +
                          b.eval(vec_unit(n, j), a.bracket_basis(i, k));
                if (lhs != 0) return IdentityCheck::fail({i, j, k});
            }
    return IdentityCheck::pass();
}

Subspace form_kernel(const BilinearForm& b) { return kernel(b.entries); }

Rat restricted_trace(const AlgebraTable& a, const QVector& x, const QVector& y) {
    Subspace e = ess(a);
    if (e.is_zero()) return Rat(0);
    QMatrix sigma = a.ad(x) * a.ad(y);  // ad_x o ad_y: apply ad_y first
    return restriction_matrix(sigma, e).trace();
}

KillingClassCheck is_killing_class(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    Subspace e = ess(a);
    if (e.is_zero()) return {};
    std::vector<QMatrix> restricted;
    for (std::size_t i = 0; i < n; ++i)
        restricted.push_back(restriction_matrix(a.ad_basis(i), e));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((restricted[i] * restricted[j]).trace() != 0)
                return {false, std::pair{i, j}};
    return {};
}

bool ess_in_kernel_check(const AlgebraTable& a) {
    return form_kernel(killing_form(a)).contains(ess(a));
}

MainTheoremReport verify_main_theorem(const AlgebraTable& a) {
    MainTheoremReport r;
    r.in_killing_class = is_killing_class(a).holds;
    r.kernel_equals_ess = form_kernel(killing_form(a)) == ess(a);
    r.semisimple = is_semisimple(a);
    r.agreement = (r.kernel_equals_ess == r.semisimple);
    return r;
}

}  // namespace leibniz
