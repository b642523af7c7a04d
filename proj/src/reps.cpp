#include "leibniz/reps.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

QMatrix Representation::left(const QVector& x) const {
    if (x.size() != algebra_dim)
        throw dimension_mismatch("representation argument has wrong length");
    QMatrix m(module_dim, module_dim);
    for (std::size_t i = 0; i < algebra_dim; ++i)
        if (x[i] != 0) m = m + left_maps[i] * x[i];
    return m;
}

QMatrix Representation::right(const QVector& x) const {
    if (x.size() != algebra_dim)
        throw dimension_mismatch("representation argument has wrong length");
    QMatrix m(module_dim, module_dim);
    for (std::size_t i = 0; i < algebra_dim; ++i)
        if (x[i] != 0) m = m + right_maps[i] * x[i];
    return m;
}

RepValidation validate_representation(const AlgebraTable& a, const Representation& rep) {
    const std::size_t n = a.dim();
    if (rep.algebra_dim != n || rep.left_maps.size() != n || rep.right_maps.size() != n)
        throw dimension_mismatch("representation does not match algebra dimension");
    for (const QMatrix& m : rep.left_maps)
        if (m.rows() != rep.module_dim || m.cols() != rep.module_dim)
            throw dimension_mismatch("representation matrix has wrong shape");
    for (const QMatrix& m : rep.right_maps)
        if (m.rows() != rep.module_dim || m.cols() != rep.module_dim)
            throw dimension_mismatch("representation matrix has wrong shape");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVector br = a.bracket_basis(i, j);
            const QMatrix &li = rep.left_maps[i], &lj = rep.left_maps[j];
            const QMatrix &ri = rep.right_maps[i], &rj = rep.right_maps[j];
            if (rep.right(br) != rj * ri - ri * rj)
                return {false, 1, std::pair{i, j}};
            QMatrix lbr = rep.left(br);
            if (lbr != rj * li - li * rj) return {false, 2, std::pair{i, j}};
            if (lbr != rj * li + li * lj) return {false, 3, std::pair{i, j}};
        }
    return {};
}

Representation adjoint_rep(const AlgebraTable& a) {
    Representation rep;
    rep.algebra_dim = rep.module_dim = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        rep.left_maps.push_back(a.Ad_basis(i));
        rep.right_maps.push_back(a.ad_basis(i));
    }
    return rep;
}

bool OperatorSubspace::contains(const QMatrix& m) const {
    if (m.rows() != module_dim || m.cols() != module_dim)
        throw dimension_mismatch("operator has wrong module dimension");
    return span.contains_vector(m.vectorized());
}

std::vector<QMatrix> OperatorSubspace::basis_matrices() const {
    std::vector<QMatrix> out;
    for (const QVector& v : span.basis())
        out.push_back(QMatrix::from_vectorized(v, module_dim, module_dim));
    return out;
}

OperatorSubspace operator_span(std::size_t module_dim,
                               const std::vector<QMatrix>& mats) {
    std::vector<QVector> vecs;
    for (const QMatrix& m : mats) {
        if (m.rows() != module_dim || m.cols() != module_dim)
            throw dimension_mismatch("operator has wrong module dimension");
        vecs.push_back(m.vectorized());
    }
    return {module_dim, Subspace::span(module_dim * module_dim, vecs)};
}

OperatorSubspace operator_sum(const OperatorSubspace& a, const OperatorSubspace& b) {
    if (a.module_dim != b.module_dim)
        throw dimension_mismatch("operator spaces over different modules");
    return {a.module_dim, subspace_sum(a.span, b.span)};
}

OperatorSubspace operator_product_span(const OperatorSubspace& a,
                                       const OperatorSubspace& b) {
    if (a.module_dim != b.module_dim)
        throw dimension_mismatch("operator spaces over different modules");
    std::vector<QMatrix> prods;
    for (const QMatrix& x : a.basis_matrices())
        for (const QMatrix& y : b.basis_matrices()) prods.push_back(x * y);
    return operator_span(a.module_dim, prods);
}

OperatorSubspace operator_power(const OperatorSubspace& a, std::size_t p) {
    if (p == 0) throw precondition_error("operator_power needs p >= 1");
    OperatorSubspace acc = a;
    for (std::size_t i = 1; i < p; ++i) acc = operator_product_span(acc, a);
    return acc;
}

// r_{A_sub}: right maps of a basis of the subspace
static OperatorSubspace right_span_of(const Representation& rep, const Subspace& a_sub) {
    std::vector<QMatrix> mats;
    for (const QVector& v : a_sub.basis()) mats.push_back(rep.right(v));
    return operator_span(rep.module_dim, mats);
}

static void require_normalizer(const AlgebraTable& alg, const Subspace& a_sub,
                               const QVector& x, const char* who) {
    if (!normalizer(alg, a_sub).contains_vector(x))
        throw precondition_error(std::string(who) +
                                 ": x is not in the normalizer of the subspace");
}

bool delta_membership(const AlgebraTable& alg, const Representation& rep,
                      const Subspace& a_sub, const QVector& x, std::size_t k) {
    require_normalizer(alg, a_sub, x, "delta_membership");
    OperatorSubspace ra = right_span_of(rep, a_sub);
    if (ra.is_zero()) return true;  // all deltas vanish
    OperatorSubspace target = operator_power(ra, k + 1);
    QMatrix rx = rep.right(x);
    for (const QVector& av : a_sub.basis()) {
        QMatrix rak = rep.right(av).pow(k + 1);
        if (!target.contains(rak * rx - rx * rak)) return false;
    }
    return true;
}

// r_A r_x^k + ... + r_A r_x + r_A
static OperatorSubspace staircase(const OperatorSubspace& ra, const QMatrix& rx,
                                  std::size_t k) {
    OperatorSubspace acc = ra;
    for (std::size_t j = 1; j <= k; ++j) {
        OperatorSubspace step =
            operator_product_span(ra, operator_span(ra.module_dim, {rx.pow(j)}));
        acc = operator_sum(acc, step);
    }
    return acc;
}

bool beta_membership(const AlgebraTable& alg, const Representation& rep,
                     const Subspace& a_sub, const QVector& x, std::size_t k) {
    require_normalizer(alg, a_sub, x, "beta_membership");
    OperatorSubspace ra = right_span_of(rep, a_sub);
    if (ra.is_zero()) return true;
    QMatrix rx = rep.right(x);
    OperatorSubspace target = staircase(ra, rx, k);
    QMatrix rxk = rx.pow(k + 1);
    for (const QVector& av : a_sub.basis()) {
        QMatrix rav = rep.right(av);
        if (!target.contains(rxk * rav - rav * rxk)) return false;
    }
    return true;
}

bool staircase_power_containment(const AlgebraTable& alg, const Representation& rep,
                                 const Subspace& a_sub, const QVector& x,
                                 std::size_t k, std::size_t p) {
    require_normalizer(alg, a_sub, x, "staircase_power_containment");
    if (p == 0) throw precondition_error("staircase power needs p >= 1");
    OperatorSubspace ra = right_span_of(rep, a_sub);
    if (ra.is_zero()) return true;
    QMatrix rx = rep.right(x);
    OperatorSubspace ek = staircase(ra, rx, k);
    if (ek.is_zero()) return true;
    OperatorSubspace lhs = operator_power(ek, p);

    OperatorSubspace rap = operator_power(ra, p);
    OperatorSubspace rhs = rap;
    for (std::size_t j = 1; j <= p * k; ++j)
        rhs = operator_sum(rhs, operator_product_span(
                                    rap, operator_span(ra.module_dim, {rx.pow(j)})));
    return rhs.span.contains(lhs.span);
}

static Rat binomial(std::size_t m, std::size_t k) {
    Rat r(1);
    for (std::size_t i = 0; i < k; ++i) r *= Rat((long)(m - i)) / Rat((long)(i + 1));
    return r;
}

bool binomial_defect(const AlgebraTable& alg, const Representation& rep,
                     const Subspace& a_sub, const QVector& x, const QVector& a,
                     const Rat& lambda, std::size_t m) {
    require_normalizer(alg, a_sub, x, "binomial_defect");
    if (!a_sub.contains_vector(a))
        throw precondition_error("binomial_defect: a is not in the subspace");
    OperatorSubspace ra = right_span_of(rep, a_sub);
    QMatrix rx = rep.right(x);
    QMatrix rav = rep.right(a);
    QMatrix mixed = rep.right(vec_add(a, vec_scale(lambda, x)));

    QMatrix fm = mixed.pow(m);
    for (std::size_t k = 0; k <= m; ++k) {
        Rat coeff = binomial(m, k);
        Rat lk(1);
        for (std::size_t i = 0; i < k; ++i) lk *= lambda;
        fm = fm - (rav.pow(m - k) * rx.pow(k)) * (coeff * lk);
    }
    if (fm.is_zero()) return true;
    if (ra.is_zero()) return false;  // nonzero defect cannot lie in a zero space
    return staircase(ra, rx, m).contains(fm);
}

bool nilpotent_on_rad_bracket(const AlgebraTable& alg, const Representation& rep) {
    Subspace t = rad_bracket_ideal(alg);
    OperatorSubspace rt = right_span_of(rep, t);
    if (rt.is_zero()) return true;
    OperatorSubspace acc = rt;
    const std::size_t cap = rep.module_dim * rep.module_dim + 1;
    for (std::size_t i = 0; i < cap; ++i) {
        OperatorSubspace next = operator_product_span(acc, rt);
        if (next.is_zero()) return true;
        if (next.span == acc.span) return false;  // stabilized nonzero
        acc = next;
    }
    return false;
}

bool left_power_identity(const Representation& rep, const QVector& x, std::size_t k) {
    if (k == 0) throw precondition_error("left_power_identity needs k >= 1");
    QMatrix lx = rep.left(x), rx = rep.right(x);
    QMatrix rhs = lx * rx.pow(k - 1);
    if (k % 2 == 1) return lx.pow(k) == rhs;   // (-1)^{k+1} = +1
    return lx.pow(k) == -rhs;
}

}  // namespace leibniz
