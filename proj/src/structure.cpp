#include "leibniz/structure.hpp"

#include <deque>

#include "leibniz/errors.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

Subspace bracket_space(const AlgebraTable& a, const Subspace& s, const Subspace& t) {
    const std::size_t n = a.dim();
    if (s.ambient_dim() != n || t.ambient_dim() != n)
        throw dimension_mismatch("bracket_space: ambient differs from algebra dimension");
    std::vector<QVector> gens;
    for (const QVector& u : s.basis())
        for (const QVector& v : t.basis()) gens.push_back(a.bracket(u, v));
    return Subspace::span(n, gens);
}

Subspace ideal_closure(const AlgebraTable& a, const Subspace& s) {
    const std::size_t n = a.dim();
    Subspace cur = s;
    Subspace full = Subspace::full(n);
    for (std::size_t guard = 0; guard <= n + 1; ++guard) {
        Subspace next = subspace_sum(
            cur, subspace_sum(bracket_space(a, cur, full), bracket_space(a, full, cur)));
        if (next == cur) return cur;
        cur = next;
    }
    throw internal_error("ideal closure failed to stabilize");
}

bool is_left_ideal(const AlgebraTable& a, const Subspace& s) {
    const std::size_t n = a.dim();
    for (std::size_t j = 0; j < n; ++j)
        for (const QVector& v : s.basis())
            if (!s.contains_vector(a.bracket(vec_unit(n, j), v))) return false;
    return true;
}

bool is_right_ideal(const AlgebraTable& a, const Subspace& s) {
    const std::size_t n = a.dim();
    for (std::size_t j = 0; j < n; ++j)
        for (const QVector& v : s.basis())
            if (!s.contains_vector(a.bracket(v, vec_unit(n, j)))) return false;
    return true;
}

bool is_ideal(const AlgebraTable& a, const Subspace& s) {
    return is_left_ideal(a, s) && is_right_ideal(a, s);
}

Subspace normalizer(const AlgebraTable& a, const Subspace& s) {
    const std::size_t n = a.dim();
    if (s.ambient_dim() != n)
        throw dimension_mismatch("normalizer: ambient differs from algebra dimension");
    QMatrix ms = s.membership_matrix();
    std::vector<QVector> rows;
    for (const QVector& v : s.basis()) {
        QMatrix left = ms * a.ad(v);   // y -> [y, s] mod S
        QMatrix right = ms * a.Ad(v);  // y -> [s, y] mod S
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(left.row(i));
            rows.push_back(right.row(i));
        }
    }
    if (rows.empty()) return Subspace::full(n);
    return kernel(QMatrix::from_rows(rows));
}

static void require_right_leibniz(const AlgebraTable& a, const char* who) {
    IdentityCheck ck = is_right_leibniz(a);
    if (!ck.holds)
        throw precondition_error(std::string(who) +
                                 " requires the right Leibniz identity");
}

Subspace ess(const AlgebraTable& a) {
    require_right_leibniz(a, "ess");
    const std::size_t n = a.dim();
    std::vector<QVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(a.bracket_basis(i, i));
        for (std::size_t j = i + 1; j < n; ++j)
            gens.push_back(vec_add(a.bracket_basis(i, j), a.bracket_basis(j, i)));
    }
    return ideal_closure(a, Subspace::span(n, gens));
}

SeriesTrace derived_series(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    SeriesTrace t;
    t.kind = SeriesTrace::Kind::derived;
    Subspace cur = Subspace::full(n);
    t.terms.push_back(cur);
    for (std::size_t guard = 0; guard <= n + 1; ++guard) {
        Subspace next = bracket_space(a, cur, cur);
        t.terms.push_back(next);
        if (next == cur) {
            t.stabilized = true;
            return t;
        }
        if (next.is_zero()) return t;
        cur = next;
    }
    throw internal_error("derived series failed to terminate");
}

SeriesTrace lower_central_series(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    SeriesTrace t;
    t.kind = SeriesTrace::Kind::lower_central;
    t.terms.push_back(Subspace::full(n));
    for (std::size_t guard = 0; guard <= n + 1; ++guard) {
        const std::size_t m = t.terms.size();  // terms L^1 .. L^m known
        Subspace next = Subspace::zero(n);
        for (std::size_t p = 1; p <= m; ++p)
            next = subspace_sum(next,
                                bracket_space(a, t.terms[p - 1], t.terms[m - p]));
        t.terms.push_back(next);
        if (next == t.terms[m - 1]) {
            t.stabilized = true;
            return t;
        }
        if (next.is_zero()) return t;
    }
    throw internal_error("lower central series failed to terminate");
}

bool is_solvable(const AlgebraTable& a) {
    return derived_series(a).terminates_at_zero();
}

bool is_nilpotent(const AlgebraTable& a) {
    return lower_central_series(a).terminates_at_zero();
}

bool solvable_by_trace(const AlgebraTable& a) {
    require_right_leibniz(a, "solvable_by_trace");
    const std::size_t n = a.dim();
    Subspace derived = bracket_space(a, Subspace::full(n), Subspace::full(n));
    for (const QVector& y : derived.basis()) {
        QMatrix ady = a.ad(y);
        for (std::size_t i = 0; i < n; ++i)
            if ((a.ad_basis(i) * ady).trace() != 0) return false;
    }
    return true;
}

// { x : tr(ad_x ad_y) = 0 for all y in [L,L] } — the radical candidate.
static Subspace trace_orthogonal_of_derived(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    Subspace derived = bracket_space(a, Subspace::full(n), Subspace::full(n));
    if (derived.is_zero()) return Subspace::full(n);
    std::vector<QVector> rows;
    for (const QVector& y : derived.basis()) {
        QMatrix ady = a.ad(y);
        QVector row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = (a.ad_basis(i) * ady).trace();
        rows.push_back(row);
    }
    return kernel(QMatrix::from_rows(rows));
}

Subspace radical(const AlgebraTable& a) {
    require_right_leibniz(a, "radical");
    Subspace r = trace_orthogonal_of_derived(a);

    if (!is_ideal(a, r))
        throw verification_error("radical candidate is not an ideal",
                                 r.to_string());
    if (!is_solvable(restrict_to_subalgebra(a, r)))
        throw verification_error("radical candidate is not solvable",
                                 r.to_string());

    // independent route: pull back the radical of the Lie quotient L/Ess
    Subspace e = ess(a);
    AlgebraTable q = quotient_by_ideal(a, e);
    if (!is_antisymmetric(q).holds || !is_right_leibniz(q).holds)
        throw verification_error("quotient by Ess is not a Lie algebra",
                                 e.to_string());
    Subspace pulled = quotient_preimage(e, trace_orthogonal_of_derived(q));
    if (!(pulled == r))
        throw verification_error(
            "radical cross-check failed",
            "direct: " + r.to_string() + " vs quotient pullback: " + pulled.to_string());
    return r;
}

Subspace nilradical(const AlgebraTable& a) {
    require_right_leibniz(a, "nilradical");
    const std::size_t n = a.dim();
    Subspace rad = radical(a);

    // associative hull of the adjoints of the radical
    std::vector<QMatrix> gens;
    for (const QVector& v : rad.basis()) {
        QMatrix m = a.ad(v);
        if (!m.is_zero()) gens.push_back(m);
    }
    std::vector<QMatrix> hull;
    Subspace hull_span = Subspace::zero(n * n);
    std::deque<QMatrix> work(gens.begin(), gens.end());
    while (!work.empty()) {
        QMatrix m = work.front();
        work.pop_front();
        if (m.is_zero() || hull_span.contains_vector(m.vectorized())) continue;
        hull_span = subspace_sum(hull_span, Subspace::span(n * n, {m.vectorized()}));
        hull.push_back(m);
        for (const QMatrix& g : gens) {
            work.push_back(m * g);
            work.push_back(g * m);
        }
    }

    // x in Rad with tr(ad_x b) = 0 for every hull element b
    std::vector<QVector> rows;
    QMatrix member = rad.membership_matrix();
    for (std::size_t i = 0; i < n; ++i) rows.push_back(member.row(i));
    for (const QMatrix& b : hull) {
        QVector row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = (a.ad_basis(i) * b).trace();
        rows.push_back(row);
    }
    Subspace nil = rows.empty() ? Subspace::full(n)
                                : kernel(QMatrix::from_rows(rows));

    for (const QVector& v : nil.basis())
        if (!is_nilpotent_endo(a.ad(v)))
            throw verification_error("nilradical basis element is not ad-nilpotent",
                                     vec_to_string(v));
    if (!is_ideal(a, nil))
        throw verification_error("nilradical candidate is not an ideal",
                                 nil.to_string());
    if (!is_nilpotent(restrict_to_subalgebra(a, nil)))
        throw verification_error("nilradical candidate is not nilpotent",
                                 nil.to_string());
    if (!nil.contains(ess(a)))
        throw verification_error("nilradical does not contain Ess",
                                 nil.to_string());
    if (!nil.contains(rad_bracket_ideal(a)))
        throw verification_error("nilradical does not contain {Rad, L}",
                                 nil.to_string());
    return nil;
}

Subspace rad_bracket_ideal(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    Subspace rad = radical(a);
    Subspace full = Subspace::full(n);
    return subspace_sum(bracket_space(a, rad, full), bracket_space(a, full, rad));
}

bool check_rad_bracket_nilpotent(const AlgebraTable& a) {
    Subspace t = rad_bracket_ideal(a);
    if (!is_nilpotent(restrict_to_subalgebra(a, t))) return false;
    for (const QVector& v : t.basis())
        if (!is_nilpotent_endo(a.ad(v))) return false;
    return true;
}

bool is_semisimple(const AlgebraTable& a) { return radical(a) == ess(a); }

AlgebraTable restrict_to_subalgebra(const AlgebraTable& a, const Subspace& s) {
    const std::size_t d = s.dim();
    const std::vector<QVector>& basis = s.basis();
    AlgebraTable sub(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            QVector w = a.bracket(basis[i], basis[j]);
            if (!s.contains_vector(w))
                throw precondition_error("restriction target is not a subalgebra");
            // coordinates read off the pivot columns of the echelon basis
            for (std::size_t k = 0; k < d; ++k)
                sub.c(i, j, k) = w[s.pivot_cols()[k]];
        }
    return sub;
}

QVector quotient_project(const Subspace& ideal, const QVector& v) {
    QVector reduced = v;
    const std::vector<QVector>& basis = ideal.basis();
    for (std::size_t t = 0; t < basis.size(); ++t) {
        Rat coeff = reduced[ideal.pivot_cols()[t]];
        if (coeff != 0) reduced = vec_sub(reduced, vec_scale(coeff, basis[t]));
    }
    QVector out;
    for (std::size_t qcol : ideal.complement_cols()) out.push_back(reduced[qcol]);
    return out;
}

AlgebraTable quotient_by_ideal(const AlgebraTable& a, const Subspace& ideal) {
    if (!is_ideal(a, ideal))
        throw precondition_error("quotient requires a two-sided ideal");
    const std::vector<std::size_t> rep = ideal.complement_cols();
    const std::size_t m = rep.size();
    std::vector<std::string> names;
    for (std::size_t qcol : rep) names.push_back(a.basis_names()[qcol]);
    AlgebraTable q(m, names);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            QVector w = quotient_project(ideal, a.bracket_basis(rep[i], rep[j]));
            for (std::size_t k = 0; k < m; ++k) q.c(i, j, k) = w[k];
        }
    return q;
}

Subspace quotient_preimage(const Subspace& ideal, const Subspace& sub_of_quotient) {
    const std::size_t n = ideal.ambient_dim();
    const std::vector<std::size_t> rep = ideal.complement_cols();
    if (sub_of_quotient.ambient_dim() != rep.size())
        throw dimension_mismatch("quotient subspace has wrong ambient dimension");
    std::vector<QVector> gens = ideal.basis();
    for (const QVector& w : sub_of_quotient.basis()) {
        QVector lift(n, Rat(0));
        for (std::size_t t = 0; t < rep.size(); ++t) lift[rep[t]] = w[t];
        gens.push_back(lift);
    }
    return Subspace::span(n, gens);
}

}  // namespace leibniz
