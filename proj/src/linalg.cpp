#include "leibniz/linalg.hpp"

#include <cstddef>

#include "leibniz/errors.hpp"

namespace leibniz {

Subspace kernel(const QMatrix& m) {
    RrefResult r = rref(m);
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;

    std::vector<QVector> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        QVector v(cols, Rat(0));
        v[j] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size() && i < rows; ++i)
            v[r.pivot_cols[i]] = -r.mat.at(i, j);
        basis.push_back(std::move(v));
    }
    return Subspace::span(cols, basis);
}

static void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat((long)i));
    poly_trim(d);
    return d;
}

// remainder of a / b, b nonzero
static Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

QMatrix poly_eval(const Poly& p, const QMatrix& m) {
    if (!m.is_square()) throw precondition_error("poly_eval needs a square matrix");
    std::size_t n = m.rows();
    QMatrix acc(n, n);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * m;
        QMatrix c = QMatrix::identity(n) * p[i];
        acc = acc + c;
    }
    return acc;
}

std::string poly_to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        Rat c = p[i];
        bool first = out.empty();
        if (first) {
            if (c < 0) { out += "-"; c = -c; }
        } else {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (i == 0) {
            out += rat_to_string(c);
        } else {
            if (c != 1) out += rat_to_string(c) + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

Poly minimal_polynomial(const QMatrix& m) {
    if (!m.is_square()) throw precondition_error("minimal_polynomial needs a square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Poly{Rat(1)};  // empty endomorphism: minpoly 1

    // stack vectorized powers I, m, m^2, ... as rows; first dependency gives
    // the minimal polynomial
    std::vector<QVector> rows;
    QMatrix power = QMatrix::identity(n);
    for (std::size_t deg = 0; deg <= n; ++deg) {
        rows.push_back(power.vectorized());
        QMatrix stacked = QMatrix::from_rows(rows);
        RrefResult r = rref(stacked);
        if (r.rank < rows.size()) {
            // solve sum_i c_i m^i = 0 with c_deg = 1: the dependency lives in
            // the kernel of the transpose of the stack
            QMatrix cols(n * n, rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < n * n; ++j)
                    cols.at(j, i) = rows[i][j];
            Subspace ker = kernel(cols);
            // kernel is one-dimensional here; normalize to monic
            QVector c = ker.basis().front();
            Poly p(c.begin(), c.end());
            poly_trim(p);
            Rat lead = p.back();
            for (Rat& x : p) x /= lead;
            return p;
        }
        power = power * m;
    }
    throw internal_error("minimal polynomial not found within dimension bound");
}

bool is_semisimple_endo(const QMatrix& m) {
    Poly p = minimal_polynomial(m);
    Poly g = poly_gcd(p, poly_derivative(p));
    return g.size() <= 1;
}

bool is_nilpotent_endo(const QMatrix& m) {
    if (!m.is_square()) throw precondition_error("is_nilpotent_endo needs a square matrix");
    return m.pow(m.rows()).is_zero();
}

QMatrix restriction_matrix(const QMatrix& m, const Subspace& invariant) {
    if (!m.is_square() || m.rows() != invariant.ambient_dim())
        throw precondition_error("restriction_matrix: matrix and subspace sizes differ");
    std::size_t n = m.rows(), d = invariant.dim();
    for (const QVector& b : invariant.basis())
        if (!invariant.contains_vector(m.apply(b)))
            throw precondition_error("restriction_matrix: subspace is not invariant");

    // columns of P: echelon basis of the subspace, then standard vectors at
    // the non-pivot coordinates
    QMatrix pmat(n, n);
    std::size_t col = 0;
    for (const QVector& b : invariant.basis()) {
        for (std::size_t i = 0; i < n; ++i) pmat.at(i, col) = b[i];
        ++col;
    }
    for (std::size_t j : invariant.complement_cols()) {
        pmat.at(j, col) = 1;
        ++col;
    }
    QMatrix conj = inverse(pmat) * m * pmat;
    QMatrix top(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) top.at(i, j) = conj.at(i, j);
    return top;
}

bool trace_collapse_check(const QMatrix& sigma, const Subspace& v1,
                          std::size_t p) {
    if (!sigma.is_square() || sigma.rows() != v1.ambient_dim())
        throw precondition_error("trace_collapse_check: size mismatch");
    QMatrix sp = sigma.pow(p);
    std::size_t n = sigma.rows();
    for (std::size_t j = 0; j < n; ++j)
        if (!v1.contains_vector(sp.col(j)))
            throw precondition_error("trace_collapse_check: sigma^p does not land in v1");
    for (const QVector& b : v1.basis())
        if (!v1.contains_vector(sigma.apply(b)))
            throw precondition_error("trace_collapse_check: v1 is not sigma-invariant");
    if (v1.dim() == 0) return sigma.trace() == 0;
    return sigma.trace() == restriction_matrix(sigma, v1).trace();
}

}  // namespace leibniz
