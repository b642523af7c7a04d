#include "leibniz/table.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

AlgebraTable::AlgebraTable(std::size_t dim)
    : dim_(dim), c_(dim * dim * dim, Rat(0)) {
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i));
}

AlgebraTable::AlgebraTable(std::size_t dim, std::vector<std::string> basis_names)
    : dim_(dim), c_(dim * dim * dim, Rat(0)), names_(std::move(basis_names)) {
    if (names_.size() != dim_)
        throw precondition_error("basis name count does not match dimension");
}

Rat& AlgebraTable::c(std::size_t i, std::size_t j, std::size_t k) {
    return c_.at((i * dim_ + j) * dim_ + k);
}

const Rat& AlgebraTable::c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_.at((i * dim_ + j) * dim_ + k);
}

QVector AlgebraTable::bracket_basis(std::size_t i, std::size_t j) const {
    QVector w(dim_, Rat(0));
    for (std::size_t k = 0; k < dim_; ++k) w[k] = c(i, j, k);
    return w;
}

QVector AlgebraTable::bracket(const QVector& u, const QVector& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw dimension_mismatch("bracket operand length differs from algebra dimension");
    QVector w(dim_, Rat(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            const Rat uv = u[i] * v[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (c(i, j, k) != 0) w[k] += uv * c(i, j, k);
        }
    }
    return w;
}

QMatrix AlgebraTable::ad(const QVector& x) const {
    if (x.size() != dim_)
        throw dimension_mismatch("ad operand length differs from algebra dimension");
    QMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        QVector col = bracket(vec_unit(dim_, j), x);
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

QMatrix AlgebraTable::ad_basis(std::size_t i) const { return ad(vec_unit(dim_, i)); }

QMatrix AlgebraTable::Ad(const QVector& x) const {
    if (x.size() != dim_)
        throw dimension_mismatch("Ad operand length differs from algebra dimension");
    QMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        QVector col = bracket(x, vec_unit(dim_, j));
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

QMatrix AlgebraTable::Ad_basis(std::size_t i) const { return Ad(vec_unit(dim_, i)); }

AlgebraTable AlgebraTable::opposite() const {
    AlgebraTable op(dim_, names_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) op.c(i, j, k) = c(j, i, k);
    return op;
}

IdentityCheck is_right_leibniz(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        QVector ei = vec_unit(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            QVector ej = vec_unit(n, j);
            for (std::size_t k = 0; k < n; ++k) {
                QVector ek = vec_unit(n, k);
                QVector lhs = a.bracket(ei, a.bracket_basis(j, k));
                QVector rhs = vec_sub(a.bracket(a.bracket_basis(i, j), ek),
                                      a.bracket(a.bracket_basis(i, k), ej));
                if (lhs != rhs) return IdentityCheck::fail({i, j, k});
            }
        }
    }
    return IdentityCheck::pass();
}

IdentityCheck is_left_leibniz(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVector ej = vec_unit(n, j);
            for (std::size_t k = 0; k < n; ++k) {
                QVector ek = vec_unit(n, k);
                QVector lhs = a.bracket(vec_unit(n, i), a.bracket_basis(j, k));
                QVector rhs = vec_add(a.bracket(a.bracket_basis(i, j), ek),
                                      a.bracket(ej, a.bracket_basis(i, k)));
                if (lhs != rhs) return IdentityCheck::fail({i, j, k});
            }
        }
    return IdentityCheck::pass();
}

IdentityCheck is_antisymmetric(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.c(i, j, k) != -a.c(j, i, k)) return IdentityCheck::fail({i, j, k});
    return IdentityCheck::pass();
}

// [[a,a],b] = 0 for all a,b. Char-0 polarization: check squares of basis
// vectors and of sums e_i + e_k against every basis b.
IdentityCheck is_left_central(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k) {
            QVector sq = vec_add(a.bracket_basis(i, k), a.bracket_basis(k, i));
            if (i == k) sq = a.bracket_basis(i, i);
            for (std::size_t j = 0; j < n; ++j)
                if (!vec_is_zero(a.bracket(sq, vec_unit(n, j))))
                    return IdentityCheck::fail({i, k, j});
        }
    return IdentityCheck::pass();
}

IdentityCheck is_right_central(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k) {
            QVector sq = vec_add(a.bracket_basis(i, k), a.bracket_basis(k, i));
            if (i == k) sq = a.bracket_basis(i, i);
            for (std::size_t j = 0; j < n; ++j)
                if (!vec_is_zero(a.bracket(vec_unit(n, j), sq)))
                    return IdentityCheck::fail({i, k, j});
        }
    return IdentityCheck::pass();
}

bool is_derivation(const AlgebraTable& a, const QMatrix& d) {
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n)
        throw dimension_mismatch("derivation candidate has wrong shape");
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            QVector lhs = d.apply(a.bracket_basis(j, k));
            QVector rhs = vec_add(a.bracket(d.col(j), vec_unit(n, k)),
                                  a.bracket(vec_unit(n, j), d.col(k)));
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_anti_derivation(const AlgebraTable& a, const QMatrix& d) {
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n)
        throw dimension_mismatch("derivation candidate has wrong shape");
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            QVector lhs = d.apply(a.bracket_basis(j, k));
            QVector rhs = vec_sub(a.bracket(d.col(j), vec_unit(n, k)),
                                  a.bracket(d.col(k), vec_unit(n, j)));
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace leibniz
