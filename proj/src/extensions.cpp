#include "leibniz/extensions.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/structure.hpp"

namespace leibniz {

DerivationSpace derivation_space(const AlgebraTable& a) {
    const std::size_t n = a.dim();
    DerivationSpace ds;
    ds.algebra_dim = n;
    if (n == 0) return ds;

    // one equation per (i, j, coordinate k); unknown D_{p,q} sits at p*n+q
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                QVector row(n * n, Rat(0));
                for (std::size_t m = 0; m < n; ++m)
                    row[k * n + m] += a.c(i, j, m);       // D([e_i,e_j])_k
                for (std::size_t p = 0; p < n; ++p) {
                    row[p * n + i] -= a.c(p, j, k);       // -[D e_i, e_j]_k
                    row[p * n + j] -= a.c(i, p, k);       // -[e_i, D e_j]_k
                }
                rows.push_back(row);
            }
    Subspace sol = kernel(QMatrix::from_rows(rows));
    for (const QVector& v : sol.basis())
        ds.basis.push_back(QMatrix::from_vectorized(v, n, n));
    return ds;
}

AlgebraTable semidirect_extension(const AlgebraTable& a, const QMatrix& d) {
    const std::size_t n = a.dim();
    if (!is_derivation(a, d))
        throw precondition_error("semidirect extension requires a derivation");

    std::vector<std::string> names = a.basis_names();
    std::string w = "w";
    while (std::find(names.begin(), names.end(), w) != names.end()) w += "'";
    names.push_back(w);

    AlgebraTable ext(n + 1, names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) ext.c(i, j, k) = a.c(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            ext.c(i, n, k) = d.at(k, i);    // [e_i, w] = D(e_i)
            ext.c(n, i, k) = -d.at(k, i);   // [w, e_i] = -D(e_i)
        }
    return ext;
}

bool check_derivation_corollary(const AlgebraTable& a) {
    Subspace rad = radical(a);
    Subspace nil = nilradical(a);
    for (const QMatrix& d : derivation_space(a).basis)
        for (const QVector& v : rad.basis())
            if (!nil.contains_vector(d.apply(v))) return false;
    return true;
}

}  // namespace leibniz
