#include "leibniz/catalog.hpp"

#include <random>
#include <regex>

#include "leibniz/errors.hpp"
#include "leibniz/extensions.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

namespace {

// every table served by this module is checked once at construction
AlgebraTable checked(AlgebraTable t) {
    IdentityCheck ck = is_right_leibniz(t);
    if (!ck.holds)
        throw internal_error("catalog constructed a non-Leibniz table");
    return t;
}

AlgebraTable paper_example() {
    AlgebraTable t(2, {"x", "y"});
    t.c(0, 1, 0) = 1;  // [x,y] = x, all other products zero
    return t;
}

AlgebraTable abelian(std::size_t n) { return AlgebraTable(n); }

AlgebraTable heisenberg3() {
    AlgebraTable t(3, {"x", "y", "z"});
    t.c(0, 1, 2) = 1;   // [x,y] = z
    t.c(1, 0, 2) = -1;  // [y,x] = -z
    return t;
}

AlgebraTable sl2() {
    AlgebraTable t(3, {"e", "h", "f"});
    t.c(0, 1, 0) = -2;  // [e,h] = -2e
    t.c(1, 0, 0) = 2;   // [h,e] = 2e
    t.c(1, 2, 2) = -2;  // [h,f] = -2f
    t.c(2, 1, 2) = 2;   // [f,h] = 2f
    t.c(0, 2, 1) = 1;   // [e,f] = h
    t.c(2, 0, 1) = -1;  // [f,e] = -h
    return t;
}

AlgebraTable solvable_2_lie() {
    AlgebraTable t(2, {"a", "b"});
    t.c(0, 1, 1) = 1;   // [a,b] = b
    t.c(1, 0, 1) = -1;  // [b,a] = -b
    return t;
}

// sl2 acting on its natural 2-dim module, glued as [m,s] = -pi(s)m,
// [s,m] = [m,m'] = 0. The minus sign is forced: the right identity needs
// s -> (action on the module) to be an anti-homomorphism.
AlgebraTable sl2_hemisemidirect_v2() {
    AlgebraTable t(5, {"e", "h", "f", "u", "v"});
    AlgebraTable s = sl2();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) t.c(i, j, k) = s.c(i, j, k);
    // pi(e) = E12, pi(h) = diag(1,-1), pi(f) = E21 on (u, v)
    t.c(4, 0, 3) = -1;  // [v,e] = -u
    t.c(3, 1, 3) = -1;  // [u,h] = -u
    t.c(4, 1, 4) = 1;   // [v,h] = v
    t.c(3, 2, 4) = -1;  // [u,f] = -v
    return t;
}

// glue two tables side by side as a direct sum of ideals
AlgebraTable direct_sum(const AlgebraTable& a, const AlgebraTable& b) {
    const std::size_t n = a.dim(), m = b.dim();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < m; ++i) names.push_back("b" + std::to_string(i));
    AlgebraTable t(n + m, names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t.c(i, j, k) = a.c(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                t.c(n + i, n + j, n + k) = b.c(i, j, k);
    return t;
}

// all brackets land on a central line: [e_i, e_j] = phi_ij z with z central;
// two-step nilpotent, non-Lie whenever phi is not antisymmetric
AlgebraTable central_square(std::mt19937_64& rng, std::size_t dim) {
    AlgebraTable t(dim);
    if (dim < 2) return t;
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (std::size_t i = 0; i + 1 < dim; ++i)
        for (std::size_t j = 0; j + 1 < dim; ++j) t.c(i, j, dim - 1) = Rat(coeff(rng));
    return t;
}

// [e_i, e_0] = e_{i+1} for 1 <= i <= dim-2; nilpotent, non-Lie
AlgebraTable filiform(std::size_t dim) {
    AlgebraTable t(dim);
    for (std::size_t i = 1; i + 1 < dim; ++i) t.c(i, 0, i + 1) = 1;
    return t;
}

// [x_i, y] = lambda_i x_i, other products zero; solvable right Leibniz,
// generically neither Lie nor Killing class
AlgebraTable weight_diagonal(std::mt19937_64& rng, std::size_t dim) {
    AlgebraTable t(dim);
    if (dim < 2) return t;
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (std::size_t i = 0; i + 1 < dim; ++i) t.c(i, dim - 1, i) = Rat(coeff(rng));
    return t;
}

// 2-dim nonabelian Lie algebra acting on a 2-dim module, hemisemidirect
AlgebraTable solvable_hemi_4() {
    AlgebraTable t(4);
    t.c(0, 1, 1) = 1;   // [a,b] = b
    t.c(1, 0, 1) = -1;
    // pi(a) = diag(1,0), pi(b) = E12; [m,s] = -pi(s)m
    t.c(2, 0, 2) = -1;  // [u,a] = -u
    t.c(3, 1, 2) = -1;  // [v,b] = -u
    return t;
}

QMatrix pick_nilpotent_derivation(const AlgebraTable& a, std::mt19937_64& rng) {
    DerivationSpace ds = derivation_space(a);
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (int attempt = 0; attempt < 24; ++attempt) {
        QMatrix d(a.dim(), a.dim());
        for (const QMatrix& b : ds.basis) {
            long c = coeff(rng);
            if (c != 0) d = d + b * Rat(c);
        }
        if (!d.is_zero() && is_nilpotent_endo(d)) return d;
    }
    return QMatrix(a.dim(), a.dim());
}

AlgebraTable random_solvable_impl(std::mt19937_64& rng, std::size_t dim) {
    AlgebraTable t = abelian(dim == 0 ? 0 : 1);
    while (t.dim() < dim)
        t = semidirect_extension(t, pick_nilpotent_derivation(t, rng));
    return t;
}

AlgebraTable basis_change_impl(const AlgebraTable& a, std::mt19937_64& rng) {
    const std::size_t n = a.dim();
    if (n < 2) return a;
    QMatrix p = QMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    std::uniform_int_distribution<int> kind(0, 3);
    for (std::size_t step = 0; step < 3 * n; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        switch (kind(rng)) {
            case 0:  // shear: col_i += c * col_j
                if (i != j) {
                    long c = coeff(rng);
                    for (std::size_t r = 0; r < n; ++r)
                        p.at(r, i) += Rat(c) * p.at(r, j);
                }
                break;
            case 1:  // swap columns
                if (i != j)
                    for (std::size_t r = 0; r < n; ++r)
                        std::swap(p.at(r, i), p.at(r, j));
                break;
            case 2:  // negate a column
                for (std::size_t r = 0; r < n; ++r) p.at(r, i) = -p.at(r, i);
                break;
            default:
                break;
        }
    }
    QMatrix pinv = inverse(p);
    AlgebraTable out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVector w = pinv.apply(a.bracket(p.col(i), p.col(j)));
            for (std::size_t k = 0; k < n; ++k) out.c(i, j, k) = w[k];
        }
    return out;
}

AlgebraTable random_killing_class_impl(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> kind(0, 5);
    for (;;) {
        switch (kind(rng)) {
            case 0:
                return random_solvable_impl(rng, dim);
            case 1:
                return central_square(rng, dim);
            case 2:
                return filiform(dim);
            case 3:
                if (dim == 3) return sl2();
                if (dim > 3)
                    return direct_sum(sl2(), random_solvable_impl(rng, dim - 3));
                break;
            case 4:
                if (dim >= 2) {
                    std::uniform_int_distribution<std::size_t> cut(1, dim - 1);
                    std::size_t d1 = cut(rng);
                    return direct_sum(random_solvable_impl(rng, d1),
                                      central_square(rng, dim - d1));
                }
                break;
            default:
                if (dim == 3) return heisenberg3();
                if (dim >= 2) {
                    std::uniform_int_distribution<std::size_t> cut(1, dim - 1);
                    std::size_t d1 = cut(rng);
                    return direct_sum(filiform(d1), central_square(rng, dim - d1));
                }
                break;
        }
    }
}

AlgebraTable random_right_leibniz_impl(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<int> kind(0, 6);
    for (;;) {
        switch (kind(rng)) {
            case 0:
                return weight_diagonal(rng, dim);
            case 1:
                if (dim == 5) return sl2_hemisemidirect_v2();
                if (dim == 4) return solvable_hemi_4();
                break;
            case 2:
                if (dim >= 3) {
                    std::uniform_int_distribution<std::size_t> cut(2, dim - 1);
                    std::size_t d1 = cut(rng);
                    return direct_sum(weight_diagonal(rng, d1),
                                      random_solvable_impl(rng, dim - d1));
                }
                break;
            case 3:
                if (dim == 2) {
                    AlgebraTable t = paper_example();
                    return t;
                }
                break;
            default:
                return random_killing_class_impl(rng, dim);
        }
    }
}

}  // namespace

AlgebraTable catalog_entry(const std::string& name) {
    if (name == "paper-ex-5.1") return checked(paper_example());
    if (name == "heisenberg-3") return checked(heisenberg3());
    if (name == "sl2") return checked(sl2());
    if (name == "sl2-hemisemidirect-V2") return checked(sl2_hemisemidirect_v2());
    if (name == "solvable-2-lie") return checked(solvable_2_lie());

    std::smatch m;
    static const std::regex abelian_re("abelian-([0-9]+)");
    if (std::regex_match(name, m, abelian_re)) {
        long n = std::stol(m[1]);
        if (n < 1 || n > 12)
            throw parse_error("abelian dimension out of range (1..12): " + name);
        return checked(abelian((std::size_t)n));
    }
    static const std::regex rand_re(
        "random-solvable[-(]([0-9]+)[-,]([0-9]+)\\)?");
    if (std::regex_match(name, m, rand_re)) {
        long seed = std::stol(m[1]), d = std::stol(m[2]);
        if (d < 1 || d > 9)
            throw parse_error("random-solvable dimension out of range (1..9): " + name);
        return random_solvable((std::uint64_t)seed, (std::size_t)d);
    }
    throw parse_error("unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
    return {"paper-ex-5.1",     "abelian-<n>",
            "heisenberg-3",     "sl2",
            "sl2-hemisemidirect-V2", "solvable-2-lie",
            "random-solvable(<seed>,<dim>)"};
}

std::vector<std::pair<std::string, AlgebraTable>> catalog_default_instances() {
    std::vector<std::pair<std::string, AlgebraTable>> out;
    for (const char* n : {"paper-ex-5.1", "abelian-1", "abelian-2", "abelian-3",
                          "heisenberg-3", "sl2", "sl2-hemisemidirect-V2",
                          "solvable-2-lie", "random-solvable(1,3)",
                          "random-solvable(2,4)"})
        out.emplace_back(n, catalog_entry(n));
    return out;
}

AlgebraTable random_solvable(std::uint64_t seed, std::size_t dim) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + dim);
    return checked(random_solvable_impl(rng, dim));
}

AlgebraTable random_right_leibniz(std::uint64_t seed, std::size_t dim) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x100 + dim);
    return checked(basis_change_impl(random_right_leibniz_impl(rng, dim), rng));
}

AlgebraTable random_killing_class(std::uint64_t seed, std::size_t dim) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x200 + dim);
    return checked(basis_change_impl(random_killing_class_impl(rng, dim), rng));
}

AlgebraTable random_basis_change(const AlgebraTable& a, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x300);
    return checked(basis_change_impl(a, rng));
}

}  // namespace leibniz
