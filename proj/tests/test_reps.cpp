#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibniz/catalog.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/reps.hpp"
#include "leibniz/structure.hpp"

using namespace leibniz;

namespace {

AlgebraTable e1() { return catalog_entry("paper-ex-5.1"); }

Representation zero_rep(std::size_t alg, std::size_t mod) {
    Representation r;
    r.algebra_dim = alg;
    r.module_dim = mod;
    r.left_maps.assign(alg, QMatrix(mod, mod));
    r.right_maps.assign(alg, QMatrix(mod, mod));
    return r;
}

QMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m(n, n);
    m.at(i, j) = 1;
    return m;
}

std::vector<QVector> sample_points(const AlgebraTable& t, const Subspace& a_sub) {
    Subspace nrm = normalizer(t, a_sub);
    std::vector<QVector> pts(nrm.basis().begin(), nrm.basis().end());
    if (nrm.dim() >= 2) {
        QVector sum = vec_zero(t.dim());
        for (const QVector& b : nrm.basis()) sum = vec_add(sum, b);
        pts.push_back(sum);
    }
    return pts;
}

}  // namespace

TEST_CASE("adjoint representation of the two dimensional example") {
    AlgebraTable t = e1();
    Representation rep = adjoint_rep(t);
    CHECK(rep.right_maps[0].is_zero());
    CHECK(rep.right_maps[1] == unit(2, 0, 0));
    CHECK(rep.left_maps[0] == unit(2, 0, 1));
    CHECK(rep.left_maps[1].is_zero());
    CHECK(validate_representation(t, rep).valid);
    // linear extension
    CHECK(rep.right({Rat(0), Rat(3)}) == unit(2, 0, 0) * Rat(3));
}

TEST_CASE("zero maps always validate") {
    CHECK(validate_representation(e1(), zero_rep(2, 3)).valid);
    CHECK(validate_representation(catalog_entry("sl2"), zero_rep(3, 2)).valid);
}

TEST_CASE("swapping left and right maps breaks axiom one with a witness") {
    AlgebraTable t = e1();
    Representation rep = adjoint_rep(t);
    std::swap(rep.left_maps, rep.right_maps);
    RepValidation v = validate_representation(t, rep);
    CHECK_FALSE(v.valid);
    REQUIRE(v.axiom.has_value());
    CHECK(*v.axiom == 1);
    REQUIRE(v.pair.has_value());
    CHECK(*v.pair == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("adjoint reps validate across generated instances with the bracket commutator law") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        AlgebraTable t = random_right_leibniz(seed, 2 + seed % 4);
        Representation rep = adjoint_rep(t);
        CHECK(validate_representation(t, rep).valid);
        for (std::size_t i = 0; i < t.dim(); ++i)
            for (std::size_t j = 0; j < t.dim(); ++j) {
                QMatrix comm = rep.right_maps[i] * rep.right_maps[j] -
                               rep.right_maps[j] * rep.right_maps[i];
                CHECK(comm == rep.right(t.bracket_basis(j, i)));
            }
    }
}

TEST_CASE("operator span algebra") {
    QMatrix id = QMatrix::identity(2);
    OperatorSubspace sid = operator_span(2, {id});
    CHECK(operator_power(sid, 3).span == sid.span);

    QMatrix n = unit(2, 0, 1);  // Jordan nilpotent
    CHECK(operator_power(operator_span(2, {n}), 2).is_zero());

    OperatorSubspace p =
        operator_product_span(operator_span(2, {unit(2, 0, 0)}),
                              operator_span(2, {unit(2, 0, 1)}));
    CHECK(p.span == operator_span(2, {unit(2, 0, 1)}).span);

    // sum and containment
    OperatorSubspace s = operator_sum(sid, operator_span(2, {n}));
    CHECK(s.dim() == 2);
    CHECK(s.contains(id + n));
    CHECK_FALSE(s.contains(unit(2, 1, 0)));

    // basis matrices round-trip through vectorization
    for (const QMatrix& b : s.basis_matrices()) CHECK(s.contains(b));
}

TEST_CASE("delta and beta oracles on the worked example") {
    AlgebraTable t = e1();
    Representation rep = adjoint_rep(t);
    Subspace a_sub = Subspace::span(2, {vec_unit(2, 0)});  // the ideal span{x}
    for (const QVector& x : sample_points(t, a_sub))
        for (std::size_t k = 0; k <= 3; ++k) {
            CHECK(delta_membership(t, rep, a_sub, x, k));
            CHECK(beta_membership(t, rep, a_sub, x, k));
        }
}

TEST_CASE("normalizer precondition is enforced") {
    AlgebraTable s = catalog_entry("sl2");
    Representation rep = adjoint_rep(s);
    Subspace h = Subspace::span(3, {vec_unit(3, 1)});
    // e is outside the normalizer of the Cartan line
    CHECK_THROWS_AS(delta_membership(s, rep, h, vec_unit(3, 0), 1),
                    precondition_error);
    CHECK_THROWS_AS(beta_membership(s, rep, h, vec_unit(3, 0), 1),
                    precondition_error);
    // h itself is fine
    CHECK(delta_membership(s, rep, h, vec_unit(3, 1), 2));
}

TEST_CASE("staircase power containment") {
    AlgebraTable t = e1();
    Representation rep = adjoint_rep(t);
    Subspace a_sub = Subspace::span(2, {vec_unit(2, 0)});
    for (const QVector& x : sample_points(t, a_sub)) {
        CHECK(staircase_power_containment(t, rep, a_sub, x, 2, 1));  // p = 1
        CHECK(staircase_power_containment(t, rep, a_sub, x, 1, 2));
        CHECK(staircase_power_containment(t, rep, a_sub, x, 3, 3));
    }
}

TEST_CASE("binomial defect oracle") {
    AlgebraTable t = e1();
    Representation rep = adjoint_rep(t);
    Subspace a_sub = Subspace::span(2, {vec_unit(2, 0)});
    QVector a = vec_unit(2, 0);
    for (const QVector& x : sample_points(t, a_sub)) {
        CHECK(binomial_defect(t, rep, a_sub, x, a, Rat(1), 1));   // f_1 = 0
        CHECK(binomial_defect(t, rep, a_sub, x, a, Rat(0), 3));   // lambda = 0
        CHECK(binomial_defect(t, rep, a_sub, x, a, rat_from_long(-2, 3), 3));
    }
    // a outside a_sub violates the precondition
    CHECK_THROWS_AS(
        binomial_defect(t, rep, a_sub, vec_unit(2, 1), vec_unit(2, 1), Rat(1), 2),
        precondition_error);
}

TEST_CASE("lemma oracles across random instances") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        AlgebraTable t = seed % 3 ? random_right_leibniz(seed + 60, 2 + seed % 3)
                                  : random_solvable(seed, 3);
        Representation rep = adjoint_rep(t);
        Subspace a_sub = radical(t);
        std::vector<QVector> xs = sample_points(t, a_sub);
        for (const QVector& x : xs) {
            for (std::size_t k = 0; k <= 3; ++k) {
                CHECK(delta_membership(t, rep, a_sub, x, k));
                CHECK(beta_membership(t, rep, a_sub, x, k));
            }
            for (std::size_t k = 1; k <= 2; ++k)
                for (std::size_t p = 1; p <= 3; ++p)
                    CHECK(staircase_power_containment(t, rep, a_sub, x, k, p));
            for (const QVector& a : a_sub.basis())
                for (std::size_t m = 1; m <= 4; ++m)
                    CHECK(binomial_defect(t, rep, a_sub, x, a, Rat(1), m));
        }
    }
}

TEST_CASE("operators over the rad bracket ideal are jointly nilpotent") {
    CHECK(nilpotent_on_rad_bracket(e1(), adjoint_rep(e1())));
    AlgebraTable s = catalog_entry("sl2");
    CHECK(nilpotent_on_rad_bracket(s, adjoint_rep(s)));
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        AlgebraTable t = random_solvable(seed + 7, 2 + seed % 4);
        CHECK(nilpotent_on_rad_bracket(t, adjoint_rep(t)));
    }
}

TEST_CASE("left power identity") {
    AlgebraTable t = e1();
    Representation rep = adjoint_rep(t);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(left_power_identity(rep, vec_unit(2, i), 1));  // l = l
    // explicit k = 2 on x = y: l_y = 0 so both sides vanish
    CHECK(left_power_identity(rep, vec_unit(2, 1), 2));
    // and on x itself: l_x^2 = 0 = -l_x r_x since r_x = 0
    CHECK(left_power_identity(rep, vec_unit(2, 0), 2));

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        AlgebraTable a = random_right_leibniz(seed + 33, 2 + seed % 4);
        Representation r = adjoint_rep(a);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t k = 1; k <= 4; ++k)
                CHECK(left_power_identity(r, vec_unit(a.dim(), i), k));
    }
}

TEST_CASE("right maps of nilpotent algebras force nilpotent left maps") {
    std::size_t nilpotent_seen = 0;
    std::vector<AlgebraTable> pool = {catalog_entry("heisenberg-3"),
                                      catalog_entry("abelian-3")};
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        pool.push_back(random_killing_class(seed, 2 + seed % 4));
    for (const AlgebraTable& t : pool) {
        Representation rep = adjoint_rep(t);
        bool all_right_nilpotent = true;
        for (const QMatrix& r : rep.right_maps)
            all_right_nilpotent =
                all_right_nilpotent && r.pow(t.dim()).is_zero();
        if (!all_right_nilpotent) continue;
        ++nilpotent_seen;
        for (const QMatrix& l : rep.left_maps)
            CHECK(l.pow(t.dim() + 1).is_zero());
    }
    CHECK(nilpotent_seen >= 2);
}

TEST_CASE("right operator span is a Lie subalgebra with matching solvability") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        AlgebraTable t = seed % 2 ? random_right_leibniz(seed + 11, 2 + seed % 4)
                                  : catalog_default_instances()[seed % 10].second;
        Representation rep = adjoint_rep(t);
        OperatorSubspace rl = operator_span(t.dim(), rep.right_maps);

        // commutator closure
        auto commutator_span = [&](const OperatorSubspace& s) {
            std::vector<QMatrix> basis = s.basis_matrices();
            std::vector<QMatrix> comms;
            for (const QMatrix& a : basis)
                for (const QMatrix& b : basis) comms.push_back(a * b - b * a);
            return operator_span(t.dim(), comms);
        };
        CHECK(rl.span.contains(commutator_span(rl).span));

        // derived series of the operator Lie algebra mirrors solvability of L
        OperatorSubspace term = rl;
        for (std::size_t step = 0; step <= t.dim() + 1 && !term.is_zero();
             ++step) {
            OperatorSubspace next = commutator_span(term);
            if (next.span == term.span) break;
            term = next;
        }
        CHECK(term.is_zero() == is_solvable(t));
    }
}
