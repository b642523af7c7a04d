#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "leibniz/catalog.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/forms.hpp"
#include "leibniz/structure.hpp"

using namespace leibniz;

TEST_CASE("named entries resolve to the frozen tables") {
    AlgebraTable ex = catalog_entry("paper-ex-5.1");
    CHECK(ex.dim() == 2);
    CHECK(ex.basis_names() == std::vector<std::string>{"x", "y"});
    CHECK(ex.c(0, 1, 0) == 1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                if (!(i == 0 && j == 1 && k == 0)) CHECK(ex.c(i, j, k) == 0);

    AlgebraTable ab = catalog_entry("abelian-3");
    CHECK(ab.dim() == 3);
    CHECK(ab == AlgebraTable(3, ab.basis_names()));

    AlgebraTable h = catalog_entry("heisenberg-3");
    CHECK(h.c(0, 1, 2) == 1);
    CHECK(h.c(1, 0, 2) == -1);
    CHECK(is_nilpotent(h));

    AlgebraTable s2 = catalog_entry("solvable-2-lie");
    CHECK(is_antisymmetric(s2).holds);
    CHECK(is_solvable(s2));
    CHECK_FALSE(is_nilpotent(s2));
}

TEST_CASE("sl2 is the standard three dimensional simple table") {
    AlgebraTable s = catalog_entry("sl2");
    QVector e = vec_unit(3, 0), h = vec_unit(3, 1), f = vec_unit(3, 2);
    CHECK(s.bracket(h, e) == vec_scale(Rat(2), e));
    CHECK(s.bracket(h, f) == vec_scale(Rat(-2), f));
    CHECK(s.bracket(e, f) == h);
    CHECK(is_antisymmetric(s).holds);
    CHECK(is_right_leibniz(s).holds);
    CHECK(radical(s).is_zero());
}

TEST_CASE("the hemisemidirect entry matches its specification") {
    AlgebraTable t = catalog_entry("sl2-hemisemidirect-V2");
    CHECK(t.dim() == 5);
    CHECK(is_right_leibniz(t).holds);
    CHECK_FALSE(is_left_leibniz(t).holds);
    // [s, m] = 0 and [m, m'] = 0
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t m = 3; m < 5; ++m)
            CHECK(vec_is_zero(t.bracket_basis(s, m)));
    for (std::size_t m = 3; m < 5; ++m)
        for (std::size_t m2 = 3; m2 < 5; ++m2)
            CHECK(vec_is_zero(t.bracket_basis(m, m2)));
    // module brackets stay inside the module
    for (std::size_t m = 3; m < 5; ++m)
        for (std::size_t s = 0; s < 3; ++s) {
            QVector v = t.bracket_basis(m, s);
            CHECK(v[0] == 0);
            CHECK(v[1] == 0);
            CHECK(v[2] == 0);
        }
    // the sl2 block is untouched
    AlgebraTable s = catalog_entry("sl2");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(t.c(i, j, k) == s.c(i, j, k));
    Subspace v = Subspace::span(5, {vec_unit(5, 3), vec_unit(5, 4)});
    CHECK(ess(t) == v);
    CHECK(radical(t) == v);
    CHECK(is_semisimple(t));
}

TEST_CASE("unknown or out of range names raise parse errors") {
    CHECK_THROWS_AS(catalog_entry("nosuch"), parse_error);
    CHECK_THROWS_AS(catalog_entry("abelian-0"), parse_error);
    CHECK_THROWS_AS(catalog_entry("abelian-13"), parse_error);
    CHECK_THROWS_AS(catalog_entry("sl3"), parse_error);
    CHECK_THROWS_AS(catalog_entry(""), parse_error);
}

TEST_CASE("abelian range covers one through twelve") {
    for (int n = 1; n <= 12; ++n) {
        AlgebraTable t = catalog_entry("abelian-" + std::to_string(n));
        CHECK(t.dim() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("random-solvable accepts both spellings and is deterministic") {
    AlgebraTable a = catalog_entry("random-solvable(9,4)");
    AlgebraTable b = catalog_entry("random-solvable-9-4");
    CHECK(a == b);
    CHECK(a.dim() == 4);
    CHECK(a == catalog_entry("random-solvable(9,4)"));
    CHECK_FALSE(a == catalog_entry("random-solvable(10,4)"));
}

TEST_CASE("catalog defaults: unique names, required members, all right Leibniz") {
    auto defaults = catalog_default_instances();
    CHECK(defaults.size() == 10);
    std::set<std::string> names;
    for (const auto& [name, t] : defaults) {
        CHECK(names.insert(name).second);
        CHECK(is_right_leibniz(t).holds);
        CHECK(catalog_entry(name) == t);
    }
    for (const char* required :
         {"paper-ex-5.1", "heisenberg-3", "sl2", "sl2-hemisemidirect-V2",
          "solvable-2-lie", "abelian-1"})
        CHECK(names.count(required));
}

TEST_CASE("generators honor their contracts") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::size_t dim = 2 + seed % 4;
        AlgebraTable solv = random_solvable(seed, dim);
        CHECK(solv.dim() == dim);
        CHECK(is_right_leibniz(solv).holds);
        CHECK(is_solvable(solv));
        CHECK(solv == random_solvable(seed, dim));

        AlgebraTable rl = random_right_leibniz(seed, dim);
        CHECK(rl.dim() == dim);
        CHECK(is_right_leibniz(rl).holds);
        CHECK(rl == random_right_leibniz(seed, dim));

        AlgebraTable kc = random_killing_class(seed, dim);
        CHECK(kc.dim() == dim);
        CHECK(is_right_leibniz(kc).holds);
        CHECK(is_killing_class(kc).holds);
        CHECK(kc == random_killing_class(seed, dim));
    }
}

TEST_CASE("the right Leibniz pool is not all Lie and not all in the killing class") {
    std::size_t non_lie = 0, non_killing = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        AlgebraTable t = random_right_leibniz(seed, 2 + seed % 4);
        non_lie += !is_antisymmetric(t).holds;
        non_killing += !is_killing_class(t).holds;
    }
    CHECK(non_lie > 5);
    CHECK(non_killing > 3);
}

TEST_CASE("basis changes preserve the structural invariants") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        AlgebraTable t = random_right_leibniz(seed + 1000, 2 + seed % 4);
        AlgebraTable moved = random_basis_change(t, seed);
        CHECK(moved.dim() == t.dim());
        CHECK(moved == random_basis_change(t, seed));
        CHECK(is_right_leibniz(moved).holds);
        CHECK(is_solvable(moved) == is_solvable(t));
        CHECK(is_nilpotent(moved) == is_nilpotent(t));
        CHECK(is_killing_class(moved).holds == is_killing_class(t).holds);
        CHECK(ess(moved).dim() == ess(t).dim());
        CHECK(radical(moved).dim() == radical(t).dim());
        CHECK(nilradical(moved).dim() == nilradical(t).dim());
        CHECK(is_semisimple(moved) == is_semisimple(t));
    }
}
