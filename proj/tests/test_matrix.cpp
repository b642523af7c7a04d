#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leibniz/errors.hpp"
#include "leibniz/matrix.hpp"

using namespace leibniz;

namespace {

QMatrix mat(std::vector<std::vector<long>> rows) {
    std::vector<QVector> qr;
    for (auto& r : rows) {
        QVector row;
        for (long v : r) row.push_back(Rat(v));
        qr.push_back(row);
    }
    return QMatrix::from_rows(qr);
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rat_from_long(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rref of zero matrix") {
    RrefResult r = rref(mat({{0, 0}, {0, 0}}));
    CHECK(r.rank == 0);
    CHECK(r.mat == mat({{0, 0}, {0, 0}}));
}

TEST_CASE("rref of rank-one matrix") {
    RrefResult r = rref(mat({{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.mat == mat({{1, 2}, {0, 0}}));
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("rref of identity") {
    RrefResult r = rref(QMatrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.mat == QMatrix::identity(3));
}

TEST_CASE("rref is idempotent on random matrices up to 6x6") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + trial % 6, cols = 1 + (trial / 6) % 6;
        QMatrix m = random_matrix(rng, rows, cols);
        RrefResult once = rref(m);
        RrefResult twice = rref(once.mat);
        CHECK(once.mat == twice.mat);
        CHECK(once.rank == twice.rank);
    }
}

TEST_CASE("arithmetic and trace") {
    QMatrix a = mat({{1, 2}, {3, 4}});
    QMatrix b = mat({{0, 1}, {1, 0}});
    CHECK(a * b == mat({{2, 1}, {4, 3}}));
    CHECK(a + b == mat({{1, 3}, {4, 4}}));
    CHECK(a - a == QMatrix(2, 2));
    CHECK((a * Rat(2)) == mat({{2, 4}, {6, 8}}));
    CHECK(a.trace() == Rat(5));
    CHECK(a.transpose() == mat({{1, 3}, {2, 4}}));
    CHECK(a.pow(0) == QMatrix::identity(2));
    CHECK(a.pow(2) == a * a);
}

TEST_CASE("apply acts columnwise") {
    QMatrix a = mat({{1, 2}, {3, 4}});
    QVector v{Rat(1), Rat(-1)};
    QVector got = a.apply(v);
    CHECK(got == QVector{Rat(-1), Rat(-1)});
}

TEST_CASE("inverse") {
    QMatrix a = mat({{2, 1}, {1, 1}});
    QMatrix inv = inverse(a);
    CHECK(a * inv == QMatrix::identity(2));
    CHECK(inv * a == QMatrix::identity(2));
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), precondition_error);
    CHECK_THROWS_AS(inverse(mat({{0}})), precondition_error);
}

TEST_CASE("random inverse round trips") {
    std::mt19937_64 rng(5);
    int found = 0;
    while (found < 20) {
        QMatrix m = random_matrix(rng, 4, 4);
        if (rref(m).rank < 4) continue;
        ++found;
        CHECK(m * inverse(m) == QMatrix::identity(4));
    }
}

TEST_CASE("vectorized round trip") {
    QMatrix a = mat({{1, 2, 3}, {4, 5, 6}});
    QVector flat = a.vectorized();
    CHECK(flat.size() == 6);
    CHECK(flat[4] == Rat(5));
    CHECK(QMatrix::from_vectorized(flat, 2, 3) == a);
}

TEST_CASE("shape mismatches throw") {
    QMatrix a(2, 3), b(3, 3);
    CHECK_THROWS_AS(a + b, dimension_mismatch);
    CHECK_THROWS_AS(b * a, dimension_mismatch);
    CHECK_THROWS_AS(a.trace(), dimension_mismatch);
}
