#include "support.hpp"

#include <doctest.h>

using namespace support;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> entry(-6, 6);
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry(rng);
    return a;
}

bool is_smith_diagonal(const IntMatrix& d) {
    Integer prev = 1;
    bool seen_zero = false;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (i != j && d(i, j) != 0) return false;
            if (i != j) continue;
            if (d(i, i) < 0) return false;
            if (d(i, i) == 0) {
                seen_zero = true;
                continue;
            }
            if (seen_zero || d(i, i) % prev != 0) return false;
            prev = d(i, i);
        }
    return true;
}

}  // namespace

TEST_CASE("primitive vectors") {
    CHECK(primitive(iv({4, 6})) == iv({2, 3}));
    CHECK(primitive(iv({0, -5})) == iv({0, -1}));
    CHECK(primitive(iv({7})) == iv({1}));
    CHECK_THROWS_AS(primitive(iv({0, 0})), toric::DomainError);
}

TEST_CASE("rational rendering") {
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("smith normal form examples") {
    auto id = IntMatrix::identity(2);
    auto snf = smith_normal_form(id);
    CHECK(snf.diagonal == id);
    CHECK(snf.left * id * snf.right == snf.diagonal);

    auto a = IntMatrix::from_rows({iv({2, 0}), iv({0, 3})}, 2);
    snf = smith_normal_form(a);
    CHECK(snf.diagonal(0, 0) == 1);
    CHECK(snf.diagonal(1, 1) == 6);
    CHECK(snf.left * a * snf.right == snf.diagonal);
    CHECK(abs(determinant(snf.left)) == 1);
    CHECK(abs(determinant(snf.right)) == 1);

    auto zero = IntMatrix(1, 1);
    CHECK(smith_normal_form(zero).diagonal == zero);
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
        IntMatrix a = random_matrix(rng, rows, cols);
        auto snf = smith_normal_form(a);
        CHECK(snf.left * a * snf.right == snf.diagonal);
        CHECK(abs(determinant(snf.left)) == 1);
        CHECK(abs(determinant(snf.right)) == 1);
        CHECK(is_smith_diagonal(snf.diagonal));
        CHECK(unimodular_inverse(snf.right) * snf.right == IntMatrix::identity(cols));
    }
}

TEST_CASE("integer solve") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix a = random_matrix(rng, 2, 3);
        std::vector<IntVector> rows{a.row(0), a.row(1)};
        IntVector x = iv({long(rng() % 7) - 3, long(rng() % 7) - 3, long(rng() % 7) - 3});
        IntVector b{dot(rows[0], x), dot(rows[1], x)};
        auto sol = solve_integer(rows, b, 3);
        REQUIRE(sol);
        CHECK(dot(rows[0], *sol) == b[0]);
        CHECK(dot(rows[1], *sol) == b[1]);
    }
    CHECK_FALSE(solve_integer({iv({2, 4})}, iv({1}), 2));
}

TEST_CASE("group validation") {
    CHECK_THROWS_AS(AbelianGroup(1, iv({1})), toric::DomainError);
    CHECK_THROWS_AS(AbelianGroup(1, iv({2, 3})), toric::DomainError);
    CHECK_NOTHROW(AbelianGroup(1, iv({2, 4})));
    CHECK(AbelianGroup(2, iv({2})) == AbelianGroup(2, iv({2})));
    CHECK_FALSE(AbelianGroup(2, iv({2})) == AbelianGroup(2, iv({4})));
}

TEST_CASE("torsion is reduced eagerly") {
    AbelianGroup g(1, iv({2, 4}));
    auto m = g.element(iv({1}), iv({3, -1}));
    CHECK(m.torsion == iv({1, 3}));
    auto n = g.negate(m);
    CHECK(g.add(m, n).is_zero());
    CHECK(g.scale(m, 4).torsion == iv({0, 0}));
    CHECK(g.torsion_elements().size() == 8);
}

TEST_CASE("presentations") {
    Presentation free(2, {});
    CHECK(free.group() == AbelianGroup::free_group(2));

    Presentation zz2(2, {iv({0, 2})});
    CHECK(zz2.group() == AbelianGroup(1, iv({2})));

    Presentation z3(1, {iv({3})});
    CHECK(z3.group() == AbelianGroup(0, iv({3})));

    // Recoding is a bijection between Z^n / R and the canonical group.
    Presentation p(3, {iv({2, 4, 0}), iv({0, 6, 3})});
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                auto m = p.to_canonical(iv({a, b, c}));
                CHECK(p.to_canonical(p.from_canonical(m)) == m);
            }
    // Relations map to zero.
    CHECK(p.to_canonical(iv({2, 4, 0})).is_zero());
    CHECK(p.to_canonical(iv({0, 6, 3})).is_zero());
    CHECK(p.to_canonical(iv({2, 10, 3})).is_zero());
}

TEST_CASE("pairing") {
    AbelianGroup z2 = AbelianGroup::free_group(2);
    CHECK(pairing(DualVector{iv({1, 0})}, el(z2, {3, 5})) == 3);
    CHECK(pairing(DualVector{iv({2, -1})}, el(z2, {1, 2})) == 0);
    AbelianGroup zt(1, iv({2}));
    CHECK(pairing(DualVector{iv({1})}, el(zt, {-1}, {1})) == -1);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> e(-9, 9);
    AbelianGroup g(2, iv({6}));
    for (int i = 0; i < 100; ++i) {
        DualVector u{iv({e(rng), e(rng)})};
        auto m = el(g, {e(rng), e(rng)}, {e(rng)});
        auto n = el(g, {e(rng), e(rng)}, {e(rng)});
        CHECK(pairing(u, g.add(m, n)) == pairing(u, m) + pairing(u, n));
    }
}
