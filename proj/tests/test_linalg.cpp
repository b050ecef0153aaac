#include "wbs/rank.hpp"
#include "wbs/sparse_matrix.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace wbs;

namespace {

// Dense naive triple-loop product, the oracle for mat_mul.
std::vector<std::vector<Rational>> dense_of(const SparseExactMatrix& m) {
    std::vector<std::vector<Rational>> d(m.n_rows(), std::vector<Rational>(m.n_cols(), 0));
    for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;
    return d;
}

SparseExactMatrix dense_mul_oracle(const SparseExactMatrix& a, const SparseExactMatrix& b) {
    auto da = dense_of(a);
    auto db = dense_of(b);
    SparseExactMatrix out(a.n_rows(), b.n_cols());
    for (std::size_t i = 0; i < a.n_rows(); ++i) {
        for (std::size_t j = 0; j < b.n_cols(); ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < a.n_cols(); ++k) acc += da[i][k] * db[k][j];
            out.set(i, j, acc);
        }
    }
    return out;
}

SparseExactMatrix random_sign_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    SparseExactMatrix m(rows, cols);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Rational(entry(rng)));
    }
    return m;
}

}  // namespace

TEST_CASE("mat_mul identity and inverse pair") {
    auto id4 = SparseExactMatrix::identity(4);
    CHECK(mat_mul(id4, id4) == id4);

    SparseExactMatrix two(1, 1), half(1, 1);
    two.set(0, 0, Rational(2));
    half.set(0, 0, Rational(1, 2));
    CHECK(mat_mul(two, half) == SparseExactMatrix::identity(1));
}

TEST_CASE("mat_mul dimension mismatch") {
    SparseExactMatrix a(2, 3), b(4, 2);
    CHECK_THROWS_AS(mat_mul(a, b), std::invalid_argument);
}

TEST_CASE("mat_mul agrees with the dense oracle") {
    std::mt19937_64 rng(kDefaultSeed);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_sign_matrix(8, 8, rng);
        auto b = random_sign_matrix(8, 8, rng);
        CHECK(mat_mul(a, b) == dense_mul_oracle(a, b));
    }
    // Larger shapes, still within the suite bound of 32.
    auto a = random_sign_matrix(32, 17, rng);
    auto b = random_sign_matrix(17, 32, rng);
    CHECK(mat_mul(a, b) == dense_mul_oracle(a, b));
}

TEST_CASE("rank of zero and identity matrices") {
    SparseExactMatrix zero(5, 5);
    CHECK(rank(zero, RankMode::exact).value == 0);
    CHECK(rank(SparseExactMatrix::identity(7), RankMode::exact).value == 7);
    CHECK(nullspace_dim(SparseExactMatrix(3, 5), RankMode::exact).value == 5);
    CHECK(nullspace_dim(SparseExactMatrix::identity(6), RankMode::exact).value == 0);
}

TEST_CASE("rank handles rational entries and duplicates") {
    // Two proportional rows plus one independent: rank 2.
    SparseExactMatrix m(3, 3);
    m.set(0, 0, Rational(1, 2));
    m.set(0, 1, Rational(1, 3));
    m.set(1, 0, Rational(3, 2));
    m.set(1, 1, Rational(1));
    m.set(2, 0, Rational(2));
    m.set(2, 2, Rational(4, 3));
    CHECK(rank(m, RankMode::exact).value == 2);
    CHECK(rank(m, RankMode::modular).value == 2);
}

TEST_CASE("exact and modular rank agree on sign matrices") {
    std::mt19937_64 rng(kDefaultSeed + 1);
    for (int trial = 0; trial < 15; ++trial) {
        auto m = random_sign_matrix(12, 9, rng);
        auto exact = rank(m, RankMode::exact);
        auto modular = rank(m, RankMode::modular, kDefaultSeed + trial);
        CHECK(exact.value == modular.value);
        CHECK_FALSE(exact.probabilistic);
        CHECK(modular.probabilistic);
        CHECK(rank(m, RankMode::exact).value + nullspace_dim(m, RankMode::exact).value ==
              m.n_cols());
    }
}

TEST_CASE("modular rank across an explicit prime") {
    // Row space {(1,2,3),(2,4,6),(0,1,1)} has rank 2 over Q and mod any p>3.
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows = {
        {{0, 1}, {1, 2}, {2, 3}},
        {{0, 2}, {1, 4}, {2, 6}},
        {{1, 1}, {2, 1}},
    };
    CHECK(rank_mod_prime(rows, 3, (1u << 31) - 1) == 2);  // 2^31-1 is prime
}

TEST_CASE("prime tester") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64((1ull << 31) - 1));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64((1ull << 31) - 3));  // 2147483645 = 5 * 429496729
    CHECK(is_prime_u64(1073741827));              // just above 2^30
}

TEST_CASE("planted-rank products keep their rank across modes") {
    std::mt19937_64 rng(kDefaultSeed + 3);
    for (int trial = 0; trial < 4; ++trial) {
        std::size_t planted = 12 + 3 * trial;
        auto b = random_sign_matrix(60, planted, rng);
        auto c = random_sign_matrix(planted, 40, rng);
        auto product = mat_mul(b, c);
        auto exact = rank(product, RankMode::exact).value;
        CHECK(exact == rank(product, RankMode::modular, kDefaultSeed + trial).value);
        CHECK(exact <= planted);
        if (rank(b, RankMode::exact).value == planted &&
            rank(c, RankMode::exact).value == planted) {
            CHECK(exact == planted);
        }
    }
    // A larger sparse system through the modular path only.
    SparseExactMatrix wide(400, 250);
    std::uniform_int_distribution<int> col(0, 249);
    std::uniform_int_distribution<int> val(0, 2);
    for (std::size_t row = 0; row < 400; ++row) {
        for (int t = 0; t < 5; ++t) wide.set(row, col(rng), Rational(val(rng) - 1));
    }
    auto m1 = rank(wide, RankMode::modular, 11).value;
    auto m2 = rank(wide, RankMode::modular, 12).value;
    CHECK(m1 == m2);
    CHECK(m1 + nullspace_dim(wide, RankMode::modular, 11).value == wide.n_cols());
}

TEST_CASE("rank is invariant under row scaling and permutation") {
    std::mt19937_64 rng(kDefaultSeed + 2);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_sign_matrix(10, 10, rng);
        SparseExactMatrix scaled(10, 10);
        for (const auto& [rc, v] : m.entries()) {
            scaled.set(9 - rc.first, rc.second, v * Rational(3, 7));
        }
        CHECK(rank(m, RankMode::exact).value == rank(scaled, RankMode::exact).value);
    }
}
