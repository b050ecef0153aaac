#pragma once

#include "wbs/sparse_matrix.hpp"

#include <cstdint>
#include <vector>

namespace wbs {

inline constexpr std::uint64_t kDefaultSeed = 42;

enum class RankMode { exact, modular };

// Width of a parity block above which callers must switch to modular rank.
inline constexpr std::size_t kExactEliminationLimit = 3000;

struct RankResult {
    std::size_t value = 0;
    // Set when the value comes from the three-prime modular path. Modular rank
    // never exceeds the rational rank, so triple agreement certifies the value
    // up to a vanishing failure probability.
    bool probabilistic = false;
};

// Rank over the rationals. exact: sparse fraction-free elimination with
// Markowitz pivoting (ties by lowest row, then column). modular: rank modulo
// three independent random primes p, 2^30 < p < 2^31, drawn from `seed`; the
// three ranks must agree.
RankResult rank(const SparseExactMatrix& a, RankMode mode, std::uint64_t seed = kDefaultSeed);

// n_cols - rank.
RankResult nullspace_dim(const SparseExactMatrix& a, RankMode mode,
                         std::uint64_t seed = kDefaultSeed);

// Rank of an integer row list (col, value) pairs modulo a single prime.
// Exposed for tests of the modular path.
std::size_t rank_mod_prime(std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows,
                           std::size_t n_cols, std::uint64_t p);

bool is_prime_u64(std::uint64_t n);

}  // namespace wbs
