#pragma once

#include "wbs/rank.hpp"
#include "wbs/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wbs {

struct CheckEntry {
    std::string name;
    bool pass = false;
    std::string counterexample;  // replayable JSON fragment, empty when pass
};

struct DualityReport {
    std::string kind;  // "mixed" or "sergeev"
    int n = 0;
    int r = 0;
    int s = 0;
    int k = 0;
    std::size_t algebra_dim = 0;
    std::size_t image_rank = 0;
    std::size_t centralizer_dim_even = 0;
    std::size_t centralizer_dim_odd = 0;
    std::size_t homomorphism_checked = 0;
    bool injective = false;
    bool surjective = false;
    bool probabilistic = false;
    std::vector<CheckEntry> checks;

    std::size_t centralizer_total() const { return centralizer_dim_even + centralizer_dim_odd; }
    bool all_checks_pass() const;
};

// Guard for centralizer-sized problems ((2n)^(r+s)).
inline constexpr std::size_t kCentralizerGuard = 300;

struct CentralizerDims {
    std::size_t even = 0;
    std::size_t odd = 0;
    bool probabilistic = false;
};

// Rank mode policy: exact while the parity block of End(mix) has at most
// kExactEliminationLimit unknowns, modular above.
RankMode centralizer_mode(int n, int len);

// Dimension of End_{q(n)} on V^r tensor W^s (s = 0 gives the Sergeev case),
// split by parity. Solves rho(g) X = (-1)^{|g| p} X rho(g) over all 2n^2
// generators as a stacked sparse linear system.
CentralizerDims centralizer_dim(int n, int r, int s, std::optional<RankMode> mode = {},
                                std::uint64_t seed = kDefaultSeed,
                                std::size_t guard = kCentralizerGuard);

// The stacked constraint system for one parity block, exposed so tests can
// cross-check the weight-reduced assembly against the plain one.
SparseExactMatrix centralizer_constraint_system(int n, int r, int s, int parity,
                                                bool weight_reduce,
                                                std::size_t* unknowns_out = nullptr);

// Rank of the span of the flattened representation images over all basis
// diagrams.
RankResult image_rank(int n, int r, int s, std::optional<RankMode> mode = {},
                      std::uint64_t seed = kDefaultSeed, std::size_t guard = kCentralizerGuard);
RankResult sergeev_image_rank(int n, int k, std::optional<RankMode> mode = {},
                              std::uint64_t seed = kDefaultSeed,
                              std::size_t guard = kCentralizerGuard);

// Full certification runs. Homomorphism pairs are exhaustive up to 10,000
// pairs, then sampled (500 seeded pairs).
inline constexpr std::size_t kExhaustivePairLimit = 10000;
inline constexpr std::size_t kSampledPairs = 500;

DualityReport verify_mixed_duality(int n, int r, int s, std::uint64_t seed = kDefaultSeed,
                                   std::optional<RankMode> mode = {},
                                   std::size_t guard = kCentralizerGuard);
DualityReport verify_sergeev_duality(int n, int k, std::uint64_t seed = kDefaultSeed,
                                     std::optional<RankMode> mode = {},
                                     std::size_t guard = kCentralizerGuard);

// Lemma-level checks, each entry one instantiated identity.
std::vector<CheckEntry> verify_flip_square(int n, int r, int s,
                                           std::size_t guard = kCentralizerGuard);
std::vector<CheckEntry> verify_centralizer_relations(int n, int r, int s,
                                                     std::size_t guard = kCentralizerGuard);

}  // namespace wbs
