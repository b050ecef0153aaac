#include "wbs/rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace wbs {

namespace {

using Col = std::uint32_t;

// ---------------------------------------------------------------------------
// Modular scalar helpers (primes fit in 31 bits, products in 62).

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic for n < 3,215,031,751; our primes stay below 2^31.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

// ---------------------------------------------------------------------------
// Shared sparse elimination core. Rows are sorted (col, value) vectors; the
// pivot is chosen by Markowitz score (row_nnz-1)*(col_nnz-1) with ties broken
// by lowest (row, col), which fixes every intermediate state.

template <class Value, class Ops>
class SparseEliminator {
  public:
    using RowVec = std::vector<std::pair<Col, Value>>;

    SparseEliminator(std::vector<RowVec> rows, std::size_t n_cols, Ops ops)
        : rows_(std::move(rows)), ops_(std::move(ops)) {
        col_nnz_.assign(n_cols, 0);
        col_rows_.assign(n_cols, {});
        row_live_.assign(rows_.size(), 0);
        for (Col r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty()) continue;
            row_live_[r] = 1;
            rows_by_count_[rows_[r].size()].insert(r);
            for (const auto& [c, v] : rows_[r]) {
                ++col_nnz_[c];
                col_rows_[c].push_back(r);
            }
        }
        for (Col c = 0; c < n_cols; ++c) {
            if (col_nnz_[c] > 0) cols_by_count_[col_nnz_[c]].insert(c);
        }
    }

    std::size_t run() {
        std::size_t rank = 0;
        while (true) {
            auto [pr, pc, found] = find_pivot();
            if (!found) break;
            ++rank;
            eliminate(pr, pc);
        }
        return rank;
    }

  private:
    struct Pivot {
        Col row = 0;
        Col col = 0;
        bool found = false;
    };

    Pivot find_pivot() {
        Pivot best;
        std::size_t best_score = std::numeric_limits<std::size_t>::max();
        auto consider = [&](Col r, Col c) {
            std::size_t score = (rows_[r].size() - 1) * (col_nnz_[c] - 1);
            if (!best.found || score < best_score ||
                (score == best_score && (r < best.row || (r == best.row && c < best.col)))) {
                best = {r, c, true};
                best_score = score;
            }
        };
        auto rit = rows_by_count_.begin();
        auto cit = cols_by_count_.begin();
        while (rit != rows_by_count_.end() || cit != cols_by_count_.end()) {
            std::size_t k_row = rit == rows_by_count_.end()
                                    ? std::numeric_limits<std::size_t>::max()
                                    : rit->first;
            std::size_t k_col = cit == cols_by_count_.end()
                                    ? std::numeric_limits<std::size_t>::max()
                                    : cit->first;
            std::size_t k = std::min(k_row, k_col);
            if (best.found && (k - 1) * (k - 1) > best_score) break;
            if (k_row == k) {
                for (Col r : rit->second) {
                    for (const auto& [c, v] : rows_[r]) consider(r, c);
                }
                ++rit;
            }
            if (k_col == k && cit != cols_by_count_.end() && cit->first == k) {
                for (Col c : cit->second) {
                    for (Col r : live_rows_in_col(c)) consider(r, c);
                }
                ++cit;
            }
        }
        return best;
    }

    std::vector<Col> live_rows_in_col(Col c) {
        std::vector<Col> live;
        live.reserve(col_nnz_[c]);
        for (Col r : col_rows_[c]) {
            if (row_live_[r] && row_has_col(r, c)) live.push_back(r);
        }
        // The lazy list may hold duplicates when a row lost and regained the
        // column; compact to a unique list while we have it fresh.
        std::sort(live.begin(), live.end());
        live.erase(std::unique(live.begin(), live.end()), live.end());
        col_rows_[c] = live;
        return live;
    }

    bool row_has_col(Col r, Col c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, Col col) { return e.first < col; });
        return it != row.end() && it->first == c;
    }

    const Value& value_at(Col r, Col c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, Col col) { return e.first < col; });
        return it->second;
    }

    void retire_row(Col r) {
        rows_by_count_.at(rows_[r].size()).erase(r);
        if (rows_by_count_.at(rows_[r].size()).empty()) rows_by_count_.erase(rows_[r].size());
        for (const auto& [c, v] : rows_[r]) bump_col(c, -1);
        row_live_[r] = 0;
        rows_[r].clear();
        rows_[r].shrink_to_fit();
    }

    void bump_col(Col c, int delta) {
        if (col_nnz_[c] > 0) {
            auto it = cols_by_count_.find(col_nnz_[c]);
            it->second.erase(c);
            if (it->second.empty()) cols_by_count_.erase(it);
        }
        col_nnz_[c] += delta;
        if (col_nnz_[c] > 0) cols_by_count_[col_nnz_[c]].insert(c);
    }

    void eliminate(Col pr, Col pc) {
        RowVec pivot_row = rows_[pr];
        Value pivot_val = value_at(pr, pc);
        std::vector<Col> targets;
        for (Col r : live_rows_in_col(pc)) {
            if (r != pr) targets.push_back(r);
        }
        retire_row(pr);
        for (Col r : targets) {
            Value target_val = value_at(r, pc);
            RowVec updated = ops_.combine(rows_[r], pivot_row, pivot_val, target_val, pc);
            replace_row(r, std::move(updated));
        }
    }

    void replace_row(Col r, RowVec next) {
        rows_by_count_.at(rows_[r].size()).erase(r);
        if (rows_by_count_.at(rows_[r].size()).empty()) rows_by_count_.erase(rows_[r].size());
        // Column count deltas between the old and new support.
        auto old_it = rows_[r].begin();
        auto new_it = next.begin();
        while (old_it != rows_[r].end() || new_it != next.end()) {
            if (new_it == next.end() ||
                (old_it != rows_[r].end() && old_it->first < new_it->first)) {
                bump_col(old_it->first, -1);
                ++old_it;
            } else if (old_it == rows_[r].end() || new_it->first < old_it->first) {
                bump_col(new_it->first, +1);
                col_rows_[new_it->first].push_back(r);
                ++new_it;
            } else {
                ++old_it;
                ++new_it;
            }
        }
        rows_[r] = std::move(next);
        if (rows_[r].empty()) {
            row_live_[r] = 0;
        } else {
            rows_by_count_[rows_[r].size()].insert(r);
        }
    }

    std::vector<RowVec> rows_;
    Ops ops_;
    std::vector<std::size_t> col_nnz_;
    std::vector<std::vector<Col>> col_rows_;
    std::vector<char> row_live_;
    std::map<std::size_t, std::set<Col>> rows_by_count_;
    std::map<std::size_t, std::set<Col>> cols_by_count_;
};

// Fraction-free update over the integers: cross-multiply and strip the row
// content so entries stay at minor scale.
struct ExactOps {
    using RowVec = std::vector<std::pair<Col, Int>>;

    RowVec combine(const RowVec& target, const RowVec& pivot, const Int& pivot_val,
                   const Int& target_val, Col pivot_col) const {
        RowVec out;
        out.reserve(target.size() + pivot.size());
        auto t = target.begin();
        auto p = pivot.begin();
        Int content = 0;
        auto push = [&](Col c, Int v) {
            if (v == 0) return;
            if (content == 0) {
                content = boost::multiprecision::abs(v);
            } else {
                content = boost::multiprecision::gcd(content, v);
            }
            out.emplace_back(c, std::move(v));
        };
        while (t != target.end() || p != pivot.end()) {
            if (p == pivot.end() || (t != target.end() && t->first < p->first)) {
                push(t->first, pivot_val * t->second);
                ++t;
            } else if (t == target.end() || p->first < t->first) {
                push(p->first, -target_val * p->second);
                ++p;
            } else {
                if (t->first != pivot_col) {
                    push(t->first, pivot_val * t->second - target_val * p->second);
                }
                ++t;
                ++p;
            }
        }
        if (content > 1) {
            for (auto& [c, v] : out) v /= content;
        }
        return out;
    }
};

struct ModOps {
    std::uint64_t p;
    using RowVec = std::vector<std::pair<Col, std::uint64_t>>;

    RowVec combine(const RowVec& target, const RowVec& pivot, std::uint64_t pivot_val,
                   std::uint64_t target_val, Col pivot_col) const {
        std::uint64_t lambda = mulmod(target_val, invmod(pivot_val, p), p);
        RowVec out;
        out.reserve(target.size() + pivot.size());
        auto t = target.begin();
        auto pv = pivot.begin();
        auto push = [&](Col c, std::uint64_t v) {
            if (v != 0) out.emplace_back(c, v);
        };
        while (t != target.end() || pv != pivot.end()) {
            if (pv == pivot.end() || (t != target.end() && t->first < pv->first)) {
                push(t->first, t->second);
                ++t;
            } else if (t == target.end() || pv->first < t->first) {
                push(pv->first, p - mulmod(lambda, pv->second, p));
                ++pv;
            } else {
                if (t->first != pivot_col) {
                    std::uint64_t sub = mulmod(lambda, pv->second, p);
                    push(t->first, (t->second + p - sub) % p);
                }
                ++t;
                ++pv;
            }
        }
        return out;
    }
};

// Integer row data with per-row denominators already cleared.
struct IntegerRows {
    std::vector<std::vector<std::pair<Col, Int>>> rows;
    std::size_t n_cols = 0;
};

IntegerRows clear_denominators(const SparseExactMatrix& a) {
    IntegerRows out;
    out.n_cols = a.n_cols();
    out.rows.assign(a.n_rows(), {});
    for (const auto& [rc, v] : a.entries()) {
        out.rows[rc.first].emplace_back(static_cast<Col>(rc.second), Int(0));
    }
    std::vector<Int> scale(a.n_rows(), 1);
    for (const auto& [rc, v] : a.entries()) {
        scale[rc.first] = boost::multiprecision::lcm(scale[rc.first], rat_den(v));
    }
    for (const auto& [rc, v] : a.entries()) {
        auto& row = out.rows[rc.first];
        auto it = std::lower_bound(row.begin(), row.end(), rc.second,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        it->second = rat_num(v) * (scale[rc.first] / rat_den(v));
    }
    return out;
}

std::size_t rank_exact(const SparseExactMatrix& a) {
    IntegerRows data = clear_denominators(a);
    SparseEliminator<Int, ExactOps> elim(std::move(data.rows), data.n_cols, ExactOps{});
    return elim.run();
}

std::size_t rank_one_prime(const IntegerRows& data, std::uint64_t p) {
    std::vector<ModOps::RowVec> rows(data.rows.size());
    for (std::size_t r = 0; r < data.rows.size(); ++r) {
        rows[r].reserve(data.rows[r].size());
        for (const auto& [c, v] : data.rows[r]) {
            Int residue = v % Int(p);
            if (residue < 0) residue += p;
            std::uint64_t m = residue.convert_to<std::uint64_t>();
            if (m != 0) rows[r].emplace_back(c, m);
        }
    }
    SparseEliminator<std::uint64_t, ModOps> elim(std::move(rows), data.n_cols, ModOps{p});
    return elim.run();
}

std::uint64_t draw_prime(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist((1ull << 30) + 1, (1ull << 31) - 1);
    while (true) {
        std::uint64_t candidate = dist(rng) | 1ull;
        if (candidate > (1ull << 30) && candidate < (1ull << 31) && is_prime_u64(candidate)) {
            return candidate;
        }
    }
}

std::size_t rank_modular(const SparseExactMatrix& a, std::uint64_t seed) {
    IntegerRows data = clear_denominators(a);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::uint64_t p1 = draw_prime(rng);
        std::uint64_t p2 = draw_prime(rng);
        while (p2 == p1) p2 = draw_prime(rng);
        std::uint64_t p3 = draw_prime(rng);
        while (p3 == p1 || p3 == p2) p3 = draw_prime(rng);
        std::size_t r1 = rank_one_prime(data, p1);
        std::size_t r2 = rank_one_prime(data, p2);
        std::size_t r3 = rank_one_prime(data, p3);
        if (r1 == r2 && r2 == r3) return r1;
        // A prime divided some pivot minor; retry with fresh primes.
    }
    throw std::runtime_error("modular rank: no three-prime agreement after 8 attempts");
}

}  // namespace

std::size_t rank_mod_prime(std::vector<std::vector<std::pair<Col, std::int64_t>>> int_rows,
                           std::size_t n_cols, std::uint64_t p) {
    std::vector<ModOps::RowVec> rows(int_rows.size());
    for (std::size_t r = 0; r < int_rows.size(); ++r) {
        for (const auto& [c, v] : int_rows[r]) {
            std::int64_t m = v % static_cast<std::int64_t>(p);
            if (m < 0) m += static_cast<std::int64_t>(p);
            if (m != 0) rows[r].emplace_back(c, static_cast<std::uint64_t>(m));
        }
        std::sort(rows[r].begin(), rows[r].end());
    }
    SparseEliminator<std::uint64_t, ModOps> elim(std::move(rows), n_cols, ModOps{p});
    return elim.run();
}

RankResult rank(const SparseExactMatrix& a, RankMode mode, std::uint64_t seed) {
    if (mode == RankMode::exact) return {rank_exact(a), false};
    return {rank_modular(a, seed), true};
}

RankResult nullspace_dim(const SparseExactMatrix& a, RankMode mode, std::uint64_t seed) {
    RankResult r = rank(a, mode, seed);
    return {a.n_cols() - r.value, r.probabilistic};
}

}  // namespace wbs
