#include "wbs/duality.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace wbs {

bool DualityReport::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
}

RankMode centralizer_mode(int n, int len) {
    std::size_t dim = tensor_dim(n, len);
    return dim * dim / 2 <= kExactEliminationLimit ? RankMode::exact : RankMode::modular;
}

namespace {

// q(n)-weight of a basis vector: +e_{val} per V factor, -e_{val} per W
// factor. Basis vectors of equal weight are exactly those not separated by
// the diagonal generators e_{i,i}, whose constraint rows vanish identically
// on weight-matched unknown pairs.
std::vector<std::vector<int>> basis_weights(int n, int r, int s) {
    const std::size_t dim = tensor_dim(n, r + s);
    std::vector<std::vector<int>> weights(dim, std::vector<int>(n, 0));
    for (std::size_t v = 0; v < dim; ++v) {
        MultiIndex m = basis_unrank(v, n, r + s);
        for (int t = 1; t <= r + s; ++t) {
            weights[v][m[t - 1].value - 1] += t <= r ? 1 : -1;
        }
    }
    return weights;
}

std::vector<int> basis_parities(int n, int len) {
    const std::size_t dim = tensor_dim(n, len);
    std::vector<int> par(dim);
    for (std::size_t v = 0; v < dim; ++v) par[v] = parity_sum(basis_unrank(v, n, len)) % 2;
    return par;
}

}  // namespace

SparseExactMatrix centralizer_constraint_system(int n, int r, int s, int parity,
                                                bool weight_reduce, std::size_t* unknowns_out) {
    const std::size_t dim = tensor_dim(n, r + s);
    auto weights = basis_weights(n, r, s);
    auto parities = basis_parities(n, r + s);

    // Unknowns: entries X[a][b] of the parity block, optionally restricted to
    // weight-matched pairs (the others are forced to zero by the diagonal
    // generators).
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown_id;
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            if ((parities[a] + parities[b]) % 2 != parity) continue;
            if (weight_reduce && weights[a] != weights[b]) continue;
            std::size_t id = unknown_id.size();
            unknown_id[{a, b}] = id;
        }
    }
    if (unknowns_out) *unknowns_out = unknown_id.size();

    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    for (const QnGenerator& g : qn_generators(n)) {
        if (weight_reduce && !g.barred && g.i == g.j) continue;  // vanishing rows
        SparseExactMatrix p = qn_gen_matrix(g, n, r, s);
        std::vector<std::vector<std::pair<std::size_t, Rational>>> p_rows(dim);
        std::vector<std::vector<std::pair<std::size_t, Rational>>> p_cols(dim);
        for (const auto& [rc, v] : p.entries()) {
            p_rows[rc.first].emplace_back(rc.second, v);
            p_cols[rc.second].emplace_back(rc.first, v);
        }
        int eps = (g.parity() * parity) % 2 == 0 ? 1 : -1;
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                std::map<std::size_t, Rational> coeffs;
                for (const auto& [k, v] : p_rows[a]) {
                    auto it = unknown_id.find({k, b});
                    if (it != unknown_id.end()) coeffs[it->second] += v;
                }
                for (const auto& [k, v] : p_cols[b]) {
                    auto it = unknown_id.find({a, k});
                    if (it != unknown_id.end()) coeffs[it->second] -= Rational(eps) * v;
                }
                std::vector<std::pair<std::size_t, Rational>> row;
                for (const auto& [id, v] : coeffs) {
                    if (v != 0) row.emplace_back(id, v);
                }
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
    }

    SparseExactMatrix out(rows.size(), unknown_id.size());
    for (std::size_t r_idx = 0; r_idx < rows.size(); ++r_idx) {
        for (const auto& [c_idx, v] : rows[r_idx]) out.set(r_idx, c_idx, v);
    }
    return out;
}

CentralizerDims centralizer_dim(int n, int r, int s, std::optional<RankMode> mode,
                                std::uint64_t seed, std::size_t guard) {
    check_tensor_guard(n, r + s, guard);
    RankMode chosen = mode.value_or(centralizer_mode(n, r + s));
    CentralizerDims out;
    out.probabilistic = chosen == RankMode::modular;
    for (int parity = 0; parity <= 1; ++parity) {
        std::size_t unknowns = 0;
        SparseExactMatrix system =
            centralizer_constraint_system(n, r, s, parity, /*weight_reduce=*/true, &unknowns);
        RankResult res = nullspace_dim(system, chosen, seed);
        (parity == 0 ? out.even : out.odd) = res.value;
    }
    return out;
}

namespace {

RankResult image_rank_impl(const std::vector<SparseExactMatrix>& images, std::size_t dim,
                           std::optional<RankMode> mode, int n, int len, std::uint64_t seed) {
    SparseExactMatrix stacked(images.size(), dim * dim);
    for (std::size_t row = 0; row < images.size(); ++row) {
        for (const auto& [pos, v] : images[row].flatten_row_major()) stacked.set(row, pos, v);
    }
    RankMode chosen = mode.value_or(centralizer_mode(n, len));
    return rank(stacked, chosen, seed);
}

}  // namespace

RankResult image_rank(int n, int r, int s, std::optional<RankMode> mode, std::uint64_t seed,
                      std::size_t guard) {
    check_tensor_guard(n, r + s, guard);
    std::vector<SparseExactMatrix> images;
    for (const auto& d : enumerate_walled(r, s)) images.push_back(psi_matrix(d, n));
    return image_rank_impl(images, tensor_dim(n, r + s), mode, n, r + s, seed);
}

RankResult sergeev_image_rank(int n, int k, std::optional<RankMode> mode, std::uint64_t seed,
                              std::size_t guard) {
    check_tensor_guard(n, k, guard);
    std::vector<SparseExactMatrix> images;
    for (const auto& d : enumerate_k(k)) images.push_back(phi_matrix(d, n));
    return image_rank_impl(images, tensor_dim(n, k), mode, n, k, seed);
}

namespace {

// Supercommutation of one image with one generator:
// rho(g) M = (-1)^{|g| |d|} M rho(g).
bool supercommutes(const SparseExactMatrix& rho_g, const SparseExactMatrix& m, int g_parity,
                   int d_parity) {
    SparseExactMatrix lhs = mat_mul(rho_g, m);
    SparseExactMatrix rhs = mat_mul(m, rho_g);
    if ((g_parity * d_parity) % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

std::vector<std::pair<std::size_t, std::size_t>> pair_plan(std::size_t basis_size,
                                                           std::uint64_t seed,
                                                           std::size_t* checked) {
    std::vector<std::pair<std::size_t, std::size_t>> plan;
    if (basis_size * basis_size <= kExhaustivePairLimit) {
        for (std::size_t x = 0; x < basis_size; ++x) {
            for (std::size_t y = 0; y < basis_size; ++y) plan.emplace_back(x, y);
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> dist(0, basis_size - 1);
        for (std::size_t t = 0; t < kSampledPairs; ++t) plan.emplace_back(dist(rng), dist(rng));
    }
    *checked = plan.size();
    return plan;
}

}  // namespace

DualityReport verify_mixed_duality(int n, int r, int s, std::uint64_t seed,
                                   std::optional<RankMode> mode, std::size_t guard) {
    check_tensor_guard(n, r + s, guard);
    DualityReport report;
    report.kind = "mixed";
    report.n = n;
    report.r = r;
    report.s = s;

    auto basis = enumerate_walled(r, s);
    report.algebra_dim = basis.size();
    std::vector<SparseExactMatrix> images;
    images.reserve(basis.size());
    for (const auto& d : basis) images.push_back(psi_matrix(d, n));

    CheckEntry hom{"homomorphism", true, ""};
    auto plan = pair_plan(basis.size(), seed, &report.homomorphism_checked);
    for (const auto& [x, y] : plan) {
        auto [prod, rep] = walled_mul(basis[x], basis[y]);
        if (psi_matrix(prod, n) != mat_mul(images[y], images[x])) {
            hom.pass = false;
            hom.counterexample = "{\"left\":" + basis[x].serialize() +
                                 ",\"right\":" + basis[y].serialize() + "}";
            break;
        }
    }
    report.checks.push_back(hom);

    CheckEntry super{"supercommutation", true, ""};
    for (const QnGenerator& g : qn_generators(n)) {
        SparseExactMatrix rho_g = qn_gen_matrix(g, n, r, s);
        for (std::size_t i = 0; i < basis.size() && super.pass; ++i) {
            if (!supercommutes(rho_g, images[i], g.parity(), basis[i].parity())) {
                super.pass = false;
                super.counterexample = "{\"generator\":{\"i\":" + std::to_string(g.i) +
                                       ",\"j\":" + std::to_string(g.j) +
                                       ",\"barred\":" + (g.barred ? "true" : "false") +
                                       "},\"diagram\":" + basis[i].serialize() + "}";
            }
        }
        if (!super.pass) break;
    }
    report.checks.push_back(super);

    RankResult rank_res = image_rank(n, r, s, mode, seed, guard);
    report.image_rank = rank_res.value;
    CentralizerDims cent = centralizer_dim(n, r, s, mode, seed, guard);
    report.centralizer_dim_even = cent.even;
    report.centralizer_dim_odd = cent.odd;
    report.probabilistic = rank_res.probabilistic || cent.probabilistic;
    report.injective = report.image_rank == report.algebra_dim;
    report.surjective = report.image_rank == report.centralizer_total();
    report.checks.push_back(
        {"image_rank_bounded", report.image_rank <= report.algebra_dim &&
                                   report.image_rank <= report.centralizer_total(),
         ""});
    return report;
}

DualityReport verify_sergeev_duality(int n, int k, std::uint64_t seed,
                                     std::optional<RankMode> mode, std::size_t guard) {
    check_tensor_guard(n, k, guard);
    DualityReport report;
    report.kind = "sergeev";
    report.n = n;
    report.k = k;

    auto basis = enumerate_k(k);
    report.algebra_dim = basis.size();
    std::vector<SparseExactMatrix> images;
    images.reserve(basis.size());
    for (const auto& d : basis) images.push_back(phi_matrix(d, n));

    CheckEntry hom{"homomorphism", true, ""};
    auto plan = pair_plan(basis.size(), seed, &report.homomorphism_checked);
    for (const auto& [x, y] : plan) {
        auto [prod, rep] = sergeev_mul(basis[x], basis[y]);
        if (phi_matrix(prod, n) != mat_mul(images[y], images[x])) {
            hom.pass = false;
            hom.counterexample = "{\"left\":" + basis[x].serialize() +
                                 ",\"right\":" + basis[y].serialize() + "}";
            break;
        }
    }
    report.checks.push_back(hom);

    CheckEntry super{"supercommutation", true, ""};
    for (const QnGenerator& g : qn_generators(n)) {
        SparseExactMatrix rho_g = qn_gen_matrix(g, n, k, 0);
        for (std::size_t i = 0; i < basis.size() && super.pass; ++i) {
            if (!supercommutes(rho_g, images[i], g.parity(), basis[i].parity())) {
                super.pass = false;
                super.counterexample = "{\"generator\":{\"i\":" + std::to_string(g.i) +
                                       ",\"j\":" + std::to_string(g.j) +
                                       ",\"barred\":" + (g.barred ? "true" : "false") +
                                       "},\"diagram\":" + basis[i].serialize() + "}";
            }
        }
        if (!super.pass) break;
    }
    report.checks.push_back(super);

    // Sergeev variant of the centralizer: V factors only.
    RankResult rank_res = sergeev_image_rank(n, k, mode, seed, guard);
    report.image_rank = rank_res.value;
    CentralizerDims cent = centralizer_dim(n, k, 0, mode, seed, guard);
    report.centralizer_dim_even = cent.even;
    report.centralizer_dim_odd = cent.odd;
    report.probabilistic = rank_res.probabilistic || cent.probabilistic;
    report.injective = report.image_rank == report.algebra_dim;
    report.surjective = report.image_rank == report.centralizer_total();
    report.checks.push_back(
        {"image_rank_bounded", report.image_rank <= report.algebra_dim &&
                                   report.image_rank <= report.centralizer_total(),
         ""});
    return report;
}

std::vector<CheckEntry> verify_flip_square(int n, int r, int s, std::size_t guard) {
    check_tensor_guard(n, r + s, guard);
    std::vector<CheckEntry> out;
    for (const auto& d : enumerate_k(r + s)) {
        auto [flipped, sign] = signed_flip(d, r, s);
        SparseExactMatrix lhs = flip_endo(phi_matrix(d, n), r, s, n);
        SparseExactMatrix rhs = psi_matrix(flipped, n).scaled(Rational(sign));
        bool pass = lhs == rhs;
        out.push_back({"flip_square:" + d.serialize(), pass, pass ? "" : d.serialize()});
    }
    return out;
}

std::vector<CheckEntry> verify_centralizer_relations(int n, int r, int s, std::size_t guard) {
    check_tensor_guard(n, r + s, guard);
    const int m = r + s;
    std::vector<CheckEntry> out;
    auto matrix_of = [&](const WalledDiagram& d) { return psi_matrix(d, n); };
    // Opposite-algebra products: word x y acts as M(y) M(x).
    auto op2 = [&](const SparseExactMatrix& x, const SparseExactMatrix& y) {
        return mat_mul(y, x);
    };
    auto record = [&](const std::string& name, bool pass) {
        out.push_back({name, pass, ""});
    };

    std::vector<SparseExactMatrix> c_mats(m + 1, SparseExactMatrix());
    for (int i = 1; i <= m; ++i) c_mats[i] = matrix_of(generator(r, s, {GenKind::C, i}));

    // sigma-tilde c_j = c_{sigma(j)} sigma-tilde over the transposition
    // generators of Sigma_r x Sigma_s.
    for (int i = 1; i < m; ++i) {
        if (i == r) continue;
        SparseExactMatrix si = matrix_of(generator(r, s, {GenKind::S, i}));
        for (int j = 1; j <= m; ++j) {
            int image = j == i ? i + 1 : (j == i + 1 ? i : j);
            bool pass = op2(si, c_mats[j]) == op2(c_mats[image], si);
            record("s" + std::to_string(i) + " c" + std::to_string(j) + " = c" +
                       std::to_string(image) + " s" + std::to_string(i),
                   pass);
        }
    }

    if (r >= 1 && s >= 1) {
        SparseExactMatrix e = matrix_of(generator(r, s, {GenKind::E, 0}));
        record("e^2 = 0", mat_mul(e, e).is_zero());
        record("e c_r e = 0", op2(op2(e, c_mats[r]), e).is_zero());
        record("e c_{r+1} e = 0", op2(op2(e, c_mats[r + 1]), e).is_zero());
        record("c_r e = c_{r+1} e", op2(c_mats[r], e) == op2(c_mats[r + 1], e));
        record("e c_r = e c_{r+1}", op2(e, c_mats[r]) == op2(e, c_mats[r + 1]));
        for (int j = 1; j <= m; ++j) {
            if (j == r || j == r + 1) continue;
            record("e c" + std::to_string(j) + " = c" + std::to_string(j) + " e",
                   op2(e, c_mats[j]) == op2(c_mats[j], e));
        }
    }

    SparseExactMatrix minus_id = -SparseExactMatrix::identity(tensor_dim(n, m));
    for (int i = 1; i <= m; ++i) {
        bool pass = i <= r ? mat_mul(c_mats[i], c_mats[i]) == minus_id
                           : mat_mul(c_mats[i], c_mats[i]) == -minus_id;
        record("c" + std::to_string(i) + "^2 = " + (i <= r ? "-1" : "+1"), pass);
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            record("c" + std::to_string(i) + " c" + std::to_string(j) + " anticommute",
                   mat_mul(c_mats[i], c_mats[j]) == -mat_mul(c_mats[j], c_mats[i]));
        }
    }
    return out;
}

}  // namespace wbs
