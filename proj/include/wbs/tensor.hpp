#pragma once

#include "wbs/algebra.hpp"
#include "wbs/diagram.hpp"
#include "wbs/sparse_matrix.hpp"

#include <cstdint>
#include <vector>

namespace wbs {

// Letter of the index set I = {1..n, 1bar..nbar}; barred letters are odd.
struct IndexLetter {
    int value = 1;
    bool barred = false;

    int parity() const { return barred ? 1 : 0; }
    IndexLetter bar() const { return {value, !barred}; }
    bool operator==(const IndexLetter&) const = default;
};

using MultiIndex = std::vector<IndexLetter>;

int parity_sum(const MultiIndex& m);
// Sum over pairs a < b of |m_a||m_b|.
int parity_pair_sum(const MultiIndex& m);

// Lexicographic rank with letter order 1 < ... < n < 1bar < ... < nbar.
std::size_t basis_index(const MultiIndex& m, int n);
MultiIndex basis_unrank(std::size_t pos, int n, int len);
std::size_t tensor_dim(int n, int len);

// Guard on matrix sizes ((2n)^len); raise only deliberately.
inline constexpr std::size_t kTensorDimGuard = 10000;
void check_tensor_guard(int n, int len, std::size_t guard = kTensorDimGuard);

// Weight of the labeled diagram with bottom labels i and top labels j.
int weight_k(const KSuperDiagram& d, const MultiIndex& i, const MultiIndex& j, int n);
int weight_walled(const WalledDiagram& d, const MultiIndex& i, const MultiIndex& j, int n);

// Representation matrices: column basis_index(i), row basis_index(j), entry
// wt(i d j). Products follow the opposite-algebra convention
// matrix(d1 d2) = matrix(d2) * matrix(d1).
SparseExactMatrix phi_matrix(const KSuperDiagram& d, int n);
SparseExactMatrix psi_matrix(const WalledDiagram& d, int n);
SparseExactMatrix psi_matrix(const WalledElement& x, int n);
SparseExactMatrix phi_matrix(const KElement& x, int n);

// The odd operator P: v_i -> (-1)^(|i|+1) v_ibar on V = C^(n|n).
SparseExactMatrix p_matrix(int n);

// Generator e_{i,j} (barred = false) or e_{i,jbar} (barred = true) of q(n).
struct QnGenerator {
    int i = 1;
    int j = 1;
    bool barred = false;
    int parity() const { return barred ? 1 : 0; }
};

std::vector<QnGenerator> qn_generators(int n);

// Coproduct action of g on V^r tensor W^s; V^k is the s = 0 case.
SparseExactMatrix qn_gen_matrix(const QnGenerator& g, int n, int r, int s);

// Right action of s_j / c_j on V^k (graded place permutation and P in slot j).
SparseExactMatrix sergeev_gen_action(const GenName& name, int n, int k);

// Matrix of a right-action word letter_1 ... letter_m: the letters compose in
// reverse under ordinary multiplication.
SparseExactMatrix right_action_word(const std::vector<GenName>& word, int n, int k);

// The endomorphism-level flip End(V^(r+s)) -> End(V^r tensor W^s) obtained by
// dualizing the right factors: the matrix counterpart of f tensor g -> f
// tensor g*.
SparseExactMatrix flip_endo(const SparseExactMatrix& phi, int r, int s, int n);

}  // namespace wbs
