#pragma once

#include "wbs/algebra.hpp"

#include <string>
#include <vector>

namespace wbs {

// Word over the generator alphabet of B_{r,s}: s_i (i != r), e = e_{r,r+1},
// c_i. Letters are validated against the ambient on construction.
struct GeneratorWord {
    int r = 0;
    int s = 0;
    std::vector<GenName> letters;
};

// Text grammar: whitespace-separated letters "s3", "e", "c2".
GeneratorWord parse_word(const std::string& text, int r, int s);
std::string word_to_string(const GeneratorWord& w);

// Left-to-right product of the generator diagrams under the walled product.
// The empty word is the identity.
WalledElement eval_word(const GeneratorWord& w);

// e_{p,q} as the conjugate sigma e_{r,r+1} sigma^{-1} with
// sigma = s_{q-1} ... s_{r+1} s_p ... s_{r-1}; exposed as a word, and as the
// pictured diagram (two horizontals p-q plus identity strands).
GeneratorWord e_pq_word(int r, int s, int p, int q);
WalledDiagram e_pq_diagram(int r, int s, int p, int q);

// Same-side transposition word (i j).
GeneratorWord transposition_word(int r, int s, int i, int j);

struct RelationCheck {
    std::string name;
    bool pass = false;
    std::string counterexample;  // offending word pair, empty when pass
};

struct RelationCheckReport {
    int r = 0;
    int s = 0;
    std::vector<RelationCheck> relations;
    bool all_pass() const;
};

// The defining relations of B_{r,s} together with the derived relations
// (1)-(8) used in the basis argument and the extra identity of the remark on
// redundant relations, instantiated over all admissible indices and verified
// as exact diagram-algebra identities.
RelationCheckReport check_presentation_relations(int r, int s);

// The Sergeev defining relations, computed in D_k.
RelationCheckReport check_sergeev_relations(int k);

// Normal form d = ((((c_P e_{p_1,q_1}) ... e_{p_a,q_a}) sigma) c_Q).
struct BasisXForm {
    int r = 0;
    int s = 0;
    std::vector<int> P;                       // subset of {p_1..p_a}
    std::vector<std::pair<int, int>> pairs;   // ((p_1,q_1),...), p ascending
    std::vector<int> sigma;                   // permutation in Sigma_r x Sigma_s
    std::vector<int> Q;
};

// Reads the form off the diagram: bottom horizontals give the pairs and P,
// top horizontals and marked verticals give Q, and sigma matches the i-th
// top horizontal with the i-th bottom one.
BasisXForm decompose_to_basis_form(const WalledDiagram& d);

// Multiplies the form out (left bracketing); the coefficient is always +1.
WalledElement eval_basis_form(const BasisXForm& f);

// Validates the conditions (ordering, distinctness, P and Q constraints).
void validate_basis_form(const BasisXForm& f);

struct DimPair {
    unsigned long long factorial_form = 0;
    unsigned long long sum_form = 0;
};

// 2^{r+s} (r+s)! and the horizontal-edge count sum; the two always agree.
DimPair dim_formulas(int r, int s);

}  // namespace wbs
