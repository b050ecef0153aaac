#pragma once

#include "wbs/diagram.hpp"
#include "wbs/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace wbs {

// ---------------------------------------------------------------------------
// Formal integer combinations of diagrams. The zero element is the empty map;
// terms are kept in the canonical (serialized-form) diagram order.

struct KAmbient {
    int k = 0;
    bool operator==(const KAmbient&) const = default;
};

struct WalledAmbient {
    int r = 0;
    int s = 0;
    bool operator==(const WalledAmbient&) const = default;
};

template <class Diagram, class Ambient>
class Element {
  public:
    explicit Element(Ambient ambient) : ambient_(ambient) {}

    const Ambient& ambient() const { return ambient_; }
    const std::map<Diagram, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Diagram& d, const Int& coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(d);
        if (it == terms_.end()) {
            terms_.emplace(d, coeff);
            return;
        }
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }

    Element& operator+=(const Element& other) {
        require_same_ambient(other);
        for (const auto& [d, c] : other.terms_) add_term(d, c);
        return *this;
    }

    Element operator+(const Element& other) const {
        Element out = *this;
        out += other;
        return out;
    }

    Element operator-() const {
        Element out(ambient_);
        for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
        return out;
    }

    Element operator-(const Element& other) const { return *this + (-other); }

    Element scaled(const Int& factor) const {
        Element out(ambient_);
        if (factor == 0) return out;
        for (const auto& [d, c] : terms_) out.terms_.emplace(d, c * factor);
        return out;
    }

    bool operator==(const Element& other) const {
        return ambient_ == other.ambient_ && terms_ == other.terms_;
    }

    void require_same_ambient(const Element& other) const;

  private:
    Ambient ambient_;
    std::map<Diagram, Int> terms_;
};

using KElement = Element<KSuperDiagram, KAmbient>;
using WalledElement = Element<WalledDiagram, WalledAmbient>;

KElement k_element_of(const KSuperDiagram& d, const Int& coeff = 1);
WalledElement walled_element_of(const WalledDiagram& d, const Int& coeff = 1);

// ---------------------------------------------------------------------------
// Sergeev normal form sigma c_{i_1} ... c_{i_m} with accumulated sign.

struct NormalWord {
    std::vector<int> sigma;    // sigma[t-1] = image of t
    std::vector<int> clifford; // strictly increasing indices
    int sign = 1;
};

bool operator==(const NormalWord& a, const NormalWord& b);

// Inversion count of the stable relabeling of `seq` (the arranging number).
int arranging_number(const std::vector<int>& seq);

struct SergeevSignReport {
    int rho = 0;
    int ell = 0;
};

// Product of two k-superdiagrams: d1 placed under d2. Always a single signed
// diagram (-1)^(rho + ell) d1 * d2.
std::pair<KElement, SergeevSignReport> sergeev_mul(const KSuperDiagram& d1,
                                                   const KSuperDiagram& d2);

// The basis bijection d <-> sigma c_{i_1} ... c_{i_m}.
NormalWord phi_k(const KSuperDiagram& d);
KSuperDiagram phi_k_inv(const NormalWord& w);

// Product in the normal-form model of Ser_k; the independent oracle for
// sergeev_mul. Requires strictly increasing clifford parts.
NormalWord normal_mul(const NormalWord& w1, const NormalWord& w2);

// ---------------------------------------------------------------------------
// Walled product.

struct WalledSignReport {
    int c = 0;
    int ell1 = 0;
    int rho1 = 0;
    int p1 = 0;
    int ell2 = 0;
    int rho2 = 0;
    int p2 = 0;
    bool loop_detected = false;

    int exponent() const { return c + ell1 + rho1 + p1 + ell2 + rho2 + p2; }
};

// Product of two (r,s)-superdiagrams: d1 placed under d2. A middle-row loop
// gives the zero element; otherwise a single signed diagram.
std::pair<WalledElement, WalledSignReport> walled_mul(const WalledDiagram& d1,
                                                      const WalledDiagram& d2);

// Bilinear extensions.
KElement elem_mul(const KElement& x, const KElement& y);
WalledElement elem_mul(const WalledElement& x, const WalledElement& y);

// flip with the sign (-1)^(u(d) + (l+x)y), where l, x, y count marked
// vertical-left, horizontal-top and horizontal-bottom edges of flip(d) and
// u(d) counts crossings between marked edges whose top vertices both lie
// right of the wall.
std::pair<WalledDiagram, int> signed_flip(const KSuperDiagram& d, int r, int s);

// Permutation helpers shared with the presentation module.
std::vector<int> compose_perms(const std::vector<int>& outer, const std::vector<int>& inner);
std::vector<int> invert_perm(const std::vector<int>& perm);

}  // namespace wbs
