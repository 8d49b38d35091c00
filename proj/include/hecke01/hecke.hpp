#pragma once

// The Hecke algebra of a Coxeter group with weights v_s = v^{L(s)},
// L(s) in {0,1}, with its bar involution and canonical basis.

#include <map>
#include <string>
#include <utility>

#include "hecke01/group.hpp"
#include "hecke01/laurent.hpp"

namespace hecke01 {

/// An element of the Hecke algebra in the standard basis {T_w}.
class HeckeElt {
 public:
  using Terms = std::map<Element, LaurentPoly>;

  HeckeElt() = default;

  static HeckeElt standard(const Element& w, const LaurentPoly& coeff = 1) {
    HeckeElt h;
    h.add_term(w, coeff);
    return h;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly coeff(const Element& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly{} : it->second;
  }

  void add_term(const Element& w, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    for (const auto& [w, p] : o.terms_) add_term(w, p);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    for (const auto& [w, p] : o.terms_) add_term(w, -p);
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }

  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h) {
    HeckeElt out;
    if (c.is_zero()) return out;
    for (const auto& [w, p] : h.terms_) out.add_term(w, c * p);
    return out;
  }

  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

 private:
  Terms terms_;
};

/// c_w for every w computed so far, keyed by a fingerprint of the group.
struct CanonicalCache {
  std::string fingerprint;
  std::map<Element, HeckeElt> entries;
};

template <CoxeterGroupLike G>
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(G& group, std::string fingerprint = {}) : group_(&group) {
    cache_.fingerprint = std::move(fingerprint);
  }

  G& group() const { return *group_; }
  CanonicalCache& cache() { return cache_; }
  const CanonicalCache& cache() const { return cache_; }

  LaurentPoly v_s(Generator s) const { return LaurentPoly::power(group_->weight(s)); }

  /// h T_s (right) or T_s h (left).
  HeckeElt mult_gen(const HeckeElt& h, Generator s, Side side) const {
    HeckeElt out;
    const int L = group_->weight(s);
    // v_s^{-1} - v_s
    LaurentPoly correction = LaurentPoly::power(-L) - LaurentPoly::power(L);
    for (const auto& [x, p] : h.terms()) {
      Element xs = group_->multiply(x, s, side);
      out.add_term(xs, p);
      if (xs.length() < x.length()) out.add_term(x, correction * p);
    }
    return out;
  }

  /// h T_s^{-1} with T_s^{-1} = T_s + (v_s - v_s^{-1}).
  HeckeElt mult_gen_inverse(const HeckeElt& h, Generator s, Side side) const {
    HeckeElt out = mult_gen(h, s, side);
    const int L = group_->weight(s);
    out += (LaurentPoly::power(L) - LaurentPoly::power(-L)) * h;
    return out;
  }

  /// a T_w, along the canonical word of w.
  HeckeElt mult_standard(const HeckeElt& a, const Element& w) const {
    HeckeElt acc = a;
    for (Generator s : w.word) acc = mult_gen(acc, s, Side::right);
    return acc;
  }

  HeckeElt mult(const HeckeElt& a, const HeckeElt& b) const {
    HeckeElt out;
    for (const auto& [y, q] : b.terms()) out += q * mult_standard(a, y);
    return out;
  }

  /// bar(T_w) = T_{s_1}^{-1} ... T_{s_n}^{-1}, memoized by w.
  const HeckeElt& bar_standard(const Element& w) {
    if (auto it = bar_memo_.find(w); it != bar_memo_.end()) return it->second;
    HeckeElt value;
    if (w.is_identity()) {
      value = HeckeElt::standard(w);
    } else {
      Element prefix(Word(w.word.begin(), w.word.end() - 1));
      value = mult_gen_inverse(bar_standard(prefix), w.word.back(), Side::right);
    }
    return bar_memo_.emplace(w, std::move(value)).first->second;
  }

  HeckeElt bar(const HeckeElt& h) {
    HeckeElt out;
    for (const auto& [w, p] : h.terms()) out += p.bar() * bar_standard(w);
    return out;
  }

  /// c_s: T_s when L(s) = 0, T_s + v when L(s) = 1.
  HeckeElt canonical_generator(Generator s) const {
    HeckeElt h = HeckeElt::standard(Element(Word{s}));
    if (group_->weight(s) == 1) h.add_term(Element{}, LaurentPoly::power(1));
    return h;
  }

  /// The canonical basis element c_w in the standard basis.
  ///
  /// With s the smallest left descent of w: if L(s) = 0 then c_w = T_s c_{sw}.
  /// Otherwise c_s c_{sw} is bar-invariant with leading term T_w, and lower
  /// coefficients outside vZ[v] are removed from the top down by subtracting
  /// bar-invariant multiples of c_y.
  const HeckeElt& canonical(const Element& w) {
    if (auto it = cache_.entries.find(w); it != cache_.entries.end()) return it->second;
    HeckeElt c;
    if (w.is_identity()) {
      c = HeckeElt::standard(w);
    } else {
      const Generator s = w.word.front();
      Element sw = group_->multiply(w, s, Side::left);
      HeckeElt below = canonical(sw);
      if (group_->weight(s) == 0) {
        c = mult_gen(below, s, Side::left);
      } else {
        c = mult_gen(below, s, Side::left) + LaurentPoly::power(1) * below;
        for (;;) {
          const Element* bad = nullptr;
          for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
            if (it->first != w && !it->second.in_positive_part()) {
              bad = &it->first;
              break;
            }
          if (bad == nullptr) break;
          Element y = *bad;
          LaurentPoly correction = bar_invariant_completion(c.coeff(y));
          HeckeElt cy = canonical(y);
          c -= correction * cy;
        }
      }
    }
    check_canonical(w, c);
    return cache_.entries.emplace(w, std::move(c)).first->second;
  }

  /// Throws VerificationFailure unless h satisfies the defining conditions of
  /// c_w: bar-invariance, p_{w,w} = 1, p_{y,w} in vZ[v] and nonzero only for y <= w.
  void check_canonical(const Element& w, const HeckeElt& h) {
    std::string why = canonical_violation(w, h);
    if (!why.empty()) throw Error(ErrorCode::VerificationFailure, why);
  }

  std::string canonical_violation(const Element& w, const HeckeElt& h) {
    if (h.coeff(w) != LaurentPoly(1)) return "leading coefficient is not 1";
    for (const auto& [y, p] : h.terms()) {
      if (y == w) continue;
      if (!p.in_positive_part()) return "coefficient outside vZ[v]";
      if (!bruhat_leq(*group_, y, w)) return "support not below the top element";
    }
    if (bar(h) != h) return "not bar-invariant";
    return {};
  }

  /// Coordinates of h in the canonical basis, by back-substitution from the
  /// top of the support.
  std::map<Element, LaurentPoly> expand_in_canonical(const HeckeElt& h) {
    std::map<Element, LaurentPoly> out;
    HeckeElt rest = h;
    while (!rest.is_zero()) {
      auto top = std::prev(rest.terms().end());
      Element y = top->first;
      LaurentPoly a = top->second;
      out.emplace(y, a);
      rest -= a * canonical(y);
    }
    if (from_canonical(out) != h)
      throw Error(ErrorCode::VerificationFailure, "canonical-basis expansion does not reproduce the input");
    return out;
  }

  HeckeElt from_canonical(const std::map<Element, LaurentPoly>& coords) {
    HeckeElt out;
    for (const auto& [y, a] : coords) out += a * canonical(y);
    return out;
  }

 private:
  G* group_;
  CanonicalCache cache_;
  std::map<Element, HeckeElt> bar_memo_;
};

}  // namespace hecke01
