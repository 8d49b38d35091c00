#pragma once

// Characters of Bott-Samelson type bimodules B^L_w built from R_s (weight-0
// letters) and B_t (weight-1 letters), their decomposition into characters
// of indecomposables, and the normal form that moves every R_s to one side.
//
// Everything here is decategorified: ch(R_s) = T_s, ch(B_t) = T_t + v, and a
// grading shift [k] is multiplication by v^k.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hecke01/dyer.hpp"
#include "hecke01/hecke.hpp"

namespace hecke01 {

using BSExpression = Word;
using GroupAlgebra = HeckeAlgebra<CoxeterGroup>;
using SubgroupAlgebra = HeckeAlgebra<ReflectionSubgroup>;

/// ch(B^L_expr): the product of c_s over the letters of expr.
inline HeckeElt bs_character(const GroupAlgebra& alg, std::span<const Generator> expr) {
  HeckeElt h = HeckeElt::standard(Element{});
  for (Generator s : expr) {
    alg.group().system().check_generator(s);
    HeckeElt next = alg.mult_gen(h, s, Side::right);
    if (alg.group().weight(s) == 1) next += LaurentPoly::power(1) * h;
    h = std::move(next);
  }
  return h;
}

struct DecompositionReport {
  BSExpression expr;
  HeckeElt character;
  std::map<Element, LaurentPoly> multiplicities;
  std::optional<Element> top;  // set iff expr is a reduced word

  bool standard_positive = true;  // T-basis coefficients have nonnegative coefficients
  bool positivity_ok = true;      // multiplicities have nonnegative coefficients
  bool bar_symmetric = true;      // multiplicities are bar-invariant
  std::optional<bool> top_multiplicity_one;
  std::optional<bool> support_below_top;

  bool all_ok() const {
    return standard_positive && positivity_ok && bar_symmetric && top_multiplicity_one.value_or(true) &&
           support_below_top.value_or(true);
  }
};

inline DecompositionReport decompose_bs(GroupAlgebra& alg, std::span<const Generator> expr) {
  DecompositionReport rep;
  rep.expr.assign(expr.begin(), expr.end());
  rep.character = bs_character(alg, expr);
  rep.multiplicities = alg.expand_in_canonical(rep.character);

  for (const auto& [y, p] : rep.character.terms())
    if (!p.has_nonnegative_coeffs()) rep.standard_positive = false;
  for (const auto& [x, p] : rep.multiplicities) {
    if (!p.has_nonnegative_coeffs()) rep.positivity_ok = false;
    if (!p.is_bar_invariant()) rep.bar_symmetric = false;
  }

  Element w = alg.group().normalize(rep.expr);
  if (w.length() == rep.expr.size()) {
    rep.top = w;
    auto it = rep.multiplicities.find(w);
    rep.top_multiplicity_one = it != rep.multiplicities.end() && it->second == LaurentPoly(1);
    bool below = true;
    for (const auto& [x, p] : rep.multiplicities)
      if (x != w && !(x.length() < w.length() && bruhat_leq(alg.group(), x, w))) below = false;
    rep.support_below_top = below;
  }
  return rep;
}

/// ch(B^L_w) = c_w.
inline HeckeElt indec_character(GroupAlgebra& alg, const Element& w) { return alg.canonical(w); }

enum class SweepDirection { right, left };

/// expr = (product of B'_r over factors) (x) R_tail for the right sweep, or
/// R_tail (x) (product of B'_r over factors) for the left sweep.
struct SweepNormalForm {
  std::vector<std::size_t> factors;  // indices into SubgroupData::sprime
  Element tail;                      // in W_{S_0}
  SweepDirection direction = SweepDirection::right;
};

/// Moves every R_s (s in S_0) to one side using R_g B_t R_{g^{-1}} = B'_{g t g^{-1}}.
inline SweepNormalForm sweep_normalize(CoxeterGroup& group, const SubgroupData& data,
                                       std::span<const Generator> expr,
                                       SweepDirection direction = SweepDirection::right) {
  const CoxeterSystem& sys = group.system();
  SweepNormalForm out;
  out.direction = direction;
  Element g;
  auto emit = [&](Generator t) {
    // right sweep: g t g^{-1}; left sweep: g^{-1} t g
    Element r = direction == SweepDirection::right ? group.conjugate(g, Element(Word{t}))
                                                   : group.conjugate(group.inverse(g), Element(Word{t}));
    std::size_t i = data.index_of(r);
    if (i == data.sprime.size())
      throw Error(ErrorCode::SprimeLookupFailed, "conjugate of a weight-1 generator is not in S'");
    out.factors.push_back(i);
  };
  if (direction == SweepDirection::right) {
    for (Generator s : expr) {
      sys.check_generator(s);
      if (sys.weight(s) == 0) g = group.multiply(g, s, Side::right);
      else emit(s);
    }
  } else {
    for (auto it = expr.rbegin(); it != expr.rend(); ++it) {
      sys.check_generator(*it);
      if (sys.weight(*it) == 0) g = group.multiply(g, *it, Side::left);
      else emit(*it);
    }
    std::reverse(out.factors.begin(), out.factors.end());
  }
  out.tail = g;
  return out;
}

/// The character of a sweep normal form: rho(prod (T'_r + v)) T_tail, or
/// T_tail rho(prod (T'_r + v)).
inline HeckeElt sweep_character(GroupAlgebra& alg, SubgroupAlgebra& sub_alg, const SweepNormalForm& nf) {
  HeckeElt prod = HeckeElt::standard(Element{});
  for (std::size_t r : nf.factors) prod = sub_alg.mult(prod, sub_alg.canonical_generator(static_cast<Generator>(r)));
  HeckeElt embedded = rho_embed(sub_alg.group(), prod);
  HeckeElt tail = HeckeElt::standard(nf.tail);
  return nf.direction == SweepDirection::right ? alg.mult(embedded, tail) : alg.mult(tail, embedded);
}

/// T_g c_w = c_{gw} and c_w T_g = c_{wg} for g in W_{S_0}.
inline bool translate_check(GroupAlgebra& alg, const SubgroupData& data, const Element& g, const Element& w) {
  if (!in_parabolic(g, data.s0)) throw Error(ErrorCode::NotInParabolic, "translating element not in W_{S_0}");
  CoxeterGroup& group = alg.group();
  HeckeElt cw = alg.canonical(w);
  HeckeElt tg = HeckeElt::standard(g);
  HeckeElt left = alg.mult(tg, cw);
  HeckeElt right = alg.mult(cw, tg);
  return left == alg.canonical(group.multiply(g, w)) && right == alg.canonical(group.multiply(w, g));
}

}  // namespace hecke01
