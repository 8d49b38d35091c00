#pragma once

// The reflection subgroup W' generated by the weight-1 reflections T_1,
// its simple reflections S', and the embedding of its Hecke algebra.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hecke01/group.hpp"
#include "hecke01/hecke.hpp"

namespace hecke01 {

/// r = g t g^{-1} written as prefix(g) . middle . reversed prefix.
struct Palindrome {
  Word prefix;  // letters in S_0
  Generator middle = 0;  // a letter in S_1

  Word word() const {
    Word w = prefix;
    w.push_back(middle);
    Word back = reversed(prefix);
    w.insert(w.end(), back.begin(), back.end());
    return w;
  }
};

struct SubgroupData {
  std::vector<Generator> s0;
  std::vector<Generator> s1;
  std::vector<Element> parabolic;  // W_{S_0}, in (length, word) order

  /// S' sorted by (W-length, word); index i is the generator i of W'.
  std::vector<Element> sprime;
  std::vector<Palindrome> palindromes;
  /// Induced Coxeter matrix over S'; 0 encodes infinity.
  std::vector<std::vector<int>> matrix;

  /// Reflections of T_1 with n_1 = 1 among the enumerated roots.
  std::vector<Element> dyer_filter;
  bool reflections_truncated = false;

  std::size_t index_of(const Element& r) const {
    auto it = std::find(sprime.begin(), sprime.end(), r);
    return it == sprime.end() ? sprime.size() : static_cast<std::size_t>(it - sprime.begin());
  }
};

/// Compares the two constructions of S': reflections t in T_1 with
/// n_1(t) = 1, and the conjugates g t g^{-1} with g in W_{S_0}, t in S_1.
/// Returns an empty string when they agree (on the enumerated part of T_1
/// when the root enumeration was truncated).
inline std::string sprime_characterization_mismatch(const SubgroupData& data) {
  std::set<Element> filter(data.dyer_filter.begin(), data.dyer_filter.end());
  std::set<Element> conj(data.sprime.begin(), data.sprime.end());
  for (const Element& r : filter)
    if (!conj.count(r)) return "a reflection with n_1 = 1 is not a W_{S_0}-conjugate of S_1";
  if (!data.reflections_truncated)
    for (const Element& r : conj)
      if (!filter.count(r)) return "a W_{S_0}-conjugate of S_1 is missing from the n_1 = 1 filter";
  return {};
}

/// Computes S' by both characterizations, checks that they agree, and
/// extracts reduced palindromic words. `cap` bounds W_{S_0}; `root_cap`
/// bounds the enumeration of positive roots feeding the n_1 = 1 filter.
inline SubgroupData compute_sprime(CoxeterGroup& group, std::size_t cap, std::size_t root_cap) {
  const CoxeterSystem& sys = group.system();
  SubgroupData data;
  data.s0 = sys.generators_of_weight(0);
  data.s1 = sys.generators_of_weight(1);
  data.parabolic = parabolic_subgroup(group, data.s0, cap);

  // Conjugates of S_1 by W_{S_0}; the first witness found has minimal length.
  std::map<Element, Palindrome> witness;
  for (const Element& g : data.parabolic)
    for (Generator t : data.s1) {
      Element r = group.conjugate(g, Element(Word{t}));
      witness.try_emplace(r, Palindrome{g.word, t});
    }
  if (witness.size() > 255) throw Error(ErrorCode::CapExceeded, "S' has more than 255 elements");
  for (const auto& [r, pal] : witness) {
    if (r.length() != 2 * pal.prefix.size() + 1 || group.normalize(pal.word()) != r)
      throw Error(ErrorCode::VerificationFailure, "S' element without a reduced palindromic word");
    if (n_e(sys, r, 1) != 1) throw Error(ErrorCode::VerificationFailure, "S' element with n_1 != 1");
    data.sprime.push_back(r);
    data.palindromes.push_back(pal);
  }

  RootSystem roots = positive_roots(sys, root_cap);
  data.reflections_truncated = roots.truncated;
  for (const Root& root : roots.roots) {
    if (root.label != 1) continue;
    Element r = reflection_of_root(sys, root, group.length_cap());
    if (n_e(sys, r, 1) == 1) data.dyer_filter.push_back(r);
  }
  std::sort(data.dyer_filter.begin(), data.dyer_filter.end());

  if (std::string why = sprime_characterization_mismatch(data); !why.empty())
    throw Error(ErrorCode::VerificationFailure, why);
  return data;
}

/// Order of r r' for each pair of S' elements; orders above `order_cap` are
/// recorded as infinity (0).
inline std::vector<std::vector<int>> induced_matrix(CoxeterGroup& group, const SubgroupData& data,
                                                    int order_cap = 12) {
  const std::size_t n = data.sprime.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Element x = group.multiply(data.sprime[i], data.sprime[j]);
      Element p = x;
      int k = 1;
      while (!p.is_identity() && k < order_cap) {
        p = group.multiply(p, x);
        ++k;
      }
      m[i][j] = m[j][i] = p.is_identity() ? k : kInfinity;
    }
  return m;
}

inline SubgroupData build_subgroup(CoxeterGroup& group, std::size_t cap, std::size_t root_cap,
                                   int order_cap = 12) {
  SubgroupData data = compute_sprime(group, cap, root_cap);
  data.matrix = induced_matrix(group, data, order_cap);
  return data;
}

/// W' as a Coxeter group in its own right, generated by S'.
///
/// Elements are ShortLex-least S'-words. Every computation is delegated to
/// the ambient group: the length of x in W' is n_1(x), so r in S' is a left
/// descent of x iff n_1(r x) < n_1(x).
class ReflectionSubgroup {
 public:
  ReflectionSubgroup(CoxeterGroup& ambient, const SubgroupData& data) : ambient_(&ambient), data_(&data) {}

  std::size_t rank() const { return data_->sprime.size(); }
  int weight(Generator) const { return 1; }
  CoxeterGroup& ambient() const { return *ambient_; }
  const SubgroupData& data() const { return *data_; }

  std::size_t n1(const Element& ambient_element) const {
    return n_e(ambient_->system(), ambient_element, 1);
  }

  Element to_ambient(const Element& x) {
    if (auto it = to_ambient_.find(x); it != to_ambient_.end()) return it->second;
    Element out;
    for (Generator r : x.word) {
      check_generator(r);
      out = ambient_->multiply(out, data_->sprime[r]);
    }
    to_ambient_.emplace(x, out);
    return out;
  }

  /// The S'-word of an element of W; throws NotInSubgroup otherwise.
  Element from_ambient(const Element& x) {
    if (auto it = from_ambient_.find(x); it != from_ambient_.end()) return it->second;
    Element out;
    Element y = x;
    std::size_t level = n1(y);
    while (level > 0) {
      bool found = false;
      for (std::size_t r = 0; r < rank(); ++r) {
        Element ry = ambient_->multiply(data_->sprime[r], y);
        std::size_t next = n1(ry);
        if (next < level) {
          out.word.push_back(static_cast<Generator>(r));
          y = std::move(ry);
          level = next;
          found = true;
          break;
        }
      }
      if (!found) break;
    }
    if (!y.is_identity()) throw Error(ErrorCode::NotInSubgroup, "element is not in the reflection subgroup");
    from_ambient_.emplace(x, out);
    to_ambient_.emplace(out, x);
    return out;
  }

  Element multiply(const Element& x, Generator r, Side side) {
    check_generator(r);
    const Element& gen = data_->sprime[r];
    Element ax = to_ambient(x);
    Element prod = side == Side::right ? ambient_->multiply(ax, gen) : ambient_->multiply(gen, ax);
    return from_ambient(prod);
  }

 private:
  void check_generator(Generator r) const {
    if (r >= rank())
      throw Error(ErrorCode::NotInSubgroup, "S' index " + std::to_string(r + 1) + " out of range");
  }

  CoxeterGroup* ambient_;
  const SubgroupData* data_;
  std::map<Element, Element> to_ambient_;
  std::map<Element, Element> from_ambient_;
};

struct SubgroupElement {
  Element word;     // S'-word
  Element ambient;  // the same element of W
};

struct SubgroupEnumeration {
  std::vector<SubgroupElement> elements;
  bool complete = false;
};

/// Breadth-first enumeration of W' up to S'-length `max_length`, checking
/// that the S'-length of each element equals n_1.
inline SubgroupEnumeration enumerate_subgroup(ReflectionSubgroup& sub, std::size_t max_length,
                                              std::size_t cap) {
  Enumeration e = enumerate_elements(sub, max_length, cap);
  SubgroupEnumeration out;
  out.complete = e.complete;
  for (const Element& x : e.elements) {
    Element a = sub.to_ambient(x);
    if (sub.n1(a) != x.length())
      throw Error(ErrorCode::VerificationFailure, "S'-length differs from n_1");
    out.elements.push_back({x, a});
  }
  return out;
}

/// The permutation i -> index of g r_i g^{-1} in S', for g in W_{S_0}.
inline std::vector<std::size_t> conjugate_sprime(CoxeterGroup& group, const SubgroupData& data,
                                                 const Element& g) {
  if (!in_parabolic(g, data.s0)) throw Error(ErrorCode::NotInParabolic, "conjugating element not in W_{S_0}");
  std::vector<std::size_t> perm;
  std::vector<bool> hit(data.sprime.size(), false);
  for (const Element& r : data.sprime) {
    std::size_t j = data.index_of(group.conjugate(g, r));
    if (j == data.sprime.size() || hit[j])
      throw Error(ErrorCode::NotPreserved, "conjugation does not permute S'");
    hit[j] = true;
    perm.push_back(j);
  }
  return perm;
}

/// T'_x -> T_x, re-expressing x in W.
inline HeckeElt rho_embed(ReflectionSubgroup& sub, const HeckeElt& h) {
  HeckeElt out;
  for (const auto& [x, p] : h.terms()) {
    Element a = sub.to_ambient(x);
    if (sub.from_ambient(a) != x)
      throw Error(ErrorCode::NotInSubgroup, "support word is not a reduced ShortLex S'-word");
    out.add_term(a, p);
  }
  return out;
}

}  // namespace hecke01
