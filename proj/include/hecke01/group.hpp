#pragma once

// Group contexts: a Coxeter system together with memoized products by
// generators. Algorithms that only need multiplication by generators and
// word length (Bruhat order, reduced words, enumeration, the Hecke algebra)
// are written against the CoxeterGroupLike concept so that they run both on
// W itself and on a reflection subgroup W' that delegates to W.

#include <concepts>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hecke01/coxeter.hpp"

namespace hecke01 {

enum class Side { left, right };

template <class G>
concept CoxeterGroupLike = requires(G& g, const Element& x, Generator s, Side side) {
  { g.rank() } -> std::convertible_to<std::size_t>;
  { g.weight(s) } -> std::convertible_to<int>;
  { g.multiply(x, s, side) } -> std::same_as<Element>;
};

/// W with memoized multiplication by simple reflections.
///
/// Not thread-safe: the memo table is mutated by `multiply`. Use one context
/// per thread.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterSystem sys, std::size_t length_cap = kDefaultLengthCap)
      : sys_(std::move(sys)), length_cap_(length_cap) {}

  const CoxeterSystem& system() const { return sys_; }
  std::size_t rank() const { return sys_.rank(); }
  int weight(Generator s) const { return sys_.weight(s); }
  std::size_t length_cap() const { return length_cap_; }

  Element normalize(std::span<const Generator> word) const {
    return hecke01::normalize(sys_, word, length_cap_);
  }
  Element normalize(const Word& word) const { return normalize(std::span<const Generator>(word)); }

  Element multiply(const Element& x, Generator s, Side side) {
    sys_.check_generator(s);
    // A canonical word ending in s has s as a right descent, and prefixes of
    // ShortLex-least words are ShortLex-least.
    if (side == Side::right && !x.word.empty() && x.word.back() == s)
      return Element(Word(x.word.begin(), x.word.end() - 1));
    auto& memo = side == Side::right ? right_memo_ : left_memo_;
    auto& row = memo[x];
    if (row.empty()) row.resize(rank());
    auto& slot = row[s];
    if (!slot.has_value()) {
      Word w = side == Side::right ? concat(x.word, Word{s}) : concat(Word{s}, x.word);
      slot = normalize(w);
    }
    return *slot;
  }

  Element multiply(const Element& x, const Element& y) {
    Element out = x;
    for (Generator s : y.word) out = multiply(out, s, Side::right);
    return out;
  }

  Element inverse(const Element& x) const { return normalize(reversed(x.word)); }

  Element conjugate(const Element& g, const Element& x) {
    return multiply(multiply(g, x), inverse(g));
  }

 private:
  CoxeterSystem sys_;
  std::size_t length_cap_;
  std::unordered_map<Element, std::vector<std::optional<Element>>, ElementHash> right_memo_;
  std::unordered_map<Element, std::vector<std::optional<Element>>, ElementHash> left_memo_;
};

/// Bruhat order by the descent recursion: with s a left descent of y,
/// x <= y iff sx <= sy (when sx < x) or x <= sy (otherwise).
template <CoxeterGroupLike G>
bool bruhat_leq(G& group, const Element& x, const Element& y) {
  if (x.length() > y.length()) return false;
  if (x.length() == y.length()) return x == y;
  if (x.is_identity()) return true;
  const Generator s = y.word.front();
  Element sy = group.multiply(y, s, Side::left);
  Element sx = group.multiply(x, s, Side::left);
  if (sx.length() < x.length()) return bruhat_leq(group, sx, sy);
  return bruhat_leq(group, x, sy);
}

/// All reduced words of w, in lexicographic order.
template <CoxeterGroupLike G>
std::vector<Word> reduced_words(G& group, const Element& w) {
  std::map<Element, std::vector<Word>> memo;
  auto rec = [&](auto&& self, const Element& x) -> const std::vector<Word>& {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (x.is_identity()) {
      out.push_back({});
    } else {
      for (std::size_t s = 0; s < group.rank(); ++s) {
        Element sx = group.multiply(x, static_cast<Generator>(s), Side::left);
        if (sx.length() >= x.length()) continue;
        for (const Word& tail : self(self, sx)) {
          Word word{static_cast<Generator>(s)};
          word.insert(word.end(), tail.begin(), tail.end());
          out.push_back(std::move(word));
        }
      }
    }
    return memo.emplace(x, std::move(out)).first->second;
  };
  return rec(rec, w);
}

struct Enumeration {
  std::vector<Element> elements;  // sorted by (length, word)
  bool complete = false;          // no element longer than max_length exists
};

/// Elements of length <= max_length generated by `gens` (all generators
/// when empty), in (length, word) order. Throws CapExceeded past `cap`.
template <CoxeterGroupLike G>
Enumeration enumerate_elements(G& group, std::size_t max_length, std::size_t cap,
                               std::vector<Generator> gens = {}) {
  if (gens.empty())
    for (std::size_t s = 0; s < group.rank(); ++s) gens.push_back(static_cast<Generator>(s));
  Enumeration out;
  std::set<Element> seen{Element{}};
  std::vector<Element> layer{Element{}};
  out.elements.push_back(Element{});
  bool longer_exists = false;
  for (std::size_t len = 0; !layer.empty(); ++len) {
    std::set<Element> next;
    for (const Element& x : layer)
      for (Generator s : gens) {
        Element xs = group.multiply(x, s, Side::right);
        if (xs.length() <= x.length() || seen.count(xs)) continue;
        next.insert(std::move(xs));
      }
    if (next.empty()) break;
    if (len + 1 > max_length) {
      longer_exists = true;
      break;
    }
    if (out.elements.size() + next.size() > cap)
      throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " elements");
    layer.assign(next.begin(), next.end());
    for (const Element& x : layer) {
      seen.insert(x);
      out.elements.push_back(x);
    }
  }
  out.complete = !longer_exists;
  return out;
}

/// The standard parabolic subgroup generated by `gens`; it must be finite
/// within `cap` elements.
inline std::vector<Element> parabolic_subgroup(CoxeterGroup& group, const std::vector<Generator>& gens,
                                               std::size_t cap) {
  if (gens.empty()) return {Element{}};
  Enumeration e = enumerate_elements(group, cap, cap, gens);
  if (!e.complete) throw Error(ErrorCode::CapExceeded, "parabolic subgroup exceeds cap");
  return e.elements;
}

inline bool in_parabolic(const Element& x, const std::vector<Generator>& gens) {
  for (Generator s : x.word)
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) return false;
  return true;
}

}  // namespace hecke01
