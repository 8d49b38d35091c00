#pragma once

// Coxeter systems with a {0,1}-valued weight function, elements in ShortLex
// normal form, and the root system of the geometric representation.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hecke01/error.hpp"
#include "hecke01/quad_scalar.hpp"

namespace hecke01 {

using Generator = std::uint8_t;
using Word = std::vector<Generator>;

/// Matrix entry encoding m = infinity.
inline constexpr int kInfinity = 0;
inline constexpr std::size_t kDefaultLengthCap = 2000;

/// A group element, represented by its ShortLex-least reduced word.
///
/// Elements produced by `normalize` (or a group context) are canonical, so
/// equality of words is equality in the group. Ordering is by (length, word).
struct Element {
  Word word;

  Element() = default;
  explicit Element(Word w) : word(std::move(w)) {}

  std::size_t length() const { return word.size(); }
  bool is_identity() const { return word.empty(); }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.word.size() <=> b.word.size(); c != 0) return c;
    return a.word <=> b.word;
  }
};

struct ElementHash {
  std::size_t operator()(const Element& x) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Generator g : x.word) h = (h ^ g) * 1099511628211ull;
    return h ^ x.word.size();
  }
};

inline Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

inline Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

class CoxeterSystem {
 public:
  using Matrix = std::vector<std::vector<int>>;

  /// Validates the Coxeter matrix (0 = infinity) and the weight function.
  CoxeterSystem(Matrix matrix, std::vector<int> weights, std::vector<std::string> names = {},
                std::string name = {})
      : matrix_(std::move(matrix)),
        weights_(std::move(weights)),
        names_(std::move(names)),
        name_(std::move(name)) {
    const std::size_t n = matrix_.size();
    if (n == 0) throw Error(ErrorCode::InvalidInput, "rank must be positive");
    if (n > 64) throw Error(ErrorCode::InvalidInput, "rank larger than 64 is not supported");
    for (const auto& row : matrix_)
      if (row.size() != n) throw Error(ErrorCode::InvalidInput, "Coxeter matrix is not square");
    if (weights_.size() != n)
      throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(n) + " weights");
    if (!names_.empty() && names_.size() != n)
      throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(n) + " generator names");

    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (matrix_[s][t] != matrix_[t][s])
          throw Error(ErrorCode::NonSymmetricMatrix, "m[" + std::to_string(s + 1) + "][" +
                                                         std::to_string(t + 1) + "] != m[" +
                                                         std::to_string(t + 1) + "][" +
                                                         std::to_string(s + 1) + "]");
    for (std::size_t s = 0; s < n; ++s)
      if (matrix_[s][s] != 1)
        throw Error(ErrorCode::BadDiagonal, "diagonal entry " + std::to_string(s + 1) + " is not 1");
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        if (s == t) continue;
        int m = matrix_[s][t];
        if (m != kInfinity && (m < 2 || m > 6))
          throw Error(ErrorCode::UnsupportedOrder, "m = " + std::to_string(m) + " between generators " +
                                                       std::to_string(s + 1) + " and " +
                                                       std::to_string(t + 1));
      }
    for (std::size_t s = 0; s < n; ++s)
      if (weights_[s] != 0 && weights_[s] != 1)
        throw Error(ErrorCode::BadWeight, "weight of generator " + std::to_string(s + 1) + " is " +
                                              std::to_string(weights_[s]));
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = s + 1; t < n; ++t) {
        int m = matrix_[s][t];
        if (m != kInfinity && m % 2 == 1 && weights_[s] != weights_[t])
          throw Error(ErrorCode::OddEdgeWeightMismatch,
                      "generators " + std::to_string(s + 1) + " and " + std::to_string(t + 1) +
                          " have odd m = " + std::to_string(m) + " but different weights");
      }

    gram_.assign(n, std::vector<QuadScalar>(n));
    two_gram_.assign(n, std::vector<QuadScalar>(n));
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        gram_[s][t] = s == t ? QuadScalar(1) : -cos_pi_over(matrix_[s][t]);
        two_gram_[s][t] = gram_[s][t] + gram_[s][t];
      }
  }

  std::size_t rank() const { return matrix_.size(); }
  const Matrix& coxeter_matrix() const { return matrix_; }
  int order(Generator s, Generator t) const { return matrix_[s][t]; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(Generator s) const { return weights_[s]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name() const { return name_; }

  /// B(alpha_s, alpha_t) = -cos(pi / m_st).
  const QuadScalar& gram(Generator s, Generator t) const { return gram_[s][t]; }
  const QuadScalar& two_gram(Generator s, Generator t) const { return two_gram_[s][t]; }

  /// S_e, in increasing order.
  std::vector<Generator> generators_of_weight(int e) const {
    std::vector<Generator> out;
    for (std::size_t s = 0; s < rank(); ++s)
      if (weights_[s] == e) out.push_back(static_cast<Generator>(s));
    return out;
  }

  void check_generator(std::size_t s) const {
    if (s >= rank())
      throw Error(ErrorCode::BadGenerator,
                  "generator index " + std::to_string(s + 1) + " exceeds rank " + std::to_string(rank()));
  }

 private:
  Matrix matrix_;
  std::vector<int> weights_;
  std::vector<std::string> names_;
  std::string name_;
  std::vector<std::vector<QuadScalar>> gram_;
  std::vector<std::vector<QuadScalar>> two_gram_;
};

using Vector = std::vector<QuadScalar>;

/// In-place action of the simple reflection s on simple-root coordinates:
/// lambda -> lambda - 2 B(alpha_s, lambda) alpha_s.
inline void reflect(const CoxeterSystem& sys, Generator s, Vector& lambda) {
  QuadScalar pairing;
  for (std::size_t t = 0; t < sys.rank(); ++t) {
    if (lambda[t].is_zero()) continue;
    const QuadScalar& b = sys.two_gram(s, static_cast<Generator>(t));
    if (b.is_zero()) continue;
    pairing += b * lambda[t];
  }
  lambda[s] -= pairing;
}

/// Sign of a vector that is known to be a root: its coordinates share a sign.
inline int root_sign(const Vector& coords) {
  for (const auto& x : coords)
    if (!x.is_zero()) return x.sign();
  return 0;
}

inline Vector simple_root_coords(const CoxeterSystem& sys, Generator s) {
  Vector v(sys.rank());
  v[s] = QuadScalar(1);
  return v;
}

/// ShortLex-least reduced word of the product of `word`.
///
/// Tracks the columns w^{-1}(alpha_t); the smallest t with a negative column
/// is the smallest left descent of w, which is peeled off repeatedly.
inline Element normalize(const CoxeterSystem& sys, std::span<const Generator> word,
                         std::size_t length_cap = kDefaultLengthCap) {
  const std::size_t n = sys.rank();
  std::vector<Vector> cols(n);
  for (std::size_t t = 0; t < n; ++t) cols[t] = simple_root_coords(sys, static_cast<Generator>(t));
  for (Generator s : word) {
    sys.check_generator(s);
    for (auto& col : cols) reflect(sys, s, col);
  }

  Element out;
  for (;;) {
    std::size_t descent = n;
    for (std::size_t t = 0; t < n; ++t)
      if (root_sign(cols[t]) < 0) {
        descent = t;
        break;
      }
    if (descent == n) break;
    if (out.word.size() >= length_cap)
      throw Error(ErrorCode::LengthCapExceeded,
                  "reduced length exceeds cap " + std::to_string(length_cap));
    out.word.push_back(static_cast<Generator>(descent));
    const Vector pivot = cols[descent];
    for (std::size_t t = 0; t < n; ++t) {
      const QuadScalar& b = sys.two_gram(static_cast<Generator>(descent), static_cast<Generator>(t));
      if (b.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i].is_zero()) cols[t][i] -= b * pivot[i];
    }
  }
  return out;
}

inline Element normalize(const CoxeterSystem& sys, std::initializer_list<Generator> word,
                         std::size_t length_cap = kDefaultLengthCap) {
  return normalize(sys, std::span<const Generator>(word.begin(), word.size()), length_cap);
}

/// A root u(alpha_seed) of the geometric representation, labelled by L(seed).
struct Root {
  Vector coords;
  int label = 0;
  Element witness;
  Generator seed = 0;

  int sign() const { return root_sign(coords); }
  bool is_positive() const { return sign() > 0; }
};

inline Root simple_root(const CoxeterSystem& sys, Generator s) {
  return Root{simple_root_coords(sys, s), sys.weight(s), Element{}, s};
}

/// Coordinates of w(lambda); letters act right to left.
inline Vector act(const CoxeterSystem& sys, const Word& w, Vector lambda) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) reflect(sys, *it, lambda);
  return lambda;
}

inline Root act_on_root(const CoxeterSystem& sys, const Element& w, const Root& r,
                        std::size_t length_cap = kDefaultLengthCap) {
  Root out;
  out.coords = act(sys, w.word, r.coords);
  out.label = r.label;
  out.seed = r.seed;
  out.witness = normalize(sys, concat(w.word, r.witness.word), length_cap);
  return out;
}

/// The positive roots sent negative by w^{-1}, i.e. Phi^+ ∩ w(Phi^-).
///
/// For the reduced word s_1...s_n these are s_1...s_{i-1}(alpha_{s_i}). The
/// images u(alpha_t) of the running prefix u are updated one letter at a time.
inline std::vector<Root> inversions(const CoxeterSystem& sys, const Element& w) {
  const std::size_t n = sys.rank();
  std::vector<Vector> images(n);
  for (std::size_t t = 0; t < n; ++t) images[t] = simple_root_coords(sys, static_cast<Generator>(t));
  std::vector<Root> out;
  out.reserve(w.length());
  Word prefix;
  for (Generator s : w.word) {
    out.push_back(Root{images[s], sys.weight(s), Element{prefix}, s});
    // (u s)(alpha_t) = u(alpha_t) - 2B(alpha_s, alpha_t) u(alpha_s)
    const Vector pivot = images[s];
    for (std::size_t t = 0; t < n; ++t) {
      const QuadScalar& b = sys.two_gram(s, static_cast<Generator>(t));
      if (b.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i].is_zero()) images[t][i] -= b * pivot[i];
    }
    prefix.push_back(s);
  }
  return out;
}

/// n_e(w): the number of inversions of w whose root lies in Phi_e.
///
/// The inversion s_1...s_{i-1}(alpha_{s_i}) lies in the orbit of alpha_{s_i},
/// so its label is L(s_i) and the count reduces to letters of weight e.
inline std::size_t n_e(const CoxeterSystem& sys, const Element& w, int e) {
  std::size_t count = 0;
  for (Generator s : w.word)
    if (sys.weight(s) == e) ++count;
  return count;
}

// Arbitrary strict total order on coordinate vectors, for exact lookup.
struct VectorLess {
  bool operator()(const Vector& a, const Vector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (unsigned m = 0; m < 8; ++m) {
        const Rational& x = a[i].by_mask(m);
        const Rational& y = b[i].by_mask(m);
        if (x != y) return x < y;
      }
    return false;
  }
};

struct RootSystem {
  std::vector<Root> roots;
  bool truncated = false;
};

/// Breadth-first enumeration of the positive roots from the simple roots.
///
/// Labels are inherited from the seed simple root. Reaching the same root
/// with two different labels would contradict T_0 ∩ T_1 = ∅ and throws.
inline RootSystem positive_roots(const CoxeterSystem& sys, std::size_t cap) {
  RootSystem out;
  std::map<Vector, std::size_t, VectorLess> index;
  auto find = [&](const Vector& coords) -> const Root* {
    auto it = index.find(coords);
    return it == index.end() ? nullptr : &out.roots[it->second];
  };
  for (std::size_t s = 0; s < sys.rank() && out.roots.size() < cap; ++s) {
    out.roots.push_back(simple_root(sys, static_cast<Generator>(s)));
    index.emplace(out.roots.back().coords, out.roots.size() - 1);
  }
  if (out.roots.size() < sys.rank()) out.truncated = true;

  for (std::size_t head = 0; head < out.roots.size(); ++head) {
    for (std::size_t t = 0; t < sys.rank(); ++t) {
      const Root& r = out.roots[head];
      Vector image = r.coords;
      reflect(sys, static_cast<Generator>(t), image);
      if (root_sign(image) <= 0) continue;
      if (const Root* seen = find(image)) {
        if (seen->label != r.label)
          throw Error(ErrorCode::VerificationFailure, "a root carries both labels 0 and 1");
        continue;
      }
      if (out.roots.size() >= cap) {
        out.truncated = true;
        continue;
      }
      Word witness = concat(Word{static_cast<Generator>(t)}, r.witness.word);
      Root next{image, r.label, normalize(sys, witness), r.seed};
      out.roots.push_back(std::move(next));
      index.emplace(std::move(image), out.roots.size() - 1);
    }
  }
  return out;
}

/// The reflection u s u^{-1} through the root u(alpha_s).
inline Element reflection_of_root(const CoxeterSystem& sys, const Root& r,
                                  std::size_t length_cap = kDefaultLengthCap) {
  Word w = r.witness.word;
  w.push_back(r.seed);
  Word back = reversed(r.witness.word);
  w.insert(w.end(), back.begin(), back.end());
  return normalize(sys, w, length_cap);
}

}  // namespace hecke01
