#pragma once

// Laurent polynomials in one variable v with integer coefficients.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace hecke01 {

class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_[0] = constant;
  }

  static LaurentPoly monomial(int exponent, Coeff coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exponent] = coeff;
    return p;
  }

  /// v^e; v_s = v^{L(s)} is `power(L(s))`.
  static LaurentPoly power(int exponent) { return monomial(exponent, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  // Undefined on the zero polynomial.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  void add_term(int exponent, Coeff coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// The ring involution v -> v^{-1}.
  LaurentPoly bar() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

  bool is_bar_invariant() const {
    for (const auto& [e, c] : terms_)
      if (coeff(-e) != c) return false;
    return true;
  }

  /// Membership in vZ[v]: every exponent strictly positive (zero included).
  bool in_positive_part() const { return terms_.empty() || min_exponent() > 0; }

  bool has_nonnegative_coeffs() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  // Renders as "v^-1 + 2 + v^3"; the zero polynomial is "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Coeff mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag;
      os << 'v';
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

/// The unique bar-invariant polynomial congruent to p modulo vZ[v].
inline LaurentPoly bar_invariant_completion(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e > 0) break;
    out.add_term(e, c);
    if (e < 0) out.add_term(-e, c);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  return os << p.to_string();
}

}  // namespace hecke01
