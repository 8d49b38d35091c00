#pragma once

// Exact arithmetic in the field Q(sqrt2, sqrt3, sqrt5).
//
// An element is stored as eight rationals on the basis of square roots of
// squarefree products of {2, 3, 5}. Internally the basis vector sqrt(d) is
// indexed by a 3-bit mask (bit 0 -> 2, bit 1 -> 3, bit 2 -> 5), so that
// sqrt(a) * sqrt(b) = gcd-part * sqrt(a xor b). The public coordinate order is
// {1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10, sqrt15, sqrt30}.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hecke01 {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class QuadScalar {
 public:
  static constexpr std::array<int, 3> kPrimes{2, 3, 5};
  // Public coordinate index -> internal mask.
  static constexpr std::array<unsigned, 8> kMaskOfCoord{0, 1, 2, 4, 3, 5, 6, 7};

  QuadScalar() = default;
  QuadScalar(long long value) { set(0, value); }  // NOLINT(google-explicit-constructor)
  QuadScalar(const Rational& value) { set(0, value); }  // NOLINT(google-explicit-constructor)

  /// Coordinates in public order {1, √2, √3, √5, √6, √10, √15, √30}.
  static QuadScalar from_coords(const std::array<Rational, 8>& coords) {
    QuadScalar x;
    for (std::size_t i = 0; i < 8; ++i) x.set(kMaskOfCoord[i], coords[i]);
    return x;
  }
  static QuadScalar from_coords(std::initializer_list<long long> coords) {
    std::array<Rational, 8> a{};
    std::size_t i = 0;
    for (long long c : coords) {
      if (i == 8) throw std::invalid_argument("QuadScalar: more than 8 coordinates");
      a[i++] = c;
    }
    return from_coords(a);
  }

  /// q * sqrt(d) for squarefree d dividing 30.
  static QuadScalar radical(int d, const Rational& q = 1) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < kPrimes.size(); ++i)
      if (d % kPrimes[i] == 0) mask |= 1u << i;
    if (radicand(mask) != d) throw std::invalid_argument("QuadScalar::radical: unsupported radicand");
    QuadScalar x;
    x.set(mask, q);
    return x;
  }

  Rational coord(std::size_t i) const { return c_[kMaskOfCoord.at(i)]; }
  const Rational& by_mask(unsigned mask) const { return c_[mask]; }

  bool is_zero() const { return support_ == 0; }
  bool is_rational() const { return (support_ & ~1u) == 0; }

  QuadScalar& operator+=(const QuadScalar& o) {
    for (unsigned m = 0; m < 8; ++m)
      if (o.support_ & (1u << m)) set(m, c_[m] + o.c_[m]);
    return *this;
  }
  QuadScalar& operator-=(const QuadScalar& o) {
    for (unsigned m = 0; m < 8; ++m)
      if (o.support_ & (1u << m)) set(m, c_[m] - o.c_[m]);
    return *this;
  }
  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator-(QuadScalar a) {
    for (auto& q : a.c_) q = -q;
    return a;
  }

  friend QuadScalar operator*(const QuadScalar& a, const QuadScalar& b) {
    QuadScalar out;
    if (a.support_ == 1 && b.support_ == 1) {
      out.set(0, a.c_[0] * b.c_[0]);
      return out;
    }
    std::array<Rational, 8> acc{};
    for (unsigned i = 0; i < 8; ++i) {
      if (!(a.support_ & (1u << i))) continue;
      for (unsigned j = 0; j < 8; ++j) {
        if (!(b.support_ & (1u << j))) continue;
        acc[i ^ j] += a.c_[i] * b.c_[j] * radicand(i & j);
      }
    }
    for (unsigned m = 0; m < 8; ++m) out.set(m, acc[m]);
    return out;
  }
  QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }

  friend bool operator==(const QuadScalar& a, const QuadScalar& b) {
    return a.support_ == b.support_ && a.c_ == b.c_;
  }

  /// Image under the automorphism sqrt(p) -> -sqrt(p).
  QuadScalar conjugate(int prime) const {
    unsigned bit = 0;
    for (std::size_t i = 0; i < kPrimes.size(); ++i)
      if (kPrimes[i] == prime) bit = 1u << i;
    if (bit == 0) throw std::invalid_argument("QuadScalar::conjugate: prime must be 2, 3 or 5");
    QuadScalar out = *this;
    for (unsigned m = 0; m < 8; ++m)
      if (m & bit) out.c_[m] = -out.c_[m];
    return out;
  }

  // x * conj2(x) lies in Q(√3,√5), times its conj3 lies in Q(√5), and so on
  // down to the rational norm.
  QuadScalar inverse() const {
    if (is_zero()) throw std::domain_error("QuadScalar::inverse of zero");
    QuadScalar numerator(1);
    QuadScalar acc = *this;
    for (int p : kPrimes) {
      QuadScalar conj = acc.conjugate(p);
      numerator *= conj;
      acc *= conj;
    }
    Rational norm = acc.c_[0];
    for (auto& q : numerator.c_) q /= norm;
    return numerator;
  }

  friend QuadScalar operator/(const QuadScalar& a, const QuadScalar& b) { return a * b.inverse(); }

  /// Exact sign in {-1, 0, +1}.
  int sign() const;

  std::string to_string() const {
    static constexpr std::array<const char*, 8> kNames{"", "√2", "√3", "√5", "√6", "√10", "√15", "√30"};
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < 8; ++i) {
      const Rational& q = c_[kMaskOfCoord[i]];
      if (q == 0) continue;
      if (!first) os << (q < 0 ? " - " : " + ");
      else if (q < 0) os << '-';
      first = false;
      Rational mag = q < 0 ? Rational(-q) : q;
      if (i == 0 || mag != 1) os << mag;
      os << kNames[i];
    }
    if (first) os << '0';
    return os.str();
  }

  static int radicand(unsigned mask) {
    int d = 1;
    for (std::size_t i = 0; i < kPrimes.size(); ++i)
      if (mask & (1u << i)) d *= kPrimes[i];
    return d;
  }

 private:
  void set(unsigned mask, Rational value) {
    if (value == 0) support_ &= ~(1u << mask);
    else support_ |= 1u << mask;
    c_[mask] = std::move(value);
  }

  std::array<Rational, 8> c_{};
  unsigned support_ = 0;  // bit m set iff c_[m] != 0
};

namespace detail {

struct Interval {
  Rational lo;
  Rational hi;
};

// Enclosure of sqrt(d) of width 2^-bits.
inline Interval sqrt_enclosure(int d, unsigned bits) {
  BigInt scaled = BigInt(d) << (2 * bits);
  BigInt root = boost::multiprecision::sqrt(scaled);
  BigInt denom = BigInt(1) << bits;
  return {Rational(root, denom), Rational(root + 1, denom)};
}

}  // namespace detail

inline int QuadScalar::sign() const {
  if (is_zero()) return 0;
  if ((support_ & (support_ - 1)) == 0) {
    unsigned only = 0;
    while (!(support_ & (1u << only))) ++only;
    return c_[only] > 0 ? 1 : -1;
  }

  // A nonzero element of a number field is bounded away from zero, so the
  // enclosure eventually excludes zero.
  for (unsigned bits = 16;; bits *= 2) {
    Rational lo = c_[0];
    Rational hi = c_[0];
    for (unsigned m = 1; m < 8; ++m) {
      const Rational& q = c_[m];
      if (q == 0) continue;
      detail::Interval r = detail::sqrt_enclosure(radicand(m), bits);
      if (q > 0) {
        lo += q * r.lo;
        hi += q * r.hi;
      } else {
        lo += q * r.hi;
        hi += q * r.lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

inline int quad_sign(const QuadScalar& x) { return x.sign(); }

/// cos(pi/m) for m in {2,...,6}; m == 0 encodes infinity, for which the value is 1.
inline QuadScalar cos_pi_over(int m) {
  switch (m) {
    case 0: return QuadScalar(1);
    case 2: return QuadScalar(0);
    case 3: return QuadScalar(Rational(1, 2));
    case 4: return QuadScalar::radical(2, Rational(1, 2));
    case 5: return QuadScalar(Rational(1, 4)) + QuadScalar::radical(5, Rational(1, 4));
    case 6: return QuadScalar::radical(3, Rational(1, 2));
    default: throw std::invalid_argument("cos_pi_over: unsupported order " + std::to_string(m));
  }
}

inline std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.to_string(); }

}  // namespace hecke01
