#pragma once

#include <iosfwd>
#include <string>

#include "bianchi/numutil.hpp"

namespace bianchi {

// The ring of integers O_d of Q(sqrt(d)) with integral basis {1, w}.
// Both w-conventions are captured by a single rule  w^2 = s + t*w:
//   d ≢ 1 (mod 4):  w = sqrt(d),       s = d,         t = 0,  disc = 4d
//   d ≡ 1 (mod 4):  w = (1+sqrt(d))/2, s = (d-1)/4,   t = 1,  disc = d
struct RingSpec {
  long d = 0;
  long s = 0;
  int t = 0;
  long disc = 0;

  bool half_basis() const { return t == 1; }
  bool imaginary() const { return d < 0; }
};

// d must be squarefree and not 0 or 1.
RingSpec make_ring(long d);

// Element a + b*w of O_d. Coefficients are arbitrary-precision; the
// representation (a, b) <-> a + b*w is unique.
struct QuadInt {
  Int a = 0;
  Int b = 0;

  QuadInt() = default;
  QuadInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
  QuadInt(long a_, long b_ = 0) : a(a_), b(b_) {}

  bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadInt& o) const { return !(*this == o); }
  bool is_zero() const { return a == 0 && b == 0; }

  QuadInt operator+(const QuadInt& o) const { return {a + o.a, b + o.b}; }
  QuadInt operator-(const QuadInt& o) const { return {a - o.a, b - o.b}; }
  QuadInt operator-() const { return {-a, -b}; }
  QuadInt operator*(const Int& k) const { return {a * k, b * k}; }
};

// Product expanded via the ring's w^2 rule.
QuadInt mul(const QuadInt& x, const QuadInt& y, const RingSpec& R);

// Galois conjugate: a + b*w  |->  (a + t*b) - b*w.
QuadInt conj(const QuadInt& x, const RingSpec& R);

// x * conj(x); multiplicative, and nonnegative when d < 0.
Int norm(const QuadInt& x, const RingSpec& R);

// x + conj(x).
Int trace(const QuadInt& x, const RingSpec& R);

// Text form "a+b*w" as used by the CLI ideal syntax.
std::string to_string(const QuadInt& x);
QuadInt parse_quadint(const std::string& text);

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

}  // namespace bianchi
