#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bianchi/ideals.hpp"

namespace bianchi {

class QuotientRing;

// Canonical residue u + v*w + I with 0 <= u < a, 0 <= v < c for the
// modulus HNF (a, b, c). Tagged with its ring; mixed-ring arithmetic is
// rejected. Residues must not outlive the QuotientRing they point into.
struct Residue {
  long u = 0;
  long v = 0;
  const QuotientRing* ring = nullptr;

  bool operator==(const Residue& o) const;
  bool operator!=(const Residue& o) const { return !(*this == o); }
  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  bool is_zero() const { return u == 0 && v == 0; }
};

// The finite ring O_d/I. Reduction always goes through the HNF of the
// modulus ideal, so non-diagonal moduli (prime powers in particular) are
// handled exactly. All residue arithmetic is done in machine words; the
// constructor guards that no intermediate product can overflow.
class QuotientRing {
 public:
  static constexpr long kDefaultCap = 10000;

  QuotientRing(const RingSpec& R, const Ideal& I,
               long cap = kDefaultCap);

  const RingSpec& ring_spec() const { return spec_; }
  const Ideal& modulus() const { return modulus_; }
  long size() const { return n_; }

  Residue reduce(const QuadInt& x) const;
  QuadInt lift(const Residue& r) const { return QuadInt(r.u, r.v); }

  Residue zero() const { return element(0); }
  Residue one() const { return reduce(QuadInt(1, 0)); }
  Residue w() const { return reduce(QuadInt(0, 1)); }
  Residue from_int(long k) const { return reduce(QuadInt(k, 0)); }

  Residue add(const Residue& x, const Residue& y) const;
  Residue sub(const Residue& x, const Residue& y) const;
  Residue neg(const Residue& x) const;
  Residue mul(const Residue& x, const Residue& y) const;

  // Unit inverse by exhaustive search, or nullopt for a non-unit.
  std::optional<Residue> inverse(const Residue& x) const;

  long units_count() const;

  // Dense element indexing: encode is a bijection onto [0, size).
  long encode(const Residue& r) const { return r.u * c_ + r.v; }
  Residue element(long index) const;

  bool same_ring(const QuotientRing& o) const {
    return spec_.d == o.spec_.d && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
  }

  std::string format(const Residue& r) const;

 private:
  Residue make(long x, long y) const;  // reduce raw coordinates

  RingSpec spec_;
  Ideal modulus_;
  long a_, b_, c_, n_;
  long s_, t_;
};

}  // namespace bianchi
