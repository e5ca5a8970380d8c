#include "bianchi/resring.hpp"

namespace bianchi {

namespace {

void check_same(const Residue& x, const Residue& y) {
  if (x.ring == nullptr || y.ring == nullptr)
    throw std::logic_error("residue without a ring tag");
  if (x.ring != y.ring && !x.ring->same_ring(*y.ring))
    throw std::invalid_argument("residues from different quotient rings");
}

}  // namespace

bool Residue::operator==(const Residue& o) const {
  check_same(*this, o);
  return u == o.u && v == o.v;
}

Residue Residue::operator+(const Residue& o) const {
  check_same(*this, o);
  return ring->add(*this, o);
}

Residue Residue::operator-(const Residue& o) const {
  check_same(*this, o);
  return ring->sub(*this, o);
}

Residue Residue::operator*(const Residue& o) const {
  check_same(*this, o);
  return ring->mul(*this, o);
}

Residue Residue::operator-() const { return ring->neg(*this); }

QuotientRing::QuotientRing(const RingSpec& R, const Ideal& I, long cap)
    : spec_(R), modulus_(I) {
  Int n = I.norm();
  if (n < 2)
    throw std::invalid_argument("quotient_ring: modulus is the unit ideal");
  if (n > cap)
    throw capacity_error("quotient_ring: norm " + n.get_str() +
                         " exceeds enumeration cap " + std::to_string(cap));
  a_ = to_ll(I.a, "modulus a");
  b_ = to_ll(I.b, "modulus b");
  c_ = to_ll(I.c, "modulus c");
  n_ = a_ * c_;
  s_ = R.s;
  t_ = R.t;
  // Overflow guard for the machine-word fast path: the largest
  // intermediate in mul/reduce is bounded by a^2 * (2 + |s| + |t|) plus
  // one more multiply by b < a during reduction.
  Int worst = Int(a_) * a_ * (Int(2) + (s_ < 0 ? -s_ : s_) + t_) * (a_ + 1);
  if (worst >= Int("4611686018427387904"))  // 2^62
    throw capacity_error("quotient_ring: modulus too large for exact "
                         "machine-word arithmetic");
}

Residue QuotientRing::make(long x, long y) const {
  long v = mod_floor(y, c_);
  long k = (y - v) / c_;
  long u = mod_floor(x - k * b_, a_);
  return Residue{u, v, this};
}

Residue QuotientRing::reduce(const QuadInt& x) const {
  Int v = mod_floor(x.b, Int(c_));
  Int k = (x.b - v) / c_;
  Int u = mod_floor(x.a - k * b_, Int(a_));
  return Residue{u.get_si(), v.get_si(), this};
}

Residue QuotientRing::add(const Residue& x, const Residue& y) const {
  return make(x.u + y.u, x.v + y.v);
}

Residue QuotientRing::sub(const Residue& x, const Residue& y) const {
  return make(x.u - y.u, x.v - y.v);
}

Residue QuotientRing::neg(const Residue& x) const { return make(-x.u, -x.v); }

Residue QuotientRing::mul(const Residue& x, const Residue& y) const {
  long bb = x.v * y.v;
  long ra = x.u * y.u + s_ * bb;
  long rb = x.u * y.v + x.v * y.u + t_ * bb;
  return make(ra, rb);
}

std::optional<Residue> QuotientRing::inverse(const Residue& x) const {
  Residue e1 = one();
  for (long i = 0; i < n_; ++i) {
    Residue cand = element(i);
    if (mul(x, cand) == e1) return cand;
  }
  return std::nullopt;
}

long QuotientRing::units_count() const {
  long count = 0;
  for (long i = 0; i < n_; ++i)
    if (inverse(element(i))) ++count;
  return count;
}

Residue QuotientRing::element(long index) const {
  if (index < 0 || index >= n_)
    throw std::out_of_range("quotient ring element index");
  return Residue{index / c_, index % c_, this};
}

std::string QuotientRing::format(const Residue& r) const {
  return to_string(QuadInt(r.u, r.v)) + " mod " + to_string(modulus_);
}

}  // namespace bianchi
