#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bianchi/quadring.hpp"

namespace bianchi {

// Nonzero ideal of O_d in Hermite normal form: the additive group
// Z*a + Z*(b + c*w) with a, c >= 1, c | a, c | b, 0 <= b < a.
// The norm (index in O_d) is a*c.
struct Ideal {
  Int a = 1;
  Int b = 0;
  Int c = 1;

  Int norm() const { return a * c; }
  bool is_unit() const { return a == 1 && c == 1; }

  bool operator==(const Ideal& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
  bool operator!=(const Ideal& o) const { return !(*this == o); }
  // Lexicographic on (a, b, c); used as the deterministic tie-break for
  // the two primes of a split rational prime.
  bool operator<(const Ideal& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

enum class SplitClass { Split, Inert, Ramified };

// Factorization behaviour of a rational prime p, with witness prime ideals.
// Split: primes = {P1, P2}, distinct, each of norm p, P1*P2 = (p).
// Inert: primes = {(p)}, norm p^2.
// Ramified: primes = {P}, norm p, P^2 = (p).
struct SplitType {
  SplitClass kind;
  std::vector<Ideal> primes;
};

struct FactoredIdeal {
  // Pairwise-distinct primes with positive exponents, sorted by HNF triple.
  std::vector<std::pair<Ideal, long>> factors;
};

// HNF of the O_d-module generated by the given elements. Rejects the
// zero ideal.
Ideal ideal_from_generators(const std::vector<QuadInt>& gens,
                            const RingSpec& R);

inline Ideal principal_ideal(const QuadInt& g, const RingSpec& R) {
  return ideal_from_generators({g}, R);
}

// Membership of x in the lattice of I.
bool ideal_contains(const Ideal& I, const QuadInt& x);

// I <= J as lattices, i.e. J divides I.
bool ideal_divides(const Ideal& J, const Ideal& I);

Ideal ideal_mul(const Ideal& I, const Ideal& J, const RingSpec& R);
Ideal ideal_pow(const Ideal& I, long k, const RingSpec& R);

// Galois conjugate ideal; I * conj(I) = (norm(I)).
Ideal ideal_conj(const Ideal& I, const RingSpec& R);

// HNF of I + J (the gcd of the two ideals).
Ideal ideal_sum(const Ideal& I, const Ideal& J, const RingSpec& R);

inline bool ideal_coprime(const Ideal& I, const Ideal& J, const RingSpec& R) {
  return ideal_sum(I, J, R).is_unit();
}

// Exact quotient I / P for a prime P dividing I (computed as
// I * conj(P) / norm(P)).
Ideal ideal_divide_prime(const Ideal& I, const Ideal& P, const RingSpec& R);

// Classification of a rational prime per the quadratic reciprocity rule:
// odd p coprime to disc is split iff disc is a nonzero QR mod p; p | disc
// is ramified; p = 2 goes by d mod 8. Witnesses are constructed as
// (p, r - w) for roots r of the minimal polynomial of w mod p, and their
// products are verified to equal (p) exactly.
SplitType split_type(const RingSpec& R, long p);

bool is_prime_ideal(const Ideal& I, const RingSpec& R);

// Complete prime factorization by trial division on the norm.
// norm_bound guards the trial division (capacity error beyond it).
FactoredIdeal factor_ideal(const Ideal& I, const RingSpec& R,
                           const Int& norm_bound = Int(1000000000000L));

Ideal multiply_back(const FactoredIdeal& F, const RingSpec& R);

// All ideals of the exact norm n / of norm <= bound, by direct HNF triple
// enumeration. This is the brute-force side of the splitting oracle.
std::vector<Ideal> ideals_of_norm(const RingSpec& R, long n);
std::vector<Ideal> ideals_of_norm_at_most(const RingSpec& R, long bound);

// Canonical text form "hnf:a,b,c". parse_ideal also accepts a generator
// list "(g1, g2, ...)" with elements in "a+b*w" syntax.
std::string to_string(const Ideal& I);
Ideal parse_ideal(const std::string& text, const RingSpec& R);

std::ostream& operator<<(std::ostream& os, const Ideal& I);

}  // namespace bianchi
