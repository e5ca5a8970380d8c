#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bianchi {

// Thrown when an input would push an enumeration past its configured cap.
// The CLI maps this to exit code 2 (usage/capacity), distinct from exit
// code 1 (a mathematical claim failed verification).
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

using Int = mpz_class;

// Floor-style modulus: result in [0, m) for m > 0.
inline Int mod_floor(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

inline long mod_floor(long x, long m) {
  long r = x % m;
  if (r < 0) r += m;
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// g = gcd(a, b) together with s, t such that s*a + t*b = g.
inline void gcd_ext(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

inline bool divides(const Int& d, const Int& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; throws if d does not divide x.
inline Int divexact(const Int& x, const Int& d) {
  if (!divides(d, x)) throw std::logic_error("divexact: not divisible");
  Int q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Returns the smallest square factor > 1 of |n|, or 0 if |n| is squarefree.
inline long square_factor(long n) {
  if (n < 0) n = -n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return p * p;
    while (n % p == 0) n /= p;
  }
  return 0;
}

inline long to_ll(const Int& x, const char* what = "value") {
  if (!x.fits_slong_p())
    throw capacity_error(std::string(what) + " does not fit a machine word");
  return x.get_si();
}

}  // namespace bianchi
