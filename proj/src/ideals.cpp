#include "bianchi/ideals.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace bianchi {

namespace {

// Column vector (x, y) standing for the element x + y*w.
struct Vec2 {
  Int x, y;
};

// HNF of the lattice spanned by the given vectors. Requires full rank.
Ideal hnf_from_vectors(const std::vector<Vec2>& vs) {
  Int b = 0, c = 0;
  std::vector<Int> xonly;
  for (const Vec2& v : vs) {
    if (v.x == 0 && v.y == 0) continue;
    if (v.y == 0) {
      xonly.push_back(v.x);
      continue;
    }
    if (c == 0) {
      b = v.x;
      c = v.y;
      continue;
    }
    Int g, s, t;
    gcd_ext(c, v.y, g, s, t);
    // Unimodular change of basis on the pair {(b, c), (v.x, v.y)}:
    // keep (s*b + t*v.x, g) and the eliminated vector with y-part 0.
    xonly.push_back((c / g) * v.x - (v.y / g) * b);
    b = s * b + t * v.x;
    c = g;
  }
  if (c == 0)
    throw std::invalid_argument("hnf: lattice does not have full rank");
  if (c < 0) {
    c = -c;
    b = -b;
  }
  Int a = 0;
  for (const Int& x : xonly) a = gcd(a, x);
  if (a == 0)
    throw std::invalid_argument("hnf: lattice does not have full rank");
  if (a < 0) a = -a;
  b = mod_floor(b, a);
  Ideal I;
  I.a = a;
  I.b = b;
  I.c = c;
  return I;
}

// The multiplicative-closure conditions that make a full lattice an ideal.
bool lattice_is_ideal(const Ideal& I, const RingSpec& R) {
  if (I.a < 1 || I.c < 1) return false;
  if (!divides(I.c, I.a) || !divides(I.c, I.b)) return false;
  if (I.b < 0 || I.b >= I.a) return false;
  QuadInt w(Int(0), Int(1));
  if (!ideal_contains(I, mul(QuadInt(I.a, 0), w, R))) return false;
  if (!ideal_contains(I, mul(QuadInt(I.b, I.c), w, R))) return false;
  return true;
}

Ideal checked(Ideal I, const RingSpec& R, const char* who) {
  if (!lattice_is_ideal(I, R))
    throw std::logic_error(std::string(who) +
                           ": lattice is not an ideal: " + to_string(I));
  return I;
}

}  // namespace

Ideal ideal_from_generators(const std::vector<QuadInt>& gens,
                            const RingSpec& R) {
  if (gens.empty())
    throw std::invalid_argument("ideal_from_generators: no generators");
  std::vector<Vec2> vs;
  QuadInt w(Int(0), Int(1));
  for (const QuadInt& g : gens) {
    vs.push_back({g.a, g.b});
    QuadInt gw = mul(g, w, R);
    vs.push_back({gw.a, gw.b});
  }
  bool all_zero = true;
  for (const Vec2& v : vs)
    if (v.x != 0 || v.y != 0) all_zero = false;
  if (all_zero)
    throw std::invalid_argument("ideal_from_generators: zero ideal");
  return checked(hnf_from_vectors(vs), R, "ideal_from_generators");
}

bool ideal_contains(const Ideal& I, const QuadInt& x) {
  if (!divides(I.c, x.b)) return false;
  return divides(I.a, x.a - (x.b / I.c) * I.b);
}

bool ideal_divides(const Ideal& J, const Ideal& I) {
  return ideal_contains(J, QuadInt(I.a, 0)) &&
         ideal_contains(J, QuadInt(I.b, I.c));
}

Ideal ideal_mul(const Ideal& I, const Ideal& J, const RingSpec& R) {
  QuadInt gi[2] = {QuadInt(I.a, 0), QuadInt(I.b, I.c)};
  QuadInt gj[2] = {QuadInt(J.a, 0), QuadInt(J.b, J.c)};
  std::vector<Vec2> vs;
  for (const auto& x : gi)
    for (const auto& y : gj) {
      QuadInt p = mul(x, y, R);
      vs.push_back({p.a, p.b});
    }
  return checked(hnf_from_vectors(vs), R, "ideal_mul");
}

Ideal ideal_pow(const Ideal& I, long k, const RingSpec& R) {
  if (k < 0) throw std::invalid_argument("ideal_pow: negative exponent");
  Ideal acc;  // unit ideal
  Ideal base = I;
  while (k > 0) {
    if (k & 1) acc = ideal_mul(acc, base, R);
    k >>= 1;
    if (k) base = ideal_mul(base, base, R);
  }
  return acc;
}

Ideal ideal_conj(const Ideal& I, const RingSpec& R) {
  QuadInt g2 = conj(QuadInt(I.b, I.c), R);
  return checked(hnf_from_vectors({{I.a, 0}, {g2.a, g2.b}}), R, "ideal_conj");
}

Ideal ideal_sum(const Ideal& I, const Ideal& J, const RingSpec& R) {
  return checked(
      hnf_from_vectors({{I.a, 0}, {I.b, I.c}, {J.a, 0}, {J.b, J.c}}), R,
      "ideal_sum");
}

Ideal ideal_divide_prime(const Ideal& I, const Ideal& P, const RingSpec& R) {
  if (!ideal_divides(P, I))
    throw std::invalid_argument("ideal_divide_prime: P does not divide I");
  Ideal prod = ideal_mul(I, ideal_conj(P, R), R);
  Int n = P.norm();
  Ideal Q;
  Q.a = divexact(prod.a, n);
  Q.b = divexact(prod.b, n);
  Q.c = divexact(prod.c, n);
  return checked(Q, R, "ideal_divide_prime");
}

SplitType split_type(const RingSpec& R, long p) {
  if (!is_prime(p))
    throw std::invalid_argument("split_type: p = " + std::to_string(p) +
                                " is not prime");
  // Roots of the minimal polynomial of w modulo p, by exhaustive search.
  // w^2 = s + t*w, so the polynomial is x^2 - t*x - s.
  std::vector<long> roots;
  for (long r = 0; r < p; ++r) {
    long val = mod_floor(
        Int(Int(r) * r - Int(R.t) * r - Int(R.s)), Int(p)).get_si();
    if (val == 0) roots.push_back(r);
  }

  SplitClass kind;
  if (p == 2) {
    long m8 = mod_floor(R.d, 8);
    kind = m8 == 1 ? SplitClass::Split
                   : (m8 == 5 ? SplitClass::Inert : SplitClass::Ramified);
  } else if (mod_floor(Int(R.disc), Int(p)) == 0) {
    kind = SplitClass::Ramified;
  } else {
    bool residue = false;
    for (long r = 1; r < p && !residue; ++r)
      if (mod_floor(Int(Int(r) * r - R.disc), Int(p)) == 0) residue = true;
    kind = residue ? SplitClass::Split : SplitClass::Inert;
  }

  SplitType st;
  st.kind = kind;
  Ideal pO = ideal_from_generators({QuadInt(p, 0)}, R);
  switch (kind) {
    case SplitClass::Split: {
      if (roots.size() != 2)
        throw std::logic_error("split_type: expected two roots mod p");
      for (long r : roots)
        st.primes.push_back(
            ideal_from_generators({QuadInt(p, 0), QuadInt(r, -1)}, R));
      std::sort(st.primes.begin(), st.primes.end());
      if (st.primes[0] == st.primes[1])
        throw std::logic_error("split_type: split witnesses coincide");
      for (const Ideal& P : st.primes)
        if (P.norm() != p) throw std::logic_error("split_type: witness norm");
      if (ideal_mul(st.primes[0], st.primes[1], R) != pO)
        throw std::logic_error("split_type: witness product != (p)");
      break;
    }
    case SplitClass::Inert: {
      if (!roots.empty())
        throw std::logic_error("split_type: inert prime has a root mod p");
      st.primes.push_back(pO);
      break;
    }
    case SplitClass::Ramified: {
      if (roots.size() != 1)
        throw std::logic_error("split_type: expected a double root mod p");
      Ideal P =
          ideal_from_generators({QuadInt(p, 0), QuadInt(roots[0], -1)}, R);
      if (P.norm() != p) throw std::logic_error("split_type: witness norm");
      if (ideal_mul(P, P, R) != pO)
        throw std::logic_error("split_type: witness square != (p)");
      st.primes.push_back(P);
      break;
    }
  }
  return st;
}

bool is_prime_ideal(const Ideal& I, const RingSpec& R) {
  Int n = I.norm();
  if (n < 2) return false;
  if (is_prime(n)) return true;
  // Norm p^2 is prime exactly for the inert case I = (p).
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n || !is_prime(r)) return false;
  if (!r.fits_slong_p()) return false;
  long p = r.get_si();
  if (split_type(R, p).kind != SplitClass::Inert) return false;
  return I == ideal_from_generators({QuadInt(p, 0)}, R);
}

FactoredIdeal factor_ideal(const Ideal& I, const RingSpec& R,
                           const Int& norm_bound) {
  Int n = I.norm();
  if (n < 2)
    throw std::invalid_argument("factor_ideal: unit ideal has no factors");
  if (n > norm_bound)
    throw capacity_error("factor_ideal: norm " + n.get_str() +
                         " exceeds factorization bound " +
                         norm_bound.get_str());

  FactoredIdeal out;
  Ideal rest = I;
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    if (!divides(p, m)) continue;
    while (divides(p, m)) m = divexact(m, p);
    SplitType st = split_type(R, to_ll(p, "prime"));
    for (const Ideal& P : st.primes) {
      long e = 0;
      while (ideal_divides(P, rest)) {
        rest = ideal_divide_prime(rest, P, R);
        ++e;
      }
      if (e > 0) out.factors.push_back({P, e});
    }
  }
  if (m > 1) {
    SplitType st = split_type(R, to_ll(m, "prime"));
    for (const Ideal& P : st.primes) {
      long e = 0;
      while (ideal_divides(P, rest)) {
        rest = ideal_divide_prime(rest, P, R);
        ++e;
      }
      if (e > 0) out.factors.push_back({P, e});
    }
  }
  if (!rest.is_unit())
    throw std::logic_error("factor_ideal: incomplete factorization");
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  if (multiply_back(out, R) != I)
    throw std::logic_error("factor_ideal: reconstruction mismatch");
  return out;
}

Ideal multiply_back(const FactoredIdeal& F, const RingSpec& R) {
  Ideal acc;
  for (const auto& [P, e] : F.factors)
    acc = ideal_mul(acc, ideal_pow(P, e, R), R);
  return acc;
}

std::vector<Ideal> ideals_of_norm(const RingSpec& R, long n) {
  std::vector<Ideal> out;
  if (n < 1) return out;
  for (long c = 1; c * c <= n; ++c) {
    if (n % (c * c) != 0) continue;  // need c | a with a*c = n
    long a = n / c;
    for (long b = 0; b < a; b += c) {
      Ideal I;
      I.a = a;
      I.b = b;
      I.c = c;
      if (lattice_is_ideal(I, R)) out.push_back(I);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ideal> ideals_of_norm_at_most(const RingSpec& R,
                                          long bound) {
  std::vector<Ideal> out;
  for (long n = 1; n <= bound; ++n) {
    auto batch = ideals_of_norm(R, n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::string to_string(const Ideal& I) {
  return "hnf:" + I.a.get_str() + "," + I.b.get_str() + "," + I.c.get_str();
}

Ideal parse_ideal(const std::string& text, const RingSpec& R) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.rfind("hnf:", 0) == 0) {
    std::string rest = s.substr(4);
    std::vector<Int> parts;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.emplace_back(tok);
    if (parts.size() != 3)
      throw std::invalid_argument("parse_ideal: want hnf:a,b,c in '" + text +
                                  "'");
    Ideal I;
    I.a = parts[0];
    I.b = parts[1];
    I.c = parts[2];
    if (!lattice_is_ideal(I, R))
      throw std::invalid_argument("parse_ideal: " + to_string(I) +
                                  " is not an ideal of this ring");
    return I;
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    std::string inner = s.substr(1, s.size() - 2);
    std::vector<QuadInt> gens;
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) gens.push_back(parse_quadint(tok));
    if (gens.empty())
      throw std::invalid_argument("parse_ideal: no generators in '" + text +
                                  "'");
    return ideal_from_generators(gens, R);
  }
  throw std::invalid_argument("parse_ideal: expected '(g1, ...)' or "
                              "'hnf:a,b,c', got '" +
                              text + "'");
}

std::ostream& operator<<(std::ostream& os, const Ideal& I) {
  return os << to_string(I);
}

}  // namespace bianchi
