#include "bianchi/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace bianchi {

Mat2 Mat2::identity(const QuotientRing& Q) {
  return Mat2{Q.one(), Q.zero(), Q.zero(), Q.one()};
}

Mat2 Mat2::from_quadints(const QuotientRing& Q, const QuadInt& a,
                         const QuadInt& b, const QuadInt& c,
                         const QuadInt& d) {
  return Mat2{Q.reduce(a), Q.reduce(b), Q.reduce(c), Q.reduce(d)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
              c * o.b + d * o.d};
}

bool Mat2::operator==(const Mat2& o) const {
  return a == o.a && b == o.b && c == o.c && d == o.d;
}

Mat2 Mat2::inverse() const {
  if (det() != a.ring->one())
    throw std::invalid_argument("Mat2::inverse: determinant is not 1");
  return Mat2{d, -b, -c, a};
}

Mat2 Mat2::negated() const { return Mat2{-a, -b, -c, -d}; }

Mat2 Mat2::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Mat2 acc = identity(ring());
  Mat2 base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool Mat2::is_identity() const { return *this == identity(ring()); }

std::array<int64_t, 4> Mat2::key() const {
  const QuotientRing& Q = ring();
  return {Q.encode(a), Q.encode(b), Q.encode(c), Q.encode(d)};
}

Mat2 gen_T1(const QuotientRing& Q) {
  return Mat2::from_quadints(Q, {1, 0}, {1, 0}, {0, 0}, {1, 0});
}

Mat2 gen_Tw(const QuotientRing& Q) {
  return Mat2::from_quadints(Q, {1, 0}, {0, 1}, {0, 0}, {1, 0});
}

Mat2 gen_S(const QuotientRing& Q) {
  return Mat2::from_quadints(Q, {0, 0}, {1, 0}, {-1, 0}, {0, 0});
}

Mat2 gen_R(const QuotientRing& Q) {
  return Mat2::from_quadints(Q, {0, 0}, {1, 0}, {-1, 0}, {-1, 0});
}

std::vector<Mat2> standard_generators(const QuotientRing& Q) {
  return {gen_S(Q), gen_T1(Q), gen_Tw(Q)};
}

Mat2 FiniteMatrixGroup::canonical(const Mat2& m) const {
  if (!psl_) return m;
  Mat2 n = m.negated();
  return n.key() < m.key() ? n : m;
}

bool FiniteMatrixGroup::contains(const Mat2& m) const {
  return index_.count(canonical(m).key()) != 0;
}

bool FiniteMatrixGroup::same_elements(const FiniteMatrixGroup& o) const {
  if (order() != o.order()) return false;
  return subset_of(o);
}

bool FiniteMatrixGroup::subset_of(const FiniteMatrixGroup& o) const {
  for (const Mat2& m : elems_)
    if (!o.contains(m)) return false;
  return true;
}

FiniteMatrixGroup make_group(const QuotientRing& Q, bool psl,
                             std::vector<Mat2> elems, std::vector<Mat2> gens) {
  FiniteMatrixGroup G;
  G.ring_ = &Q;
  G.psl_ = psl;
  G.elems_ = std::move(elems);
  std::sort(G.elems_.begin(), G.elems_.end(),
            [](const Mat2& x, const Mat2& y) { return x.key() < y.key(); });
  for (const Mat2& m : G.elems_) G.index_.insert(m.key());
  if (G.index_.size() != G.elems_.size())
    throw std::logic_error("make_group: duplicate elements");
  G.gens_ = std::move(gens);
  return G;
}

namespace {

Mat2 canon(const Mat2& m, bool psl) {
  if (!psl) return m;
  Mat2 n = m.negated();
  return n.key() < m.key() ? n : m;
}

std::vector<Mat2> close_elements(const QuotientRing& Q, bool psl,
                                 const std::vector<Mat2>& gens,
                                 long max_elements) {
  std::vector<Mat2> mults;
  for (const Mat2& g : gens) {
    mults.push_back(canon(g, psl));
    mults.push_back(canon(g.inverse(), psl));
  }
  std::unordered_set<std::array<int64_t, 4>, MatKeyHash> seen;
  std::vector<Mat2> elems;
  std::deque<Mat2> queue;
  Mat2 id = canon(Mat2::identity(Q), psl);
  seen.insert(id.key());
  elems.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Mat2 m = queue.front();
    queue.pop_front();
    for (const Mat2& g : mults) {
      Mat2 p = canon(g * m, psl);
      if (seen.insert(p.key()).second) {
        if (static_cast<long>(elems.size()) >= max_elements)
          throw capacity_error(
              "subgroup closure exceeds element cap " +
              std::to_string(max_elements));
        elems.push_back(p);
        queue.push_back(p);
      }
    }
  }
  return elems;
}

}  // namespace

FiniteMatrixGroup sl2_enumerate(const QuotientRing& Q, long tuple_cap) {
  long n = Q.size();
  Int tuples = Int(n) * n * n * n;
  if (tuples > tuple_cap)
    throw capacity_error("sl2_enumerate: " + tuples.get_str() +
                         " tuples exceed cap " + std::to_string(tuple_cap));

  // Flat mul/sub tables over encoded elements keep the quartic loop to a
  // few loads per tuple.
  std::vector<int32_t> mul_t(n * n), sub_t(n * n);
  std::vector<Residue> el(n);
  for (long i = 0; i < n; ++i) el[i] = Q.element(i);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      mul_t[i * n + j] = static_cast<int32_t>(Q.encode(Q.mul(el[i], el[j])));
      sub_t[i * n + j] = static_cast<int32_t>(Q.encode(Q.sub(el[i], el[j])));
    }
  int32_t one = static_cast<int32_t>(Q.encode(Q.one()));

  std::vector<Mat2> elems;
  for (long a = 0; a < n; ++a) {
    const int32_t* mula = &mul_t[a * n];
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c) {
        int32_t bc = mul_t[b * n + c];
        for (long d = 0; d < n; ++d) {
          if (sub_t[static_cast<long>(mula[d]) * n + bc] == one) {
            if (static_cast<long>(elems.size()) >=
                FiniteMatrixGroup::kMaxElements)
              throw capacity_error("sl2_enumerate exceeds element cap");
            elems.push_back(Mat2{el[a], el[b], el[c], el[d]});
          }
        }
      }
  }
  return make_group(Q, /*psl=*/false, std::move(elems), {});
}

FiniteMatrixGroup subgroup_closure(const std::vector<Mat2>& gens,
                                   const QuotientRing& Q, bool psl,
                                   long max_elements) {
  if (gens.empty())
    throw std::invalid_argument("subgroup_closure: no generators");
  for (const Mat2& g : gens)
    if (!(g.det() == Q.one()))
      throw std::invalid_argument(
          "subgroup_closure: generator determinant is not 1");
  auto elems = close_elements(Q, psl, gens, max_elements);
  std::vector<Mat2> cgens;
  for (const Mat2& g : gens) cgens.push_back(canon(g, psl));
  return make_group(Q, psl, std::move(elems), std::move(cgens));
}

FiniteMatrixGroup normal_closure(const std::vector<Mat2>& seed,
                                 const FiniteMatrixGroup& ambient) {
  const QuotientRing& Q = ambient.ring();
  bool psl = ambient.psl_mode();
  for (const Mat2& s : seed)
    if (!ambient.contains(s))
      throw std::invalid_argument("normal_closure: seed not in ambient");

  std::vector<Mat2> conjugators;
  if (!ambient.generators().empty()) {
    for (const Mat2& g : ambient.generators()) {
      conjugators.push_back(g);
      conjugators.push_back(g.inverse());
    }
  } else {
    conjugators = ambient.elements();
  }

  std::vector<Mat2> gens;
  for (const Mat2& s : seed) gens.push_back(canon(s, psl));
  if (gens.empty()) gens.push_back(Mat2::identity(Q));

  FiniteMatrixGroup K = subgroup_closure(gens, Q, psl, ambient.order());
  while (true) {
    std::vector<Mat2> fresh;
    for (const Mat2& g : conjugators) {
      Mat2 gi = g.inverse();
      for (const Mat2& k : gens) {
        Mat2 cjg = canon(g * k * gi, psl);
        if (!K.contains(cjg)) fresh.push_back(cjg);
      }
    }
    if (fresh.empty()) break;
    for (const Mat2& m : fresh) gens.push_back(m);
    K = subgroup_closure(gens, Q, psl, ambient.order());
  }
  return K;
}

namespace {

std::vector<Mat2> effective_generators(const FiniteMatrixGroup& G) {
  return G.generators().empty() ? G.elements() : G.generators();
}

}  // namespace

FiniteMatrixGroup derived_subgroup(const FiniteMatrixGroup& G) {
  std::vector<Mat2> gens = effective_generators(G);
  std::vector<Mat2> seeds;
  std::unordered_set<std::array<int64_t, 4>, MatKeyHash> seen;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Mat2 comm =
          gens[i] * gens[j] * gens[i].inverse() * gens[j].inverse();
      comm = canon(comm, G.psl_mode());
      if (seen.insert(comm.key()).second) seeds.push_back(comm);
    }
  if (seeds.empty()) seeds.push_back(Mat2::identity(G.ring()));
  return normal_closure(seeds, G);
}

FiniteMatrixGroup power_subgroup(const FiniteMatrixGroup& G, long k) {
  if (k < 1) throw std::invalid_argument("power_subgroup: k must be >= 1");
  std::vector<Mat2> seeds;
  std::unordered_set<std::array<int64_t, 4>, MatKeyHash> seen;
  for (const Mat2& g : G.elements()) {
    Mat2 p = canon(g.pow(k), G.psl_mode());
    if (seen.insert(p.key()).second) seeds.push_back(p);
  }
  return subgroup_closure(seeds, G.ring(), G.psl_mode(), G.order());
}

FiniteMatrixGroup psl_quotient(const FiniteMatrixGroup& G) {
  if (G.psl_mode())
    throw std::invalid_argument("psl_quotient: already in PSL mode");
  const QuotientRing& Q = G.ring();
  Mat2 minus_id = Mat2::identity(Q).negated();
  if (!G.contains(minus_id))
    throw std::invalid_argument("psl_quotient: -I not in group");
  std::unordered_set<std::array<int64_t, 4>, MatKeyHash> seen;
  std::vector<Mat2> elems;
  for (const Mat2& m : G.elements()) {
    Mat2 c = canon(m, true);
    if (seen.insert(c.key()).second) elems.push_back(c);
  }
  std::vector<Mat2> gens;
  for (const Mat2& g : G.generators()) gens.push_back(canon(g, true));
  return make_group(Q, /*psl=*/true, std::move(elems), std::move(gens));
}

FiniteMatrixGroup reduction_kernel(const QuotientRing& Q_big,
                                   const QuotientRing& Q_small,
                                   const FiniteMatrixGroup& G) {
  if (!ideal_divides(Q_small.modulus(), Q_big.modulus()))
    throw std::invalid_argument(
        "reduction_kernel: small modulus does not divide big modulus");
  if (!G.ring().same_ring(Q_big))
    throw std::invalid_argument("reduction_kernel: group not over Q_big");
  Mat2 id_small = Mat2::identity(Q_small);
  Mat2 neg_id_small = id_small.negated();
  std::vector<Mat2> elems;
  for (const Mat2& m : G.elements()) {
    Mat2 r{Q_small.reduce(Q_big.lift(m.a)), Q_small.reduce(Q_big.lift(m.b)),
           Q_small.reduce(Q_big.lift(m.c)), Q_small.reduce(Q_big.lift(m.d))};
    bool in_kernel = r == id_small;
    if (!in_kernel && G.psl_mode()) in_kernel = r == neg_id_small;
    if (in_kernel) elems.push_back(m);
  }
  return make_group(Q_big, G.psl_mode(), std::move(elems), {});
}

bool is_normal_in(const FiniteMatrixGroup& H, const FiniteMatrixGroup& G) {
  std::vector<Mat2> conjugators = effective_generators(G);
  std::vector<Mat2> hgens = effective_generators(H);
  for (const Mat2& g : conjugators) {
    Mat2 gi = g.inverse();
    for (const Mat2& h : hgens)
      if (!H.contains(g * h * gi) || !H.contains(gi * h * g)) return false;
  }
  return true;
}

StructureReport structure_probe(const FiniteMatrixGroup& G) {
  StructureReport rep;
  rep.order = G.order();

  std::vector<Mat2> gens = effective_generators(G);
  rep.is_abelian = true;
  for (size_t i = 0; i < gens.size() && rep.is_abelian; ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) {
        rep.is_abelian = false;
        break;
      }

  // Exponent: smallest divisor e <= 64 of |G| killing every element,
  // exact lcm of element orders as a fallback for small groups.
  std::vector<long> divisors;
  for (long e = 1; e <= 64 && e <= rep.order; ++e)
    if (rep.order % e == 0) divisors.push_back(e);
  for (long e : divisors) {
    bool all = true;
    for (const Mat2& g : G.elements()) {
      Mat2 p = g.pow(e);
      if (!(G.canonical(p) == G.canonical(Mat2::identity(G.ring())))) {
        all = false;
        break;
      }
    }
    if (all) {
      rep.exponent_divides = e;
      break;
    }
  }
  if (rep.exponent_divides == 0 && rep.order <= 10000) {
    long l = 1;
    Mat2 id = G.canonical(Mat2::identity(G.ring()));
    for (const Mat2& g : G.elements()) {
      Mat2 p = g;
      long ord = 1;
      while (!(G.canonical(p) == id)) {
        p = p * g;
        ++ord;
      }
      l = std::lcm(l, ord);
    }
    rep.exponent_divides = l;
  }

  rep.center_order = 0;
  for (const Mat2& g : G.elements()) {
    bool central = true;
    for (const Mat2& h : gens)
      if (!(G.canonical(g * h) == G.canonical(h * g))) {
        central = false;
        break;
      }
    if (central) ++rep.center_order;
  }

  rep.derived_index = rep.order / derived_subgroup(G).order();
  return rep;
}

bool is_elementary_abelian(const FiniteMatrixGroup& G, long p) {
  if (G.order() == 1) return true;
  long n = G.order();
  while (n % p == 0) n /= p;
  if (n != 1) return false;
  std::vector<Mat2> gens = effective_generators(G);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  Mat2 id = G.canonical(Mat2::identity(G.ring()));
  for (const Mat2& g : G.elements())
    if (!(G.canonical(g.pow(p)) == id)) return false;
  return true;
}

std::string to_string(const Mat2& m) {
  const QuotientRing& Q = m.ring();
  std::ostringstream os;
  os << "[[" << to_string(Q.lift(m.a)) << ", " << to_string(Q.lift(m.b))
     << "], [" << to_string(Q.lift(m.c)) << ", " << to_string(Q.lift(m.d))
     << "]]";
  return os.str();
}

}  // namespace bianchi
