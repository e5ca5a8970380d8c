#include "bianchi/indexcalc.hpp"

#include <algorithm>

namespace bianchi {

namespace {

Int closed_form_from_factors(const Ideal& I, const FactoredIdeal& F) {
  // N(I)^3 / prod N(P)^2 * prod (N(P)^2 - 1), exact integer arithmetic
  // with divisibility asserted before each division.
  Int n = I.norm();
  Int acc = n * n * n;
  for (const auto& [P, e] : F.factors) {
    (void)e;
    Int q2 = P.norm() * P.norm();
    acc = divexact(acc, q2);
    acc *= q2 - 1;
  }
  return acc;
}

bool oracle_feasible(const Ideal& I, const VerifyCaps& caps) {
  Int n = I.norm();
  if (n > caps.ring_cap) return false;
  return n * n * n * n <= caps.tuple_cap;
}

}  // namespace

Int local_order(const Ideal& P, long e, const RingSpec& R) {
  if (e < 1) throw std::invalid_argument("local_order: exponent must be >= 1");
  if (!is_prime_ideal(P, R))
    throw std::invalid_argument("local_order: " + to_string(P) +
                                " is not a prime ideal");
  Int n = P.norm();
  Int acc = n * n - 1;
  for (long i = 0; i < 3 * e - 2; ++i) acc *= n;
  return acc;
}

IndexReport index_formula(const RingSpec& R, const Ideal& I,
                          const VerifyCaps& caps) {
  if (I.is_unit())
    throw std::invalid_argument("index_formula: the unit ideal is excluded");
  IndexReport rep;
  rep.ideal = I;
  rep.factors = factor_ideal(I, R);
  rep.closed_form = closed_form_from_factors(I, rep.factors);
  if (oracle_feasible(I, caps)) {
    QuotientRing Q(R, I, caps.ring_cap);
    rep.oracle = Int(sl2_enumerate(Q, caps.tuple_cap).order());
  }
  rep.match = rep.oracle.has_value() && *rep.oracle == rep.closed_form;
  return rep;
}

SurjectivityReport verify_surjectivity(const RingSpec& R, const Ideal& I,
                                       const VerifyCaps& caps) {
  SurjectivityReport rep;
  rep.ideal = I;
  FactoredIdeal F = factor_ideal(I, R);
  rep.closed_form = closed_form_from_factors(I, F);
  if (rep.closed_form > caps.group_cap)
    throw capacity_error("verify_surjectivity: |SL(2, O/I)| = " +
                         rep.closed_form.get_str() + " exceeds group cap");
  QuotientRing Q(R, I, caps.ring_cap);
  FiniteMatrixGroup G =
      subgroup_closure(standard_generators(Q), Q, false, caps.group_cap);
  rep.closure_order = G.order();
  rep.surjective = Int(rep.closure_order) == rep.closed_form;
  return rep;
}

FiltrationReport verify_filtration(const RingSpec& R, const Ideal& P, long m,
                                   const VerifyCaps& caps) {
  if (m < 1) throw std::invalid_argument("verify_filtration: m must be >= 1");
  if (!is_prime_ideal(P, R))
    throw std::invalid_argument("verify_filtration: " + to_string(P) +
                                " is not a prime ideal");
  FiltrationReport rep;
  rep.prime = P;
  rep.m = m;
  Int np = P.norm();
  rep.expected = np * np * np;
  // The characteristic is the rational prime below P: N(P) itself for a
  // degree-1 prime, its square root in the inert case.
  long p;
  if (is_prime(np)) {
    p = to_ll(np, "char");
  } else {
    Int r;
    mpz_sqrt(r.get_mpz_t(), np.get_mpz_t());
    p = to_ll(r, "char");
  }
  rep.characteristic = p;

  Ideal Pm = ideal_pow(P, m, R);
  Ideal Pm1 = ideal_mul(Pm, P, R);
  if (Pm1.norm() > caps.ring_cap)
    throw capacity_error("verify_filtration: quotient ring of size " +
                         Pm1.norm().get_str() + " exceeds cap");
  QuotientRing Q(R, Pm1, caps.ring_cap);

  // Residues of O/P^{m+1} lying in P^m: this is P^m/P^{m+1}, of size N(P).
  std::vector<Residue> layer;
  for (long i = 0; i < Q.size(); ++i) {
    Residue r = Q.element(i);
    if (ideal_contains(Pm, Q.lift(r))) layer.push_back(r);
  }
  if (Int(static_cast<long>(layer.size())) != np)
    throw std::logic_error("verify_filtration: |P^m/P^{m+1}| != N(P)");

  // Kernel of the reduction to O/P^m, enumerated directly: all matrices
  // over O/P^{m+1} congruent to I mod P^m with determinant 1.
  Residue one = Q.one();
  std::vector<Mat2> kernel_elems;
  for (const Residue& ka : layer)
    for (const Residue& kb : layer)
      for (const Residue& kc : layer)
        for (const Residue& kd : layer) {
          Mat2 cand{one + ka, kb, kc, one + kd};
          if (cand.det() == one) kernel_elems.push_back(cand);
        }
  FiniteMatrixGroup kernel =
      make_group(Q, false, std::move(kernel_elems), {});
  rep.kernel_order = kernel.order();

  bool order_ok = Int(rep.kernel_order) == rep.expected;
  rep.elementary_abelian = is_elementary_abelian(kernel, p);

  // Z_p-basis of P^m/P^{m+1}: greedily extend an independent set.
  std::vector<Residue> basis;
  {
    std::vector<Residue> span;
    span.push_back(Q.zero());
    for (const Residue& x : layer) {
      if (static_cast<long>(span.size()) >=
          static_cast<long>(layer.size()))
        break;
      bool in_span = false;
      for (const Residue& s : span)
        if (s == x) in_span = true;
      if (in_span) continue;
      basis.push_back(x);
      std::vector<Residue> next;
      for (const Residue& s : span)
        for (long k = 0; k < p; ++k) {
          Residue t = s;
          for (long i = 0; i < k; ++i) t = t + x;
          next.push_back(t);
        }
      span = std::move(next);
    }
  }

  Mat2 S = gen_S(Q), T1 = gen_T1(Q);
  std::vector<Mat2> witnesses;
  for (const Residue& x : basis) {
    Mat2 X{one, x, Q.zero(), one};
    Mat2 Y = S * X * S.inverse();
    Mat2 Z = T1 * S * X * S.inverse() * T1.inverse();
    witnesses.push_back(X);
    witnesses.push_back(Y);
    witnesses.push_back(Z);
  }
  bool members = true;
  for (const Mat2& wmat : witnesses) {
    rep.witnesses.push_back(to_string(wmat));
    if (!kernel.contains(wmat) || wmat.is_identity()) members = false;
  }
  FiniteMatrixGroup generated =
      subgroup_closure(witnesses, Q, false, caps.group_cap);
  rep.witnesses_generate = members && generated.same_elements(kernel);

  rep.ok = order_ok && rep.elementary_abelian && rep.witnesses_generate;
  return rep;
}

MultiplicativityReport verify_multiplicativity(const RingSpec& R,
                                               const Ideal& A, const Ideal& B,
                                               const VerifyCaps& caps) {
  Ideal sum = ideal_sum(A, B, R);
  if (!sum.is_unit())
    throw std::invalid_argument(
        "verify_multiplicativity: ideals are not coprime, common factor " +
        to_string(sum));
  MultiplicativityReport rep;
  rep.lhs = A;
  rep.rhs = B;
  rep.product = ideal_mul(A, B, R);
  FactoredIdeal FA = factor_ideal(A, R), FB = factor_ideal(B, R),
                FP = factor_ideal(rep.product, R);
  rep.index_lhs = closed_form_from_factors(A, FA);
  rep.index_rhs = closed_form_from_factors(B, FB);
  rep.index_product = closed_form_from_factors(rep.product, FP);
  rep.multiplicative = rep.index_product == rep.index_lhs * rep.index_rhs;
  if (oracle_feasible(rep.product, caps)) {
    QuotientRing Q(R, rep.product, caps.ring_cap);
    rep.oracle = Int(sl2_enumerate(Q, caps.tuple_cap).order());
  }
  rep.oracle_match = !rep.oracle || *rep.oracle == rep.index_product;
  rep.ok = rep.multiplicative && rep.oracle_match;
  return rep;
}

ClosureReport verify_wohlfahrt_closure(const RingSpec& R, long m, long n,
                                       const VerifyCaps& caps) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("verify_wohlfahrt_closure: m, n must be >= 1");
  if (m == 1 && n == 1)
    throw std::invalid_argument(
        "verify_wohlfahrt_closure: (m, n) = (1, 1) gives the unit ideal");
  ClosureReport rep;
  rep.m = m;
  rep.n = n;
  Ideal MN = principal_ideal(QuadInt(static_cast<long>(m) * n, 0), R);
  FactoredIdeal F = factor_ideal(MN, R);
  Int predicted = closed_form_from_factors(MN, F);
  if (predicted > caps.group_cap)
    throw capacity_error("verify_wohlfahrt_closure: |SL(2, O/(mn))| = " +
                         predicted.get_str() + " exceeds group cap " +
                         std::to_string(caps.group_cap));
  QuotientRing Q(R, MN, caps.ring_cap);
  FiniteMatrixGroup G =
      subgroup_closure(standard_generators(Q), Q, false, caps.group_cap);
  rep.ambient_order = G.order();

  std::vector<Mat2> seeds = {gen_T1(Q).pow(m), gen_Tw(Q).pow(m)};
  FiniteMatrixGroup X = normal_closure(seeds, G);
  rep.closure_order = X.order();

  if (m == 1) {
    rep.kernel_order = G.order();
    rep.equal = X.same_elements(G);
  } else {
    Ideal M = principal_ideal(QuadInt(m, 0), R);
    QuotientRing Qm(R, M, caps.ring_cap);
    FiniteMatrixGroup K = reduction_kernel(Q, Qm, G);
    rep.kernel_order = K.order();
    rep.equal = X.order() == K.order() && X.subset_of(K);
  }
  return rep;
}

}  // namespace bianchi
