#include <doctest.h>

#include <algorithm>

#include "bianchi/matgroup.hpp"

using namespace bianchi;

TEST_SUITE_BEGIN("matgroup");

namespace {

Int sl2_order_formula(const Ideal& P, long k) {
  // N(P)^{3k} (1 - N(P)^-2) for a prime power P^k
  Int n = P.norm();
  Int acc = n * n - 1;
  for (long i = 0; i < 3 * k - 2; ++i) acc *= n;
  return acc;
}

}  // namespace

TEST_CASE("sl2 orders over small quotients") {
  RingSpec r1 = make_ring(-1);
  QuotientRing f2(r1, principal_ideal(QuadInt(1, 1), r1));
  CHECK(sl2_enumerate(f2).order() == 6);

  QuotientRing q1(r1, principal_ideal(QuadInt(2, 0), r1));
  CHECK(sl2_enumerate(q1).order() == 48);

  RingSpec r3 = make_ring(-3);
  QuotientRing q3(r3, principal_ideal(QuadInt(2, 0), r3));
  CHECK(sl2_enumerate(q3).order() == 60);

  CHECK_THROWS_AS(sl2_enumerate(q3, 200), capacity_error);
}

TEST_CASE("brute force count matches the local order formula") {
  // All prime ideals of norm <= 49 across the reference d-set.
  for (long d : {-1L, -2L, -3L, -5L, -6L, -7L, -11L}) {
    RingSpec R = make_ring(d);
    for (long p = 2; p <= 47; ++p) {
      if (!is_prime(p)) continue;
      for (const Ideal& P : split_type(R, p).primes) {
        if (P.norm() > 49) continue;
        QuotientRing Q(R, P);
        CHECK(Int(sl2_enumerate(Q).order()) == sl2_order_formula(P, 1));
      }
    }
  }
}

TEST_CASE("closure of the standard generators fills SL2 at prime powers") {
  for (long d : {-1L, -2L, -3L, -5L, -7L, -11L}) {
    RingSpec R = make_ring(d);
    for (long p : {2L, 3L, 5L, 7L}) {
      for (const Ideal& P : split_type(R, p).primes) {
        for (long k = 1;; ++k) {
          Int order = sl2_order_formula(P, k);
          if (order > 50000) break;
          Ideal Pk = ideal_pow(P, k, R);
          if (Pk.norm() > QuotientRing::kDefaultCap) break;
          QuotientRing Q(R, Pk);
          FiniteMatrixGroup G =
              subgroup_closure(standard_generators(Q), Q, false);
          CHECK(Int(G.order()) == order);
          if (Int(Q.size()) * Q.size() * Q.size() * Q.size() <= 2000000) {
            FiniteMatrixGroup E = sl2_enumerate(Q);
            CHECK(G.same_elements(E));
          }
        }
      }
    }
  }
}

TEST_CASE("closure basics") {
  RingSpec r1 = make_ring(-1);
  QuotientRing Q(r1, principal_ideal(QuadInt(2, 0), r1));
  FiniteMatrixGroup trivial =
      subgroup_closure({Mat2::identity(Q)}, Q, false);
  CHECK(trivial.order() == 1);

  FiniteMatrixGroup full =
      subgroup_closure(standard_generators(Q), Q, false);
  CHECK(full.order() == 48);

  RingSpec r3 = make_ring(-3);
  QuotientRing F4(r3, principal_ideal(QuadInt(2, 0), r3));
  FiniteMatrixGroup unipotent =
      subgroup_closure({gen_T1(F4), gen_Tw(F4)}, F4, false);
  CHECK(unipotent.order() == 4);

  CHECK_THROWS_AS(subgroup_closure({}, Q, false), std::invalid_argument);
  Mat2 bad = Mat2::from_quadints(Q, {1, 0}, {0, 0}, {0, 0}, {0, 1});
  CHECK_THROWS_AS(subgroup_closure({bad}, Q, false), std::invalid_argument);
}

TEST_CASE("generator order does not change the closure") {
  RingSpec r1 = make_ring(-1);
  QuotientRing Q(r1, principal_ideal(QuadInt(3, 0), r1));
  std::vector<Mat2> gens = standard_generators(Q);
  FiniteMatrixGroup a = subgroup_closure(gens, Q, false);
  std::reverse(gens.begin(), gens.end());
  FiniteMatrixGroup b = subgroup_closure(gens, Q, false);
  REQUIRE(a.order() == b.order());
  CHECK(a.same_elements(b));
  for (long i = 0; i < a.order(); ++i)
    CHECK(a.elements()[i].key() == b.elements()[i].key());
}

TEST_CASE("normal closure") {
  RingSpec r1 = make_ring(-1);
  QuotientRing Q2(r1, principal_ideal(QuadInt(2, 0), r1));
  FiniteMatrixGroup G2 = subgroup_closure(standard_generators(Q2), Q2, false);

  FiniteMatrixGroup triv = normal_closure({Mat2::identity(Q2)}, G2);
  CHECK(triv.order() == 1);

  // A normal subgroup containing every translation T_i is everything;
  // T_1 alone closes to an index-2 subgroup here (frozen from the
  // conjugate-by-all-elements oracle).
  FiniteMatrixGroup all = normal_closure({gen_T1(Q2), gen_Tw(Q2)}, G2);
  CHECK(all.same_elements(G2));
  FiniteMatrixGroup half = normal_closure({gen_T1(Q2)}, G2);
  CHECK(half.order() == 24);
  CHECK(half.same_elements(normal_closure({gen_T1(Q2)}, sl2_enumerate(Q2))));

  QuotientRing Q6(r1, principal_ideal(QuadInt(6, 0), r1));
  FiniteMatrixGroup G6 = subgroup_closure(standard_generators(Q6), Q6, false);
  REQUIRE(G6.order() == 34560);
  FiniteMatrixGroup N =
      normal_closure({gen_T1(Q6).pow(2), gen_Tw(Q6).pow(2)}, G6);
  CHECK(N.order() == 720);

  // Seed ordering is irrelevant.
  FiniteMatrixGroup N2 =
      normal_closure({gen_Tw(Q6).pow(2), gen_T1(Q6).pow(2)}, G6);
  CHECK(N.same_elements(N2));
  for (long i = 0; i < N.order(); ++i)
    CHECK(N.elements()[i].key() == N2.elements()[i].key());

  Mat2 outside = gen_T1(Q6);
  FiniteMatrixGroup H = subgroup_closure({gen_T1(Q6).pow(2)}, Q6, false);
  CHECK_THROWS_AS(normal_closure({outside}, H), std::invalid_argument);
}

TEST_CASE("derived subgroup") {
  RingSpec r3 = make_ring(-3);
  QuotientRing Q(r3, principal_ideal(QuadInt(2, 0), r3));
  FiniteMatrixGroup A5 = psl_quotient(sl2_enumerate(Q));
  CHECK(A5.order() == 60);
  CHECK(derived_subgroup(A5).order() == 60);  // nonabelian simple

  // Abelian groups have trivial derived subgroup.
  FiniteMatrixGroup unip = subgroup_closure({gen_T1(Q), gen_Tw(Q)}, Q, false);
  CHECK(derived_subgroup(unip).order() == 1);

  RingSpec r7 = make_ring(-7);
  QuotientRing Q7(r7, principal_ideal(QuadInt(2, 0), r7));
  FiniteMatrixGroup G7 = psl_quotient(sl2_enumerate(Q7));
  CHECK(G7.order() == 36);
  CHECK(G7.order() / derived_subgroup(G7).order() == 4);
}

TEST_CASE("power subgroup") {
  RingSpec r1 = make_ring(-1);
  QuotientRing Q(r1, principal_ideal(QuadInt(2, 0), r1));
  FiniteMatrixGroup G = psl_quotient(sl2_enumerate(Q));
  CHECK(power_subgroup(G, 1).same_elements(G));

  FiniteMatrixGroup G2 = power_subgroup(G, 2);
  CHECK(G.order() / G2.order() == 4);
  for (const Mat2& g : G.elements()) CHECK(G2.contains(g * g));

  RingSpec r3 = make_ring(-3);
  QuotientRing Q3(r3, principal_ideal(QuadInt(2, 0), r3));
  FiniteMatrixGroup A5 = psl_quotient(sl2_enumerate(Q3));
  CHECK(power_subgroup(A5, 2).same_elements(A5));
}

TEST_CASE("psl quotient") {
  RingSpec r1 = make_ring(-1);
  QuotientRing Q(r1, principal_ideal(QuadInt(2, 0), r1));
  FiniteMatrixGroup SL = sl2_enumerate(Q);
  CHECK(psl_quotient(SL).order() == SL.order());  // char 2: -I = I

  RingSpec r5 = make_ring(-5);
  Ideal P5 = split_type(r5, 5).primes[0];
  QuotientRing QP(r5, P5);
  FiniteMatrixGroup SL5 = sl2_enumerate(QP);
  CHECK(SL5.order() == 120);
  CHECK(psl_quotient(SL5).order() == 60);

  QuotientRing Q25(r5, principal_ideal(QuadInt(5, 0), r5));
  FiniteMatrixGroup big =
      subgroup_closure(standard_generators(Q25), Q25, false);
  CHECK(big.order() == 15000);
  CHECK(psl_quotient(big).order() == 7500);
}

TEST_CASE("reduction kernel") {
  RingSpec r1 = make_ring(-1);
  Ideal pi = split_type(r1, 2).primes[0];
  Ideal pi2 = ideal_mul(pi, pi, r1);
  QuotientRing Qbig(r1, pi2), Qsmall(r1, pi);
  FiniteMatrixGroup G = sl2_enumerate(Qbig);
  FiniteMatrixGroup K = reduction_kernel(Qbig, Qsmall, G);
  CHECK(K.order() == 8);  // 48 / 6

  FiniteMatrixGroup Kself = reduction_kernel(Qbig, Qbig, G);
  CHECK(Kself.order() == 1);

  QuotientRing Q6(r1, principal_ideal(QuadInt(6, 0), r1));
  QuotientRing Q2(r1, principal_ideal(QuadInt(2, 0), r1));
  FiniteMatrixGroup G6 = subgroup_closure(standard_generators(Q6), Q6, false);
  FiniteMatrixGroup K6 = reduction_kernel(Q6, Q2, G6);
  CHECK(K6.order() == 720);  // 34560 / 48
  CHECK(Int(K6.order()) * 48 == Int(G6.order()));

  QuotientRing Q3(r1, principal_ideal(QuadInt(3, 0), r1));
  CHECK(reduction_kernel(Q6, Q3, G6).order() * 720 == G6.order());
  QuotientRing Q5(r1, principal_ideal(QuadInt(5, 0), r1));
  CHECK_THROWS_AS(reduction_kernel(Q6, Q5, G6), std::invalid_argument);
}

TEST_CASE("structure probe") {
  RingSpec r1 = make_ring(-1);
  QuotientRing Q(r1, principal_ideal(QuadInt(2, 0), r1));

  FiniteMatrixGroup trivial = subgroup_closure({Mat2::identity(Q)}, Q, false);
  StructureReport t = structure_probe(trivial);
  CHECK(t.order == 1);
  CHECK(t.is_abelian);
  CHECK(t.exponent_divides == 1);

  // First congruence filtration layer at pi = (1+i).
  Ideal pi = split_type(r1, 2).primes[0];
  QuotientRing Qbig(r1, ideal_mul(pi, pi, r1));
  FiniteMatrixGroup K =
      reduction_kernel(Qbig, QuotientRing(r1, pi), sl2_enumerate(Qbig));
  StructureReport k = structure_probe(K);
  CHECK(k.order == 8);
  CHECK(k.is_abelian);
  CHECK(k.exponent_divides == 2);
  CHECK(is_elementary_abelian(K, 2));

  RingSpec r7 = make_ring(-7);
  QuotientRing Q7(r7, principal_ideal(QuadInt(2, 0), r7));
  FiniteMatrixGroup G7 = psl_quotient(sl2_enumerate(Q7));
  StructureReport s = structure_probe(G7);
  CHECK(s.order == 36);
  CHECK_FALSE(s.is_abelian);
  CHECK(s.derived_index == 4);
}

TEST_CASE("real quadratic rings work through the group layer") {
  // d > 0 is accepted everywhere below the Bianchi-specific layer.
  RingSpec r5 = make_ring(5);
  CHECK(split_type(r5, 2).kind == SplitClass::Inert);  // 5 = 5 mod 8
  QuotientRing F4(r5, principal_ideal(QuadInt(2, 0), r5));
  CHECK(sl2_enumerate(F4).order() == 60);
  CHECK(subgroup_closure(standard_generators(F4), F4, false).order() == 60);

  RingSpec r13 = make_ring(13);
  Ideal P13 = split_type(r13, 3).primes[0];
  CHECK(P13.norm() == 3);  // 13 = 1 mod 3, split
  QuotientRing F3(r13, P13);
  CHECK(sl2_enumerate(F3).order() == 24);
}

TEST_CASE("squares and commutators generate a subgroup of exponent-2 index") {
  // G / <G^2, G'> is elementary abelian of exponent dividing 2 for the
  // mod-2 groups.
  for (long d : {-1L, -3L, -7L}) {
    RingSpec R = make_ring(d);
    QuotientRing Q(R, principal_ideal(QuadInt(2, 0), R));
    FiniteMatrixGroup G = psl_quotient(sl2_enumerate(Q));
    FiniteMatrixGroup G2 = power_subgroup(G, 2);
    FiniteMatrixGroup Gp = derived_subgroup(G);
    std::vector<Mat2> gens;
    for (const Mat2& g : G2.elements()) gens.push_back(g);
    for (const Mat2& g : Gp.elements()) gens.push_back(g);
    FiniteMatrixGroup H = subgroup_closure(gens, Q, true);
    long index = G.order() / H.order();
    CHECK((index & (index - 1)) == 0);  // power of two
    for (const Mat2& g : G.elements()) CHECK(H.contains(g * g));
  }
}

TEST_SUITE_END();
