#include <doctest.h>

#include <algorithm>

#include "bianchi/certify.hpp"

using namespace bianchi;

TEST_SUITE_BEGIN("certify");

TEST_CASE("class numbers from reduced forms") {
  CHECK(class_number(-1) == 1);
  CHECK(class_number(-2) == 1);
  CHECK(class_number(-3) == 1);
  CHECK(class_number(-5) == 2);
  CHECK(class_number(-6) == 2);
  CHECK(class_number(-23) == 3);
  CHECK(class_number(-163) == 1);
  CHECK(class_number(-427) == 2);
  CHECK_THROWS_AS(class_number(5), std::invalid_argument);
}

TEST_CASE("the h <= 2 census matches the reference list") {
  std::vector<long> got;
  for (long d = -1; d >= -430; --d) {
    if (square_factor(d) != 0) continue;
    if (class_number(d) <= 2) got.push_back(d);
  }
  std::vector<long> expected = small_class_number_reference();
  CHECK(expected.size() == 27);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

TEST_CASE("abelianization table") {
  AbelianizationData r1 = abelianization_table(-1);
  CHECK(r1.abelianization.free_rank == 0);
  CHECK(r1.abelianization.torsion == std::vector<long>{2, 2});
  CHECK(r1.equals_bianchi);

  AbelianizationData r3 = abelianization_table(-3);
  CHECK(r3.abelianization.torsion == std::vector<long>{3});
  CHECK(r3.mod_squares.torsion.empty());

  AbelianizationData r19 = abelianization_table(-19);
  CHECK(r19.abelianization.free_rank == 1);
  CHECK(r19.abelianization.torsion == std::vector<long>{6});
  CHECK_FALSE(r19.equals_bianchi);

  CHECK_THROWS_AS(abelianization_table(3), std::invalid_argument);
}

TEST_CASE("abelian shapes know their index-q subgroups") {
  AbelianShape z2z2{0, {2, 2}};
  CHECK(z2z2.admits_index(2));
  CHECK_FALSE(z2z2.admits_index(5));
  AbelianShape rank1{1, {6}};
  CHECK(rank1.admits_index(5));
  CHECK(rank1.admits_index(97));
}

TEST_CASE("non-congruence certificates") {
  Certificate good = certify_noncongruence(-2, 5);
  CHECK(good.verdict == Verdict::NonCongruence);
  CHECK(good.result_index == 5);
  CHECK(good.result_level == 5);
  REQUIRE(good.hypotheses.size() == 4);
  for (const Hypothesis& h : good.hypotheses) CHECK(h.checked);

  Certificate na1 = certify_noncongruence(-1, 5);
  CHECK(na1.verdict == Verdict::NotApplicable);
  Certificate na3 = certify_noncongruence(-3, 5);
  CHECK(na3.verdict == Verdict::NotApplicable);

  // 2 is ramified in O_{-2}: the splitting hypothesis fails.
  Certificate und = certify_noncongruence(-2, 2);
  CHECK(und.verdict == Verdict::Undetermined);
  bool saw = false;
  for (const Hypothesis& h : und.hypotheses)
    if (h.name == "splitting") {
      saw = true;
      CHECK_FALSE(h.checked);
      CHECK(h.witness.find("ramified") != std::string::npos);
    }
  CHECK(saw);

  // Split q < 5 is excluded even where 3 splits (d = -11: disc -11,
  // 3 splits since -11 = 1 mod 3).
  Certificate split3 = certify_noncongruence(-11, 3);
  CHECK(split3.verdict == Verdict::Undetermined);

  CHECK_THROWS_AS(certify_noncongruence(-2, 6), std::invalid_argument);
  CHECK_THROWS_AS(certify_noncongruence(2, 5), std::invalid_argument);
}

TEST_CASE("certificates with a user-supplied subgroup") {
  // Rank-2 user data passes the rank gate for any q; the gcd gate then
  // depends on the level.
  SubgroupDescriptor desc;
  desc.name = "user";
  desc.index = 2;
  desc.level = 2;
  desc.user_abelianization = AbelianShape{2, {}};
  Certificate c = certify_noncongruence(-2, 5, desc);
  // |SL(2, O/2)| = 48 at d = -2, gcd(5, 48/2) = 1.
  CHECK(c.verdict == Verdict::NonCongruence);
  CHECK(c.result_index == 10);
  CHECK_FALSE(c.result_level.has_value());

  // A level whose SL2 order is divisible by q kills the gcd condition.
  SubgroupDescriptor bad = desc;
  bad.level = 5;
  bad.index = 1;
  Certificate cb = certify_noncongruence(-2, 5, bad);
  CHECK(cb.verdict == Verdict::Undetermined);
}

TEST_CASE("power subgroup status") {
  PowerStatusReport m3 = power_subgroup_status(-3);
  REQUIRE(m3.items.size() >= 2);
  for (const auto& it : m3.items) {
    if (it.group == "B'") {
      CHECK(it.verdict == Verdict::Congruence);
      CHECK(it.level == 3);
    }
    if (it.group == "B^2") CHECK(it.verdict == Verdict::Congruence);
  }

  PowerStatusReport m11 = power_subgroup_status(-11);
  for (const auto& it : m11.items) {
    if (it.group == "B^2" || it.group == "B'")
      CHECK(it.verdict == Verdict::NonCongruence);
  }

  PowerStatusReport m23 = power_subgroup_status(-23);
  CHECK(m23.class_number == 3);
  for (const auto& it : m23.items)
    if (it.group == "B^2") CHECK(it.verdict == Verdict::NonCongruence);

  PowerStatusReport m7 = power_subgroup_status(-7);
  CHECK(m7.b_mod_squares_order == 4);
  for (const auto& it : m7.items) {
    if (it.group == "B^2") CHECK(it.verdict == Verdict::Congruence);
    if (it.group == "PE^2") CHECK(it.verdict == Verdict::Congruence);
  }

  // d = -5: not 5 mod 8, h = 2, outside the table: undetermined without
  // user input, decided with it.
  PowerStatusReport m5 = power_subgroup_status(-5);
  for (const auto& it : m5.items)
    if (it.group == "B^2") CHECK(it.verdict == Verdict::Undetermined);
  PowerStatusReport m5u = power_subgroup_status(-5, 16);
  for (const auto& it : m5u.items)
    if (it.group == "B^2") CHECK(it.verdict == Verdict::NonCongruence);

  CHECK_THROWS_AS(power_subgroup_status(5), std::invalid_argument);
}

TEST_CASE("mod-2 trichotomy spot checks") {
  Lemma61Report inert = verify_lemma_6_1(-3);
  CHECK(inert.two_class == SplitClass::Inert);
  CHECK(inert.group_order == 60);
  CHECK(inert.ok);

  Lemma61Report split = verify_lemma_6_1(-7);
  CHECK(split.two_class == SplitClass::Split);
  CHECK(split.group_order == 36);
  CHECK(split.ok);

  Lemma61Report ram = verify_lemma_6_1(-1);
  CHECK(ram.two_class == SplitClass::Ramified);
  CHECK(ram.group_order == 48);
  CHECK(ram.ok);
}

TEST_CASE("trichotomy verdict depends only on the splitting of 2") {
  // All three classes across twenty d values.
  int count = 0;
  for (long d = -1; d >= -43 && count < 20; --d) {
    if (square_factor(d) != 0) continue;
    ++count;
    Lemma61Report rep = verify_lemma_6_1(d);
    CHECK(rep.ok);
    long expected = rep.two_class == SplitClass::Inert
                        ? 60
                        : (rep.two_class == SplitClass::Split ? 36 : 48);
    CHECK(rep.group_order == expected);
  }
  CHECK(count == 20);
}

TEST_CASE("appendix A at the ramified design point") {
  AppendixAReport rep = verify_appendix_a(-5, 5);
  CHECK(rep.t_diagonal_ok);
  CHECK(rep.rsu_order == 125);
  CHECK(rep.rsu_elementary_abelian);
  CHECK(rep.rsu_equals_rst);
  CHECK(rep.relations.size() == 6);
  for (const CheckLine& c : rep.relations) CHECK(c.ok);
  CHECK(rep.psl_order == 7500);
  CHECK(rep.index_coprime_q);
  CHECK(rep.ok);

  // Real quadratic CSP-side instance: 5 ramifies in O_5.
  AppendixAReport real5 = verify_appendix_a(5, 5);
  CHECK(real5.rsu_order == 125);
  CHECK(real5.ok);

  // q = 7 at d = -7 is the next ramified case inside the caps.
  AppendixAReport r77 = verify_appendix_a(-7, 7);
  CHECK(r77.rsu_order == 343);
  CHECK(r77.psl_order == 57624);
  CHECK(r77.ok);

  CHECK_THROWS_AS(verify_appendix_a(-1, 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_appendix_a(-5, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_appendix_a(-5, 4), std::invalid_argument);
}

TEST_SUITE_END();
