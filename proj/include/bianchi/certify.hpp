#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bianchi/indexcalc.hpp"

namespace bianchi {

// Finitely generated abelian group as free rank + torsion orders.
struct AbelianShape {
  long free_rank = 0;
  std::vector<long> torsion;

  long torsion_order() const {
    long t = 1;
    for (long x : torsion) t *= x;
    return t;
  }
  // Admits a surjection onto Z_q, i.e. an index-q subgroup, for prime q.
  bool admits_index(long q) const {
    if (free_rank >= 1) return true;
    for (long t : torsion)
      if (t % q == 0) return true;
    return false;
  }
};

// Reference row of the abelianization table for PE_d. Outside the five
// discriminants d in {-1, -2, -3, -7, -11}, where the elementary group
// is all of the Bianchi group, every d shares the generic row.
struct AbelianizationData {
  long d = 0;
  AbelianShape abelianization;
  AbelianShape mod_squares;
  bool equals_bianchi = false;
};

AbelianizationData abelianization_table(long d);

bool elementary_equals_bianchi(long d);

// Class number of O_d (d < 0) by counting reduced primitive binary
// quadratic forms of the field discriminant.
long class_number(long d);

// Reference data: the 27 squarefree d with 0 > d >= -430 and h_d <= 2.
std::vector<long> small_class_number_reference();

enum class Verdict { NonCongruence, Congruence, NotApplicable, Undetermined };

std::string to_string(Verdict v);

struct Hypothesis {
  std::string name;
  bool checked = false;
  std::string witness;
};

struct SubgroupDescriptor {
  std::string name = "B_d";
  long index = 1;
  long level = 1;
  // Source for the abelianization of the subgroup: the reference table
  // for d in Omega, the class-number rank bound otherwise, or explicit
  // user data.
  std::optional<AbelianShape> user_abelianization;

  bool is_whole_group() const { return index == 1 && !user_abelianization; }
};

struct Certificate {
  long d = 0;
  long q = 0;
  SubgroupDescriptor subgroup;
  std::string rank_source;
  std::vector<Hypothesis> hypotheses;
  Verdict verdict = Verdict::Undetermined;
  std::string reason;
  std::optional<long> result_index;
  std::optional<long> result_level;
};

// Non-congruence certificate: checks, in order, the d-exclusion for the
// whole-group specialization, the splitting condition on q (inert, or
// split with q >= 5), the existence of an index-q subgroup of the
// abelianization, and the gcd condition gcd(q, |SL(2, O/n)|/g) = 1.
Certificate certify_noncongruence(long d, long q,
                                  const SubgroupDescriptor& subgroup = {},
                                  const VerifyCaps& caps = {});

struct PowerStatusItem {
  std::string group;  // "B^2", "B'", "PE^2", "PE'"
  Verdict verdict = Verdict::Undetermined;
  std::string proposition;
  std::string witness;
  std::optional<long> level;
};

struct PowerStatusReport {
  long d = 0;
  SplitClass two_class;
  long class_number = 0;
  std::optional<long> b_mod_squares_order;  // |B_d / B_d^2| when known
  std::vector<PowerStatusItem> items;
};

// Congruence status of the squares and commutator subgroups of B_d and
// PE_d. user_b_mod_squares supplies |B_d/B_d^2| when neither the table
// nor the class-number bound decides.
PowerStatusReport power_subgroup_status(
    long d, std::optional<long> user_b_mod_squares = std::nullopt);

struct CheckLine {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct Lemma61Report {
  long d = 0;
  SplitClass two_class;
  long group_order = 0;
  std::vector<CheckLine> checks;
  bool ok = false;
};

// The mod-2 trichotomy for G = PSL(2, O_d/2): order 60 with G = G^2 in
// the inert case; order 36 with [G : G^2] = 4 in the split case; order 48
// with the explicit order-12 normal subgroup D = G^2 in the ramified
// case. The structural fingerprints (orders, derived/power indices,
// exponents) are certified rather than full isomorphism types.
Lemma61Report verify_lemma_6_1(long d, const VerifyCaps& caps = {});

struct AppendixAReport {
  long d = 0;
  long q = 0;
  Ideal pi;
  std::string x;
  bool t_diagonal_ok = false;
  long rsu_order = 0;
  bool rsu_elementary_abelian = false;
  bool rsu_equals_rst = false;
  std::vector<CheckLine> relations;
  long psl_order = 0;
  long derived_index = 0;
  bool index_coprime_q = false;
  bool ok = false;
};

// For q >= 5 ramified: the explicit presentation of G(pi)/G(q) by r, s, u
// from the HNF basis {q, x} of pi, the six conjugation relations under S
// and T, and the index-q normal-subgroup obstruction q coprime to
// [G : G'] for G = PSL(2, O/(q)).
AppendixAReport verify_appendix_a(long d, long q,
                                  const VerifyCaps& caps = {});

}  // namespace bianchi
