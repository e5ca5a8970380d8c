#include "bianchi/certify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bianchi {

bool elementary_equals_bianchi(long d) {
  return d == -1 || d == -2 || d == -3 || d == -7 || d == -11;
}

AbelianizationData abelianization_table(long d) {
  if (d >= 0) throw std::invalid_argument("abelianization_table: d must be < 0");
  (void)make_ring(d);  // validates squarefree
  AbelianizationData row;
  row.d = d;
  switch (d) {
    case -1:
      row.abelianization = {0, {2, 2}};
      row.mod_squares = {0, {2, 2}};
      row.equals_bianchi = true;
      break;
    case -2:
      row.abelianization = {1, {6}};
      row.mod_squares = {0, {2, 2}};
      row.equals_bianchi = true;
      break;
    case -3:
      row.abelianization = {0, {3}};
      row.mod_squares = {0, {}};
      row.equals_bianchi = true;
      break;
    case -7:
      row.abelianization = {1, {2}};
      row.mod_squares = {0, {2, 2}};
      row.equals_bianchi = true;
      break;
    case -11:
      row.abelianization = {1, {3}};
      row.mod_squares = {0, {2}};
      row.equals_bianchi = true;
      break;
    default:
      row.abelianization = {1, {6}};
      row.mod_squares = {0, {2, 2}};
      row.equals_bianchi = false;
      break;
  }
  return row;
}

long class_number(long d) {
  if (d >= 0) throw std::invalid_argument("class_number: d must be < 0");
  RingSpec R = make_ring(d);
  long disc = R.disc;
  long count = 0;
  // Reduced primitive forms (a, b, c): b^2 - 4ac = disc, |b| <= a <= c,
  // gcd(a, b, c) = 1, and b >= 0 when |b| = a or a = c.
  for (long a = 1; 3 * a * a <= -disc; ++a) {
    for (long b = -a; b <= a; ++b) {
      long num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      long cc = num / (4 * a);
      if (cc < a) continue;
      long g = std::gcd(std::gcd(a, b < 0 ? -b : b), cc);
      if (g != 1) continue;
      if (b < 0 && (-b == a || a == cc)) continue;
      ++count;
    }
  }
  return count;
}

std::vector<long> small_class_number_reference() {
  return {-1,   -2,   -3,   -7,   -11,  -19,  -43,  -67,  -163,
          -5,   -6,   -10,  -13,  -15,  -22,  -35,  -37,  -51,
          -58,  -91,  -115, -123, -187, -235, -267, -403, -427};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NonCongruence: return "non-congruence";
    case Verdict::Congruence: return "congruence";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

std::string split_name(SplitClass k) {
  switch (k) {
    case SplitClass::Split: return "split";
    case SplitClass::Inert: return "inert";
    case SplitClass::Ramified: return "ramified";
  }
  return "?";
}

// |SL(2, O/(n))| for a rational integer level n >= 1; the trivial group
// for n = 1.
Int sl2_order_of_level(const RingSpec& R, long n) {
  if (n == 1) return 1;
  Ideal N = principal_ideal(QuadInt(n, 0), R);
  FactoredIdeal F = factor_ideal(N, R);
  Int acc = N.norm() * N.norm() * N.norm();
  for (const auto& [P, e] : F.factors) {
    (void)e;
    Int q2 = P.norm() * P.norm();
    acc = divexact(acc, q2);
    acc *= q2 - 1;
  }
  return acc;
}

}  // namespace

Certificate certify_noncongruence(long d, long q,
                                  const SubgroupDescriptor& subgroup,
                                  const VerifyCaps& caps) {
  if (d >= 0)
    throw std::invalid_argument("certify_noncongruence: d must be < 0");
  if (!is_prime(q))
    throw std::invalid_argument("certify_noncongruence: q = " +
                                std::to_string(q) + " is not prime");
  if (subgroup.index < 1 || subgroup.level < 1)
    throw std::invalid_argument(
        "certify_noncongruence: subgroup index and level must be >= 1");
  (void)caps;
  RingSpec R = make_ring(d);
  Certificate cert;
  cert.d = d;
  cert.q = q;
  cert.subgroup = subgroup;

  bool whole = subgroup.is_whole_group();

  // (1) the whole-group specialization excludes d = -1, -3, whose
  // abelianizations have rank 0.
  {
    Hypothesis h;
    h.name = "d_exclusion";
    if (whole) {
      h.checked = d != -1 && d != -3;
      h.witness = "d = " + std::to_string(d);
    } else {
      h.checked = true;
      h.witness = "not the whole-group case";
    }
    cert.hypotheses.push_back(h);
    if (!h.checked) {
      cert.verdict = Verdict::NotApplicable;
      cert.reason = "whole-group construction requires d != -1, -3";
      return cert;
    }
  }

  // (2) q inert, or q >= 5 split.
  SplitType st = split_type(R, q);
  {
    Hypothesis h;
    h.name = "splitting";
    h.checked = st.kind == SplitClass::Inert ||
                (st.kind == SplitClass::Split && q >= 5);
    h.witness = std::to_string(q) + " is " + split_name(st.kind) + " in O_" +
                std::to_string(d);
    cert.hypotheses.push_back(h);
    if (!h.checked) {
      cert.verdict = Verdict::Undetermined;
      cert.reason = "hypothesis splitting fails: " + h.witness;
      return cert;
    }
  }

  // (3) the abelianization admits an index-q subgroup.
  {
    Hypothesis h;
    h.name = "rank_source";
    AbelianShape shape;
    if (subgroup.user_abelianization) {
      shape = *subgroup.user_abelianization;
      cert.rank_source = "user";
      h.witness = "user-supplied abelianization, free rank " +
                  std::to_string(shape.free_rank);
    } else if (elementary_equals_bianchi(d)) {
      shape = abelianization_table(d).abelianization;
      cert.rank_source = "reference-table";
      h.witness = "reference table row d = " + std::to_string(d) +
                  ", free rank " + std::to_string(shape.free_rank);
    } else {
      long h_d = class_number(d);
      shape.free_rank = h_d;  // rank >= h_d >= 1
      cert.rank_source = "class-number-bound";
      h.witness = "rank >= h_d = " + std::to_string(h_d);
    }
    h.checked = shape.admits_index(q);
    if (!h.checked)
      h.witness += "; no index-" + std::to_string(q) + " subgroup";
    cert.hypotheses.push_back(h);
    if (!h.checked) {
      cert.verdict = Verdict::Undetermined;
      cert.reason = "abelianization admits no index-" + std::to_string(q) +
                    " subgroup";
      return cert;
    }
  }

  // (4) gcd(q, |SL(2, O/n)|/g) = 1.
  {
    Hypothesis h;
    h.name = "gcd_condition";
    Int order = sl2_order_of_level(R, subgroup.level);
    if (!divides(Int(subgroup.index), order)) {
      h.checked = false;
      h.witness = "index " + std::to_string(subgroup.index) +
                  " does not divide |SL(2, O/" +
                  std::to_string(subgroup.level) + ")| = " + order.get_str();
      cert.hypotheses.push_back(h);
      cert.verdict = Verdict::Undetermined;
      cert.reason = "inconsistent subgroup descriptor";
      return cert;
    }
    Int quotient = divexact(order, Int(subgroup.index));
    Int g = gcd(Int(q), quotient);
    h.checked = g == 1;
    h.witness = "gcd(" + std::to_string(q) + ", " + order.get_str() + "/" +
                std::to_string(subgroup.index) + ") = " + g.get_str();
    cert.hypotheses.push_back(h);
    if (!h.checked) {
      cert.verdict = Verdict::Undetermined;
      cert.reason = "gcd condition fails: " + h.witness;
      return cert;
    }
  }

  cert.verdict = Verdict::NonCongruence;
  cert.result_index = subgroup.index * q;
  if (whole) cert.result_level = q;
  return cert;
}

PowerStatusReport power_subgroup_status(
    long d, std::optional<long> user_b_mod_squares) {
  if (d >= 0)
    throw std::invalid_argument("power_subgroup_status: d must be < 0");
  RingSpec R = make_ring(d);
  PowerStatusReport rep;
  rep.d = d;
  rep.two_class = split_type(R, 2).kind;
  rep.class_number = class_number(d);

  bool five_mod_8 = mod_floor(d, 8) == 5;
  AbelianizationData row = abelianization_table(d);

  if (five_mod_8) {
    if (d == -3) {
      rep.items.push_back({"B^2", Verdict::Congruence,
                           "squares generate the whole group",
                           "B_{-3}^2 = B_{-3}", std::nullopt});
      rep.items.push_back({"B'", Verdict::Congruence,
                           "commutator subgroup of B_{-3}",
                           "level 3", 3});
      rep.items.push_back({"PE^2", Verdict::Congruence,
                           "squares generate the whole group",
                           "PE_{-3} = B_{-3}", std::nullopt});
      rep.items.push_back({"PE'", Verdict::Congruence,
                           "commutator subgroup of B_{-3}",
                           "level 3", 3});
    } else {
      std::string wit = "2 inert (d = " + std::to_string(d) +
                        " is 5 mod 8), d != -3";
      rep.items.push_back({"B^2", Verdict::NonCongruence,
                           "squares, 2 inert", wit, 2});
      rep.items.push_back({"B'", Verdict::NonCongruence,
                           "commutators, 2 inert", wit, std::nullopt});
      rep.items.push_back({"PE^2", Verdict::NonCongruence,
                           "squares, 2 inert", wit, 2});
      rep.items.push_back({"PE'", Verdict::NonCongruence,
                           "commutators, 2 inert", wit, std::nullopt});
    }
    if (elementary_equals_bianchi(d)) rep.b_mod_squares_order = row.mod_squares.torsion_order();
    return rep;
  }

  // d not 5 mod 8: B^2 is non-congruence iff |B_d/B_d^2| >= 8.
  PowerStatusItem b2;
  b2.group = "B^2";
  b2.proposition = "squares, 2 not inert";
  b2.level = 2;
  if (rep.class_number >= 3) {
    rep.b_mod_squares_order = std::nullopt;  // only the bound is known
    b2.verdict = Verdict::NonCongruence;
    b2.witness = "h_d = " + std::to_string(rep.class_number) +
                 " >= 3, so |B/B^2| >= 2^" +
                 std::to_string(rep.class_number) + " >= 8";
  } else if (elementary_equals_bianchi(d)) {
    long ord = row.mod_squares.torsion_order();
    rep.b_mod_squares_order = ord;
    b2.verdict = ord >= 8 ? Verdict::NonCongruence : Verdict::Congruence;
    b2.witness = "|B/B^2| = " + std::to_string(ord) +
                 (ord >= 8 ? " >= 8" : " < 8") + " (reference table, B = PE)";
  } else if (user_b_mod_squares) {
    rep.b_mod_squares_order = *user_b_mod_squares;
    b2.verdict = *user_b_mod_squares >= 8 ? Verdict::NonCongruence
                                          : Verdict::Congruence;
    b2.witness = "|B/B^2| = " + std::to_string(*user_b_mod_squares) +
                 " (user-supplied)";
  } else {
    b2.verdict = Verdict::Undetermined;
    b2.witness = "needs |B_d/B_d^2|: h_d = " +
                 std::to_string(rep.class_number) +
                 " <= 2 and d outside the reference table";
  }
  rep.items.push_back(b2);

  rep.items.push_back({"B'", Verdict::Undetermined,
                       "no applicable statement for d not 5 mod 8",
                       "", std::nullopt});

  rep.items.push_back({"PE^2", Verdict::Congruence,
                       "squares of the elementary group, 2 not inert",
                       "|PE/PE^2| = " +
                           std::to_string(row.mod_squares.torsion_order()) +
                           " < 8 (reference table)",
                       2});
  rep.items.push_back({"PE'", Verdict::Undetermined,
                       "no applicable statement for d not 5 mod 8",
                       "", std::nullopt});
  return rep;
}

namespace {

void check(Lemma61Report& rep, const std::string& name, long expected,
           long actual) {
  rep.checks.push_back({name, std::to_string(expected),
                        std::to_string(actual), expected == actual});
}

void check_bool(Lemma61Report& rep, const std::string& name, bool value) {
  rep.checks.push_back({name, "true", value ? "true" : "false", value});
}

}  // namespace

Lemma61Report verify_lemma_6_1(long d, const VerifyCaps& caps) {
  if (d >= 0)
    throw std::invalid_argument("verify_lemma_6_1: d must be < 0");
  RingSpec R = make_ring(d);
  SplitType st = split_type(R, 2);

  Lemma61Report rep;
  rep.d = d;
  rep.two_class = st.kind;

  Ideal two = principal_ideal(QuadInt(2, 0), R);
  QuotientRing Q(R, two, caps.ring_cap);
  FiniteMatrixGroup SL = sl2_enumerate(Q, caps.tuple_cap);
  FiniteMatrixGroup G = psl_quotient(SL);  // char 2: -I = I, order unchanged
  rep.group_order = G.order();

  switch (st.kind) {
    case SplitClass::Inert: {
      check(rep, "order", 60, G.order());
      FiniteMatrixGroup D = derived_subgroup(G);
      check(rep, "derived = G", 60, D.order());
      FiniteMatrixGroup G2 = power_subgroup(G, 2);
      check(rep, "squares = G", 60, G2.order());
      break;
    }
    case SplitClass::Split: {
      check(rep, "order", 36, G.order());
      FiniteMatrixGroup G2 = power_subgroup(G, 2);
      check(rep, "index of squares", 4, G.order() / G2.order());
      bool exp2 = true;
      for (const Mat2& g : G.elements())
        if (!G2.contains(g * g)) exp2 = false;
      check_bool(rep, "quotient exponent 2", exp2);
      break;
    }
    case SplitClass::Ramified: {
      check(rep, "order", 48, G.order());
      const Ideal& pi = st.primes[0];
      // w' = b + w is the non-rational HNF generator of pi, an element of
      // pi outside (2).
      QuadInt wp(pi.b, pi.c);
      Residue wr = Q.reduce(wp);
      Residue one = Q.one(), zero = Q.zero();
      Mat2 x{one, wr, zero, one};
      Mat2 y{one, zero, wr, one};
      Mat2 z{one + wr, wr, wr, one + wr};
      FiniteMatrixGroup A = subgroup_closure({x, y, z}, Q, true);
      check(rep, "order of <x,y,z>", 8, A.order());
      check_bool(rep, "<x,y,z> elementary abelian",
                 is_elementary_abelian(A, 2));
      Mat2 Rm = gen_R(Q);
      FiniteMatrixGroup D = subgroup_closure({x * z, y * z, Rm}, Q, true);
      check(rep, "order of D", 12, D.order());
      check_bool(rep, "D normal", is_normal_in(D, G));
      check(rep, "index of D", 4, G.order() / D.order());
      FiniteMatrixGroup G2 = power_subgroup(G, 2);
      check_bool(rep, "D = squares", D.same_elements(G2));
      break;
    }
  }
  rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                       [](const CheckLine& c) { return c.ok; });
  return rep;
}

AppendixAReport verify_appendix_a(long d, long q,
                                  const VerifyCaps& caps) {
  if (!is_prime(q) || q < 5)
    throw std::invalid_argument(
        "verify_appendix_a: q must be a prime >= 5, got " +
        std::to_string(q));
  RingSpec R = make_ring(d);
  SplitType st = split_type(R, q);
  if (st.kind != SplitClass::Ramified)
    throw std::invalid_argument("verify_appendix_a: q = " + std::to_string(q) +
                                " is " + split_name(st.kind) + " in O_" +
                                std::to_string(d) + ", ramified required");

  AppendixAReport rep;
  rep.d = d;
  rep.q = q;
  rep.pi = st.primes[0];

  Ideal qO = principal_ideal(QuadInt(q, 0), R);
  QuotientRing Q(R, qO, caps.ring_cap);

  // x is the non-rational HNF generator of pi, reduced mod q.
  QuadInt xe(rep.pi.b, rep.pi.c);
  Residue x = Q.reduce(xe);
  rep.x = to_string(Q.lift(x));
  Residue one = Q.one(), zero = Q.zero();

  Mat2 r{one, zero, x, one};
  Mat2 s{one, x, zero, one};
  Mat2 u{one - x, x, -x, one + x};
  Mat2 t = r * s.inverse() * u;

  Mat2 t_expected{one - x, zero, zero, one + x};
  rep.t_diagonal_ok = t == t_expected;

  FiniteMatrixGroup rsu = subgroup_closure({r, s, u}, Q, false);
  rep.rsu_order = rsu.order();
  rep.rsu_elementary_abelian = is_elementary_abelian(rsu, q);
  FiniteMatrixGroup rst = subgroup_closure({r, s, t}, Q, false);
  rep.rsu_equals_rst = rsu.same_elements(rst);

  Mat2 S = gen_S(Q), T = gen_T1(Q);
  auto conj_by = [](const Mat2& v, const Mat2& g) {
    return g * v * g.inverse();
  };
  auto rel = [&rep](const std::string& name, const Mat2& lhs,
                    const Mat2& rhs) {
    rep.relations.push_back(
        {name, to_string(rhs), to_string(lhs), lhs == rhs});
  };
  rel("r^S = s^-1", conj_by(r, S), s.inverse());
  rel("s^S = r^-1", conj_by(s, S), r.inverse());
  rel("t^S = t^-1", conj_by(t, S), t.inverse());
  rel("r^T = r s^-1 t^-1", conj_by(r, T), r * s.inverse() * t.inverse());
  rel("s^T = s", conj_by(s, T), s);
  rel("t^T = s^2 t", conj_by(t, T), s * s * t);

  FiniteMatrixGroup G =
      subgroup_closure(standard_generators(Q), Q, /*psl=*/true,
                       caps.group_cap);
  rep.psl_order = G.order();
  FiniteMatrixGroup Gp = derived_subgroup(G);
  rep.derived_index = G.order() / Gp.order();
  rep.index_coprime_q = rep.derived_index % q != 0;

  Int q3 = Int(q) * q * q;
  rep.ok = rep.t_diagonal_ok && Int(rep.rsu_order) == q3 &&
           rep.rsu_elementary_abelian && rep.rsu_equals_rst &&
           rep.index_coprime_q &&
           std::all_of(rep.relations.begin(), rep.relations.end(),
                       [](const CheckLine& c) { return c.ok; });
  return rep;
}

}  // namespace bianchi
