#include "bianchi/json_io.hpp"

namespace bianchi {

Json json_int(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const SplitType& st) {
  Json j;
  switch (st.kind) {
    case SplitClass::Split: j["type"] = "split"; break;
    case SplitClass::Inert: j["type"] = "inert"; break;
    case SplitClass::Ramified: j["type"] = "ramified"; break;
  }
  Json primes = Json::array();
  for (const Ideal& P : st.primes) primes.push_back(to_string(P));
  j["primes"] = primes;
  return j;
}

Json to_json(const FactoredIdeal& F) {
  Json j = Json::array();
  for (const auto& [P, e] : F.factors) {
    Json f;
    f["prime"] = to_string(P);
    f["norm"] = json_int(P.norm());
    f["exponent"] = e;
    j.push_back(f);
  }
  return j;
}

Json to_json(const IndexReport& rep) {
  Json j;
  j["ideal"] = to_string(rep.ideal);
  j["norm"] = json_int(rep.ideal.norm());
  j["closed_form"] = json_int(rep.closed_form);
  j["oracle"] = rep.oracle ? json_int(*rep.oracle) : Json(nullptr);
  j["factors"] = to_json(rep.factors);
  j["match"] = rep.match;
  return j;
}

Json to_json(const SurjectivityReport& rep) {
  Json j;
  j["ideal"] = to_string(rep.ideal);
  j["closed_form"] = json_int(rep.closed_form);
  j["closure_order"] = rep.closure_order;
  j["surjective"] = rep.surjective;
  return j;
}

Json to_json(const FiltrationReport& rep) {
  Json j;
  j["prime"] = to_string(rep.prime);
  j["m"] = rep.m;
  j["kernel_order"] = rep.kernel_order;
  j["expected"] = json_int(rep.expected);
  j["characteristic"] = rep.characteristic;
  j["elementary_abelian"] = rep.elementary_abelian;
  j["witnesses"] = rep.witnesses;
  j["witnesses_generate"] = rep.witnesses_generate;
  j["ok"] = rep.ok;
  return j;
}

Json to_json(const MultiplicativityReport& rep) {
  Json j;
  j["ideal_a"] = to_string(rep.lhs);
  j["ideal_b"] = to_string(rep.rhs);
  j["product"] = to_string(rep.product);
  j["index_a"] = json_int(rep.index_lhs);
  j["index_b"] = json_int(rep.index_rhs);
  j["index_product"] = json_int(rep.index_product);
  j["multiplicative"] = rep.multiplicative;
  j["oracle"] = rep.oracle ? json_int(*rep.oracle) : Json(nullptr);
  j["oracle_match"] = rep.oracle_match;
  j["ok"] = rep.ok;
  return j;
}

Json to_json(const ClosureReport& rep) {
  Json j;
  j["m"] = rep.m;
  j["n"] = rep.n;
  j["ambient_order"] = rep.ambient_order;
  j["closure_order"] = rep.closure_order;
  j["kernel_order"] = rep.kernel_order;
  j["equal"] = rep.equal;
  return j;
}

Json to_json(const StructureReport& rep) {
  Json j;
  j["order"] = rep.order;
  j["is_abelian"] = rep.is_abelian;
  j["exponent_divides"] = rep.exponent_divides;
  j["center_order"] = rep.center_order;
  j["derived_index"] = rep.derived_index;
  return j;
}

Json to_json(const AbelianShape& shape) {
  Json j;
  j["free_rank"] = shape.free_rank;
  j["torsion"] = shape.torsion;
  return j;
}

Json to_json(const AbelianizationData& row) {
  Json j;
  j["d"] = row.d;
  j["group"] = "PE_d";
  j["abelianization"] = to_json(row.abelianization);
  j["mod_squares"] = to_json(row.mod_squares);
  j["equals_bianchi"] = row.equals_bianchi;
  return j;
}

Json to_json(const Certificate& cert) {
  Json j;
  j["d"] = cert.d;
  j["q"] = cert.q;
  Json sub;
  sub["name"] = cert.subgroup.name;
  sub["index"] = cert.subgroup.index;
  sub["level"] = cert.subgroup.level;
  if (cert.subgroup.user_abelianization)
    sub["abelianization"] = to_json(*cert.subgroup.user_abelianization);
  j["subgroup"] = sub;
  if (!cert.rank_source.empty()) j["rank_source"] = cert.rank_source;
  Json hyps = Json::array();
  for (const Hypothesis& h : cert.hypotheses) {
    Json hj;
    hj["name"] = h.name;
    hj["checked"] = h.checked;
    hj["witness"] = h.witness;
    hyps.push_back(hj);
  }
  j["hypotheses"] = hyps;
  j["verdict"] = to_string(cert.verdict);
  if (!cert.reason.empty()) j["reason"] = cert.reason;
  if (cert.result_index) j["result_index"] = *cert.result_index;
  if (cert.result_level) j["result_level"] = *cert.result_level;
  return j;
}

Json to_json(const PowerStatusReport& rep) {
  Json j;
  j["d"] = rep.d;
  switch (rep.two_class) {
    case SplitClass::Split: j["two_class"] = "split"; break;
    case SplitClass::Inert: j["two_class"] = "inert"; break;
    case SplitClass::Ramified: j["two_class"] = "ramified"; break;
  }
  j["class_number"] = rep.class_number;
  j["b_mod_squares_order"] = rep.b_mod_squares_order
                                 ? Json(*rep.b_mod_squares_order)
                                 : Json(nullptr);
  Json items = Json::array();
  for (const PowerStatusItem& it : rep.items) {
    Json ij;
    ij["group"] = it.group;
    ij["verdict"] = to_string(it.verdict);
    ij["proposition"] = it.proposition;
    ij["witness"] = it.witness;
    if (it.level) ij["level"] = *it.level;
    items.push_back(ij);
  }
  j["items"] = items;
  return j;
}

namespace {

Json check_lines(const std::vector<CheckLine>& checks) {
  Json arr = Json::array();
  for (const CheckLine& c : checks) {
    Json cj;
    cj["name"] = c.name;
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    cj["ok"] = c.ok;
    arr.push_back(cj);
  }
  return arr;
}

}  // namespace

Json to_json(const Lemma61Report& rep) {
  Json j;
  j["d"] = rep.d;
  switch (rep.two_class) {
    case SplitClass::Split: j["two_class"] = "split"; break;
    case SplitClass::Inert: j["two_class"] = "inert"; break;
    case SplitClass::Ramified: j["two_class"] = "ramified"; break;
  }
  j["order"] = rep.group_order;
  j["checks"] = check_lines(rep.checks);
  j["ok"] = rep.ok;
  return j;
}

Json to_json(const AppendixAReport& rep) {
  Json j;
  j["d"] = rep.d;
  j["q"] = rep.q;
  j["pi"] = to_string(rep.pi);
  j["x"] = rep.x;
  j["t_diagonal_ok"] = rep.t_diagonal_ok;
  j["rsu_order"] = rep.rsu_order;
  j["rsu_elementary_abelian"] = rep.rsu_elementary_abelian;
  j["rsu_equals_rst"] = rep.rsu_equals_rst;
  j["relations"] = check_lines(rep.relations);
  j["psl_order"] = rep.psl_order;
  j["derived_index"] = rep.derived_index;
  j["index_coprime_q"] = rep.index_coprime_q;
  j["ok"] = rep.ok;
  return j;
}

}  // namespace bianchi
