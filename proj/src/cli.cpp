#include "bianchi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "bianchi/json_io.hpp"

namespace bianchi {

namespace {

struct Task {
  std::string suite;
  long d = 0;
  std::string subject;
  std::function<Json()> fn;  // returns the item report; may throw capacity
};

Json run_task(const Task& t) {
  Json item;
  item["suite"] = t.suite;
  item["d"] = t.d;
  item["subject"] = t.subject;
  try {
    Json body = t.fn();
    item["status"] = body.value("status", "pass");
    body.erase("status");
    item["report"] = body;
  } catch (const capacity_error& e) {
    item["status"] = "skip";
    item["detail"] = e.what();
  }
  return item;
}

std::vector<Json> run_tasks(const std::vector<Task>& tasks, int threads) {
  std::vector<Json> results(tasks.size());
  if (threads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) results[i] = run_task(tasks[i]);
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      results[i] = run_task(tasks[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

std::string fail_status(bool ok) { return ok ? "pass" : "fail"; }

// ---- suite task builders ------------------------------------------------

std::vector<Task> tasks_index(const std::vector<long>& ds,
                              long bound, const VerifyCaps& caps,
                              bool surjectivity) {
  std::vector<Task> tasks;
  for (long d : ds) {
    RingSpec R = make_ring(d);
    for (const Ideal& I : ideals_of_norm_at_most(R, bound)) {
      if (I.is_unit()) continue;
      std::string subject = to_string(I);
      if (surjectivity) {
        tasks.push_back({"surjectivity", d, subject, [R, I, caps]() {
                           SurjectivityReport rep =
                               verify_surjectivity(R, I, caps);
                           Json j = to_json(rep);
                           j["status"] = fail_status(rep.surjective);
                           return j;
                         }});
      } else {
        tasks.push_back({"index", d, subject, [R, I, caps]() {
                           IndexReport rep = index_formula(R, I, caps);
                           Json j = to_json(rep);
                           if (!rep.oracle)
                             throw capacity_error(
                                 "oracle enumeration over cap");
                           j["status"] = fail_status(rep.match);
                           return j;
                         }});
      }
    }
  }
  return tasks;
}

std::vector<Task> tasks_filtration(const std::vector<long>& ds,
                                   long norm_bound,
                                   const VerifyCaps& caps) {
  std::vector<Task> tasks;
  for (long d : ds) {
    RingSpec R = make_ring(d);
    for (long p = 2; p <= norm_bound; ++p) {
      if (!is_prime(p)) continue;
      SplitType st = split_type(R, p);
      for (const Ideal& P : st.primes) {
        if (P.norm() > norm_bound) continue;
        for (long m = 1; m <= 2; ++m) {
          std::string subject =
              to_string(P) + " m=" + std::to_string(m);
          tasks.push_back({"filtration", d, subject, [R, P, m, caps]() {
                             FiltrationReport rep =
                                 verify_filtration(R, P, m, caps);
                             Json j = to_json(rep);
                             j["status"] = fail_status(rep.ok);
                             return j;
                           }});
        }
      }
    }
  }
  return tasks;
}

std::vector<Task> tasks_multiplicativity(const std::vector<long>& ds,
                                         long bound,
                                         const VerifyCaps& caps) {
  std::vector<Task> tasks;
  for (long d : ds) {
    RingSpec R = make_ring(d);
    auto ideals = ideals_of_norm_at_most(R, bound / 2);
    for (size_t i = 0; i < ideals.size(); ++i) {
      if (ideals[i].is_unit()) continue;
      for (size_t j = i; j < ideals.size(); ++j) {
        if (ideals[j].is_unit()) continue;
        const Ideal &A = ideals[i], &B = ideals[j];
        if (A.norm() * B.norm() > bound) continue;
        if (!ideal_coprime(A, B, R)) continue;
        std::string subject = to_string(A) + " * " + to_string(B);
        tasks.push_back({"multiplicativity", d, subject, [R, A, B, caps]() {
                           MultiplicativityReport rep =
                               verify_multiplicativity(R, A, B, caps);
                           Json j = to_json(rep);
                           j["status"] = fail_status(rep.ok);
                           return j;
                         }});
      }
    }
  }
  return tasks;
}

std::vector<Task> tasks_wohlfahrt(const std::vector<long>& ds,
                                  const VerifyCaps& caps) {
  std::vector<Task> tasks;
  const std::pair<long, long> pairs[] = {{2, 3}, {3, 2}, {2, 2}, {3, 3}};
  for (long d : ds) {
    RingSpec R = make_ring(d);
    for (auto [m, n] : pairs) {
      std::string subject =
          "m=" + std::to_string(m) + " n=" + std::to_string(n);
      tasks.push_back({"wohlfahrt", d, subject, [R, m, n, caps]() {
                         ClosureReport rep =
                             verify_wohlfahrt_closure(R, m, n, caps);
                         Json j = to_json(rep);
                         j["status"] = fail_status(rep.equal);
                         return j;
                       }});
    }
  }
  return tasks;
}

std::vector<Task> tasks_lemma61(const std::vector<long>& ds,
                                const VerifyCaps& caps) {
  std::vector<Task> tasks;
  for (long d : ds) {
    tasks.push_back({"lemma61", d, "PSL(2, O/2)", [d, caps]() {
                       Lemma61Report rep = verify_lemma_6_1(d, caps);
                       Json j = to_json(rep);
                       j["status"] = fail_status(rep.ok);
                       return j;
                     }});
  }
  return tasks;
}

std::vector<Task> tasks_classnum(long dmin) {
  std::vector<Task> tasks;
  tasks.push_back({"classnum", dmin, "h_d <= 2 set", [dmin]() {
                     std::vector<long> got;
                     for (long d = -1; d >= dmin; --d) {
                       if (square_factor(d) != 0) continue;
                       if (class_number(d) <= 2) got.push_back(d);
                     }
                     auto expected = small_class_number_reference();
                     std::sort(expected.begin(), expected.end(),
                               std::greater<>());
                     Json j;
                     j["computed"] = got;
                     j["expected"] = expected;
                     j["count"] = got.size();
                     j["status"] = fail_status(got == expected);
                     return j;
                   }});
  return tasks;
}

std::vector<Task> tasks_certificates(const VerifyCaps& caps) {
  std::vector<Task> tasks;
  auto cert_task = [&caps](long d, long q, Verdict expect) {
    return Task{"certificates", d, "certify q=" + std::to_string(q),
                [d, q, expect, caps]() {
                  Certificate c = certify_noncongruence(d, q, {}, caps);
                  Json j = to_json(c);
                  j["status"] = fail_status(c.verdict == expect);
                  return j;
                }};
  };
  tasks.push_back(cert_task(-2, 5, Verdict::NonCongruence));
  tasks.push_back(cert_task(-1, 5, Verdict::NotApplicable));
  tasks.push_back(cert_task(-3, 5, Verdict::NotApplicable));
  auto power_task = [](long d, const std::string& group,
                       Verdict expect) {
    return Task{"certificates", d, "power-status " + group,
                [d, group, expect]() {
                  PowerStatusReport rep = power_subgroup_status(d);
                  Json j = to_json(rep);
                  bool ok = false;
                  for (const auto& it : rep.items)
                    if (it.group == group) ok = it.verdict == expect;
                  j["status"] = fail_status(ok);
                  return j;
                }};
  };
  tasks.push_back(power_task(-11, "B^2", Verdict::NonCongruence));
  tasks.push_back(power_task(-23, "B^2", Verdict::NonCongruence));
  tasks.push_back(power_task(-7, "B^2", Verdict::Congruence));
  return tasks;
}

std::vector<Task> tasks_appendix_a(const VerifyCaps& caps) {
  std::vector<Task> tasks;
  tasks.push_back({"appendix-a", -5, "q=5", [caps]() {
                     AppendixAReport rep = verify_appendix_a(-5, 5, caps);
                     Json j = to_json(rep);
                     j["status"] = fail_status(rep.ok);
                     return j;
                   }});
  return tasks;
}

// ---- output -------------------------------------------------------------

void emit_csv(const std::vector<Json>& items, std::ostream& out) {
  out << "suite,d,subject,status,detail\n";
  for (const Json& item : items) {
    std::string detail;
    if (item.contains("detail")) detail = item["detail"].get<std::string>();
    std::string subject = item["subject"].get<std::string>();
    for (char& ch : subject)
      if (ch == ',') ch = ';';
    for (char& ch : detail)
      if (ch == ',') ch = ';';
    out << item["suite"].get<std::string>() << ","
        << item["d"].get<long>() << "," << subject << ","
        << item["status"].get<std::string>() << "," << detail << "\n";
  }
}

struct CommonOpts {
  std::string format = "json";
  long cap = QuotientRing::kDefaultCap;
  std::string parallelism = "1";

  VerifyCaps caps() const {
    VerifyCaps c;
    c.ring_cap = cap;
    return c;
  }
  int threads() const {
    if (parallelism == "auto") {
      unsigned n = std::thread::hardware_concurrency();
      return n == 0 ? 1 : static_cast<int>(n);
    }
    int n = std::stoi(parallelism);
    if (n < 1) throw CLI::ValidationError("--parallelism must be >= 1");
    return n;
  }
};

int emit_single(const Json& j, bool claim_ok, const CommonOpts& opts,
                std::ostream& out, std::ostream& err) {
  if (opts.format == "json") {
    out << j.dump(2) << "\n";
  } else if (opts.format == "text") {
    for (auto it = j.begin(); it != j.end(); ++it)
      out << it.key() << ": " << it.value().dump() << "\n";
  } else {
    err << "csv output is only available for sweep summaries\n";
    return 2;
  }
  return claim_ok ? 0 : 1;
}

}  // namespace

std::vector<long> squarefree_range(long dmin, long dmax) {
  std::vector<long> out;
  for (long d = dmax; d >= dmin; --d) {
    if (d >= 0) continue;
    if (square_factor(d) != 0) continue;
    out.push_back(d);
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact congruence-subgroup computations for SL(2) over "
               "quadratic integer rings"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cap", opts.cap, "quotient-ring enumeration cap");
  app.add_option("--parallelism", opts.parallelism,
                 "worker threads for sweeps (integer or 'auto')");

  long d = 0, p = 0, q = 0;
  long m = 0, n = 0;
  std::vector<std::string> ideal_texts;
  long sub_index = 1, sub_level = 1;
  long user_rank = -1;
  std::string torsion_text;
  long b_mod_squares = -1;

  auto* c_split = app.add_subcommand("split", "splitting type of a prime");
  c_split->add_option("-d", d)->required();
  c_split->add_option("-p,-q", p, "rational prime")->required();

  auto* c_classnum = app.add_subcommand("classnum", "class number of O_d");
  c_classnum->add_option("-d", d)->required();

  auto* c_index =
      app.add_subcommand("index", "principal congruence subgroup index");
  c_index->add_option("-d", d)->required();
  c_index->add_option("--ideal", ideal_texts)->required();

  auto* c_factor = app.add_subcommand("factor", "prime factorization");
  c_factor->add_option("-d", d)->required();
  c_factor->add_option("--ideal", ideal_texts)->required();

  auto* c_surj = app.add_subcommand("verify-surjectivity",
                                    "closure of {S, T_1, T_w} fills SL2");
  c_surj->add_option("-d", d)->required();
  c_surj->add_option("--ideal", ideal_texts)->required();

  auto* c_filt = app.add_subcommand("verify-filtration",
                                    "congruence filtration layer");
  c_filt->add_option("-d", d)->required();
  c_filt->add_option("--ideal", ideal_texts, "prime ideal")->required();
  c_filt->add_option("-m", m)->required();

  auto* c_mult = app.add_subcommand("verify-multiplicativity",
                                    "index multiplies over coprime ideals");
  c_mult->add_option("-d", d)->required();
  c_mult->add_option("--ideal", ideal_texts, "two coprime ideals")
      ->expected(2);

  auto* c_wohl = app.add_subcommand(
      "verify-wohlfahrt", "normal closure of m-th power translations");
  c_wohl->add_option("-d", d)->required();
  c_wohl->add_option("-m", m)->required();
  c_wohl->add_option("-n", n)->required();

  auto* c_l61 = app.add_subcommand("verify-lemma61",
                                   "mod-2 trichotomy of PSL(2, O/2)");
  c_l61->add_option("-d", d)->required();

  auto* c_appa = app.add_subcommand("verify-appendix-a",
                                    "ramified level-q presentation checks");
  c_appa->add_option("-d", d)->required();
  c_appa->add_option("-q,-p", q, "ramified prime >= 5")->required();

  auto* c_cert =
      app.add_subcommand("certify", "non-congruence certificate");
  c_cert->add_option("-d", d)->required();
  c_cert->add_option("-q,-p", q, "prime")->required();
  c_cert->add_option("--index", sub_index, "subgroup index g");
  c_cert->add_option("--level", sub_level, "subgroup level n");
  c_cert->add_option("--rank", user_rank, "free rank of S/[S,S]");
  c_cert->add_option("--torsion", torsion_text,
                     "torsion orders of S/[S,S], comma separated");

  auto* c_power = app.add_subcommand("power-status",
                                     "congruence status of squares and "
                                     "commutators");
  c_power->add_option("-d", d)->required();
  c_power->add_option("--mod-squares", b_mod_squares,
                      "user-supplied |B_d/B_d^2|");

  std::string suite;
  long d_min = 0, d_max = 0, norm_bound = 0;
  auto* c_sweep = app.add_subcommand("sweep", "run a verification suite");
  c_sweep->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"index", "surjectivity", "filtration",
                             "multiplicativity", "wohlfahrt", "lemma61",
                             "classnum", "certificates", "appendix-a",
                             "all"}));
  c_sweep->add_option("--d-min", d_min, "most negative d");
  c_sweep->add_option("--d-max", d_max, "least negative d");
  c_sweep->add_option("--norm-bound", norm_bound, "ideal norm bound");

  std::vector<const char*> argv;
  std::string prog = "bianchi";
  argv.push_back(prog.c_str());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    VerifyCaps caps = opts.caps();

    if (c_split->parsed()) {
      RingSpec R = make_ring(d);
      SplitType st = split_type(R, p);
      Json j = to_json(st);
      j["d"] = d;
      j["p"] = p;
      return emit_single(j, true, opts, out, err);
    }
    if (c_classnum->parsed()) {
      Json j;
      j["d"] = d;
      j["class_number"] = class_number(d);
      return emit_single(j, true, opts, out, err);
    }
    if (c_index->parsed()) {
      RingSpec R = make_ring(d);
      Ideal I = parse_ideal(ideal_texts.at(0), R);
      IndexReport rep = index_formula(R, I, caps);
      bool ok = !rep.oracle || rep.match;
      return emit_single(to_json(rep), ok, opts, out, err);
    }
    if (c_factor->parsed()) {
      RingSpec R = make_ring(d);
      Ideal I = parse_ideal(ideal_texts.at(0), R);
      FactoredIdeal F = factor_ideal(I, R);
      Json j;
      j["ideal"] = to_string(I);
      j["factors"] = to_json(F);
      j["reconstructed"] = to_string(multiply_back(F, R));
      return emit_single(j, true, opts, out, err);
    }
    if (c_surj->parsed()) {
      RingSpec R = make_ring(d);
      Ideal I = parse_ideal(ideal_texts.at(0), R);
      SurjectivityReport rep = verify_surjectivity(R, I, caps);
      return emit_single(to_json(rep), rep.surjective, opts, out, err);
    }
    if (c_filt->parsed()) {
      RingSpec R = make_ring(d);
      Ideal P = parse_ideal(ideal_texts.at(0), R);
      FiltrationReport rep = verify_filtration(R, P, m, caps);
      return emit_single(to_json(rep), rep.ok, opts, out, err);
    }
    if (c_mult->parsed()) {
      RingSpec R = make_ring(d);
      Ideal A = parse_ideal(ideal_texts.at(0), R);
      Ideal B = parse_ideal(ideal_texts.at(1), R);
      MultiplicativityReport rep = verify_multiplicativity(R, A, B, caps);
      return emit_single(to_json(rep), rep.ok, opts, out, err);
    }
    if (c_wohl->parsed()) {
      RingSpec R = make_ring(d);
      ClosureReport rep = verify_wohlfahrt_closure(R, m, n, caps);
      Json j = to_json(rep);
      j["d"] = d;
      return emit_single(j, rep.equal, opts, out, err);
    }
    if (c_l61->parsed()) {
      Lemma61Report rep = verify_lemma_6_1(d, caps);
      return emit_single(to_json(rep), rep.ok, opts, out, err);
    }
    if (c_appa->parsed()) {
      AppendixAReport rep = verify_appendix_a(d, q, caps);
      return emit_single(to_json(rep), rep.ok, opts, out, err);
    }
    if (c_cert->parsed()) {
      SubgroupDescriptor desc;
      desc.index = sub_index;
      desc.level = sub_level;
      if (user_rank >= 0 || !torsion_text.empty()) {
        AbelianShape shape;
        shape.free_rank = user_rank < 0 ? 0 : static_cast<long>(user_rank);
        std::stringstream ss(torsion_text);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) shape.torsion.push_back(std::stoll(tok));
        desc.user_abelianization = shape;
        desc.name = "user";
      }
      Certificate cert = certify_noncongruence(d, q, desc, caps);
      return emit_single(to_json(cert), true, opts, out, err);
    }
    if (c_power->parsed()) {
      std::optional<long> user;
      if (b_mod_squares >= 0) user = b_mod_squares;
      PowerStatusReport rep = power_subgroup_status(d, user);
      return emit_single(to_json(rep), true, opts, out, err);
    }
    if (c_sweep->parsed()) {
      std::vector<long> d_main = {-1, -2, -3, -5, -7, -11};
      std::vector<long> d_wohl = {-1, -2, -3};
      std::vector<long> d_l61 = squarefree_range(-43, -1);
      if (d_min != 0 || d_max != 0) {
        if (d_max == 0) d_max = -1;
        if (d_min == 0) d_min = d_max;
        d_main = squarefree_range(d_min, d_max);
        d_wohl = d_main;
        d_l61 = d_main;
      }
      long bound = norm_bound > 0 ? norm_bound : 20;
      long cn_min = d_min != 0 ? d_min : -430;

      std::vector<Task> tasks;
      auto append = [&tasks](std::vector<Task> more) {
        for (Task& t : more) tasks.push_back(std::move(t));
      };
      if (suite == "index" || suite == "all")
        append(tasks_index(d_main, bound, caps, false));
      if (suite == "surjectivity" || suite == "all")
        append(tasks_index(d_main, bound, caps, true));
      if (suite == "filtration" || suite == "all")
        append(tasks_filtration(d_main, norm_bound > 0 ? norm_bound : 9,
                                caps));
      if (suite == "multiplicativity" || suite == "all")
        append(tasks_multiplicativity(d_main, bound, caps));
      if (suite == "wohlfahrt" || suite == "all")
        append(tasks_wohlfahrt(d_wohl, caps));
      if (suite == "lemma61" || suite == "all")
        append(tasks_lemma61(d_l61, caps));
      if (suite == "classnum" || suite == "all")
        append(tasks_classnum(cn_min));
      if (suite == "certificates" || suite == "all")
        append(tasks_certificates(caps));
      if (suite == "appendix-a" || suite == "all")
        append(tasks_appendix_a(caps));

      std::vector<Json> items = run_tasks(tasks, opts.threads());
      long pass = 0, fail = 0, skip = 0;
      for (const Json& item : items) {
        std::string s = item["status"].get<std::string>();
        if (s == "pass") ++pass;
        else if (s == "fail") ++fail;
        else ++skip;
      }
      if (opts.format == "csv") {
        emit_csv(items, out);
      } else if (opts.format == "text") {
        for (const Json& item : items)
          out << item["suite"].get<std::string>() << " d="
              << item["d"].get<long>() << " "
              << item["subject"].get<std::string>() << ": "
              << item["status"].get<std::string>() << "\n";
        out << "pass=" << pass << " fail=" << fail << " skip=" << skip
            << "\n";
      } else {
        Json j;
        j["suite"] = suite;
        j["counts"] = {{"pass", pass}, {"fail", fail}, {"skip", skip}};
        j["items"] = items;
        out << j.dump(2) << "\n";
      }
      return fail == 0 ? 0 : 1;
    }
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace bianchi
