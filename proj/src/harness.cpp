#include "tidykit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tidykit/catalog.hpp"
#include "tidykit/structure.hpp"

namespace tidykit {

namespace {

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

const char* tf(bool b) { return b ? "true" : "false"; }

// Runs fn(0..count-1), fanned out over workers when threads > 1. The first
// exception (by index) is rethrown after all workers finish.
void parallel_over(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[std::size_t(i)] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool klein4(const Group& g, const ElementSet& s) {
  if (s.count() != 4) return false;
  for (int x : s.elements())
    if (g.ord(x) > 2) return false;
  return true;
}

std::string shape_names(const PGroupShape& s) {
  std::string out;
  auto add = [&](const char* n) {
    if (!out.empty()) out += ",";
    out += n;
  };
  if (s.cyclic) add("cyclic");
  if (s.exponent_p) add("exponent_p");
  if (s.dihedral) add("dihedral");
  if (s.generalized_quaternion) add("generalized_quaternion");
  if (out.empty()) out = "none";
  return out;
}

}  // namespace

AnalyzedGroup analyze_group(const Group& g, bool all_witnesses) {
  auto t0 = std::chrono::steady_clock::now();
  AnalyzedGroup a{g};
  a.primes = prime_divisors(g.order());
  a.solvable = is_solvable(g);
  a.oracle_all = is_tidy_bruteforce(g, OracleMode::AllElements, all_witnesses);
  a.oracle_pp =
      is_tidy_bruteforce(g, OracleMode::PrimePowerOnly, all_witnesses);
  if (a.primes.size() == 2) {
    try {
      a.pq = classify_pq_group(g);
      a.is_pq = true;
    } catch (const GroupError& e) {
      a.structural_error = true;
      a.structural.route = "error";
      a.structural.explanation = e.what();
    }
  }
  if (!a.structural_error) {
    try {
      a.structural = is_tidy_structural(g);
    } catch (const GroupError& e) {
      a.structural_error = true;
      a.structural.route = "error";
      a.structural.explanation = e.what();
    }
  }
  if (a.solvable) {
    a.fitting_height = fitting_height(g);
    a.derived_length_mod_fitting =
        derived_length(quotient(g, fitting_subgroup(g)).child);
  }
  a.analysis_ms = elapsed_ms(t0);
  return a;
}

std::vector<AnalyzedGroup> analyze_corpus(const std::vector<Group>& corpus,
                                          int threads, bool all_witnesses) {
  std::vector<std::optional<AnalyzedGroup>> slots(corpus.size());
  parallel_over(int(corpus.size()), threads, [&](int i) {
    slots[std::size_t(i)] = analyze_group(corpus[std::size_t(i)], all_witnesses);
  });
  std::vector<AnalyzedGroup> out;
  out.reserve(corpus.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

const std::vector<std::string>& suite_registry() {
  static const std::vector<std::string> ids = {
      "L22", "PGRP", "PQ17", "HALL", "QUO",  "PQQUO", "FIT15", "SUB",
      "L6",  "L13",  "T14",  "T26",  "T27",  "L7",    "L10"};
  return ids;
}

namespace {

SuiteRecord base_row(const AnalyzedGroup& a, int idx) {
  SuiteRecord r;
  r.group_index = idx;
  r.label = a.g.label();
  r.order = a.g.order();
  return r;
}

// Oracle run on a derived group (quotient or subgroup), prime-power mode.
bool derived_group_tidy(const Group& g) {
  return is_tidy_bruteforce(g, OracleMode::PrimePowerOnly).tidy;
}

// Shared body of QUO and PQQUO: every quotient by every normal subgroup of a
// tidy group must be tidy.
void quotient_closure_row(const AnalyzedGroup& a, SuiteRecord& r) {
  auto normals = normal_subgroups(a.g);
  int checked = 0;
  r.inputs = "every normal subgroup (" + std::to_string(normals.size()) + ")";
  r.expected = "every quotient tidy";
  for (const ElementSet& n : normals) {
    ++checked;
    bool tidy;
    if (n.count() == 1)
      tidy = a.oracle_all.tidy;  // quotient is G itself
    else if (n.count() == a.g.order())
      tidy = true;
    else
      tidy = derived_group_tidy(quotient(a.g, n).child);
    if (!tidy) {
      r.pass = false;
      r.observed = "quotient by normal subgroup of order " +
                   std::to_string(n.count()) + " is not tidy";
      return;
    }
  }
  r.observed = "quotients=" + std::to_string(checked) + " all tidy";
}

using RowFn =
    std::function<std::optional<SuiteRecord>(const AnalyzedGroup&, int)>;

std::optional<SuiteRecord> suite_row(const std::string& id,
                                     const AnalyzedGroup& a, int idx) {
  const Group& g = a.g;

  if (id == "L22") {
    SuiteRecord r = base_row(a, idx);
    r.inputs = "oracle in both modes";
    r.expected = "verdicts agree";
    r.observed = std::string("all_elements=") + tf(a.oracle_all.tidy) +
                 " prime_power_only=" + tf(a.oracle_pp.tidy);
    r.pass = a.oracle_all.tidy == a.oracle_pp.tidy;
    return r;
  }

  if (id == "PGRP") {
    if (a.primes.size() != 1) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    PGroupShape s = classify_p_group(g, a.primes[0]);
    r.inputs = "p=" + std::to_string(a.primes[0]);
    r.expected = "shape verdict equals oracle";
    r.observed = "shapes=" + shape_names(s) + " tidy=" + tf(s.tidy) +
                 " oracle=" + tf(a.oracle_all.tidy);
    r.pass = s.tidy == a.oracle_all.tidy;
    return r;
  }

  if (id == "PQ17") {
    if (a.primes.size() != 2) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    r.inputs = "prime pair {" + std::to_string(a.primes[0]) + "," +
               std::to_string(a.primes[1]) + "}";
    r.expected = "case matched iff oracle tidy";
    if (!a.is_pq) {
      r.pass = false;
      r.observed = "classifier error: " + a.structural.explanation;
      return r;
    }
    bool matched = a.pq.kase != PqCase::NotTidy;
    r.observed = std::string("case=") + pq_case_name(a.pq.kase) +
                 " oracle=" + tf(a.oracle_all.tidy);
    r.pass = matched == a.oracle_all.tidy;
    return r;
  }

  if (id == "HALL") {
    if (!a.solvable) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    r.inputs = "structural decision vs oracle";
    r.expected = "verdicts agree";
    if (a.structural_error) {
      r.pass = false;
      r.observed = "structural error: " + a.structural.explanation;
      return r;
    }
    r.observed = std::string("structural=") + tf(a.structural.tidy) + " [" +
                 a.structural.route + "] oracle=" + tf(a.oracle_all.tidy);
    r.pass = a.structural.tidy == a.oracle_all.tidy;
    return r;
  }

  if (id == "QUO") {
    if (!a.solvable || !a.oracle_all.tidy) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    quotient_closure_row(a, r);
    return r;
  }

  if (id == "PQQUO") {
    if (a.primes.size() != 2 || !a.oracle_all.tidy) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    quotient_closure_row(a, r);
    return r;
  }

  if (id == "FIT15") {
    if (!a.solvable || !a.oracle_all.tidy) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    bool odd = g.order() % 2 == 1;
    int hb = odd ? 3 : 4;
    int db = odd ? 2 : 4;
    r.inputs = odd ? "odd order bounds" : "general bounds";
    r.expected = "fitting_height <= " + std::to_string(hb) +
                 " and derived_length(G/F) <= " + std::to_string(db);
    r.observed = "height=" + std::to_string(a.fitting_height) +
                 " dl_mod_fitting=" +
                 std::to_string(a.derived_length_mod_fitting);
    r.pass = a.fitting_height <= hb && a.derived_length_mod_fitting <= db;
    return r;
  }

  if (id == "SUB") {
    if (!a.oracle_all.tidy) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    std::mt19937_64 rng(0x50B50BULL ^
                        (std::uint64_t(g.order()) << 20));
    const int draws = 6;
    int proper = 0;
    r.inputs = std::to_string(draws) + " two-generator samples, fixed seed";
    r.expected = "every sampled subgroup tidy";
    for (int k = 0; k < draws; ++k) {
      int x = int(rng() % std::uint64_t(g.order()));
      int y = int(rng() % std::uint64_t(g.order()));
      ElementSet s = generated_subgroup(g, std::vector<int>{x, y});
      if (s.count() == g.order()) continue;  // whole group, already verified
      ++proper;
      if (!derived_group_tidy(subgroup_group(g, s).group)) {
        r.pass = false;
        r.observed = "subgroup <" + std::to_string(x) + "," +
                     std::to_string(y) + "> of order " +
                     std::to_string(s.count()) + " is not tidy";
        return r;
      }
    }
    r.observed = "proper_samples=" + std::to_string(proper) + " all tidy";
    return r;
  }

  if (id == "L6") {
    if (!a.oracle_all.tidy || g.order() <= 1) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    r.expected = "an outcome for every coprime pair (p, class rep)";
    auto classes = conjugacy_classes(g);
    int cent = 0, frob = 0, sl23 = 0, pairs = 0;
    for (int p : a.primes) {
      if (p_core(g, p).count() <= 1) continue;
      for (const ElementSet& cls : classes) {
        int x = cls.elements().front();
        if (g.ord(x) % p == 0) continue;
        ++pairs;
        try {
          switch (coprime_action_trichotomy(g, p, x)) {
            case CoprimeActionOutcome::Centralizes: ++cent; break;
            case CoprimeActionOutcome::FrobeniusAction: ++frob; break;
            case CoprimeActionOutcome::Sl23Exception: ++sl23; break;
          }
        } catch (const GroupError& e) {
          r.pass = false;
          r.inputs = "p=" + std::to_string(p) + " x=" + std::to_string(x);
          r.observed = e.what();
          return r;
        }
      }
    }
    r.inputs = "pairs=" + std::to_string(pairs);
    r.observed = "centralizes=" + std::to_string(cent) +
                 " frobenius=" + std::to_string(frob) +
                 " sl23=" + std::to_string(sl23);
    return r;
  }

  if (id == "L13") {
    if (!a.oracle_all.tidy) return std::nullopt;
    auto pair = two_frobenius_pair(g);
    if (!pair) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    r.inputs = "detected 2-frobenius chain K(" +
               std::to_string(pair->first.count()) + ") < N(" +
               std::to_string(pair->second.count()) + ")";
    r.expected = "K klein four and G = s4";
    bool klein = klein4(g, pair->first);
    bool is_s4 = g.order() == 24 && are_isomorphic(g, catalog::s4());
    r.observed = std::string("klein=") + tf(klein) + " s4=" + tf(is_s4);
    r.pass = klein && is_s4;
    return r;
  }

  if (id == "T14") {
    if (!a.solvable || !a.oracle_all.tidy || g.order() <= 1) return std::nullopt;
    if (a.primes.size() > 3) return std::nullopt;  // hall-join limitation
    SuiteRecord r = base_row(a, idx);
    r.expected = "a case for every prime with nontrivial core";
    std::string seen;
    int qualifying = 0;
    for (int p : a.primes) {
      if (p_core(g, p).count() <= 1) continue;
      ++qualifying;
      try {
        CentralizerQuotientReport rep = centralizer_quotient_case(g, p);
        if (!seen.empty()) seen += "; ";
        seen += "p=" + std::to_string(p) +
                ":case=" + std::to_string(rep.kase);
      } catch (const GroupError& e) {
        r.pass = false;
        r.inputs = "p=" + std::to_string(p);
        r.observed = e.what();
        return r;
      }
    }
    r.inputs = "qualifying_primes=" + std::to_string(qualifying);
    r.observed = seen.empty() ? "no prime qualifies" : seen;
    return r;
  }

  if (id == "T26") {
    if (g.order() <= 1) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    auto normals = normal_subgroups(g);
    r.inputs =
        "every normal subgroup (" + std::to_string(normals.size()) + ")";
    r.expected = "hypotheses imply oracle-tidy";
    int qualifying = 0, alt1 = 0, alt2 = 0;
    for (const ElementSet& n : normals) {
      FrobeniusExtensionCheck chk = frobenius_extension_check(g, n);
      if (!chk.ok) continue;
      ++qualifying;
      if (chk.alternative == 1) ++alt1;
      if (chk.alternative == 2) ++alt2;
      if (!a.oracle_all.tidy) {
        r.pass = false;
        r.observed = "hypotheses hold for N of order " +
                     std::to_string(n.count()) + " but group is not tidy";
        return r;
      }
    }
    r.observed = "qualifying=" + std::to_string(qualifying) +
                 " (alt1=" + std::to_string(alt1) +
                 " alt2=" + std::to_string(alt2) + ")" +
                 " oracle=" + tf(a.oracle_all.tidy);
    return r;
  }

  if (id == "T27") {
    if (g.order() <= 1) return std::nullopt;
    for (int p : a.primes)
      if (p != 2 && p != 3) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    r.inputs = "structural clauses over O_2, O_3 shapes";
    r.expected = "a matched clause implies oracle-tidy";
    std::optional<int> clause = two_three_structure_match(g);
    r.observed =
        (clause ? "clause=" + std::to_string(*clause) : "clause=none") +
        " oracle=" + std::string(tf(a.oracle_all.tidy));
    r.pass = !clause || a.oracle_all.tidy;
    return r;
  }

  if (id == "L7") {
    ElementSet syl2 = sylow(g, 2);
    if (syl2.count() < 8) return std::nullopt;
    if (!classify_p_group(subgroup_group(g, syl2).group, 2).dihedral)
      return std::nullopt;
    ElementSet o2 = p_core(g, 2);
    if (o2.count() <= 1 || klein4(g, o2)) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    r.inputs = "sylow-2 dihedral (" + std::to_string(syl2.count()) +
               "), O_2 of order " + std::to_string(o2.count());
    r.expected = "normal 2-complement exists";
    auto comp = normal_p_complement(g, 2);
    r.observed = comp ? "complement of order " + std::to_string(comp->count())
                      : std::string("missing");
    r.pass = comp.has_value();
    return r;
  }

  if (id == "L10") {
    if (!a.solvable || !a.oracle_all.tidy) return std::nullopt;
    ElementSet syl2 = sylow(g, 2);
    if (syl2.count() < 8) return std::nullopt;
    SubgroupView tv = subgroup_group(g, syl2);
    if (!classify_p_group(tv.group, 2).generalized_quaternion)
      return std::nullopt;
    if (p_core(g, 2).count() != 2) return std::nullopt;
    SuiteRecord r = base_row(a, idx);
    r.inputs = "sylow-2 generalized quaternion, |O_2| = 2";
    r.expected =
        "sylow-2 is q8, normal 2-complement, fitting centralizer index has "
        "two prime divisors";
    bool q8 = syl2.count() == 8;
    auto comp = normal_p_complement(g, 2);
    ElementSet f = fitting_subgroup(g);
    ElementSet cf = centralizer(g, syl2) & f;
    int index = int(f.count()) / int(cf.count());
    int nprimes = int(prime_divisors(index).size());
    r.observed = std::string("q8=") + tf(q8) +
                 " complement=" + tf(comp.has_value()) +
                 " index_primes=" + std::to_string(nprimes);
    r.pass = q8 && comp.has_value() && nprimes >= 2;
    return r;
  }

  fail("unknown_suite", "no suite named \"" + id + "\"");
}

}  // namespace

SuiteReport run_suite(const std::vector<AnalyzedGroup>& corpus,
                      const std::string& suite_id, int threads) {
  const auto& reg = suite_registry();
  if (std::find(reg.begin(), reg.end(), suite_id) == reg.end())
    fail("unknown_suite", "no suite named \"" + suite_id + "\"");
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = suite_id;
  std::vector<std::optional<SuiteRecord>> slots(corpus.size());
  parallel_over(int(corpus.size()), threads, [&](int i) {
    try {
      slots[std::size_t(i)] = suite_row(suite_id, corpus[std::size_t(i)], i);
    } catch (const GroupError& e) {
      if (e.code() == "unknown_suite") throw;
      SuiteRecord r = base_row(corpus[std::size_t(i)], i);
      r.pass = false;
      r.expected = "no engine error";
      r.observed = std::string("error: ") + e.what();
      slots[std::size_t(i)] = r;
    }
  });
  for (auto& s : slots) {
    if (!s) continue;
    if (!s->pass)
      s->repro = "tidykit corpus --suites " + suite_id + " --only \"" +
                 s->label + "\"";
    (s->pass ? rep.passed : rep.failed)++;
    rep.records.push_back(std::move(*s));
  }
  if (suite_id == "FIT15") {
    int mh = 0, md = 0;
    for (const auto& a : corpus)
      if (a.solvable && a.oracle_all.tidy) {
        mh = std::max(mh, a.fitting_height);
        md = std::max(md, a.derived_length_mod_fitting);
      }
    rep.summary = "max_height=" + std::to_string(mh) +
                  " max_dl_mod_fitting=" + std::to_string(md);
  }
  rep.ms = elapsed_ms(t0);
  return rep;
}

namespace {

nlohmann::ordered_json group_json_base(const AnalyzedGroup& a,
                                       bool with_timings) {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["label"] = a.g.label();
  j["order"] = a.g.order();
  j["primes"] = a.primes;
  j["solvable"] = a.solvable;
  j["tidy_oracle"] = a.oracle_all.tidy;
  if (a.structural_error)
    j["tidy_structural"] = nullptr;
  else
    j["tidy_structural"] = a.structural.tidy;
  j["case"] = a.is_pq ? pq_case_name(a.pq.kase) : "";
  if (a.solvable) {
    j["fitting_height"] = a.fitting_height;
    j["derived_length_mod_fitting"] = a.derived_length_mod_fitting;
  } else {
    j["fitting_height"] = nullptr;
    j["derived_length_mod_fitting"] = nullptr;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const TidyWitness& w : a.oracle_all.witnesses)
    arr.push_back({{"x", w.x}, {"a", w.a}, {"b", w.b}, {"product", w.product}});
  j["witnesses"] = arr;
  j["ms"] = with_timings ? a.analysis_ms : 0;
  return j;
}

}  // namespace

std::string group_record_json(const AnalyzedGroup& a, bool with_timings) {
  return group_json_base(a, with_timings).dump();
}

std::string suite_record_json(const AnalyzedGroup& a, const SuiteReport& report,
                              const SuiteRecord& rec, bool with_timings) {
  nlohmann::ordered_json j = group_json_base(a, with_timings);
  j.erase("ms");
  j["suite"] = report.suite;
  j["inputs"] = rec.inputs;
  j["expected"] = rec.expected;
  j["observed"] = rec.observed;
  j["pass"] = rec.pass;
  if (!rec.pass) j["repro"] = rec.repro;
  j["ms"] = with_timings ? report.ms : 0;
  return j.dump();
}

std::string analyze_table(const AnalyzedGroup& a) {
  const Group& g = a.g;
  std::ostringstream out;
  out << "group:        " << g.label() << " (order " << g.order() << ")\n";
  out << "primes:       ";
  if (a.primes.empty()) out << "none";
  for (std::size_t i = 0; i < a.primes.size(); ++i)
    out << (i ? ", " : "") << a.primes[i];
  out << "\n";
  out << "solvable:     " << tf(a.solvable) << "\n";
  if (g.order() > 1) {
    out << "sylow:        ";
    for (std::size_t i = 0; i < a.primes.size(); ++i) {
      int p = a.primes[i];
      ElementSet syl = sylow(g, p);
      PGroupShape s = classify_p_group(subgroup_group(g, syl).group, p);
      out << (i ? "; " : "") << "p=" << p << ": " << shape_names(s)
          << " (order " << syl.count() << ")";
    }
    out << "\n";
    out << "p-cores:      ";
    for (std::size_t i = 0; i < a.primes.size(); ++i)
      out << (i ? "; " : "") << "O_" << a.primes[i] << " = "
          << p_core(g, a.primes[i]).count();
    out << "\n";
  }
  out << "fitting:      order " << fitting_subgroup(g).count();
  if (a.solvable) out << ", height " << a.fitting_height;
  out << "\n";
  out << "hypercenter:  order " << hypercenter(g).count() << "\n";
  if (a.solvable)
    out << "derived length mod fitting: " << a.derived_length_mod_fitting
        << "\n";
  out << "oracle:       " << (a.oracle_all.tidy ? "tidy" : "not tidy")
      << (a.oracle_all.tidy == a.oracle_pp.tidy
              ? " (prime-power mode agrees)"
              : " (PRIME-POWER MODE DISAGREES)")
      << "\n";
  out << "structural:   ";
  if (a.structural_error)
    out << "error: " << a.structural.explanation;
  else
    out << (a.structural.tidy ? "tidy" : "not tidy") << " ["
        << a.structural.route << "] " << a.structural.explanation;
  out << "\n";
  if (!a.oracle_all.witnesses.empty()) {
    out << "witnesses:\n";
    for (const TidyWitness& w : a.oracle_all.witnesses)
      out << "  x=" << w.x << ": a=" << w.a << " b=" << w.b
          << " product=" << w.product << " escapes Cyc(x)\n";
  }
  return out.str();
}

std::string suite_table(const SuiteReport& report, bool with_timings) {
  std::ostringstream out;
  out << "[" << report.suite << "] " << report.records.size()
      << " rows: " << report.passed << " pass, " << report.failed << " fail";
  if (with_timings) out << " (" << report.ms << " ms)";
  out << "\n";
  if (!report.summary.empty()) out << "  summary: " << report.summary << "\n";
  for (const SuiteRecord& r : report.records) {
    if (r.pass) continue;
    out << "  FAIL " << r.label << " (order " << r.order << ")\n";
    out << "    inputs:   " << r.inputs << "\n";
    out << "    expected: " << r.expected << "\n";
    out << "    observed: " << r.observed << "\n";
    out << "    repro:    " << r.repro << "\n";
  }
  return out.str();
}

}  // namespace tidykit
