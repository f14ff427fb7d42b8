#ifndef CLASSQUARE_REPORT_HPP
#define CLASSQUARE_REPORT_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "class_algebra.hpp"
#include "corpus.hpp"
#include "error.hpp"
#include "group.hpp"
#include "numeric.hpp"
#include "pgroup_lemmas.hpp"
#include "structure.hpp"
#include "theorems.hpp"
#include "wreath_lemma.hpp"

/**
 * @file report.hpp
 * @brief JSON serialization of verification results and the batch runner.
 */

namespace classquare
{

inline constexpr const char *kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct RunOptions
{
  Limits limits;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::vector<std::uint64_t> primes; // empty: every prime dividing the group order
};

namespace serial
{

inline Json perms(const std::vector<Perm> &xs)
{
  Json res = Json::array();
  for (auto const &x : xs)
    res.push_back(format_cycles(x));
  return res;
}

inline Json class_table(const ConjClassTable &table)
{
  Json classes = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto const &c = table[i];
    classes.push_back({
      {"id", i},
      {"representative", format_cycles(c.representative)},
      {"size", c.size()},
      {"element_order", c.element_order},
      {"cycle_type", c.cycle_type},
    });
  }
  return {
    {"order", table.group().order()},
    {"degree", table.group().degree()},
    {"count", table.size()},
    {"classes", std::move(classes)},
  };
}

inline Json hypothesis(const HypothesisCheck &h)
{
  Json res = {
    {"p", h.p},
    {"holds", h.holds},
    {"product_orders", h.product_orders},
    {"products_scanned", h.products_scanned},
  };
  if (h.counterexample)
    res["counterexample"] = {format_cycles(h.counterexample->first),
                             format_cycles(h.counterexample->second)};
  else
    res["counterexample"] = nullptr;
  return res;
}

inline Json frobenius(const FrobeniusCorollary &f)
{
  return {
    {"status", to_string(f.status)},
    {"reason", f.reason},
    {"kernel_order", f.kernel_order ? Json(*f.kernel_order) : Json(nullptr)},
    {"complements_checked", perms(f.complements_checked)},
  };
}

inline Json verdict(const NormalSubset &a, const VerdictReport &v)
{
  Json res = {
    {"classes", a.class_ids()},
    {"size", a.size()},
    {"hypothesis", hypothesis(v.hypothesis)},
    {"verdict", to_string(v.verdict)},
  };
  if (v.verdict == Verdict::hypothesis_failed)
    return res;
  res["q_order"] = v.q_order;
  res["q_soluble"] = v.q_soluble;
  res["op_order"] = v.op_order;
  if (v.branch) {
    res["branch"] = {
      {"p_odd", v.branch->p_odd},
      {"fitting_order", v.branch->fitting_order},
      {"fitting_nontrivial", v.branch->fitting_nontrivial},
      {"fitting_p_prime", v.branch->fitting_p_prime},
      {"quotient_order", v.branch->quotient_order},
      {"quotient_elementary_abelian", v.branch->quotient_elementary_abelian},
    };
  } else {
    res["branch"] = nullptr;
  }
  res["all_products_order_p"] = to_string(v.all_products_order_p);
  res["frobenius"] = frobenius(v.frobenius);
  res["violations"] = v.violations;
  return res;
}

inline Json appendix(const ClassSquareResult &r)
{
  return {{"passed", r.passed}, {"tested", r.tested}, {"offending", r.offending}};
}

inline Json wreath(const WreathWitness &w)
{
  Json res = {
    {"w", format_cycles(w.w)},
    {"product", format_cycles(w.product)},
    {"product_order", w.product_order},
    {"from_explicit_form", w.from_explicit_form},
    {"random_tries", w.random_tries},
  };
  if (w.noncommuting_pair) {
    res["a"] = format_cycles(w.noncommuting_pair->first);
    res["b"] = format_cycles(w.noncommuting_pair->second);
  }
  res["commuting_control_is_p_element"] = w.commuting_control_is_p_element;
  res["displayed_identity_holds"] = w.displayed_identity_holds;
  return res;
}

inline Json pgroup(const PGroupLemmaReport &r)
{
  return {
    {"holds", r.holds},
    {"elementary_abelian_subgroups", r.elementary_abelian_subgroups},
    {"applicable", r.applicable},
    {"failures", r.failures},
  };
}

inline Json index_p_frobenius(const IndexPFrobeniusResult &r)
{
  return {
    {"status", to_string(r.status)},
    {"reason", r.reason},
    {"normal_subgroup_order", r.normal_subgroup_order},
    {"classes_checked", r.classes_checked},
    {"kernel_orders", r.kernel_orders},
  };
}

} // namespace serial

namespace detail
{

/// Runs every check on every union of order-p classes; returns the per-prime record.
inline Json sweep_prime(const ConjClassTable &table, std::uint64_t p, std::uint64_t seed,
                        Json &summary)
{
  Json res = {{"p", p}};
  auto ids = classes_of_order(table, p);
  res["order_p_classes"] = ids;
  auto gn = verify_theorem_GN(table, p);
  if (gn.status == Status::fails)
    summary["violations"] = summary["violations"].get<std::size_t>() + 1;
  res["index_p_frobenius"] = serial::index_p_frobenius(gn);
  if (ids.size() > kMaxNormalSubsetClasses) {
    res["skipped"] = std::to_string(ids.size()) + " classes of order " + std::to_string(p) +
                     " exceed the cap of " + std::to_string(kMaxNormalSubsetClasses);
    summary["skipped_primes"] = summary["skipped_primes"].get<std::size_t>() + 1;
    return res;
  }

  Json subsets = Json::array();
  for (std::uint32_t mask = 1; mask < (1u << ids.size()); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t b = 0; b < ids.size(); ++b) {
      if (mask & (1u << b))
        chosen.push_back(ids[b]);
    }
    NormalSubset a(table, std::move(chosen));
    auto v = verify_theorem_A(a, seed);
    summary["subsets_tested"] = summary["subsets_tested"].get<std::size_t>() + 1;
    if (v.hypothesis.holds)
      summary["hypothesis_holding"] = summary["hypothesis_holding"].get<std::size_t>() + 1;
    if (v.verdict == Verdict::consistent)
      summary["consistent"] = summary["consistent"].get<std::size_t>() + 1;
    if (v.verdict == Verdict::theorem_violation)
      summary["violations"] = summary["violations"].get<std::size_t>() + 1;
    subsets.push_back(serial::verdict(a, v));
  }
  res["subsets"] = std::move(subsets);
  return res;
}

/// Appendix routine, cross-checked against the exhaustive scan of single classes.
inline Json appendix_with_scan(const ConjClassTable &table)
{
  auto r = appendix_class_square_test(table);
  std::vector<std::size_t> scan_offending;
  for (auto id : r.tested) {
    if (check_hypothesis(NormalSubset(table, {id})).holds)
      scan_offending.push_back(id);
  }
  Json res = serial::appendix(r);
  res["agrees_with_scan"] = scan_offending == r.offending;
  return res;
}

inline void check_pins(const CorpusEntry &e, Json &out)
{
  Json mismatches = Json::array();
  auto actual = [&](const std::string &key) -> Json {
    if (key == "order" || key == "soluble")
      return out.value(key, Json());
    if (key == "classes")
      return out.contains("classes") ? out["classes"]["count"] : Json();
    if (key == "appendix_passed")
      return out.contains("appendix") ? out["appendix"]["passed"] : Json();
    if (out.contains("summary") && !out.contains("error"))
      return out["summary"][key];
    return Json();
  };
  for (auto it = e.expected.begin(); it != e.expected.end(); ++it) {
    Json got = actual(it.key());
    Json want = Json::parse(it->dump());
    if (got.is_null())
      mismatches.push_back(it.key() + ": expected " + want.dump() + ", not computed");
    else if (got != want)
      mismatches.push_back(it.key() + ": expected " + want.dump() + ", got " + got.dump());
  }
  out["pins"] = {{"checked", e.expected.size()}, {"mismatches", std::move(mismatches)}};
}

} // namespace detail

/**
 * Every check on one corpus entry. Library errors (bounds, degrees,
 * malformed builtins) are caught and recorded in the "error" field together
 * with whatever was computed before the failure.
 */
inline Json run_entry(const CorpusEntry &e, const RunOptions &opt)
{
  auto start = std::chrono::steady_clock::now();
  Json out = {{"name", e.name}, {"source", e.source}};
  Json summary = {
    {"subsets_tested", 0}, {"hypothesis_holding", 0}, {"consistent", 0},
    {"violations", 0}, {"skipped_primes", 0},
  };
  try {
    Group g = entry_group(e, opt.limits);
    out["degree"] = g.degree();
    out["order"] = g.order();
    out["soluble"] = is_soluble(g);

    ConjClassTable table(g);
    out["classes"] = {{"count", table.size()}, {"sizes", table.sizes()}};
    out["appendix"] = detail::appendix_with_scan(table);

    auto primes = opt.primes.empty() ? prime_divisors(g.order()) : opt.primes;
    Json sweeps = Json::array();
    for (auto p : primes) {
      if (g.order() % p == 0)
        sweeps.push_back(detail::sweep_prime(table, p, opt.seed, summary));
    }
    out["primes"] = std::move(sweeps);
    out["summary"] = summary;
  } catch (const std::exception &ex) {
    out["summary"] = summary;
    out["error"] = ex.what();
  }
  detail::check_pins(e, out);
  out["timing_ms"] = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start).count();
  return out;
}

struct RunReport
{
  Json json;
  std::size_t violations = 0;
  std::size_t pin_mismatches = 0;
  std::size_t errors = 0;

  int exit_code() const { return violations || pin_mismatches ? 1 : 0; }
};

/// Runs the entries on `opt.jobs` threads and assembles the report in corpus order.
inline RunReport run_suite(const std::vector<CorpusEntry> &entries, const RunOptions &opt)
{
  std::vector<Json> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();)
      results[i] = run_entry(entries[i], opt);
  };
  {
    std::vector<std::jthread> pool;
    std::size_t extra = std::min(opt.jobs, entries.size());
    for (std::size_t t = 1; t < extra; ++t)
      pool.emplace_back(worker);
    worker();
  }

  RunReport rep;
  Json list = Json::array();
  for (auto &r : results) {
    rep.violations += r["summary"]["violations"].get<std::size_t>();
    rep.pin_mismatches += r["pins"]["mismatches"].size();
    rep.errors += r.contains("error") ? 1 : 0;
    list.push_back(std::move(r));
  }
  rep.json = {
    {"tool_version", kToolVersion},
    {"seed", opt.seed},
    {"entries", std::move(list)},
    {"violations", rep.violations},
    {"pin_mismatches", rep.pin_mismatches},
    {"errors", rep.errors},
  };
  return rep;
}

/// Copy of a report with every "timing_ms" field removed.
inline Json strip_timing(Json j)
{
  if (j.is_object()) {
    j.erase("timing_ms");
    for (auto it = j.begin(); it != j.end(); ++it)
      *it = strip_timing(std::move(*it));
  } else if (j.is_array()) {
    for (auto &v : j)
      v = strip_timing(std::move(v));
  }
  return j;
}

} // namespace classquare

#endif // CLASSQUARE_REPORT_HPP
