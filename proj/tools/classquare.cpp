#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "classquare/builtins.hpp"
#include "classquare/class_algebra.hpp"
#include "classquare/corpus.hpp"
#include "classquare/error.hpp"
#include "classquare/group.hpp"
#include "classquare/numeric.hpp"
#include "classquare/pgroup_lemmas.hpp"
#include "classquare/report.hpp"
#include "classquare/structure.hpp"
#include "classquare/theorems.hpp"
#include "classquare/wreath_lemma.hpp"

using namespace classquare;

namespace
{

enum ExitCode
{
  exit_clean = 0,
  exit_failure = 1,
  exit_usage = 2,
};

struct Globals
{
  std::uint64_t max_order = Limits{}.enumeration_bound;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::size_t jobs = 1;

  Limits limits() const
  {
    Limits l;
    l.enumeration_bound = max_order;
    return l;
  }

  bool json() const { return format == "json"; }
};

std::string join(const std::vector<std::size_t> &xs)
{
  std::string res;
  for (std::size_t i = 0; i < xs.size(); ++i)
    res += (i ? "," : "") + std::to_string(xs[i]);
  return res;
}

int cmd_check(const Globals &gl, const std::string &path, const std::vector<std::uint64_t> &primes)
{
  RunOptions opt;
  opt.limits = gl.limits();
  opt.seed = gl.seed;
  opt.jobs = gl.jobs;
  opt.primes = primes;
  auto rep = run_suite(load_corpus(path), opt);

  if (gl.json()) {
    std::cout << rep.json.dump(2) << '\n';
    return rep.exit_code();
  }

  std::cout << std::left << std::setw(22) << "name" << std::right << std::setw(8) << "order"
            << std::setw(9) << "classes" << std::setw(9) << "subsets" << std::setw(9)
            << "holding" << std::setw(10) << "appendix" << std::setw(8) << "viol"
            << std::setw(6) << "pins" << "  note\n";
  for (auto const &e : rep.json["entries"]) {
    auto const &s = e["summary"];
    std::cout << std::left << std::setw(22) << e["name"].get<std::string>() << std::right
              << std::setw(8) << (e.contains("order") ? e["order"].dump() : "-") << std::setw(9)
              << (e.contains("classes") ? e["classes"]["count"].dump() : "-") << std::setw(9)
              << s["subsets_tested"].dump() << std::setw(9) << s["hypothesis_holding"].dump()
              << std::setw(10)
              << (e.contains("appendix") ? (e["appendix"]["passed"].get<bool>() ? "true" : "false")
                                         : "-")
              << std::setw(8) << s["violations"].dump() << std::setw(6)
              << e["pins"]["mismatches"].size();
    if (e.contains("error"))
      std::cout << "  error: " << e["error"].get<std::string>();
    for (auto const &m : e["pins"]["mismatches"])
      std::cout << "  pin " << m.get<std::string>();
    std::cout << '\n';
  }
  std::cout << "violations: " << rep.violations << ", pin mismatches: " << rep.pin_mismatches
            << ", errors: " << rep.errors << '\n';
  return rep.exit_code();
}

int cmd_classes(const Globals &gl, const std::string &group_arg)
{
  ConjClassTable table(resolve_group(group_arg, gl.limits()));
  if (gl.json()) {
    Json out = {{"group", group_arg}};
    out.update(serial::class_table(table));
    std::cout << out.dump(2) << '\n';
    return exit_clean;
  }
  std::cout << group_arg << ": order " << table.group().order() << ", " << table.size()
            << " classes\n";
  std::cout << std::setw(4) << "id" << std::setw(8) << "size" << std::setw(7) << "order"
            << "  representative\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::cout << std::setw(4) << i << std::setw(8) << table[i].size() << std::setw(7)
              << table[i].element_order << "  " << format_cycles(table[i].representative)
              << '\n';
  }
  return exit_clean;
}

int cmd_appendix(const Globals &gl, const std::string &group_arg)
{
  ConjClassTable table(resolve_group(group_arg, gl.limits()));
  auto res = appendix_class_square_test(table);
  if (gl.json()) {
    Json out = {{"group", group_arg}, {"order", table.group().order()}};
    out.update(serial::appendix(res));
    std::cout << out.dump(2) << '\n';
    return exit_clean;
  }
  std::cout << group_arg << ": " << (res.passed ? "true" : "false") << '\n';
  for (auto id : res.tested) {
    bool bad = std::find(res.offending.begin(), res.offending.end(), id) != res.offending.end();
    std::cout << "  class " << id << " (order " << table[id].element_order << ", "
              << format_cycles(table[id].representative) << "): "
              << (bad ? "square consists of p-elements" : "square has a non-p-element") << '\n';
  }
  return exit_clean;
}

int cmd_theorem_a(const Globals &gl, const std::string &group_arg,
                  const std::vector<std::string> &reps)
{
  ConjClassTable table(resolve_group(group_arg, gl.limits()));
  std::vector<std::size_t> ids;
  for (auto const &text : reps)
    ids.push_back(table.class_of(parse_cycles(text, table.group().degree(), gl.limits().max_degree)));
  NormalSubset a(table, ids);
  auto v = verify_theorem_A(a, gl.seed);
  int code = v.verdict == Verdict::theorem_violation ? exit_failure : exit_clean;

  if (gl.json()) {
    Json out = {{"group", group_arg}, {"order", table.group().order()}};
    out.update(serial::verdict(a, v));
    std::cout << out.dump(2) << '\n';
    return code;
  }
  std::cout << group_arg << ", A = classes {" << join(a.class_ids()) << "}, |A| = " << a.size()
            << ", p = " << a.prime() << '\n';
  std::cout << "hypothesis: " << (v.hypothesis.holds ? "holds" : "fails");
  if (v.hypothesis.counterexample)
    std::cout << " (" << format_cycles(v.hypothesis.counterexample->first) << " * "
              << format_cycles(v.hypothesis.counterexample->second) << ")";
  std::cout << "\nverdict: " << to_string(v.verdict) << '\n';
  if (v.verdict == Verdict::hypothesis_failed)
    return code;
  std::cout << "|<A>| = " << v.q_order << (v.q_soluble ? ", soluble" : ", not soluble")
            << "\n|O_p(G)| = " << v.op_order << '\n';
  if (v.branch) {
    std::cout << "|F(<A>)| = " << v.branch->fitting_order << "\n|<A>/F(<A>)| = "
              << v.branch->quotient_order
              << (v.branch->quotient_elementary_abelian ? ", elementary abelian"
                                                        : ", not elementary abelian")
              << "\nall products of order p: " << to_string(v.all_products_order_p)
              << "\nFrobenius with complement <a>: " << to_string(v.frobenius.status);
    if (v.frobenius.kernel_order)
      std::cout << ", kernel order " << *v.frobenius.kernel_order;
    else if (!v.frobenius.reason.empty())
      std::cout << " (" << v.frobenius.reason << ")";
    std::cout << '\n';
  }
  for (auto const &s : v.violations)
    std::cout << "VIOLATION: " << s << '\n';
  return code;
}

int cmd_wreath(const Globals &gl, const std::string &inner, std::uint64_t p)
{
  if (!is_prime(p))
    throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  WreathProduct wr(builtin(inner, gl.limits()), p);
  auto w = wreath_witness_search(wr, wr.top_cycle(), gl.seed);
  if (gl.json()) {
    Json out = {{"base", inner}, {"p", p}, {"order", wr.group().order()},
                {"x", format_cycles(wr.top_cycle())}};
    out.update(serial::wreath(w));
    std::cout << out.dump(2) << '\n';
    return exit_clean;
  }
  std::cout << inner << " wr C_" << p << ", order " << wr.group().order() << '\n'
            << "x = " << format_cycles(wr.top_cycle()) << '\n'
            << "w = " << format_cycles(w.w) << '\n'
            << "x^w x has order " << w.product_order << '\n'
            << "explicit form: " << (w.from_explicit_form ? "yes" : "no");
  if (w.noncommuting_pair)
    std::cout << " (a = " << format_cycles(w.noncommuting_pair->first)
              << ", b = " << format_cycles(w.noncommuting_pair->second) << ")";
  std::cout << "\ncommuting control gives a p-element: "
            << (w.commuting_control_is_p_element ? "yes" : "no") << '\n';
  return exit_clean;
}

int cmd_pgroup(const Globals &gl, const std::string &group_arg, std::optional<std::uint64_t> prime)
{
  Group g = resolve_group(group_arg, gl.limits());
  std::uint64_t p = 0;
  if (prime) {
    p = *prime;
  } else {
    auto ps = prime_divisors(g.order());
    if (ps.size() != 1)
      throw PreconditionError("group of order " + std::to_string(g.order()) +
                              " is not a non-trivial p-group");
    p = ps.front();
  }
  auto abundant = verify_pgroup_lemma_abundant(g, p);
  auto gen_abelian = verify_pgroup_lemma_gen_abelian(g, p);
  int code = abundant.holds && gen_abelian.holds ? exit_clean : exit_failure;
  if (gl.json()) {
    Json out = {{"group", group_arg}, {"order", g.order()}, {"p", p},
                {"abundant", serial::pgroup(abundant)},
                {"gen_abelian", serial::pgroup(gen_abelian)}};
    std::cout << out.dump(2) << '\n';
    return code;
  }
  std::cout << group_arg << ": order " << g.order() << ", p = " << p << ", "
            << abundant.elementary_abelian_subgroups << " elementary abelian subgroups\n"
            << "witness subgroups for acting elements: " << (abundant.holds ? "true" : "false")
            << " (" << abundant.applicable << " elements)\n"
            << "non-acting classes generate elementary abelian normal subgroups: "
            << (gen_abelian.holds ? "true" : "false") << " (" << gen_abelian.applicable
            << " subsets)\n";
  for (auto const &f : abundant.failures)
    std::cout << "  " << f << '\n';
  for (auto const &f : gen_abelian.failures)
    std::cout << "  " << f << '\n';
  return code;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Conjugacy class squares in permutation groups"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  Globals gl;
  app.add_option("--max-order", gl.max_order, "Largest group order that is enumerated")
    ->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "Seed for randomized steps");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", gl.jobs, "Worker threads for corpus runs")->check(CLI::PositiveNumber);

  std::string path, group_arg, inner;
  std::vector<std::string> reps;
  std::vector<std::uint64_t> primes;
  std::uint64_t p = 0;
  std::optional<std::uint64_t> pgroup_prime;

  auto *check = app.add_subcommand("check", "Run every check on a corpus file");
  check->add_option("corpus", path, "Line-delimited JSON corpus")->required();
  check->add_option("--prime", primes, "Restrict the sweep to these primes");

  auto *appendix = app.add_subcommand("appendix-test", "Class square test on every odd prime class");
  appendix->add_option("group", group_arg, "Builtin name or gens:<degree>:<cycles>;...")->required();

  auto *theorem = app.add_subcommand("theorem-a", "Verdict for the union of the given classes");
  theorem->add_option("group", group_arg, "Builtin name or gens:<degree>:<cycles>;...")->required();
  theorem->add_option("--class", reps, "A member of a class of A (repeatable)")->required();

  auto *classes = app.add_subcommand("classes", "Conjugacy class table");
  classes->add_option("group", group_arg, "Builtin name or gens:<degree>:<cycles>;...")->required();

  auto *wreath = app.add_subcommand("wreath-lemma", "Witness w with x^w x not a p-element");
  wreath->add_option("builtin", inner, "Base group (builtin name)")->required();
  wreath->add_option("p", p, "Prime")->required();

  auto *pgroup = app.add_subcommand("pgroup-lemmas", "Elementary abelian subgroup lemmas");
  pgroup->add_option("group", group_arg, "Builtin name or gens:<degree>:<cycles>;...")->required();
  pgroup->add_option("--prime", pgroup_prime, "The prime (default: from the order)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_clean : exit_usage;
  }

  try {
    if (check->parsed())
      return cmd_check(gl, path, primes);
    if (appendix->parsed())
      return cmd_appendix(gl, group_arg);
    if (theorem->parsed())
      return cmd_theorem_a(gl, group_arg, reps);
    if (classes->parsed())
      return cmd_classes(gl, group_arg);
    if (wreath->parsed())
      return cmd_wreath(gl, inner, p);
    if (pgroup->parsed())
      return cmd_pgroup(gl, group_arg, pgroup_prime);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
