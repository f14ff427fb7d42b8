#ifndef CLASSQUARE_THEOREMS_HPP
#define CLASSQUARE_THEOREMS_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "numeric.hpp"
#include "perm.hpp"
#include "structure.hpp"

namespace classquare
{

enum class Status
{
  holds,
  fails,
  not_applicable,
};

inline const char *to_string(Status s)
{
  switch (s) {
  case Status::holds: return "holds";
  case Status::fails: return "fails";
  case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

/// Outcome of scanning every product ab with a, b in A.
struct HypothesisCheck
{
  std::uint64_t p = 0;
  bool holds = true;
  std::optional<std::pair<Perm, Perm>> counterexample; // first (a, b) with ab not a p-element
  std::set<std::uint64_t> product_orders;
  std::uint64_t products_scanned = 0;
};

inline HypothesisCheck check_hypothesis(const NormalSubset &a)
{
  HypothesisCheck res;
  res.p = a.prime();
  for (auto const &x : a.elements()) {
    for (auto const &y : a.elements()) {
      auto ord = product_order(x, y);
      ++res.products_scanned;
      res.product_orders.insert(ord);
      if (!is_power_of(ord, res.p) && !res.counterexample) {
        res.holds = false;
        res.counterexample.emplace(x, y);
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Corollaries

/// Every product ab (a, b in A) has order exactly p. Not applicable unless
/// the hypothesis holds and O_p(G) = 1.
inline Status verify_corollary_orders(const HypothesisCheck &hyp, bool op_trivial)
{
  if (!hyp.holds || !op_trivial)
    return Status::not_applicable;
  return hyp.product_orders == std::set<std::uint64_t>{hyp.p} ? Status::holds : Status::fails;
}

struct FrobeniusCorollary
{
  Status status = Status::not_applicable;
  std::string reason;
  std::optional<std::uint64_t> kernel_order;
  std::vector<Perm> complements_checked; // generators a of the complements <a>
};

/**
 * For A a single class generating G with O_p(G) = 1 and A^2 consisting of
 * p-elements: G is Frobenius with complement <a>, checked for the class
 * representative and for three random members of A.
 */
inline FrobeniusCorollary verify_corollary_frobenius(const Group &g, const NormalSubset &a,
                                                     std::uint64_t seed = 1)
{
  FrobeniusCorollary res;
  if (a.class_ids().size() != 1) {
    res.reason = "A is not a single class";
    return res;
  }
  if (closure(g, a.elements()).order() != g.order()) {
    res.reason = "A does not generate G";
    return res;
  }
  if (p_core(g, a.prime()).order() != 1) {
    res.reason = "O_p(G) is non-trivial";
    return res;
  }
  if (!check_hypothesis(a).holds) {
    res.reason = "A^2 contains elements that are not p-elements";
    return res;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
  res.complements_checked.push_back(a.elements().front());
  for (int i = 0; i < 3; ++i)
    res.complements_checked.push_back(a.elements()[pick(rng)]);

  res.status = Status::holds;
  for (auto const &x : res.complements_checked) {
    Group h(g.degree(), {x}, g.limits());
    auto frob = is_frobenius_with_complement(g, h);
    if (!frob.is_frobenius) {
      res.status = Status::fails;
      res.reason = "complement <" + format_cycles(x) + ">: " + frob.reason;
      return res;
    }
    res.kernel_order = frob.kernel->order();
  }
  return res;
}

// ---------------------------------------------------------------------------
// Theorem A

enum class Verdict
{
  hypothesis_failed,
  consistent,
  theorem_violation,
};

inline const char *to_string(Verdict v)
{
  switch (v) {
  case Verdict::hypothesis_failed: return "hypothesis_failed";
  case Verdict::consistent: return "consistent";
  case Verdict::theorem_violation: return "THEOREM_VIOLATION";
  }
  return "?";
}

/// Conclusions that only apply when O_p(G) = 1.
struct BranchConclusions
{
  bool p_odd = false;
  std::uint64_t fitting_order = 0;
  bool fitting_nontrivial = false;
  bool fitting_p_prime = false;
  std::uint64_t quotient_order = 0;
  bool quotient_elementary_abelian = false;
};

struct VerdictReport
{
  HypothesisCheck hypothesis;
  Verdict verdict = Verdict::hypothesis_failed;
  std::uint64_t q_order = 0;
  bool q_soluble = false;
  std::uint64_t op_order = 0;
  std::optional<BranchConclusions> branch; // empty: not applicable
  Status all_products_order_p = Status::not_applicable;
  FrobeniusCorollary frobenius;
  std::vector<std::string> violations;

  /// Every subgroup order computed for this report, paired with its parent's order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> subgroup_orders;
};

/**
 * Checks the hypothesis on A and, if it holds, every conclusion: Q = <A>
 * soluble, and when O_p(G) = 1 also p odd, F(Q) a non-trivial p'-group and
 * Q/F(Q) elementary abelian of exponent p. Any failed conclusion is
 * recorded as a violation.
 */
inline VerdictReport verify_theorem_A(const NormalSubset &a, std::uint64_t seed = 1)
{
  VerdictReport rep;
  rep.hypothesis = check_hypothesis(a);
  if (!rep.hypothesis.holds)
    return rep;

  const Group &g = a.group();
  const std::uint64_t p = a.prime();

  Subgroup q = closure(g, a.elements());
  rep.q_order = q.order();
  rep.subgroup_orders.emplace_back(q.order(), g.order());
  rep.q_soluble = is_soluble(q.group());
  if (!rep.q_soluble)
    rep.violations.push_back("<A> is not soluble");

  Subgroup op = p_core(g, p);
  rep.op_order = op.order();
  rep.subgroup_orders.emplace_back(op.order(), g.order());

  if (op.order() == 1) {
    BranchConclusions br;
    br.p_odd = p != 2;
    if (!br.p_odd)
      rep.violations.push_back("p = 2 with O_p(G) = 1");

    Subgroup fit = fitting_subgroup(q.group());
    rep.subgroup_orders.emplace_back(fit.order(), q.order());
    br.fitting_order = fit.order();
    br.fitting_nontrivial = fit.order() > 1;
    br.fitting_p_prime = fit.order() % p != 0;
    if (!br.fitting_nontrivial)
      rep.violations.push_back("F(<A>) is trivial");
    if (!br.fitting_p_prime)
      rep.violations.push_back("F(<A>) is not a p'-group");

    QuotientMap quot(q.group(), fit.group());
    br.quotient_order = quot.image().order();
    br.quotient_elementary_abelian = is_elementary_abelian(quot.image(), p);
    if (br.quotient_order * fit.order() != q.order())
      rep.violations.push_back("|<A>/F(<A>)| * |F(<A>)| != |<A>|");
    if (!br.quotient_elementary_abelian)
      rep.violations.push_back("<A>/F(<A>) is not elementary abelian");
    rep.branch = br;

    rep.all_products_order_p = verify_corollary_orders(rep.hypothesis, true);
    if (rep.all_products_order_p == Status::fails)
      rep.violations.push_back("A^2 contains an element whose order is not p");

    if (a.class_ids().size() == 1 && q.order() == g.order()) {
      rep.frobenius = verify_corollary_frobenius(g, a, seed);
      if (rep.frobenius.status == Status::fails)
        rep.violations.push_back("G = <A> is not Frobenius with complement <a>: " +
                                 rep.frobenius.reason);
    } else {
      rep.frobenius.reason = a.class_ids().size() != 1 ? "A is not a single class"
                                                        : "A does not generate G";
    }
  } else {
    rep.frobenius.reason = "O_p(G) is non-trivial";
  }

  rep.verdict = rep.violations.empty() ? Verdict::consistent : Verdict::theorem_violation;
  return rep;
}

// ---------------------------------------------------------------------------
// Normal subgroup of index p with Sylow p-subgroups of order p

struct IndexPFrobeniusResult
{
  Status status = Status::not_applicable;
  std::string reason;
  std::uint64_t normal_subgroup_order = 0;
  std::vector<std::size_t> classes_checked;          // classes a^G where the hypothesis holds
  std::vector<std::uint64_t> kernel_orders;          // Frobenius kernel of <a^G>, per class
};

/**
 * If the Sylow p-subgroups of G have order p and G has a normal subgroup N
 * of index p, then for every class A = a^G of order-p elements whose
 * square consists of p-elements, <A> is Frobenius with complement <a>.
 * N is necessarily the set of p'-elements of G.
 */
inline IndexPFrobeniusResult verify_theorem_GN(const ConjClassTable &table, std::uint64_t p)
{
  IndexPFrobeniusResult res;
  require_prime(p);
  const Group &g = table.group();
  if (p_part(g.order(), p) != p) {
    res.reason = "Sylow p-subgroups do not have order p";
    return res;
  }

  std::vector<Perm> p_prime;
  for (auto const &x : g.elements()) {
    if (std::gcd(element_order(x), p) == 1)
      p_prime.push_back(x);
  }
  if (p_prime.size() != g.order() / p ||
      closure(g, p_prime).order() != p_prime.size()) {
    res.reason = "no normal subgroup of index p";
    return res;
  }
  res.normal_subgroup_order = p_prime.size();

  for (auto id : classes_of_order(table, p)) {
    NormalSubset a(table, {id});
    if (!check_hypothesis(a).holds)
      continue;
    res.classes_checked.push_back(id);
    Subgroup gen = closure(g, a.elements());
    if (gen.order() == p) {
      // <A> = <a>: the action on the single coset of <a> has trivial kernel.
      res.kernel_orders.push_back(1);
      continue;
    }
    Group complement(g.degree(), {a.elements().front()}, g.limits());
    auto frob = is_frobenius_with_complement(gen.group(), complement);
    if (!frob.is_frobenius) {
      res.status = Status::fails;
      res.reason = "class " + std::to_string(id) + ": " + frob.reason;
      return res;
    }
    res.kernel_orders.push_back(frob.kernel->order());
  }
  if (res.classes_checked.empty()) {
    res.reason = "no class of order-p elements satisfies the hypothesis";
    return res;
  }
  res.status = Status::holds;
  return res;
}

} // namespace classquare

#endif // CLASSQUARE_THEOREMS_HPP
