// Acceptance gate: one line per criterion, exit code = number of failures.
// Every criterion is exact (symbolic Laurent equality) and carries the wall
// clock budget it must meet; exceeding the budget fails the criterion even if
// the mathematics checks out.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ischur/schur.hpp"
#include "ischur/tensor.hpp"
#include "ischur/verify.hpp"

using namespace ischur;

namespace {

struct Outcome {
  bool ok;
  std::string detail;  // case counts on success, first failure otherwise
};

std::string first_failure(const SuiteReport& rep) {
  if (rep.failures.empty()) return "(no stored failure)";
  const CaseFailure& f = rep.failures.front();
  return f.input + " | lhs = " + f.lhs + " | rhs = " + f.rhs;
}

Outcome run_suites(const std::string& suite,
                   const std::vector<std::pair<int, int>>& grids,
                   const std::function<void(SuiteParams&)>& tweak = {}) {
  long cases = 0;
  for (auto [n, r] : grids) {
    SuiteParams p;
    p.n = n;
    p.r = r;
    if (tweak) tweak(p);
    SuiteReport rep = run_suite(suite, p);
    cases += rep.cases;
    if (!rep.ok())
      return {false, suite + " at (" + std::to_string(n) + "," +
                         std::to_string(r) + "): " +
                         std::to_string(rep.failed) + " of " +
                         std::to_string(rep.cases) +
                         " cases failed; first: " + first_failure(rep)};
  }
  return {true, std::to_string(cases) + " cases"};
}

Outcome run_checker(const std::string& what,
                    CheckReport (*fn)(int, int),
                    const std::vector<std::pair<int, int>>& grids) {
  long cases = 0;
  for (auto [n, r] : grids) {
    CheckReport rep = fn(n, r);
    cases += rep.cases;
    if (!rep.ok())
      return {false, what + " at (" + std::to_string(n) + "," +
                         std::to_string(r) + "): " +
                         std::to_string(rep.failures.size()) +
                         " failures; first: " + rep.failures.front()};
  }
  return {true, std::to_string(cases) + " cases"};
}

Outcome criterion_dimensions() {
  const std::vector<std::pair<int, int>> grids{{1, 1}, {1, 2}, {2, 1},
                                               {2, 2}, {2, 3}, {3, 2}};
  const std::vector<std::size_t> expect{2, 3, 8, 36, 120, 171};
  long total = 0;
  for (std::size_t g = 0; g < grids.size(); ++g) {
    auto [n, r] = grids[g];
    auto xi = enumerate_xi(n, r);
    if (xi.size() != expect[g])
      return {false, "|Xi| at (" + std::to_string(n) + "," +
                         std::to_string(r) + ") is " +
                         std::to_string(xi.size()) + ", expected " +
                         std::to_string(expect[g])};
    // triples biject onto Xi: counting and explicit roundtrip
    std::size_t triples = 0;
    for (const Composition& la : compositions(n, r))
      for (const Composition& mu : compositions(n, r))
        triples += double_coset_reps(la, mu, r).size();
    if (triples != xi.size())
      return {false, "triple count " + std::to_string(triples) +
                         " != |Xi| = " + std::to_string(xi.size()) + " at (" +
                         std::to_string(n) + "," + std::to_string(r) + ")"};
    for (const ThetaMatrix& a : xi) {
      Triple t = triple_of_matrix(a);
      if (!(matrix_of_triple(t.la, t.d, t.mu, n) == a))
        return {false, "triple roundtrip failed for " + a.str()};
    }
    total += static_cast<long>(xi.size());
  }
  return {true, std::to_string(total) + " matrices across 6 grids"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string label;
    double budget_s;
    std::function<Outcome()> run;
  };

  const std::vector<Criterion> criteria{
      {1, "basis dimensions and the triple bijection", 5.0,
       criterion_dimensions},
      {2, "one-step closed formulas equal the oracle", 120.0,
       [] {
         return run_suites("short",
                           {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}});
       }},
      {3, "multi-step closed formulas (m <= 3) equal the oracle", 180.0,
       [] {
         return run_suites("multi", {{2, 2}, {2, 3}},
                           [](SuiteParams& p) { p.mmax = 3; });
       }},
      {4, "long formulas over |A| <= 4 and the unit j-box", 300.0,
       [] {
         return run_suites("long", {{1, 2}, {2, 2}, {2, 3}},
                           [](SuiteParams& p) {
                             p.amax = 4;
                             p.jbox = 1;
                           });
       }},
      {5, "monomial triangularity, inversion, negative replacement", 120.0,
       [] { return run_suites("triangular", {{1, 2}, {2, 2}}); }},
      {6, "leading terms under the three hypothesis classes", 60.0,
       [] { return run_suites("leading", {{2, 2}}); }},
      {7, "tensor actions: closed = pullback = Schur, commuting", 120.0,
       [] {
         return run_checker("commuting/match", &check_commuting_and_match,
                            {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}});
       }},
      {8, "defining relations including the wall cases", 60.0,
       [] {
         return run_checker("relations", &check_relations, {{2, 2}, {1, 3}});
       }},
      {9, "divided powers, the eae recursion, two-point stability", 120.0,
       [] {
         return run_suites("divided", {{2, 2}, {2, 3}, {3, 2}},
                           [](SuiteParams& p) { p.mmax = 3; });
       }},
      {10, "k-binomial product equals the weight idempotent", 30.0,
       [] { return run_suites("kbinom", {{2, 2}, {3, 2}}); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    bool in_budget = ms <= static_cast<long long>(c.budget_s * 1000);
    bool ok = out.ok && in_budget;
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s [%s, %lld ms / budget %.0f s]%s%s\n",
                ok ? "PASS" : "FAIL", c.id, c.label.c_str(),
                out.ok ? out.detail.c_str() : "see below", ms, c.budget_s,
                out.ok ? "" : " -- ", out.ok ? "" : out.detail.c_str());
    std::fflush(stdout);
  }
  if (failed == 0)
    std::printf("acceptance: all %zu criteria hold\n", criteria.size());
  else
    std::printf("acceptance: %d criteria FAILED\n", failed);
  return failed;
}
