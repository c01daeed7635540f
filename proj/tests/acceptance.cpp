#include <chrono>
#include <iostream>
#include <map>
#include <string>

#include "insep/verify.hpp"

using namespace insep;

namespace {

const std::map<int, std::string> kTitles = {
    {1, "Frobenius-coin suite"},
    {2, "q-oracle agreement and stated q values"},
    {3, "delta by formula, combinatorics and lattice"},
    {4, "conductor-delta identity"},
    {5, "two-step case laws, all four cases and both branches"},
    {6, "step inequalities"},
    {7, "Jacobian route agreement and generic rank 1"},
    {8, "2p*g10 == (p-1)*jac"},
    {9, "Tate divisibility"},
    {10, "kernel-chain additivity"},
};

Verdict coverage_of_cases(const VerdictSet& fixtures) {
  Verdict v;
  v.subject = "corpus";
  v.criterion = 5;
  v.name = "case and branch coverage";
  std::map<int, bool> cases;
  std::map<std::pair<int, bool>, bool> branches;
  for (const auto& fx : corpus_fixtures()) {
    bool ok = true;
    bool seen = false;
    for (const auto& x : fixtures.verdicts) {
      if (x.subject != fx.id()) continue;
      if (x.criterion == 5) {
        seen = true;
        ok = ok && x.pass;
      }
    }
    if (!seen || !ok) continue;
    cases[fx.case_id] = true;
    if (fx.strict_branch) branches[{fx.case_id, *fx.strict_branch}] = true;
  }
  v.pass = cases.size() == 4 && branches.count({3, true}) && branches.count({3, false}) &&
           branches.count({4, true}) && branches.count({4, false});
  v.detail = std::to_string(cases.size()) + " cases realized";
  return v;
}

Verdict concrete_fam1(std::uint32_t p, int n, long long g, long long jac) {
  Verdict v;
  v.subject = "fam1:p=" + std::to_string(p) + ":n=" + std::to_string(n);
  v.criterion = 8;
  v.name = "stated values g and jac";
  const Fixture fx = *find_fixture(v.subject);
  const RationalField K = fixture_field(fx);
  const PresentationSource src = fixture_source(fx, K);
  const long long g10 = full_genus_change(src).g10_full;
  const long long j = jac_number(src).jac_smith;
  v.pass = g10 == g && j == jac && genus_jacobian_identity(g10, j, p).pass;
  v.detail = "g = " + std::to_string(g10) + ", jac = " + std::to_string(j);
  return v;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  VerdictSet all = coin_suite(30, 5, 1);
  VerdictSet fixtures;
  for (const auto& fx : corpus_fixtures()) fixtures.merge(run_fixture(fx));
  all.merge(fixtures);
  for (std::uint32_t p : {2u, 3u, 5u}) all.merge(run_random(p, 20, 1000 + p));
  all.add(coverage_of_cases(fixtures));
  all.add(concrete_fam1(3, 2, 3, 9));
  all.add(concrete_fam1(5, 3, 20, 50));

  bool ok = true;
  for (const auto& v : all.verdicts) {
    if (!v.pass) {
      std::cout << "  failed [" << v.criterion << "] " << v.subject << " | " << v.name << " | " << v.detail << "\n";
    }
  }
  const auto ingestion = all.criterion_pass(0);
  if (ingestion && !*ingestion) ok = false;
  for (const auto& [c, title] : kTitles) {
    long long count = 0;
    for (const auto& v : all.verdicts) count += v.criterion == c;
    const bool pass = all.criterion_pass(c).value_or(false);
    ok = ok && pass;
    std::cout << "criterion " << c << ": " << (pass ? "PASS" : "FAIL") << "  " << title << " (" << count
              << " checks)\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << all.verdicts.size() << " checks in " << secs << " s\n";
  return ok ? 0 : 1;
}
