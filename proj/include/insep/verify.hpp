#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "insep/invariants.hpp"
#include "insep/jacobian.hpp"
#include "insep/normalize.hpp"

namespace insep {

struct Verdict {
  std::string subject;
  int criterion = 0;  // acceptance criterion 1..10
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerdictSet {
  std::vector<Verdict> verdicts;
  void add(Verdict v) { verdicts.push_back(std::move(v)); }
  void merge(const VerdictSet& o);
  bool all_pass() const;
  /// Pass/fail per criterion over the verdicts tagged with it; nullopt when none.
  std::optional<bool> criterion_pass(int criterion) const;
};

/// (p-1)/2 divides g for odd p.
Verdict check_tate(long long g, std::uint32_t p);
/// 2 p g10 == (p - 1) jac.
Verdict genus_jacobian_identity(long long g10_full, long long jac, std::uint32_t p);
/// Computes both sides by their own routes.
Verdict check_genus_jacobian(const PresentationSource& src, std::uint32_t p);

/// One of the example families, specialised to (p, n, m).
struct Fixture {
  std::string family;  // fam1, fam2, fam3, fam3prime, fam4, fam4prime
  std::uint32_t p = 3;
  int n = 0;
  int m = 0;
  std::vector<std::string> field_vars;
  std::string hypersurface;  // in S and Y
  std::string point_factor;
  std::string step2_hypersurface;  // the explicit R(1) over K(t^{1/p}), in S and Y
  std::string step2_point_factor;
  int var = 0;  // index of t
  int case_id = 0;
  int e1 = 1, e2 = 1;
  std::optional<int> q1, q2;  // values stated with the family
  std::optional<bool> simple_extension;
  std::optional<bool> strict_branch;  // p q(t^{1/p}) < q(t)

  std::string id() const;
};

std::vector<Fixture> corpus_fixtures();
/// Accepts "fam1:p=3:n=2" style ids.
std::optional<Fixture> find_fixture(const std::string& id);

RationalField fixture_field(const Fixture& fx);
PresentationSource fixture_source(const Fixture& fx, const RationalField& K);
PresentationSource fixture_step2_source(const Fixture& fx, const RationalField& K1);

/// Single-step checks shared by fixtures and random instances: q against the
/// brute-force oracle, delta by three routes, conductor identity, both
/// jacobian routes, the headline identity, Tate divisibility, kernel chain.
VerdictSet run_single_checks(const std::string& subject, const PresentationSource& src, int var);
/// Case laws, step inequalities and Tate divisibility of the second step.
VerdictSet run_two_step_checks(const std::string& subject, const PresentationSource& src, int var,
                               const PresentationSource& step2 = {});
VerdictSet run_fixture(const Fixture& fx);
/// Random presentations T^{p^k} = t + c S^a + d S^b (one or two generators).
VerdictSet run_random(std::uint32_t p, int count, std::uint32_t seed);
/// Coin dimensions for coprime 2 <= m, n <= max_mn with random units.
VerdictSet coin_suite(int max_mn, int trials, std::uint32_t seed);
VerdictSet run_corpus(int random_per_p = 20);

}  // namespace insep
