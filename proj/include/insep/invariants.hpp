#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "insep/local_ring.hpp"

namespace insep {

/// Presentation at a requested precision (Hensel-prepared inputs are only
/// known modulo S^N, so pipelines ask for the precision they run at).
using PresentationSource = std::function<Presentation(int)>;
PresentationSource constant_source(const Presentation& pres);

struct ClimbStep {
  int q_r;
  KVector lead;  // leading coefficient of (r^{p^n} - F)/S^{q_r} in L
  bool improved;
};

/// Outcome of maximizing v(r^{p^n} - F) over lifts r of a residue class.
struct Climb {
  Elem r;
  int q = 0;
  KVector lead;
  std::vector<ClimbStep> trace;
};

/// Hill climbing: while p^n | v and the leading coefficient is a p^n-th
/// power c = b^{p^n} in L, replace r by r - S^{v/p^n} lift(b).
Climb hill_climb(const Ring& R, const ResidueField& L, const Elem& F, Elem r, int n);

struct QWitness {
  RatFunc x;
  int q = 0;          // 0 when x^{1/p} is not in L
  bool root_in_residue_field = false;
  Elem r;             // maximizer
  KVector lead;       // termination certificate
  std::vector<ClimbStep> trace;
  int precision = 0;
};

/// q(x) at a fixed precision N.
QWitness q_invariant(const Presentation& pres, const RatFunc& x, int N);
/// q(x) with precision escalation.
QWitness q_invariant(const PresentationSource& src, const RatFunc& x, int n0 = 16, int cap = 1024);

/// Largest V with x = r^p mod S^V for some r whose coordinates are
/// polynomials in S of degree <= degree_bound, by linear algebra over K at
/// each level. Throws CheckFailure when V exceeds valuation_bound.
int brute_force_q(const Presentation& pres, const RatFunc& x, int degree_bound, int valuation_bound);

struct InvariantReport {
  std::string x;
  int q = 0;
  int e = 1;
  int f = 1;
  long long delta = 0;
  long long conductor_exponent = 0;
  long long genus_step = 0;
  int residue_degree = 0;       // [L : K]
  int degree_over_kx = 0;       // [L : K(x^{1/p})], 0 when x^{1/p} not in L
  long long delta_combinatorial = 0;
  bool combinatorial_agrees = false;
  std::optional<long long> lattice_g;
  std::optional<long long> lattice_conductor;
  std::vector<ClimbStep> trace;
  int precision = 0;
};

/// Formula values for given p and q, plus the combinatorial oracle.
InvariantReport invariants_from_q(std::uint32_t p, int q, int D);
InvariantReport delta_conductor(const PresentationSource& src, const RatFunc& x, int n0 = 16,
                                int cap = 1024);

bool is_x_normal(const PresentationSource& src, const RatFunc& x);

/// Numerical semigroup <m, n> gaps.
std::vector<int> semigroup_gaps(int m, int n);

struct CoinResult {
  long long dimension = 0;           // closed form (m-1)(n-1)/2
  long long conductor_exponent = 0;  // closed form (m-1)(n-1)
  long long reduction_dimension = 0; // codimension found by row reduction
  long long reduction_conductor = 0;
  std::vector<int> reduction_gaps;
  long long gap_count = 0;
};
/// dim_M M[[T]]/M[[T^m gamma, T^n delta]] for unit series gamma, delta over
/// M = F_q (coefficient lists, gamma[0], delta[0] != 0).
CoinResult coin_dim(int m, int n, const std::vector<Fq>& gamma, const std::vector<Fq>& delta,
                    const FiniteField& M, int N = 0);

struct NormalFormEntry {
  int n = 0;
  STPoly f;        // y_i^{p^n} = f(y_1..y_{i-1}) in L
  int q = 0;
  int q_prime = 0;
  Elem u;          // unit u_i
  Elem w;          // zero when q == q'
  std::string f_string, u_string, w_string;
};
struct NormalFormData {
  std::vector<NormalFormEntry> entries;
  int precision = 0;
};
NormalFormData extract_normal_form(const Presentation& pres, int N);
NormalFormData extract_normal_form(const PresentationSource& src, int n0 = 16, int cap = 1024);

}  // namespace insep
