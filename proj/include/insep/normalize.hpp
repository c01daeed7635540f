#pragma once

#include <optional>
#include <string>
#include <vector>

#include "insep/invariants.hpp"

namespace insep {

/// R (x) K' with K' = K(x^{1/p}) and x = t_var. Elements are coefficient
/// lists of 1, xi, .., xi^{p-1} over R.
class BaseChangedRing {
 public:
  using Elem2 = std::vector<Elem>;

  BaseChangedRing(const Ring& R, int var, int e);

  const Ring& ring() const { return *R_; }
  int e() const { return e_; }
  RatFunc x() const { return R_->K().var(var_); }

  Elem2 from_ring(const Elem& a) const;
  Elem2 xi() const;
  Elem2 add(const Elem2& a, const Elem2& b) const;
  Elem2 sub(const Elem2& a, const Elem2& b) const;
  Elem2 mul(const Elem2& a, const Elem2& b) const;
  /// w^p, an element of R.
  Elem frobenius(const Elem2& w) const;
  /// Extended valuation e * v(w^p) / p.
  int v1(const Elem2& w) const;

 private:
  const Ring* R_;
  int var_;
  int e_;
};

/// Lattice description of R(1_x) / (R (x) K').
struct NormalizationLattice {
  int k_max = 0;                      // R(1) inside S^{-k_max} (R (x) K')
  std::vector<long long> dims;        // dim over K' of the part inside S^{-k}, k = 0..k_max+1
  long long g10 = 0;
  bool stable = false;                // dims[k_max] == dims[k_max + 1]
  long long conductor_exponent = 0;   // in the valuation of R(1_x)
  std::vector<std::string> generators;  // w / S^k with w^p in S^{pk}(R (x) K')
};

NormalizationLattice normalization_lattice(const PresentationSource& src, int var, const InvariantReport& inv,
                                           int max_generators = 8);

struct DeltaOracle {
  long long formula = 0;
  long long combinatorial = 0;
  long long lattice = 0;
  long long lattice_conductor = 0;
  bool conductor_identity = false;  // conductor * f == 2 delta
};
/// Throws CheckFailure("oracle mismatch") when the counts disagree.
DeltaOracle delta_oracle(const PresentationSource& src, int var, const InvariantReport& inv);

/// R(1_x) presented over K' = K(t_var^{1/p}) with its own uniformizer.
struct Representation {
  explicit Representation(Presentation pr) : pres(std::move(pr)) {}
  Presentation pres;
  int q = 0;
  int e = 1;
  std::vector<std::string> images;  // old uniformizer and generators, in the new coordinates
  std::vector<STPoly> image_polys;  // same, as polynomials over K' in the new uniformizer and generators
  int image_precision = kExact;
  bool fallback = false;
  std::string note;
};

Representation represent_normalization(const Presentation& pres, int var, int N);
/// Second step computed inside R(1_x) = R[U]/(U^p - g) over K (e_1 = 1 only):
/// q(x^{1/p}) and whether the final leading coefficient lies in L.
struct ModelStep2 {
  int q = 0;
  bool lead_in_L = false;
};
ModelStep2 second_step_in_model(const Presentation& pres, int var, int N);
ModelStep2 second_step_in_model(const PresentationSource& src, int var, int n0 = 16, int cap = 1024);

/// Source of presentations of R(1_x) at any requested precision.
PresentationSource normalized_source(const PresentationSource& src, int var, int cap = 1024);

struct StepData {
  int var = 0;
  std::string x;
  InvariantReport inv;
  int rank = 0;  // [L : K]
};

struct TwoStepReport {
  int case_id = 0;
  StepData step1;
  StepData step2;
  bool fallback = false;
  std::optional<bool> simple_extension;  // case 3 only
  bool case_law = false;
  bool genus_law = false;
  std::vector<std::string> notes;
};

/// fallback_step2, when set, supplies R(1_x) if re-presentation fails.
TwoStepReport two_step_analysis(const PresentationSource& src, int var,
                                const PresentationSource& fallback_step2 = {});

struct ChainReport {
  std::vector<int> order;
  std::vector<StepData> steps;
  long long g10_full = 0;
};

ChainReport full_genus_change(const PresentationSource& src, const std::vector<int>& order = {});

struct InequalityVerdict {
  std::string name;
  bool holds = false;
  std::string detail;
};
std::vector<InequalityVerdict> check_step_inequalities(const TwoStepReport& r, std::uint32_t p);

}  // namespace insep
