#pragma once

#include <string>
#include <vector>

#include "insep/normalize.hpp"

namespace insep {

using RMatrix = std::vector<std::vector<Elem>>;

/// Formal partial derivative of a polynomial in S, T; index 0 is S.
STPoly stpoly_derivative(const STPoly& f, int index);

/// Row i = (dP_i/dS, dP_i/dT_1, .., dP_i/dT_m) reduced in R.
RMatrix omega_matrix(const Ring& R);
std::vector<std::string> matrix_strings(const Ring& R, const RMatrix& J);

struct SmithResult {
  std::vector<int> exponents;  // sorted
  RMatrix left;                // rows of the left transformation that end up zero
};
/// Valuation-pivoted elimination over the DVR R. Throws PrecisionExhausted
/// when fewer than `rank` pivots are visible and CheckFailure when more exist.
SmithResult smith_over_dvr(const Ring& R, RMatrix A, int rank, bool track_kernel = false);

/// dim_K R / (m x m minors of J), by elimination over K[[S]] on the
/// generators minor * T^b.
long long fitting_colength(const Ring& R, const RMatrix& J);

struct JacobianReport {
  std::vector<int> exponents;
  long long jac_smith = 0;
  long long jac_fitting = 0;
  long long torsion_dim = 0;
  int residue_degree = 0;
  int precision = 0;
  std::vector<std::string> matrix;
};
/// Throws CheckFailure("route disagreement") when the two routes differ.
JacobianReport jac_number(const PresentationSource& src, int n0 = 16, int cap = 1024);

struct KernelStep {
  int var = 0;
  int q = 0;
  int e = 1;
  long long length = 0;       // over R_i
  long long dim = 0;          // over K_i
  long long closed_form = 0;  // [L_{i-1}:K_i] p q or [L_{i-1}:K_i] p (q-1)
  int residue_degree = 0;     // [L_i : K_i]
};
struct KernelChain {
  std::vector<KernelStep> steps;
  long long total = 0;
};
/// Kernels of Omega_{R_{i-1}} (x) R_i -> Omega_{R_i} along the p-basis chain.
KernelStep kernel_step(const PresentationSource& src, int var, int n0 = 16, int cap = 512);
KernelChain kernel_dims_along_chain(const PresentationSource& src, std::vector<int> order = {});

}  // namespace insep
