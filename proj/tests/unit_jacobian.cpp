#include <doctest.h>

#include "insep/errors.hpp"
#include "insep/invariants.hpp"
#include "insep/jacobian.hpp"
#include "insep/normalize.hpp"
#include "insep/parser.hpp"

using namespace insep;

namespace {

PresentationSource hypersurface(const RationalField& K, const std::string& f, const std::string& b0) {
  const STPoly fp = parse_stpoly(f, K, "S", {"Y"});
  const STPoly bp = parse_stpoly(b0, K, "S", {"Y"});
  return [K, fp, bp](int N) { return hensel_prepare(K, fp, bp, N); };
}

}  // namespace

TEST_CASE("derivative of S,T polynomials") {
  const FiniteField& f5 = FiniteField::prime(5);
  RationalField K(f5, {"t"});
  const STPoly f = parse_stpoly("S^3*T^2 + t*T - S^5", K, "S", {"T"});
  const STPoly dS = stpoly_derivative(f, 0);
  CHECK(stpoly_to_string(dS, K, "S", {"T"}) == stpoly_to_string(parse_stpoly("3*S^2*T^2", K, "S", {"T"}), K, "S", {"T"}));
  const STPoly dT = stpoly_derivative(f, 1);
  CHECK(dT.size() == 2);
}

TEST_CASE("jacobian number of the first family") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K3(f3, {"t"});
  JacobianReport r = jac_number(hypersurface(K3, "Y^9 - t - S^2", "Y^9 - t"));
  CHECK(r.exponents == std::vector<int>{1});
  CHECK(r.jac_smith == 9);
  CHECK(r.jac_fitting == 9);
  REQUIRE(r.matrix.size() == 1);
  MESSAGE(r.matrix[0]);

  const FiniteField& f5 = FiniteField::prime(5);
  RationalField K5(f5, {"t"});
  JacobianReport r5 = jac_number(hypersurface(K5, "Y^25 - t - S^3", "Y^25 - t"));
  CHECK(r5.exponents == std::vector<int>{2});
  CHECK(r5.jac_smith == 50);
}

TEST_CASE("smooth presentation has jacobian number zero") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  auto smooth = constant_source(presentation_from_relations(K, {"T"}, {parse_stpoly("T^3 - t - S", K, "S", {"T"})}));
  JacobianReport r = jac_number(smooth);
  CHECK(r.jac_smith == 0);
  CHECK(r.jac_fitting == 0);
}

TEST_CASE("kernel dimensions along the chain") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  auto fam1 = hypersurface(K, "Y^9 - t - S^2", "Y^9 - t");
  KernelChain c1 = kernel_dims_along_chain(fam1);
  REQUIRE(c1.steps.size() == 1);
  CHECK(c1.steps[0].dim == 9);
  CHECK(c1.steps[0].closed_form == 9);
  CHECK(c1.total == jac_number(fam1).jac_smith);

  auto fam3 = hypersurface(K, "Y^4 - t*Y - S^9", "Y^3 - t");
  KernelChain c3 = kernel_dims_along_chain(fam3);
  REQUIRE(c3.steps.size() == 1);
  CHECK(c3.steps[0].dim == 27);
  CHECK(c3.steps[0].closed_form == 27);
  CHECK(c3.total == jac_number(fam3).jac_smith);
}

TEST_CASE("two-variable chain matches the jacobian number") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"s", "t"});
  auto src = hypersurface(K, "Y^3 - t - Y*S^27 + s^3*S^9", "Y^3 - t");
  JacobianReport r = jac_number(src);
  CHECK(r.jac_smith == 81);
  for (const std::vector<int>& order : {std::vector<int>{1, 0}, std::vector<int>{0, 1}}) {
    KernelChain c = kernel_dims_along_chain(src, order);
    CHECK(c.total == r.jac_smith);
    for (const auto& st : c.steps) CHECK(st.dim == st.closed_form);
    CHECK(2 * 3 * full_genus_change(src, order).g10_full == 2 * c.total);
  }
}

TEST_CASE("separable residue part is rejected") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  auto src = constant_source(presentation_from_relations(K, {"T"}, {parse_stpoly("T^2 - t - S", K, "S", {"T"})}));
  CHECK_THROWS_AS(jac_number(src), InputError);
  CHECK_THROWS_AS(kernel_step(src, 0), InputError);
}
