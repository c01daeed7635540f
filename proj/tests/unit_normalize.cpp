#include <doctest.h>

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

TEST_CASE("extended valuation after base change") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  auto fam1 = hypersurface(K, "Y^9 - t - S^2", "Y^9 - t");
  Ring R1(fam1(20), 20);
  BaseChangedRing A1(R1, 0, 3);
  auto w = A1.sub(A1.from_ring(R1.monomial({3})), A1.xi());
  CHECK(A1.v1(w) == 2);
  CHECK(A1.v1(A1.from_ring(R1.s_power(1))) == 3);
  CHECK(A1.v1(A1.mul(w, w)) == 4);
  auto fam3 = hypersurface(K, "Y^4 - t*Y - S^9", "Y^3 - t");
  Ring R3(fam3(30), 30);
  BaseChangedRing A3(R3, 0, 1);
  CHECK(A3.v1(A3.sub(A3.from_ring(R3.gen(0)), A3.xi())) == 3);
}

TEST_CASE("normalization lattice and delta oracle") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  const RatFunc t = K.var(0);
  auto fam1 = hypersurface(K, "Y^9 - t - S^2", "Y^9 - t");
  InvariantReport i1 = delta_conductor(fam1, t);
  NormalizationLattice l1 = normalization_lattice(fam1, 0, i1);
  CHECK(l1.g10 == 3);
  CHECK(l1.stable);
  CHECK(l1.conductor_exponent == 2);
  DeltaOracle o1 = delta_oracle(fam1, 0, i1);
  CHECK(o1.lattice == 1);
  CHECK(o1.conductor_identity);

  auto fam3 = hypersurface(K, "Y^4 - t*Y - S^9", "Y^3 - t");
  InvariantReport i3 = delta_conductor(fam3, t);
  NormalizationLattice l3 = normalization_lattice(fam3, 0, i3);
  CHECK(l3.g10 == 9);
  CHECK(l3.conductor_exponent == 6);
  CHECK(delta_oracle(fam3, 0, i3).conductor_identity);

  auto smooth = constant_source(presentation_from_relations(K, {"T"}, {parse_stpoly("T^3 - t - S", K, "S", {"T"})}));
  InvariantReport i0 = delta_conductor(smooth, t);
  CHECK(i0.q == 1);
  NormalizationLattice l0 = normalization_lattice(smooth, 0, i0);
  CHECK(l0.g10 == 0);
  CHECK(l0.generators.empty());
}

TEST_CASE("re-presentation of the normalization") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  auto fam1 = hypersurface(K, "Y^9 - t - S^2", "Y^9 - t");
  Representation r1 = represent_normalization(fam1(24), 0, 24);
  CHECK(r1.e == 3);
  REQUIRE(r1.pres.m() == 1);
  CHECK(r1.pres.degrees[0] == 3);
  MESSAGE(r1.pres.relation_strings()[0]);
  for (const auto& s : r1.images) MESSAGE(s);

  auto fam3 = hypersurface(K, "Y^4 - t*Y - S^9", "Y^3 - t");
  Representation r3 = represent_normalization(fam3(30), 0, 30);
  CHECK(r3.e == 1);
  CHECK(r3.pres.rank() == 3);
  for (const auto& s : r3.pres.relation_strings()) MESSAGE(s);
  for (const auto& s : r3.images) MESSAGE(s);
  QWitness w = q_invariant(normalized_source(fam3, 0), r3.pres.K.var(0));
  CHECK(w.q == 3);
}

TEST_CASE("two-step analysis on the families") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  struct Row {
    std::string f, b0;
    int case_id, q1, q2;
  };
  const std::vector<Row> rows = {
      {"Y^9 - t - S^2", "Y^9 - t", 1, 2, 2},
      {"Y^12 - t*Y^3 - S^5 + S^3", "Y^9 - t", 2, 5, 3},
      {"Y^4 - t*Y - S^9", "Y^3 - t", 3, 9, 3},
      {"Y^4 - t*Y - S^6", "Y^3 - t", 4, 6, 2},
      {"Y^4 - t*Y + S^6*Y - S^12", "Y^3 - t", 4, 12, 2},
  };
  for (const auto& row : rows) {
    CAPTURE(row.f);
    TwoStepReport r = two_step_analysis(hypersurface(K, row.f, row.b0), 0);
    CHECK(r.case_id == row.case_id);
    CHECK(r.step1.inv.q == row.q1);
    CHECK(r.step2.inv.q == row.q2);
    CHECK(r.case_law);
    CHECK(r.genus_law);
    for (const auto& v : check_step_inequalities(r, 3)) CHECK_MESSAGE(v.holds, v.name);
    if (row.case_id == 3) CHECK(*r.simple_extension);
  }
}

TEST_CASE("strict case 3 over two variables and chain sums") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"s", "t"});
  auto src = hypersurface(K, "Y^3 - t - Y*S^27 + s^3*S^9", "Y^3 - t");
  TwoStepReport r = two_step_analysis(src, 1);
  CHECK(r.case_id == 3);
  CHECK(r.step1.inv.q == 27);
  CHECK(r.step2.inv.q == 3);
  REQUIRE(r.simple_extension);
  CHECK_FALSE(*r.simple_extension);
  CHECK(r.case_law);
  ChainReport c1 = full_genus_change(src, {1, 0});
  ChainReport c2 = full_genus_change(src, {0, 1});
  CHECK(c1.g10_full == 27);
  CHECK(c2.g10_full == 27);
}

TEST_CASE("emitted presentations parse back") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  for (const auto& [f, b0] : std::vector<std::pair<std::string, std::string>>{
           {"Y^9 - t - S^2", "Y^9 - t"}, {"Y^4 - t*Y - S^9", "Y^3 - t"}, {"Y^4 - t*Y + S^6*Y - S^12", "Y^3 - t"}}) {
    CAPTURE(f);
    const Presentation pres = hypersurface(K, f, b0)(30);
    for (const Presentation& P : {pres, represent_normalization(pres, 0, 30).pres}) {
      std::vector<STPoly> rels;
      int precision = kExact;
      for (const auto& s : P.relation_strings()) {
        ParsedRelation r = parse_relation(s, P.K, P.uniformizer, P.gens);
        rels.push_back(r.poly);
        precision = std::min(precision, r.precision);
      }
      Presentation back = presentation_from_relations(P.K, P.gens, rels, precision);
      back.uniformizer = P.uniformizer;
      CHECK(back.relation_strings() == P.relation_strings());
      CHECK(back.tails == P.tails);
    }
  }
}
