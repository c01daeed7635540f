#include <doctest.h>

#include <random>

#include "insep/invariants.hpp"
#include "insep/parser.hpp"

using namespace insep;

namespace {

PresentationSource hypersurface(const RationalField& K, const std::string& f, const std::string& b0) {
  const STPoly fp = parse_stpoly(f, K, "S", {"Y"});
  const STPoly bp = parse_stpoly(b0, K, "S", {"Y"});
  return [K, fp, bp](int N) { return hensel_prepare(K, fp, bp, N); };
}

Presentation single(const RationalField& K, const std::string& rel) {
  return presentation_from_relations(K, {"T"}, {parse_stpoly(rel, K, "S", {"T"})});
}

}  // namespace

TEST_CASE("q by hill climbing on the fixtures") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  const RatFunc t = K.var(0);

  auto fam1 = hypersurface(K, "Y^9 - t - S^2", "Y^9 - t");
  QWitness w1 = q_invariant(fam1, t);
  CHECK(w1.q == 2);
  CHECK(w1.trace.size() == 1);
  CHECK(brute_force_q(fam1(16), t, 3, 12) == 2);

  auto fam3 = hypersurface(K, "Y^4 - t*Y - S^9", "Y^3 - t");
  QWitness w3 = q_invariant(fam3, t);
  CHECK(w3.q == 9);
  CHECK(brute_force_q(fam3(24), t, 4, 14) == 9);

  auto fam4 = hypersurface(K, "Y^4 - t*Y - S^6", "Y^3 - t");
  CHECK(q_invariant(fam4, t).q == 6);
  CHECK(brute_force_q(fam4(24), t, 3, 12) == 6);

  // invariance under x -> x' in K^p(x) \ K^p
  CHECK(q_invariant(fam1, t * t).q == 2);
  CHECK(q_invariant(fam1, t + K.constant(1)).q == 2);
  CHECK(q_invariant(fam3, t * t.pow(3) + t.pow(6)).q == 9);
}

TEST_CASE("q with an improvement step and with x outside L") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"s", "t"});
  auto fam3p = hypersurface(K, "Y^3 - t - Y*S^27 + s^3*S^9", "Y^3 - t");
  QWitness w = q_invariant(fam3p, K.var(1), 16, 256);
  CHECK(w.q == 27);
  REQUIRE(w.trace.size() == 2);
  CHECK(w.trace[0].q_r == 9);
  CHECK(w.trace[0].improved);
  Presentation small = single(K, "T^3 - t - S");
  QWitness none = q_invariant(constant_source(small), K.var(0));
  CHECK(none.q == 0);
  CHECK_FALSE(none.root_in_residue_field);
  CHECK(brute_force_q(small, K.var(0), 2, 6) == 0);
  CHECK(is_x_normal(constant_source(small), K.var(1)));
  CHECK(is_x_normal(constant_source(small), K.var(0)));
}

TEST_CASE("delta and conductor") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  const RatFunc t = K.var(0);
  InvariantReport r1 = delta_conductor(hypersurface(K, "Y^9 - t - S^2", "Y^9 - t"), t);
  CHECK(r1.q == 2);
  CHECK(r1.e == 3);
  CHECK(r1.f == 1);
  CHECK(r1.delta == 1);
  CHECK(r1.conductor_exponent == 2);
  CHECK(r1.genus_step == 3);
  CHECK(r1.combinatorial_agrees);
  InvariantReport r3 = delta_conductor(hypersurface(K, "Y^4 - t*Y - S^9", "Y^3 - t"), t);
  CHECK(r3.e == 1);
  CHECK(r3.f == 3);
  CHECK(r3.delta == 9);
  CHECK(r3.conductor_exponent == 6);
  CHECK(r3.genus_step == 9);
  CHECK(r3.delta_combinatorial == 9);
  InvariantReport r0 = invariants_from_q(3, 1, 3);
  CHECK(r0.delta == 0);
  CHECK(r0.conductor_exponent == 0);
  CHECK_FALSE(is_x_normal(hypersurface(K, "Y^9 - t - S^2", "Y^9 - t"), t));
  CHECK(is_x_normal(constant_source(single(K, "T^3 - t - S")), t));
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int q = 1; q < 40; ++q) {
      InvariantReport r = invariants_from_q(p, q, static_cast<int>(p));
      CHECK(r.e * r.f == static_cast<int>(p));
      CHECK((r.e == static_cast<int>(p)) == (q % static_cast<int>(p) != 0));
      CHECK(r.combinatorial_agrees);
      if (r.f == static_cast<int>(p) && p != 2) CHECK(r.delta % p == 0);
    }
  }
}

TEST_CASE("semigroup gaps and coin dimension") {
  CHECK(semigroup_gaps(2, 3) == std::vector<int>{1});
  CHECK(semigroup_gaps(3, 5) == std::vector<int>{1, 2, 4, 7});
  CHECK(semigroup_gaps(2, 5) == std::vector<int>{1, 3});
  CHECK_THROWS_WITH(semigroup_gaps(4, 6), doctest::Contains("not coprime"));
  const FiniteField& f3 = FiniteField::prime(3);
  CoinResult a = coin_dim(2, 3, {1}, {1}, f3);
  CHECK(a.dimension == 1);
  CHECK(a.conductor_exponent == 2);
  CHECK(a.reduction_gaps == std::vector<int>{1});
  CoinResult b = coin_dim(3, 5, {1, 1}, {1, 0, f3.from_int(-1)}, f3);
  CHECK(b.dimension == 4);
  CHECK(b.conductor_exponent == 8);
  CHECK(b.reduction_gaps == std::vector<int>{1, 2, 4, 7});
  CoinResult c = coin_dim(1, 4, {1}, {2, 1}, f3);
  CHECK(c.dimension == 0);
  CHECK(c.reduction_dimension == 0);
  CHECK_THROWS_WITH(coin_dim(2, 4, {1}, {1}, f3), doctest::Contains("not coprime"));

  std::mt19937 rng(7);
  const FiniteField& f5 = FiniteField::prime(5);
  for (int m = 1; m <= 12; ++m) {
    for (int n = 1; n <= 12; ++n) {
      if (std::gcd(m, n) != 1) continue;
      std::vector<Fq> g(6), d(6);
      for (auto& x : g) x = rng() % 5;
      for (auto& x : d) x = rng() % 5;
      g[0] = 1 + rng() % 4;
      d[0] = 1 + rng() % 4;
      CoinResult r = coin_dim(m, n, g, d, f5);
      CHECK(r.reduction_dimension == r.dimension);
      CHECK(r.gap_count == r.dimension);
      CHECK(r.reduction_conductor == r.conductor_exponent);
    }
  }
}

TEST_CASE("normal form extraction") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  NormalFormData d1 = extract_normal_form(hypersurface(K, "Y^9 - t - S^2", "Y^9 - t"));
  REQUIRE(d1.entries.size() == 1);
  CHECK(d1.entries[0].n == 2);
  CHECK(d1.entries[0].q == 2);
  CHECK(d1.entries[0].q_prime == 2);
  CHECK(d1.entries[0].f_string == "t");
  CHECK(d1.entries[0].w_string == "0");
  CHECK(d1.entries[0].u_string.rfind("1 + O(S^", 0) == 0);
  NormalFormData d3 = extract_normal_form(hypersurface(K, "Y^4 - t*Y - S^9", "Y^3 - t"));
  REQUIRE(d3.entries.size() == 1);
  CHECK(d3.entries[0].n == 1);
  CHECK(d3.entries[0].q == 9);
  CHECK(d3.entries[0].q_prime == 9);
  CHECK(d3.entries[0].w_string == "0");
  Presentation empty{K, {}, {}, {}, kExact, "S"};
  CHECK(extract_normal_form(empty, 8).entries.empty());
}
