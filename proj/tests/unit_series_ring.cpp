#include <doctest.h>

#include <random>

#include "insep/local_ring.hpp"
#include "insep/parser.hpp"

using namespace insep;

namespace {

Presentation single(const RationalField& K, const std::string& rel) {
  return presentation_from_relations(K, {"T"}, {parse_stpoly(rel, K, "S", {"T"})});
}

}  // namespace

TEST_CASE("unit inverse examples") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  Series u(f3, 4);
  u.add_term(0, K.one());
  u.add_term(1, K.constant(-1));
  Series w = u.unit_inverse();
  for (int j = 0; j < 4; ++j) CHECK(w.coeff(j).is_one());
  Series v(f3, 3);
  v.add_term(0, K.constant(2));
  v.add_term(1, K.one());
  Series vi = v.unit_inverse();
  Series prod = v.mul(vi, 3);
  CHECK(prod.coeff(0).is_one());
  CHECK(prod.coeff(1).is_zero());
  CHECK(prod.coeff(2).is_zero());
  CHECK(vi.coeff(0) == K.constant(2));
  CHECK_THROWS(Series::monomial(K.one(), 1, 4).unit_inverse());
}

TEST_CASE("stable_compute examples") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  std::function<int(int)> val = [&](int n) {
    Series s(f3, n);
    s.add_term(2, K.one());
    s.add_term(5, K.one());
    auto v = s.valuation();
    if (!v) throw PrecisionExhausted("zero");
    return *v;
  };
  auto r = stable_compute(val, 4, 1024);
  CHECK(r.value == 2);
  std::function<int(int)> zero = [&](int n) {
    Series s(f3, n);
    auto v = s.valuation();
    if (!v) throw PrecisionExhausted("zero");
    return *v;
  };
  CHECK_THROWS_AS(stable_compute(zero, 4, 64), PrecisionExhausted);
}

TEST_CASE("randomized series ring axioms") {
  std::mt19937 rng(3);
  const FiniteField& f5 = FiniteField::prime(5);
  RationalField K(f5, {"t"});
  auto rnd = [&](bool unit) {
    Series s(f5, 12);
    for (int j = 0; j < 12; ++j) {
      if (rng() % 2) s.add_term(j, K.var(0).pow(rng() % 3).scaled(1 + rng() % 4));
    }
    if (unit) s.add_term(0, K.one().scaled(1 + rng() % 4) - s.coeff(0) + (s.coeff(0).is_constant() ? s.coeff(0) : K.zero()));
    return s;
  };
  for (int it = 0; it < 20; ++it) {
    Series a = rnd(false), b = rnd(false), c = rnd(false);
    CHECK(((a * b) * c).truncated(12) == (a * (b * c)).truncated(12));
    CHECK(((a + b) * c).truncated(12) == (a * c + b * c).truncated(12));
    Series u = rnd(true);
    if (u.valuation() && *u.valuation() == 0) {
      Series e = u.mul(u.unit_inverse(), 12) - Series::constant(K.one(), 12);
      CHECK(e.is_zero_to_precision());
    }
  }
}

TEST_CASE("reduce and valuation on fixture (1)") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  Presentation pres = single(K, "T^9 - t - S^2");
  CHECK_NOTHROW(check_presentation(pres));
  Ring R(pres, 16);
  Elem t9 = R.from_poly(parse_stpoly("T^9", K, "S", {"T"}));
  CHECK(R.equal(t9, R.from_poly(parse_stpoly("t + S^2", K, "S", {"T"}))));
  Elem t18 = R.from_poly(parse_stpoly("T^18", K, "S", {"T"}));
  CHECK(R.equal(t18, R.from_poly(parse_stpoly("t^2 + 2*t*S^2 + S^4", K, "S", {"T"}))));
  CHECK(R.equal(R.mul(R.from_poly(parse_stpoly("T^5", K, "S", {"T"})), R.from_poly(parse_stpoly("T^4", K, "S", {"T"}))), t9));
  Elem d = R.from_poly(parse_stpoly("T^9 - t", K, "S", {"T"}));
  CHECK(R.valuation_or_throw(d) == 2);
  CHECK(R.valuation_or_throw(R.one()) == 0);
  CHECK(R.equal(R.frobenius(R.gen(0)), R.monomial({3})));
  CHECK(R.equal(R.frobenius(R.monomial({3})), t9));
}

TEST_CASE("check_presentation diagnostics") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  CHECK_THROWS_WITH_AS(check_presentation(single(K, "T^2 - t^2")), doctest::Contains("not a field"), InputError);
  CHECK_THROWS_WITH_AS(check_presentation(single(K, "T^3 - t^3 - S")), doctest::Contains("not a field"), InputError);
  CHECK_NOTHROW(check_presentation(single(K, "T^2 - t")));
  CHECK_THROWS_AS(single(K, "S*T^3 - t"), InputError);
  auto tri = presentation_from_relations(K, {"T1", "T2"},
                                         {parse_stpoly("T1^3 - T2", K, "S", {"T1", "T2"}),
                                          parse_stpoly("T2^3 - t", K, "S", {"T1", "T2"})});
  CHECK_THROWS_WITH_AS(check_presentation(tri), doctest::Contains("not triangular"), InputError);
}

TEST_CASE("residue_is_pth_power examples") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  ResidueField L9(single(K, "T^9 - t"));
  auto r = residue_is_pth_power(L9, L9.from_k(K.var(0)), 1);
  REQUIRE(r);
  CHECK(*r == L9.pow(L9.gen(0), 3));
  ResidueField L3(single(K, "T^3 - t"));
  auto inv = L3.inverse(L3.gen(0));
  REQUIRE(inv);
  CHECK_FALSE(residue_is_pth_power(L3, L3.scale(*inv, K.constant(-1)), 1));
  CHECK(*residue_is_pth_power(L3, L3.one(), 1) == L3.one());
}

TEST_CASE("hensel examples") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  auto P = [&](const std::string& s) { return parse_stpoly(s, K, "S", {"Y"}); };
  Presentation p1 = hensel_prepare(K, P("Y^9 - t - S^2"), P("Y^9 - t"), 20);
  CHECK(p1.tail_precision == kExact);
  CHECK(p1.degrees[0] == 9);
  const STPoly f2 = P("Y^12 - t*Y^3 - S^5 + S^3");
  HenselFactors h2 = hensel_factor(K, f2, P("Y^9 - t"), 20);
  CHECK(h2.B.size() == 10);
  CHECK(h2.A.size() == 4);
  // A*B - f vanishes to precision.
  for (std::size_t y = 0; y < h2.f.size(); ++y) {
    Series acc = h2.f[y];
    for (std::size_t i = 0; i < h2.A.size(); ++i) {
      if (y >= i && y - i < h2.B.size()) acc = acc - h2.A[i].mul(h2.B[y - i], 20);
    }
    CHECK(acc.truncated(20).is_zero_to_precision());
  }
  Presentation p3 = hensel_prepare(K, P("Y^4 - t*Y - S^9"), P("Y^3 - t"), 30);
  CHECK(p3.degrees[0] == 3);
  Ring R3(p3, 30);
  CHECK(R3.valuation_or_throw(R3.sub(R3.gen(0), R3.constant(K.var(0))) ) == 0);
  CHECK(R3.valuation_or_throw(R3.sub(R3.monomial({3}), R3.constant(K.var(0)))) == 9);
  CHECK_THROWS_WITH_AS(hensel_prepare(K, P("Y^6 + t*Y^3 + t^2 - S"), P("Y^3 - t"), 10), doctest::Contains("not coprime"), InputError);
}
