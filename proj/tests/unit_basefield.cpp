#include <doctest.h>

#include <random>

#include "insep/errors.hpp"
#include "insep/inseparable_ext.hpp"
#include "insep/rational_field.hpp"

using namespace insep;

namespace {

RatFunc random_ratfunc(const RationalField& K, std::mt19937& rng, int deg) {
  const FiniteField& f = K.fq();
  auto rpoly = [&](bool nonzero) {
    for (;;) {
      std::vector<Term> terms;
      for (int k = 0; k < 3; ++k) {
        std::array<std::uint32_t, kMaxVars> e{};
        for (int v = 0; v < K.nvars(); ++v) e[v] = rng() % (deg + 1);
        terms.push_back({mono::make(e), static_cast<Fq>(rng() % f.order())});
      }
      MPoly p(f, terms);
      if (!nonzero || !p.is_zero()) return p;
    }
  };
  return RatFunc(rpoly(false), rpoly(true));
}

}  // namespace

TEST_CASE("finite field tables") {
  const FiniteField& f9 = FiniteField::get(3, 2);
  CHECK(f9.order() == 9);
  for (Fq a = 1; a < 9; ++a) {
    CHECK(f9.mul(a, f9.inv(a)) == 1);
    CHECK(f9.frobenius_inverse(f9.frobenius(a)) == a);
  }
  const FiniteField& f5 = FiniteField::prime(5);
  CHECK(f5.mul(2, 3) == 1);
  CHECK(f5.from_int(-1) == 4);
  CHECK_THROWS(FiniteField(3, {2, 0, 1}));  // x^2 - 1 splits
}

TEST_CASE("is_pth_power examples") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t1", "t2"});
  RatFunc t1 = K.var(0), t2 = K.var(1);
  auto r = is_pth_power(t1.pow(3));
  REQUIRE(r);
  CHECK(*r == t1);
  CHECK_FALSE(is_pth_power(t1));
  auto a = (t1.pow(3) + t2.pow(3)) / t1.pow(6);
  auto b = is_pth_power(a);
  REQUIRE(b);
  CHECK(*b == (t1 + t2) / t1.pow(2));
}

TEST_CASE("partial derivative examples") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  RatFunc t = K.var(0);
  CHECK(t.pow(2).derivative(0) == t.scaled(2));
  CHECK(t.pow(3).derivative(0).is_zero());
  CHECK(t.inverse().derivative(0) == -(t.pow(2).inverse()));
}

TEST_CASE("randomized field axioms and pth powers") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FiniteField& f = FiniteField::prime(p);
    RationalField K(f, {"t1", "t2"});
    for (int it = 0; it < 30; ++it) {
      RatFunc a = random_ratfunc(K, rng, 2);
      RatFunc b = random_ratfunc(K, rng, 2);
      RatFunc c = random_ratfunc(K, rng, 2);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      auto root = is_pth_power(a.pow(p));
      REQUIRE(root);
      CHECK(root->pow(p) == a.pow(p));
      const bool derivs_vanish = a.derivative(0).is_zero() && a.derivative(1).is_zero();
      CHECK(derivs_vanish == is_pth_power(a).has_value());
    }
  }
}

TEST_CASE("subfield decomposition reassembles") {
  std::mt19937 rng(11);
  const FiniteField& f = FiniteField::get(3, 2);
  RationalField K(f, {"t1", "t2"});
  for (int it = 0; it < 20; ++it) {
    RatFunc a = random_ratfunc(K, rng, 3);
    const std::array<std::uint32_t, kMaxVars> moduli{3, 3, 1};
    RatFunc sum = K.zero();
    for (auto& term : decompose_over_subfield(a, moduli, 1)) {
      RatFunc mono = K.one();
      for (int v = 0; v < 2; ++v) mono *= K.var(v).pow(term.alpha[v]);
      sum += term.coeff.frobenius(1) * mono;
    }
    CHECK(sum == a);
  }
}

TEST_CASE("tower flattening commutes") {
  std::mt19937 rng(5);
  const FiniteField& f = FiniteField::prime(3);
  RationalField K(f, {"s", "t"});
  RationalField K01 = K.adjoin_root_of_var(0).adjoin_root_of_var(1);
  RationalField K10 = K.adjoin_root_of_var(1).adjoin_root_of_var(0);
  CHECK(K01.same_as(K10));
  for (int it = 0; it < 10; ++it) {
    RatFunc a = random_ratfunc(K, rng, 2);
    RatFunc x = K.adjoin_root_of_var(0).embed_into_root_ext(K.embed_into_root_ext(a, 0), 1);
    RatFunc y = K.adjoin_root_of_var(1).embed_into_root_ext(K.embed_into_root_ext(a, 1), 0);
    CHECK(x == y);
    auto parts = split_over_base(K.embed_into_root_ext(a, 0) * K.var(0), 0, 3);
    CHECK(parts[1] == a);
  }
}

TEST_CASE("simple inseparable extensions") {
  const FiniteField& f3 = FiniteField::prime(3);
  RationalField K(f3, {"t"});
  const RatFunc t = K.var(0);
  SimpleInseparableExt E = adjoin_pth_root(K, t);
  auto xi3 = E.mul(E.mul(E.xi(), E.xi()), E.xi());
  CHECK(xi3[0] == t);
  CHECK(xi3[1].is_zero());
  CHECK(E.basis_variable() == 0);
  SimpleInseparableExt E2 = adjoin_pth_root(K, t * t);
  CHECK_FALSE(E2.basis_variable());
  CHECK_THROWS_AS(adjoin_pth_root(K, t.pow(3)), InputError);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    SimpleInseparableExt::Elem a(3);
    for (auto& c : a) c = random_ratfunc(K, rng, 2);
    if (E2.is_zero(a)) continue;
    auto prod = E2.mul(a, E2.inverse(a));
    CHECK(prod == E2.one());
    CHECK(E.from_flat(E.to_flat(a)) == a);
    const RatFunc fa = E.to_flat(a);
    SimpleInseparableExt::Elem b(3);
    for (auto& c : b) c = random_ratfunc(K, rng, 2);
    CHECK(E.to_flat(E.mul(a, b)) == fa * E.to_flat(b));
  }
}
