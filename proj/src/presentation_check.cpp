#include <cmath>

#include "insep/local_ring.hpp"

namespace insep {

namespace {

// Presentation of the first `count` generators with S^0 tails only.
Presentation residue_prefix(const Presentation& pres, int count) {
  Presentation q{pres.K, {}, {}, {}, kExact, pres.uniformizer};
  for (int i = 0; i < count; ++i) {
    q.gens.push_back(pres.gens[i]);
    q.degrees.push_back(pres.degrees[i]);
    STPoly t0;
    for (const auto& [key, c] : pres.tails[i]) {
      if (key[0] != 0) continue;
      std::vector<int> k2(key.begin(), key.begin() + 1 + count);
      t0[k2] = c;
    }
    q.tails.push_back(std::move(t0));
  }
  return q;
}

bool is_p_power(int d, std::uint32_t p) {
  while (d > 1 && d % static_cast<int>(p) == 0) d /= static_cast<int>(p);
  return d == 1;
}

// Search for a root of X^d - sum tail_k X^k over K = F_q(t) among
// polynomials in t, after clearing denominators. Returns true if a root was
// found, false if none exists, and throws when the search is too large.
bool has_root_univariate(const RationalField& K, int d, const std::vector<RatFunc>& tail) {
  const FiniteField& f = K.fq();
  // Q(Y) = D^d P(Y/D), monic with polynomial coefficients.
  MPoly den(f, 1);
  for (const auto& c : tail) den = den * *c.den().exact_div(gcd(den, c.den()));
  std::vector<MPoly> q(d + 1, MPoly(f));
  q[d] = MPoly(f, 1);
  int bound = 0;
  for (int k = 0; k < d; ++k) {
    const RatFunc coeff = -tail[k] * RatFunc(den.pow(d - k));
    if (!coeff.is_polynomial()) throw std::logic_error("denominator clearing failed");
    q[k] = coeff.num();
    if (!q[k].is_zero()) {
      bound = std::max(bound, static_cast<int>(q[k].degree_in(0)) / (d - k));
    }
  }
  double count = std::pow(static_cast<double>(f.order()), bound + 1);
  if (count > 200000) {
    throw InputError("unsupported: irreducibility of the residue relation cannot be decided at this size");
  }
  std::vector<Fq> digits(bound + 1, 0);
  for (;;) {
    std::vector<Term> terms;
    for (int i = 0; i <= bound; ++i) {
      if (digits[i] != 0) terms.push_back({mono::var(0, i), digits[i]});
    }
    const MPoly y(f, terms);
    MPoly val(f);
    for (int k = d; k >= 0; --k) val = val * y + q[k];
    if (val.is_zero()) return true;
    int i = 0;
    while (i <= bound && ++digits[i] == f.order()) digits[i++] = 0;
    if (i > bound) break;
  }
  return false;
}

}  // namespace

std::string check_presentation(const Presentation& pres) {
  const int m = pres.m();
  if (static_cast<int>(pres.degrees.size()) != m || static_cast<int>(pres.tails.size()) != m) {
    throw InputError("malformed presentation");
  }
  for (int i = 0; i < m; ++i) {
    if (pres.degrees[i] < 1) throw InputError("not monic: degree of " + pres.gens[i] + " is zero");
    for (const auto& [key, c] : pres.tails[i]) {
      if (key[0] != 0) continue;
      for (int j = i; j < m; ++j) {
        if (key[j + 1] != 0) {
          throw InputError("not triangular: relation for " + pres.gens[i] + " involves " +
                           pres.gens[j] + " modulo " + pres.uniformizer);
        }
      }
    }
  }
  const std::uint32_t p = pres.p();
  for (int i = 0; i < m; ++i) {
    const int d = pres.degrees[i];
    if (d == 1) continue;
    const Presentation prefix = residue_prefix(pres, i);
    const ResidueField L(prefix);
    const Ring& ring = L.ring();
    // S^0 tail as an element of the previous field.
    STPoly t0;
    for (const auto& [key, c] : pres.tails[i]) {
      if (key[0] == 0) t0[std::vector<int>(key.begin(), key.begin() + 1 + i)] = c;
    }
    const KVector a = ring.residue(ring.from_poly(t0));
    if (is_p_power(d, p)) {
      if (L.pth_root(a, 1)) {
        throw InputError("not a field at " + pres.uniformizer + "=0: the residue relation for " +
                         pres.gens[i] + " has a p-th root");
      }
      continue;
    }
    // Not a binomial of p-power degree: only the univariate case over F_q(t)
    // is decided, by a bounded root search.
    if (i != 0 || pres.K.nvars() != 1) {
      throw InputError("unsupported: separable residue relation for " + pres.gens[i]);
    }
    std::vector<RatFunc> tail(d, pres.K.zero());
    for (const auto& [key, c] : pres.tails[i]) {
      if (key[0] == 0) tail[key[1]] = tail[key[1]] + c;
    }
    if (has_root_univariate(pres.K, d, tail)) {
      throw InputError("not a field at " + pres.uniformizer + "=0: the relation for " +
                       pres.gens[i] + " has a root");
    }
    if (d > 3) throw InputError("unsupported: separable residue relation of degree > 3");
  }
  return "ok: rank " + std::to_string(pres.rank()) + ", [L:K] = " + std::to_string(pres.rank());
}

}  // namespace insep
