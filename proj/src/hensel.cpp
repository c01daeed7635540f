#include "insep/local_ring.hpp"

namespace insep {

namespace {

// Dense univariate polynomials over K, index = degree.
using UPoly = std::vector<RatFunc>;

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b, const FiniteField& f) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, RatFunc(f));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

UPoly upoly_sub(UPoly a, const UPoly& b, const FiniteField& f) {
  if (a.size() < b.size()) a.resize(b.size(), RatFunc(f));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> upoly_divmod(UPoly a, const UPoly& b, const FiniteField& f) {
  trim(a);
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  UPoly q(a.size() - b.size() + 1, RatFunc(f));
  const RatFunc lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const RatFunc c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

// Returns (g, s) with s*a = g mod b, g = gcd(a, b) monic.
std::pair<UPoly, UPoly> upoly_ext_gcd(const UPoly& a, const UPoly& b, const FiniteField& f) {
  UPoly r0 = a, r1 = b;
  UPoly s0{RatFunc(f, 1)}, s1{};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = upoly_divmod(r0, r1, f);
    UPoly s2 = upoly_sub(s0, upoly_mul(q, s1, f), f);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.empty()) return {r0, s0};
  const RatFunc inv = r0.back().inverse();
  for (auto& c : r0) c = c * inv;
  for (auto& c : s0) c = c * inv;
  return {r0, s0};
}

}  // namespace

HenselFactors hensel_factor(const RationalField& K, const STPoly& f_in, const STPoly& point_factor,
                            int N) {
  const FiniteField& fq = K.fq();
  int degf = 0;
  for (const auto& [key, c] : f_in) degf = std::max(degf, key.at(1));
  std::vector<Series> f(degf + 1, Series(fq, kExact));
  for (const auto& [key, c] : f_in) f[key[1]].add_term(key[0], c);
  // Normalize the leading coefficient (a unit of K[[S]]).
  const Series lead = f[degf];
  if (!lead.valuation() || *lead.valuation() != 0) {
    throw InputError("cannot normalize leading coefficient: it vanishes at S=0");
  }
  if (!(lead.terms().size() == 1 && lead.terms()[0].second.is_one())) {
    Series inv = Series(lead).truncated(N).unit_inverse();
    for (auto& c : f) c = c.mul(inv, N);
  }
  UPoly f0(degf + 1, K.zero());
  for (int k = 0; k <= degf; ++k) f0[k] = f[k].coeff(0);
  UPoly b0;
  for (const auto& [key, c] : point_factor) {
    if (key.at(0) != 0) throw InputError("point factor must not involve S");
    if (static_cast<int>(b0.size()) <= key[1]) b0.resize(key[1] + 1, K.zero());
    b0[key[1]] += c;
  }
  trim(b0);
  if (b0.size() < 2) throw InputError("point factor must have positive degree");
  const RatFunc binv = b0.back().inverse();
  for (auto& c : b0) c = c * binv;
  auto [a0, rem] = upoly_divmod(f0, b0, fq);
  if (!rem.empty()) throw InputError("point factor does not divide the hypersurface modulo S");
  auto [g, s] = upoly_ext_gcd(a0, b0, fq);
  if (g.size() != 1) throw InputError("factors not coprime mod S");

  const std::size_t da = a0.size() - 1;
  const std::size_t db = b0.size() - 1;
  std::vector<UPoly> A{a0}, B{b0};
  for (int k = 1; k < N; ++k) {
    UPoly e;
    for (std::size_t y = 0; y <= static_cast<std::size_t>(degf); ++y) {
      if (e.size() <= y) e.resize(y + 1, K.zero());
      e[y] = f[y].coeff(k);
    }
    for (int j = 0; j <= k; ++j) {
      if (j >= static_cast<int>(A.size()) || k - j >= static_cast<int>(B.size())) continue;
      e = upoly_sub(e, upoly_mul(A[j], B[k - j], fq), fq);
    }
    trim(e);
    UPoly bk = upoly_divmod(upoly_mul(e, s, fq), b0, fq).second;
    auto [ak, r2] = upoly_divmod(upoly_sub(e, upoly_mul(bk, a0, fq), fq), b0, fq);
    if (!r2.empty()) throw std::logic_error("Hensel step: inexact division");
    A.push_back(ak);
    B.push_back(bk);
  }
  HenselFactors out;
  out.A.assign(da + 1, Series(fq, N));
  out.B.assign(db + 1, Series(fq, N));
  for (int k = 0; k < N; ++k) {
    for (std::size_t y = 0; y < A[k].size(); ++y) out.A[y].add_term(k, A[k][y]);
    for (std::size_t y = 0; y < B[k].size(); ++y) out.B[y].add_term(k, B[k][y]);
  }
  if (da == 0) {
    // A = 1 after normalization: B is f itself, exactly.
    out.B = f;
    for (auto& c : out.A) c = Series::constant(K.one(), kExact);
  }
  out.f = f;
  return out;
}

Presentation hensel_prepare(const RationalField& K, const STPoly& f, const STPoly& point_factor,
                            int N, const std::string& gen_name) {
  HenselFactors h = hensel_factor(K, f, point_factor, N);
  const int d = static_cast<int>(h.B.size()) - 1;
  Presentation pres{K, {gen_name}, {d}, {}, kExact, "S"};
  STPoly tail;
  int prec = kExact;
  for (int y = 0; y < d; ++y) {
    prec = std::min(prec, h.B[y].precision());
    for (const auto& [j, c] : h.B[y].terms()) tail[{j, y}] = -c;
  }
  prec = std::min(prec, h.B[d].precision());
  pres.tails.push_back(std::move(tail));
  pres.tail_precision = prec;
  check_presentation(pres);
  return pres;
}

}  // namespace insep
