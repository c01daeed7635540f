#include "insep/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace insep {

PresentationSource constant_source(const Presentation& pres) {
  return [pres](int) { return pres; };
}

Climb hill_climb(const Ring& R, const ResidueField& L, const Elem& F, Elem r, int n) {
  const int p = static_cast<int>(R.p());
  int pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  Climb out;
  for (int iter = 0; iter < 100000; ++iter) {
    const Elem d = R.sub(R.frobenius(r, n), F);
    const int v = R.valuation_or_throw(d);
    KVector c = R.slice(d, v);
    ClimbStep step{v, c, false};
    std::optional<KVector> root;
    if (v % pn == 0) root = L.pth_root(c, n);
    if (!root) {
      out.trace.push_back(std::move(step));
      out.r = std::move(r);
      out.q = v;
      out.lead = std::move(c);
      return out;
    }
    step.improved = true;
    out.trace.push_back(std::move(step));
    r = R.sub(r, R.shift(R.lift(*root), v / pn));
  }
  throw PrecisionExhausted("hill climbing did not terminate");
}

QWitness q_invariant(const Presentation& pres, const RatFunc& x, int N) {
  const Ring R(pres, N);
  const ResidueField L(pres);
  QWitness w;
  w.x = x;
  w.precision = N;
  auto rho = L.pth_root(L.from_k(x), 1);
  if (!rho) return w;
  w.root_in_residue_field = true;
  Climb c = hill_climb(R, L, R.constant(x), R.lift(*rho), 1);
  w.q = c.q;
  w.r = std::move(c.r);
  w.lead = std::move(c.lead);
  w.trace = std::move(c.trace);
  return w;
}

QWitness q_invariant(const PresentationSource& src, const RatFunc& x, int n0, int cap) {
  std::map<int, QWitness> runs;
  std::function<int(int)> f = [&](int N) {
    QWitness w = q_invariant(src(N), x, N);
    const int q = w.q;
    runs[N] = std::move(w);
    return q;
  };
  auto st = stable_compute(f, n0, cap);
  return runs.at(st.precision);
}

int brute_force_q(const Presentation& pres, const RatFunc& x, int degree_bound, int valuation_bound) {
  const Ring R(pres, valuation_bound + 1);
  const int D = R.D();
  const int p = static_cast<int>(R.p());
  const int nv = pres.K.nvars();
  std::array<std::uint32_t, kMaxVars> moduli{1, 1, 1};
  for (int v = 0; v < nv; ++v) moduli[v] = static_cast<std::uint32_t>(p);
  const std::size_t parts = decomp_size(moduli);
  const int kcount = degree_bound + 1;
  const std::size_t cols = static_cast<std::size_t>(D) * kcount;
  // tau_b = (T^b)^p
  std::vector<Elem> tau(D);
  for (int b = 0; b < D; ++b) {
    std::vector<int> e = R.basis()[b];
    for (auto& v : e) v *= p;
    tau[b] = R.monomial(e);
  }
  auto row_of = [&](int g, int j, std::size_t alpha) {
    return (static_cast<std::size_t>(j) * D + g) * parts + alpha;
  };
  const std::size_t all_rows = static_cast<std::size_t>(valuation_bound + 1) * D * parts;
  KMatrix full = zero_matrix(pres.K.fq(), all_rows, cols);
  for (int b = 0; b < D; ++b) {
    for (int g = 0; g < D; ++g) {
      for (const auto& [j, c] : tau[b].c[g].terms()) {
        const auto dec = decompose_over_subfield(c, moduli, 1);
        for (int k = 0; k < kcount; ++k) {
          const int jj = j + p * k;
          if (jj > valuation_bound) break;
          for (const auto& term : dec) {
            full[row_of(g, jj, decomp_index(term.alpha, moduli))][b * kcount + k] = term.coeff;
          }
        }
      }
    }
  }
  KVector rhs_full(all_rows, pres.K.zero());
  for (const auto& term : decompose_over_subfield(x, moduli, 1)) {
    rhs_full[row_of(0, 0, decomp_index(term.alpha, moduli))] = term.coeff;
  }
  int best = 0;
  for (int V = 1; V <= valuation_bound; ++V) {
    const std::size_t rows = static_cast<std::size_t>(V) * D * parts;
    KMatrix a(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(rows));
    KVector rhs(rhs_full.begin(), rhs_full.begin() + static_cast<std::ptrdiff_t>(rows));
    if (!solve(a, rhs, cols)) return best;
    best = V;
  }
  throw CheckFailure("brute_force_q: valuation bound " + std::to_string(valuation_bound) + " exceeded");
}

std::vector<int> semigroup_gaps(int m, int n) {
  if (std::gcd(m, n) != 1) throw InputError("semigroup generators not coprime");
  const int frob = m * n - m - n;
  std::vector<int> gaps;
  if (frob < 0) return gaps;
  std::vector<bool> rep(frob + 1, false);
  rep[0] = true;
  for (int k = 1; k <= frob; ++k) {
    rep[k] = (k >= m && rep[k - m]) || (k >= n && rep[k - n]);
    if (!rep[k]) gaps.push_back(k);
  }
  return gaps;
}

InvariantReport invariants_from_q(std::uint32_t p_u, int q, int D) {
  const long long p = p_u;
  InvariantReport r;
  r.q = q;
  r.residue_degree = D;
  if (q == 0) {
    r.e = 1;
    r.f = static_cast<int>(p);
    r.combinatorial_agrees = true;
    return r;
  }
  r.degree_over_kx = D / static_cast<int>(p);
  if (q % p != 0) {
    r.e = static_cast<int>(p);
    r.f = 1;
    r.delta = (p - 1) * (q - 1) / 2;
    r.conductor_exponent = (p - 1) * (q - 1);
    r.delta_combinatorial = static_cast<long long>(semigroup_gaps(static_cast<int>(p), q).size());
  } else {
    r.e = 1;
    r.f = static_cast<int>(p);
    r.delta = (p - 1) * q / 2;
    r.conductor_exponent = (p - 1) * q / p;
    const long long qp = q / p;
    long long staircase = 0;
    for (long long i = 1; i <= p - 1; ++i) staircase += qp * i;
    r.delta_combinatorial = staircase;
  }
  r.combinatorial_agrees = r.delta_combinatorial == r.delta;
  r.genus_step = r.delta * r.degree_over_kx;
  return r;
}

InvariantReport delta_conductor(const PresentationSource& src, const RatFunc& x, int n0, int cap) {
  const QWitness w = q_invariant(src, x, n0, cap);
  const Presentation pres = src(w.precision);
  InvariantReport r = invariants_from_q(pres.p(), w.q, pres.rank());
  r.x = pres.K.to_string(x);
  r.trace = w.trace;
  r.precision = w.precision;
  return r;
}

bool is_x_normal(const PresentationSource& src, const RatFunc& x) {
  const QWitness w = q_invariant(src, x);
  return w.q == 0 || w.q == 1;
}

namespace {

using FqSeries = std::vector<Fq>;  // coefficients of T^0..T^{N-1}

FqSeries fq_mul(const FqSeries& a, const FqSeries& b, const FiniteField& M, int N) {
  FqSeries r(N, 0);
  int va = 0, vb = 0;
  while (va < N && a[va] == 0) ++va;
  while (vb < N && b[vb] == 0) ++vb;
  for (int i = va; i < N; ++i) {
    if (a[i] == 0) continue;
    for (int j = vb; i + j < N; ++j) {
      if (b[j] != 0) r[i + j] = M.add(r[i + j], M.mul(a[i], b[j]));
    }
  }
  return r;
}

}  // namespace

CoinResult coin_dim(int m, int n, const std::vector<Fq>& gamma, const std::vector<Fq>& delta,
                    const FiniteField& M, int N) {
  if (m < 1 || n < 1) throw InputError("coin_dim: exponents must be positive");
  if (std::gcd(m, n) != 1) throw InputError("not coprime");
  if (gamma.empty() || gamma[0] == 0 || delta.empty() || delta[0] == 0) {
    throw InputError("coin_dim: gamma and delta must be units");
  }
  CoinResult out;
  out.dimension = static_cast<long long>(m - 1) * (n - 1) / 2;
  out.conductor_exponent = static_cast<long long>(m - 1) * (n - 1);
  out.gap_count = static_cast<long long>(semigroup_gaps(m, n).size());
  if (N == 0) N = (m - 1) * (n - 1) + m + n + 1;
  FqSeries x(N, 0), y(N, 0);
  for (std::size_t k = 0; k < gamma.size() && m + static_cast<int>(k) < N; ++k) x[m + k] = gamma[k];
  for (std::size_t k = 0; k < delta.size() && n + static_cast<int>(k) < N; ++k) y[n + k] = delta[k];
  std::vector<FqSeries> xp{FqSeries(N, 0)}, yp{FqSeries(N, 0)};
  xp[0][0] = 1;
  yp[0][0] = 1;
  while (static_cast<int>(xp.size()) * m < N) xp.push_back(fq_mul(xp.back(), x, M, N));
  while (static_cast<int>(yp.size()) * n < N) yp.push_back(fq_mul(yp.back(), y, M, N));
  std::vector<std::optional<FqSeries>> pivot(N);
  for (std::size_t i = 0; i < xp.size(); ++i) {
    for (std::size_t j = 0; j < yp.size() && static_cast<int>(i) * m + static_cast<int>(j) * n < N; ++j) {
      FqSeries v = fq_mul(xp[i], yp[j], M, N);
      for (int lead = 0; lead < N; ++lead) {
        if (v[lead] == 0) continue;
        if (!pivot[lead]) {
          const Fq inv = M.inv(v[lead]);
          for (auto& c : v) c = M.mul(c, inv);
          pivot[lead] = std::move(v);
          break;
        }
        const Fq factor = v[lead];
        const FqSeries& pv = *pivot[lead];
        for (int k = lead; k < N; ++k) {
          if (pv[k] != 0) v[k] = M.sub(v[k], M.mul(factor, pv[k]));
        }
      }
    }
  }
  for (int k = 0; k < N; ++k) {
    if (!pivot[k]) out.reduction_gaps.push_back(k);
  }
  out.reduction_dimension = static_cast<long long>(out.reduction_gaps.size());
  out.reduction_conductor = out.reduction_gaps.empty() ? 0 : out.reduction_gaps.back() + 1;
  return out;
}

namespace {

Elem eval_poly(const Ring& R, const STPoly& f, const std::vector<Elem>& subs) {
  Elem acc = R.zero();
  for (const auto& [key, c] : f) {
    Elem term = R.shift(R.constant(c), key[0]);
    for (std::size_t j = 1; j < key.size(); ++j) {
      if (key[j] > 0) term = R.mul(term, R.pow(subs[j - 1], static_cast<std::uint64_t>(key[j])));
    }
    acc = R.add(acc, term);
  }
  return acc;
}

// z = sum_b kappa_b(S) g^b where g_j lifts the residue of T_j.
STPoly expand_in_lifts(const Ring& R, const std::vector<Elem>& g, Elem z, int* known) {
  const int D = R.D();
  std::vector<Elem> mono(D);
  for (int b = 0; b < D; ++b) {
    Elem e = R.one();
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (R.basis()[b][j] > 0) e = R.mul(e, R.pow(g[j], static_cast<std::uint64_t>(R.basis()[b][j])));
    }
    mono[b] = std::move(e);
  }
  STPoly out;
  const int prec = R.precision(z);
  *known = prec;
  for (int j = 0; j < prec; ++j) {
    const KVector c = R.residue(z);
    Elem sub = R.zero();
    for (int b = 0; b < D; ++b) {
      if (c[b].is_zero()) continue;
      std::vector<int> key{j};
      key.insert(key.end(), R.basis()[b].begin(), R.basis()[b].end());
      out[key] = c[b];
      sub = R.add(sub, R.scale(mono[b], c[b]));
    }
    z = R.sub(z, sub);
    if (j + 1 < prec) z = R.div_s(z, 1);
  }
  return out;
}

}  // namespace

NormalFormData extract_normal_form(const Presentation& pres, int N) {
  const Ring R(pres, N);
  const ResidueField L(pres);
  const int p = static_cast<int>(pres.p());
  NormalFormData out;
  out.precision = N;
  std::vector<Elem> rprime;
  for (int i = 0; i < pres.m(); ++i) {
    int d = pres.degrees[i];
    int n = 0;
    while (d > 1 && d % p == 0) {
      d /= p;
      ++n;
    }
    STPoly f;
    for (const auto& [key, c] : pres.tails[i]) {
      if (key[0] == 0) f[key] = c;
    }
    bool binomial = d == 1;
    for (const auto& [key, c] : f) {
      if (key[i + 1] != 0) binomial = false;
    }
    if (!binomial) throw InputError("residue field not purely inseparable over K");
    NormalFormEntry entry;
    entry.n = n;
    entry.f = f;
    const Elem F = eval_poly(R, f, rprime);
    std::vector<int> e(pres.m(), 0);
    e[i] = pres.degrees[i] / p;
    const Climb cq = hill_climb(R, L, F, R.monomial(e), 1);
    const Climb cqp = hill_climb(R, L, F, R.gen(i), n);
    entry.q = cq.q;
    entry.q_prime = cqp.q;
    const Elem rp = cqp.r;
    const Elem rp_pow = R.frobenius(rp, n - 1);
    if (cq.q == cqp.q) {
      entry.u = R.div_s(R.sub(R.frobenius(rp_pow), F), cqp.q);
      entry.w = R.zero();
    } else {
      entry.u = R.div_s(R.sub(R.frobenius(cq.r), F), cq.q);
      if (cqp.q % p != 0) throw std::logic_error("q' not divisible by p although q != q'");
      entry.w = R.div_s(R.sub(cq.r, rp_pow), cqp.q / p);
    }
    rprime.push_back(rp);
    out.entries.push_back(std::move(entry));
  }
  const auto names = pres.K.symbol_names();
  for (auto& entry : out.entries) {
    int known = 0;
    entry.f_string = stpoly_to_string(entry.f, pres.K, pres.uniformizer, pres.gens);
    STPoly u = expand_in_lifts(R, rprime, entry.u, &known);
    entry.u_string = stpoly_to_string(u, pres.K, pres.uniformizer, pres.gens) + " + O(" +
                     pres.uniformizer + "^" + std::to_string(known) + ")";
    STPoly w = expand_in_lifts(R, rprime, entry.w, &known);
    entry.w_string = w.empty() ? "0"
                               : stpoly_to_string(w, pres.K, pres.uniformizer, pres.gens) + " + O(" +
                                     pres.uniformizer + "^" + std::to_string(known) + ")";
  }
  return out;
}

NormalFormData extract_normal_form(const PresentationSource& src, int n0, int cap) {
  std::map<int, NormalFormData> runs;
  std::function<std::vector<int>(int)> f = [&](int N) {
    NormalFormData d = extract_normal_form(src(N), N);
    std::vector<int> key;
    for (const auto& e : d.entries) {
      key.push_back(e.q);
      key.push_back(e.q_prime);
    }
    runs[N] = std::move(d);
    return key;
  };
  auto st = stable_compute(f, n0, cap);
  return runs.at(st.precision);
}

}  // namespace insep
