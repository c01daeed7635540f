#include "insep/normalize.hpp"

#include <map>

namespace insep {

namespace {

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

// Frobenius images S^{pj} tau_b, decomposed over K^p(t_var) and carried to K'.
class FrobeniusSystem {
 public:
  FrobeniusSystem(const Ring& R, int var) : R_(R), p_(static_cast<int>(R.p())) {
    moduli_ = {1, 1, 1};
    for (int v = 0; v < R.K().nvars(); ++v) moduli_[v] = v == var ? 1 : static_cast<std::uint32_t>(p_);
    parts_ = decomp_size(moduli_);
    const int D = R.D();
    coeffs_.resize(D);
    for (int b = 0; b < D; ++b) {
      std::vector<int> e = R.basis()[b];
      for (auto& x : e) x *= p_;
      const Elem tau = R.monomial(e);
      for (int g = 0; g < D; ++g) {
        for (const auto& [l, c] : tau.c[g].terms()) {
          for (auto& term : decompose_over_subfield(c, moduli_, 1)) {
            coeffs_[b][{g, l}].push_back({decomp_index(term.alpha, moduli_), term.coeff});
          }
        }
      }
    }
  }

  // Rows: coefficient of S^l (l < lrows) in coordinate g, part alpha, of
  // sum_{b, j < kcols} c_{bj}^p S^{pj} tau_b. Columns: (j, b).
  KMatrix build(int kcols, int lrows) const {
    const int D = R_.D();
    std::map<std::size_t, KVector> rows;
    const std::size_t cols = static_cast<std::size_t>(kcols) * D;
    for (int b = 0; b < D; ++b) {
      for (const auto& [key, parts] : coeffs_[b]) {
        const auto [g, l] = key;
        for (int j = 0; j < kcols; ++j) {
          const int ll = l + p_ * j;
          if (ll >= lrows) break;
          for (const auto& [alpha, c] : parts) {
            const std::size_t r = (static_cast<std::size_t>(ll) * D + g) * parts_ + alpha;
            auto it = rows.find(r);
            if (it == rows.end()) it = rows.emplace(r, KVector(cols, R_.K().zero())).first;
            it->second[static_cast<std::size_t>(j) * D + b] = c;
          }
        }
      }
    }
    KMatrix out;
    out.reserve(rows.size());
    for (auto& [r, v] : rows) out.push_back(std::move(v));
    return out;
  }

 private:
  const Ring& R_;
  int p_;
  std::array<std::uint32_t, kMaxVars> moduli_{};
  std::size_t parts_ = 1;
  std::vector<std::map<std::pair<int, int>, std::vector<std::pair<std::size_t, RatFunc>>>> coeffs_;
};

std::vector<KVector> kernel(const KMatrix& a, std::size_t cols) {
  if (a.empty()) {
    std::vector<KVector> basis;
    return basis;
  }
  return nullspace(a, cols);
}

}  // namespace

NormalizationLattice normalization_lattice(const PresentationSource& src, int var, const InvariantReport& inv,
                                           int max_generators) {
  NormalizationLattice out;
  const int e = inv.e;
  const long long cond = inv.conductor_exponent;
  const int K = ceil_div(cond, e);
  out.k_max = K;
  const Presentation probe = src(16);
  const int p = static_cast<int>(probe.p());
  const int D = probe.rank();
  const long long c_hi = cond + e;
  const int N = p * (K + 2) + ceil_div(p * c_hi, e) + p + 1;
  const Presentation pres = src(N);
  const Ring R(pres, N);
  const FrobeniusSystem sys(R, var);
  const std::size_t full = static_cast<std::size_t>(D);

  for (int k = 0; k <= K + 1; ++k) {
    const std::size_t cols = full * k;
    const KMatrix a = sys.build(k, p * k);
    const long long r = a.empty() ? 0 : static_cast<long long>(rank(a));
    out.dims.push_back(static_cast<long long>(cols) - r);
  }
  out.g10 = out.dims[K + 1];
  out.stable = out.dims[K] == out.dims[K + 1];

  const RationalField Kp = pres.K.adjoin_root_of_var(var);
  const auto gens_basis = kernel(sys.build(K, p * K), full * K);
  for (const auto& v : gens_basis) {
    if (static_cast<int>(out.generators.size()) >= max_generators) break;
    STPoly w;
    for (int j = 0; j < K; ++j) {
      for (int b = 0; b < D; ++b) {
        const RatFunc& c = v[static_cast<std::size_t>(j) * D + b];
        if (c.is_zero()) continue;
        std::vector<int> key{j};
        key.insert(key.end(), R.basis()[b].begin(), R.basis()[b].end());
        w[key] = c;
      }
    }
    out.generators.push_back("(" + stpoly_to_string(w, Kp, pres.uniformizer, pres.gens) + ")/" +
                             pres.uniformizer + "^" + std::to_string(K));
  }

  // Smallest c with {z in R(1) : v_1(z) >= c} contained in R (x) K'.
  for (long long c = 0; c <= c_hi; ++c) {
    const int extra = ceil_div(p * c, e);
    const int M = K + ceil_div(extra, p);
    const auto ker = kernel(sys.build(M, p * K + extra), full * M);
    bool inside = true;
    for (const auto& v : ker) {
      for (std::size_t i = 0; i < full * K && inside; ++i) {
        if (!v[i].is_zero()) inside = false;
      }
      if (!inside) break;
    }
    if (inside) {
      out.conductor_exponent = c;
      return out;
    }
  }
  throw CheckFailure("normalization lattice: conductor bound exceeded");
}

DeltaOracle delta_oracle(const PresentationSource& src, int var, const InvariantReport& inv) {
  DeltaOracle out;
  out.formula = inv.delta;
  out.combinatorial = inv.delta_combinatorial;
  const NormalizationLattice lat = normalization_lattice(src, var, inv, 0);
  if (inv.q == 0) {
    out.lattice = lat.g10;
  } else {
    out.lattice = inv.degree_over_kx == 0 ? -1 : lat.g10 / inv.degree_over_kx;
    if (lat.g10 % inv.degree_over_kx != 0) out.lattice = -1;
  }
  out.lattice_conductor = lat.conductor_exponent;
  out.conductor_identity = lat.conductor_exponent * inv.f == 2 * out.lattice;
  if (!lat.stable || out.lattice != out.formula || out.combinatorial != out.formula) {
    throw CheckFailure("oracle mismatch: formula " + std::to_string(out.formula) + ", combinatorial " +
                       std::to_string(out.combinatorial) + ", lattice " + std::to_string(out.lattice));
  }
  return out;
}

}  // namespace insep
