#include <algorithm>

#include "insep/local_ring.hpp"

namespace insep {

ResidueField::ResidueField(const Presentation& pres)
    : pres_([&] {
        // Only the S^0 parts of the tails matter modulo S.
        Presentation q = pres;
        for (auto& tail : q.tails) {
          STPoly t0;
          for (const auto& [key, c] : tail) {
            if (key[0] == 0) t0[key] = c;
          }
          tail = std::move(t0);
        }
        q.tail_precision = kExact;
        return q;
      }()),
      ring_(pres_, 1) {}

Elem ResidueField::to_elem(const KVector& a) const { return ring_.lift(a); }

KVector ResidueField::zero() const { return KVector(degree(), K().zero()); }

KVector ResidueField::one() const { return from_k(K().one()); }

KVector ResidueField::from_k(const RatFunc& a) const {
  KVector v = zero();
  v[0] = a;
  return v;
}

KVector ResidueField::gen(int i) const { return ring_.residue(ring_.gen(i)); }

KVector ResidueField::add(const KVector& a, const KVector& b) const {
  KVector r(a.size(), K().zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

KVector ResidueField::sub(const KVector& a, const KVector& b) const {
  KVector r(a.size(), K().zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

KVector ResidueField::mul(const KVector& a, const KVector& b) const {
  return ring_.residue(ring_.mul(to_elem(a), to_elem(b)));
}

KVector ResidueField::pow(const KVector& a, std::uint64_t k) const {
  return ring_.residue(ring_.pow(to_elem(a), k));
}

KVector ResidueField::scale(const KVector& a, const RatFunc& c) const {
  KVector r(a.size(), K().zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

KVector ResidueField::frobenius(const KVector& a, int j) const {
  return ring_.residue(ring_.frobenius(to_elem(a), j));
}

bool ResidueField::is_zero(const KVector& a) const {
  return std::all_of(a.begin(), a.end(), [](const RatFunc& x) { return x.is_zero(); });
}

std::optional<KVector> ResidueField::inverse(const KVector& a) const {
  const int d = degree();
  KMatrix mat = zero_matrix(K().fq(), d, d);
  for (int b = 0; b < d; ++b) {
    const KVector col = mul(a, ring_.basis_vector(b));
    for (int k = 0; k < d; ++k) mat[k][b] = col[k];
  }
  return insep::solve(mat, one(), d);
}

std::optional<KVector> ResidueField::pth_root(const KVector& c, int j) const {
  const int d = degree();
  const int nv = K().nvars();
  const std::uint32_t p = K().characteristic();
  std::uint32_t pj = 1;
  for (int i = 0; i < j; ++i) pj *= p;
  std::array<std::uint32_t, kMaxVars> moduli{1, 1, 1};
  for (int v = 0; v < nv; ++v) moduli[v] = pj;
  const std::size_t parts = decomp_size(moduli);
  // Columns: tau_beta = (T^beta)^{p^j}; unknowns w_beta with w_beta^{p^j} the
  // K^{p^j}-coefficient of tau_beta.
  std::vector<KVector> tau(d);
  for (int b = 0; b < d; ++b) tau[b] = frobenius(ring_.basis_vector(b), j);
  const std::size_t rows = static_cast<std::size_t>(d) * parts;
  KMatrix mat = zero_matrix(K().fq(), rows, d);
  KVector rhs(rows, K().zero());
  for (int g = 0; g < d; ++g) {
    for (int b = 0; b < d; ++b) {
      if (tau[b][g].is_zero()) continue;
      for (auto& term : decompose_over_subfield(tau[b][g], moduli, j)) {
        mat[g * parts + decomp_index(term.alpha, moduli)][b] = term.coeff;
      }
    }
    if (c[g].is_zero()) continue;
    for (auto& term : decompose_over_subfield(c[g], moduli, j)) {
      rhs[g * parts + decomp_index(term.alpha, moduli)] = term.coeff;
    }
  }
  auto w = insep::solve(mat, rhs, d);
  if (!w) return std::nullopt;
  if (frobenius(*w, j) != c) throw std::logic_error("pth_root: verification failed");
  return w;
}

std::string ResidueField::to_string(const KVector& a) const {
  return ring_.to_string(to_elem(a));
}

std::optional<KVector> residue_is_pth_power(const ResidueField& L, const KVector& c, int j) {
  return L.pth_root(c, j);
}

}  // namespace insep
