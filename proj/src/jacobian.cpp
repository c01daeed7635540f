#include "insep/jacobian.hpp"

#include <algorithm>

namespace insep {

STPoly stpoly_derivative(const STPoly& f, int index) {
  STPoly out;
  for (const auto& [key, c] : f) {
    const int e = key[index];
    if (e == 0) continue;
    const RatFunc d = c.scaled(c.field().from_int(e));
    if (d.is_zero()) continue;
    std::vector<int> k = key;
    k[index] -= 1;
    out[k] = d;
  }
  return out;
}

RMatrix omega_matrix(const Ring& R) {
  const Presentation& pres = R.pres();
  const int m = pres.m();
  RMatrix J(m);
  for (int i = 0; i < m; ++i) {
    const STPoly& F = pres.tails[i];
    J[i].push_back(R.neg(R.from_poly(stpoly_derivative(F, 0))));
    for (int j = 0; j < m; ++j) {
      Elem entry = R.neg(R.from_poly(stpoly_derivative(F, j + 1)));
      if (j == i) {
        std::vector<int> e(m, 0);
        e[i] = pres.degrees[i] - 1;
        entry = R.add(entry, R.scale(R.monomial(e), pres.K.constant(pres.degrees[i])));
      }
      J[i].push_back(std::move(entry));
    }
  }
  return J;
}

std::vector<std::string> matrix_strings(const Ring& R, const RMatrix& J) {
  std::vector<std::string> out;
  for (const auto& row : J) {
    std::string s = "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += ", ";
      s += R.to_string(row[j]);
    }
    out.push_back(s + "]");
  }
  return out;
}

namespace {

// Entry a may be used in elimination against a pivot of valuation v only if
// its own valuation is visibly >= v.
void require_dominated(const Ring& R, const Elem& a, int v) {
  if (!R.valuation(a) && R.precision(a) < v) throw PrecisionExhausted("pivot choice not determined");
}

Elem det(const Ring& R, const RMatrix& M, std::vector<int> cols, int row = 0) {
  if (cols.empty()) return R.one();
  Elem acc = R.zero();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> rest = cols;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    Elem term = R.mul(M[row][cols[k]], det(R, M, rest, row + 1));
    acc = k % 2 == 0 ? R.add(acc, term) : R.sub(acc, term);
  }
  return acc;
}

std::vector<Elem> maximal_minors(const Ring& R, const RMatrix& M) {
  const int rows = static_cast<int>(M.size());
  const int cols = static_cast<int>(M[0].size());
  std::vector<Elem> out;
  for (int skip = 0; skip < cols; ++skip) {
    std::vector<int> c;
    for (int j = 0; j < cols; ++j) {
      if (j != skip) c.push_back(j);
    }
    c.resize(rows);
    out.push_back(det(R, M, c));
  }
  return out;
}

void require_purely_inseparable(const Presentation& pres) {
  for (int i = 0; i < pres.m(); ++i) {
    int d = pres.degrees[i];
    while (d % static_cast<int>(pres.p()) == 0) d /= static_cast<int>(pres.p());
    if (d != 1) {
      throw InputError("residue field has a separable part over K (" + pres.gens[i] + " has degree " +
                       std::to_string(pres.degrees[i]) + "); only purely inseparable residue fields are supported");
    }
  }
}

// Largest total T-degree among the basis monomials carrying a nonzero coordinate.
int t_degree(const Ring& R, const Elem& a) {
  int deg = 0;
  for (int b = 0; b < R.D(); ++b) {
    if (!a.c[b].valuation()) continue;
    int d = 0;
    for (int e : R.basis()[b]) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

int min_valuation(const Ring& R, const std::vector<Elem>& xs) {
  int best = kExact;
  int unknown_floor = kExact;
  for (const auto& x : xs) {
    if (auto v = R.valuation(x)) {
      best = std::min(best, *v);
    } else {
      unknown_floor = std::min(unknown_floor, R.precision(x));
    }
  }
  if (best == kExact || unknown_floor <= best) throw PrecisionExhausted("minor valuations not determined");
  return best;
}

}  // namespace

SmithResult smith_over_dvr(const Ring& R, RMatrix A, int rank, bool track_kernel) {
  const std::size_t n = A.size();
  const std::size_t k = n ? A[0].size() : 0;
  RMatrix U;
  if (track_kernel) {
    U.assign(n, std::vector<Elem>(n, R.zero()));
    for (std::size_t i = 0; i < n; ++i) U[i][i] = R.one();
  }
  std::vector<bool> row_done(n, false), col_done(k, false);
  SmithResult out;
  for (;;) {
    int bi = -1, bj = -1, bv = kExact, bdeg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (col_done[j]) continue;
        const auto v = R.valuation(A[i][j]);
        if (!v || *v > bv) continue;
        const int deg = t_degree(R, A[i][j]);
        if (*v < bv || deg < bdeg) {
          bi = static_cast<int>(i);
          bj = static_cast<int>(j);
          bv = *v;
          bdeg = deg;
        }
      }
    }
    if (bi < 0) break;
    if (static_cast<int>(out.exponents.size()) == rank) {
      throw CheckFailure("rank deficiency beyond expectation: more than " + std::to_string(rank) + " pivots");
    }
    const Elem unit = R.unit_inverse(R.div_s(A[bi][bj], bv));
    for (std::size_t i = 0; i < n; ++i) {
      if (row_done[i] || static_cast<int>(i) == bi) continue;
      const Elem& a = A[i][bj];
      if (!R.valuation(a)) {
        require_dominated(R, a, bv);
        continue;
      }
      const Elem f = R.mul(R.div_s(a, bv), unit);
      for (std::size_t j = 0; j < k; ++j) A[i][j] = R.sub(A[i][j], R.mul(f, A[bi][j]));
      if (track_kernel) {
        for (std::size_t j = 0; j < n; ++j) U[i][j] = R.sub(U[i][j], R.mul(f, U[bi][j]));
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (col_done[j] || static_cast<int>(j) == bj) continue;
      require_dominated(R, A[bi][j], bv);
    }
    row_done[bi] = true;
    col_done[bj] = true;
    out.exponents.push_back(bv);
  }
  if (static_cast<int>(out.exponents.size()) < rank) throw PrecisionExhausted("elementary divisors not visible");
  std::sort(out.exponents.begin(), out.exponents.end());
  if (track_kernel) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!row_done[i]) out.left.push_back(U[i]);
    }
  }
  return out;
}

long long fitting_colength(const Ring& R, const RMatrix& J) {
  const int D = R.D();
  std::vector<std::vector<Series>> rows;
  for (const auto& minor : maximal_minors(R, J)) {
    for (int b = 0; b < D; ++b) rows.push_back(R.mul(minor, R.monomial(R.basis()[b])).c);
  }
  const std::size_t n = rows.size();
  std::vector<bool> row_done(n, false), col_done(D, false);
  long long total = 0;
  for (int step = 0; step < D; ++step) {
    int bi = -1, bj = -1, bv = kExact;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_done[i]) continue;
      for (int j = 0; j < D; ++j) {
        if (col_done[j]) continue;
        if (auto v = rows[i][j].valuation(); v && *v < bv) {
          bi = static_cast<int>(i);
          bj = j;
          bv = *v;
        }
      }
    }
    if (bi < 0) throw PrecisionExhausted("Fitting ideal colength not visible");
    const Series unit = rows[bi][bj].divided_by_s(bv).unit_inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (row_done[i] || static_cast<int>(i) == bi) continue;
      const Series& a = rows[i][bj];
      if (!a.valuation()) {
        if (a.precision() < bv) throw PrecisionExhausted("pivot choice not determined");
        continue;
      }
      const Series f = a.divided_by_s(bv).mul(unit, R.N());
      for (int j = 0; j < D; ++j) rows[i][j] = rows[i][j] - f.mul(rows[bi][j], R.N());
    }
    row_done[bi] = true;
    col_done[bj] = true;
    total += bv;
  }
  return total;
}

JacobianReport jac_number(const PresentationSource& src, int n0, int cap) {
  require_purely_inseparable(src(n0));
  JacobianReport rep;
  std::function<std::pair<std::vector<int>, long long>(int)> f = [&](int N) {
    const Presentation pres = src(N + 1);
    const Ring R(pres, N);
    const RMatrix J = omega_matrix(R);
    const SmithResult sm = smith_over_dvr(R, J, pres.m());
    const long long fit = fitting_colength(R, J);
    rep.matrix = matrix_strings(R, J);
    rep.residue_degree = R.D();
    return std::make_pair(sm.exponents, fit);
  };
  std::optional<Stable<std::pair<std::vector<int>, long long>>> found;
  try {
    found = stable_compute(f, n0, cap);
  } catch (const PrecisionExhausted& e) {
    throw PrecisionExhausted(std::string(e.what()) + "; the Jacobian matrix shows fewer than " +
                             std::to_string(src(n0).m()) +
                             " elementary divisors, so the module of differentials may have rank above 1 "
                             "(input not geometrically reduced?)");
  }
  const auto& st = *found;
  rep.exponents = st.value.first;
  rep.precision = st.precision;
  long long sum = 0;
  for (int e : rep.exponents) sum += e;
  rep.jac_smith = sum * rep.residue_degree;
  rep.torsion_dim = rep.jac_smith;
  rep.jac_fitting = st.value.second;
  if (rep.jac_smith != rep.jac_fitting) {
    throw CheckFailure("route disagreement: Smith " + std::to_string(rep.jac_smith) + ", Fitting " +
                       std::to_string(rep.jac_fitting));
  }
  return rep;
}

KernelStep kernel_step(const PresentationSource& src, int var, int n0, int cap) {
  require_purely_inseparable(src(n0));
  KernelStep out;
  out.var = var;
  std::function<std::vector<long long>(int)> f = [&](int N) {
    const Presentation pres = src(N + 1);
    const Ring R(pres, N);
    const Representation rep = represent_normalization(pres, var, N);
    const int np = std::min(rep.pres.tail_precision, rep.image_precision) - 1;
    if (np < 2) throw PrecisionExhausted("normalized presentation too coarse");
    const Ring R1(rep.pres, np);
    const int m = pres.m();
    const int m1 = rep.pres.m();
    RMatrix A;
    for (const auto& img : rep.image_polys) {
      std::vector<Elem> row;
      for (int l = 0; l <= m1; ++l) row.push_back(R1.from_poly(stpoly_derivative(img, l)));
      A.push_back(std::move(row));
    }
    for (auto& row : omega_matrix(R1)) {
      for (auto& x : row) x = R1.neg(x);
      A.push_back(std::move(row));
    }
    const SmithResult sm = smith_over_dvr(R1, A, m1 + 1, true);
    RMatrix Ka;
    for (const auto& y : sm.left) Ka.push_back(std::vector<Elem>(y.begin(), y.begin() + m + 1));
    if (static_cast<int>(Ka.size()) != m) throw CheckFailure("kernel of the differential map has wrong rank");
    const int vJ = min_valuation(R, maximal_minors(R, omega_matrix(R)));
    const int vK = min_valuation(R1, maximal_minors(R1, Ka));
    const long long length = static_cast<long long>(rep.e) * vJ - vK;
    const long long D = pres.rank();
    const long long p = pres.p();
    long long closed = 0;
    if (rep.q > 0) closed = D * (rep.q % p == 0 ? rep.q : rep.q - 1);
    return std::vector<long long>{rep.q, rep.e, length, rep.pres.rank(), closed};
  };
  const auto st = stable_compute(f, n0, cap);
  out.q = static_cast<int>(st.value[0]);
  out.e = static_cast<int>(st.value[1]);
  out.length = st.value[2];
  out.residue_degree = static_cast<int>(st.value[3]);
  out.dim = out.length * out.residue_degree;
  out.closed_form = st.value[4];
  return out;
}

KernelChain kernel_dims_along_chain(const PresentationSource& src, std::vector<int> order) {
  if (order.empty()) {
    for (int v = 0; v < src(16).K.nvars(); ++v) order.push_back(v);
  }
  KernelChain out;
  PresentationSource cur = src;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.steps.push_back(kernel_step(cur, order[i]));
    out.total += out.steps.back().dim;
    if (i + 1 < order.size()) cur = normalized_source(cur, order[i]);
  }
  return out;
}

}  // namespace insep
