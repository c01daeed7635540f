#include "insep/linalg.hpp"

#include <stdexcept>

namespace insep {

namespace {

std::size_t weight(const RatFunc& a) { return a.num().terms().size() + a.den().terms().size(); }

}  // namespace

KMatrix zero_matrix(const FiniteField& f, std::size_t rows, std::size_t cols) {
  return KMatrix(rows, KVector(cols, RatFunc(f)));
}

KMatrix transpose(const KMatrix& a, const FiniteField& f) {
  if (a.empty()) return {};
  KMatrix t = zero_matrix(f, a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

std::vector<std::size_t> rref(KMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Prefer the lightest nonzero entry to keep fractions small.
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      if (best == rows || weight(a[i][c]) < weight(a[best][c])) best = i;
      if (a[i][c].is_constant()) break;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    const RatFunc inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a[r][j].is_zero()) a[r][j] = a[r][j] * inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const RatFunc factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= factor * a[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(KMatrix a) { return rref(a).size(); }

std::vector<KVector> nullspace(KMatrix a, std::size_t cols) {
  std::vector<KVector> out;
  const FiniteField* f = nullptr;
  if (!a.empty() && !a[0].empty()) f = &a[0][0].field();
  const auto piv = rref(a);
  std::vector<int> pivot_row(cols, -1);
  for (std::size_t i = 0; i < piv.size(); ++i) pivot_row[piv[i]] = static_cast<int>(i);
  if (f == nullptr) throw std::invalid_argument("nullspace of an empty matrix needs a field");
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    KVector v(cols, RatFunc(*f));
    v[free] = RatFunc(*f, 1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<KVector> solve(const KMatrix& a, const KVector& b, std::size_t cols) {
  const FiniteField& f = b.empty() ? a.at(0).at(0).field() : b[0].field();
  KMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto piv = rref(aug);
  KVector x(cols, RatFunc(f));
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == cols) return std::nullopt;
    x[piv[i]] = aug[i][cols];
  }
  return x;
}

SquareSolver::SquareSolver(const KMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) {
    ok_ = true;
    return;
  }
  const FiniteField& f = a[0][0].field();
  KMatrix aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, RatFunc(f));
    aug[i][n + i] = RatFunc(f, 1);
  }
  const auto piv = rref(aug);
  ok_ = piv.size() == n && piv.back() == n - 1;
  if (!ok_) return;
  inv_ = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv_[i][j] = aug[i][n + j];
  }
}

KVector SquareSolver::solve(const KVector& b) const {
  if (!ok_) throw std::logic_error("SquareSolver: singular matrix");
  const std::size_t n = inv_.size();
  KVector x(n, b.empty() ? RatFunc() : RatFunc(b[0].field()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!b[j].is_zero() && !inv_[i][j].is_zero()) x[i] += inv_[i][j] * b[j];
    }
  }
  return x;
}

}  // namespace insep
