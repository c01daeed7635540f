#pragma once

#include <optional>
#include <vector>

#include "insep/rational_field.hpp"

namespace insep {

/// Dense matrix over K, row-major.
using KVector = std::vector<RatFunc>;
using KMatrix = std::vector<KVector>;

KMatrix zero_matrix(const FiniteField& f, std::size_t rows, std::size_t cols);
KMatrix transpose(const KMatrix& a, const FiniteField& f);

/// In-place reduced row echelon form; returns pivot columns in order.
std::vector<std::size_t> rref(KMatrix& a);

std::size_t rank(KMatrix a);
/// Basis of {x : A x = 0}.
std::vector<KVector> nullspace(KMatrix a, std::size_t cols);
/// Some x with A x = b, or nullopt when inconsistent.
std::optional<KVector> solve(const KMatrix& a, const KVector& b, std::size_t cols);

/// Reusable solver for a square invertible matrix.
class SquareSolver {
 public:
  explicit SquareSolver(const KMatrix& a);
  bool invertible() const { return ok_; }
  KVector solve(const KVector& b) const;

 private:
  KMatrix inv_;
  bool ok_ = false;
};

}  // namespace insep
