#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "insep/polynomial.hpp"

namespace insep {

/// Element of F_q(t_1..t_c): a reduced fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const FiniteField& f) : num_(f), den_(f, 1) {}
  RatFunc(const FiniteField& f, Fq c) : num_(f, c), den_(f, 1) {}
  explicit RatFunc(MPoly num);
  RatFunc(MPoly num, MPoly den);  // reduces

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const FiniteField& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;
  RatFunc pow(long long k) const;
  RatFunc scaled(Fq c) const;
  /// Quotient-rule derivative in t_var.
  RatFunc derivative(int var) const;
  /// a -> a^{p^k}
  RatFunc frobenius(int k = 1) const;
  /// Substitute t_var -> t_var^factor (the element is unchanged when t_var is
  /// reinterpreted as a factor-th root of the old variable).
  RatFunc stretch_var(int var, std::uint32_t factor) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  MPoly num_;
  MPoly den_;
};

/// The field K = F_q(t_1..t_c). Variables carry a root level: variable i
/// stands for base_names[i]^(1/p^level[i]), which lets towers of p-th roots of
/// the p-basis stay a rational function field.
class RationalField {
 public:
  RationalField(const FiniteField& fq, std::vector<std::string> base_names,
                std::vector<int> root_levels = {});

  const FiniteField& fq() const { return *fq_; }
  std::uint32_t characteristic() const { return fq_->characteristic(); }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& base_names() const { return names_; }
  const std::vector<int>& root_levels() const { return levels_; }
  /// Display names, e.g. "t" or "t^(1/9)".
  std::vector<std::string> display_names() const;
  /// Identifier-style names usable in expressions ("t", "t_r1", ...).
  std::vector<std::string> symbol_names() const;

  RatFunc zero() const { return RatFunc(*fq_); }
  RatFunc one() const { return RatFunc(*fq_, 1); }
  RatFunc constant(long long c) const { return RatFunc(*fq_, fq_->from_int(c)); }
  RatFunc var(int i) const;

  /// K(t_i^{1/p}) presented as a rational function field again.
  RationalField adjoin_root_of_var(int i) const;
  /// The embedding K -> K(t_i^{1/p}) in flattened coordinates.
  RatFunc embed_into_root_ext(const RatFunc& a, int i) const;

  bool same_as(const RationalField& o) const;

  std::string to_string(const RatFunc& a) const { return a.to_string(display_names()); }

 private:
  const FiniteField* fq_;
  std::vector<std::string> names_;
  std::vector<int> levels_;
};

/// b with b^p = a if a lies in K^p; criterion is exponent divisibility of the
/// reduced fraction, equivalently vanishing of all partial derivatives.
std::optional<RatFunc> is_pth_power(const RatFunc& a);
RatFunc partial_derivative(const RatFunc& a, int var);

/// Decomposition of K over the subfield F = F_q(t_1^{m_1},..,t_c^{m_c}) with
/// every m_i in {1, p^k}: a = sum_alpha F-coefficient * t^alpha, 0 <= alpha_i < m_i.
/// Each returned coefficient is mapped through the isomorphism F -> K that
/// divides the exponent of t_i by m_i and applies the inverse Frobenius k
/// times to F_q coefficients.
struct DecompTerm {
  std::array<std::uint32_t, kMaxVars> alpha;
  RatFunc coeff;
};
std::vector<DecompTerm> decompose_over_subfield(const RatFunc& a,
                                                const std::array<std::uint32_t, kMaxVars>& moduli,
                                                int frobenius_k);
/// Flat index of alpha in the product range [0, m_0) x [0, m_1) x ...
std::size_t decomp_index(const std::array<std::uint32_t, kMaxVars>& alpha,
                         const std::array<std::uint32_t, kMaxVars>& moduli);
std::size_t decomp_size(const std::array<std::uint32_t, kMaxVars>& moduli);

/// Split a in K(t_i^{1/p}) (flattened) as sum_{a<p} s^a * K-coefficient,
/// with each coefficient returned in the coordinates of K (s^p -> t_i).
std::vector<RatFunc> split_over_base(const RatFunc& a, int var, std::uint32_t p);

}  // namespace insep
