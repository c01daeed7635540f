#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "insep/finite_field.hpp"

namespace insep {

/// Maximum number of variables of a rational function field F_q(t_1..t_c).
inline constexpr int kMaxVars = 3;

/// Packed exponent vector. Layout (high to low 16-bit fields): total degree,
/// e_0, e_1, e_2. Comparing packed values is graded lex with t_0 > t_1 > t_2.
using Monomial = std::uint64_t;

namespace mono {
Monomial make(const std::array<std::uint32_t, kMaxVars>& exps);
inline std::uint32_t exp(Monomial m, int var) {
  return static_cast<std::uint32_t>((m >> (32 - 16 * var)) & 0xFFFFu);
}
inline std::uint32_t total(Monomial m) { return static_cast<std::uint32_t>(m >> 48); }
std::array<std::uint32_t, kMaxVars> exps(Monomial m);
Monomial mul(Monomial a, Monomial b);
bool divides(Monomial a, Monomial b);
inline Monomial div(Monomial a, Monomial b) { return a - b; }
Monomial gcd(Monomial a, Monomial b);
inline constexpr Monomial one() { return 0; }
Monomial var(int i, std::uint32_t power = 1);
}  // namespace mono

struct Term {
  Monomial m;
  Fq c;
  bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

/// Sparse multivariate polynomial over F_q in at most kMaxVars variables.
/// Terms are kept sorted in strictly decreasing monomial order, with no
/// zero coefficients.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const FiniteField& f) : f_(&f) {}
  MPoly(const FiniteField& f, Fq constant);
  MPoly(const FiniteField& f, std::vector<Term> terms);  // normalizes

  static MPoly monomial(const FiniteField& f, Monomial m, Fq c = 1);

  const FiniteField& field() const { return *f_; }
  const FiniteField* field_ptr() const { return f_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].m == 0 && terms_[0].c == 1; }
  bool is_monomial() const { return terms_.size() == 1; }
  Fq constant_term() const;
  const Term& leading() const { return terms_.front(); }
  std::uint32_t degree_in(int var) const;
  std::uint32_t min_degree_in(int var) const;
  bool involves(int var) const { return degree_in(var) > 0; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(Fq c) const;
  MPoly shifted(Monomial m) const;  // multiply by a monomial
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly pow(std::uint64_t k) const;
  MPoly derivative(int var) const;
  /// Exact quotient, or nullopt if `d` does not divide *this.
  std::optional<MPoly> exact_div(const MPoly& d) const;
  /// Divide by the leading coefficient.
  MPoly monic() const;
  /// Apply a -> a^{p^k} coefficientwise and multiply every exponent by p^k.
  MPoly frobenius(int k = 1) const;
  /// Multiply the exponent of `var` by `factor`, leaving coefficients alone.
  MPoly stretch_var(int var, std::uint32_t factor) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void normalize();
  const FiniteField* f_ = nullptr;
  std::vector<Term> terms_;
};

/// Monic gcd (gcd(0,0) = 0). Univariate Euclid in one variable, primitive
/// polynomial remainder sequences recursively otherwise.
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace insep
