#pragma once

#include <climits>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "insep/errors.hpp"
#include "insep/rational_field.hpp"

namespace insep {

/// Precision of a series that is an exact polynomial in S.
inline constexpr int kExact = INT_MAX / 4;

/// Element of K[[S]] known modulo S^prec. Stored sparsely: only nonzero
/// coefficients with index < prec are kept.
class Series {
 public:
  Series() = default;
  Series(const FiniteField& f, int prec) : f_(&f), prec_(prec) {}
  static Series constant(const RatFunc& c, int prec);
  static Series monomial(const RatFunc& c, int k, int prec);

  const FiniteField& field() const { return *f_; }
  int precision() const { return prec_; }
  const std::vector<std::pair<int, RatFunc>>& terms() const { return terms_; }
  RatFunc coeff(int j) const;
  void add_term(int j, const RatFunc& c);  // coefficient += c

  /// Index of the first nonzero coefficient, or nullopt when zero mod S^prec.
  std::optional<int> valuation() const;
  bool is_zero_to_precision() const { return terms_.empty(); }
  bool is_exact_zero() const { return terms_.empty() && prec_ >= kExact; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  /// Product known modulo S^min(prec_a + v(b), prec_b + v(a)), capped at `cap`.
  Series mul(const Series& o, int cap) const;
  Series operator*(const Series& o) const { return mul(o, kExact); }
  Series scaled(const RatFunc& c) const;
  Series truncated(int n) const;
  /// Multiply by S^k.
  Series shifted(int k) const;
  /// Divide by S^k; the first k coefficients must vanish.
  Series divided_by_s(int k) const;
  /// (sum c_j S^j)^p = sum c_j^p S^{pj}, truncated at `cap`.
  Series frobenius_power(int cap) const;
  /// d/dS, K-coefficients are constants.
  Series derivative() const;
  Series map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const;
  /// Substitute S -> S^k.
  Series stretched(int k) const;

  /// Newton iteration w <- w(2 - uw); rejects non-units.
  Series unit_inverse() const;

  bool operator==(const Series& o) const;
  std::string to_string(const std::vector<std::string>& field_names, const std::string& s = "S") const;

 private:
  const FiniteField* f_ = nullptr;
  int prec_ = kExact;
  std::vector<std::pair<int, RatFunc>> terms_;  // increasing index
};

/// Result of stable_compute, tagged with the precision that confirmed it.
template <class T>
struct Stable {
  T value;
  int precision;
};

/// Run f at N0, 2N0, 4N0, ... until two consecutive precisions agree.
/// A level that throws PrecisionExhausted simply moves on to the next one.
template <class T>
Stable<T> stable_compute(const std::function<T(int)>& f, int n0 = 16, int cap = 1024) {
  std::optional<T> prev;
  for (int n = n0; n <= cap; n *= 2) {
    std::optional<T> cur;
    try {
      cur = f(n);
    } catch (const PrecisionExhausted&) {
      prev.reset();
      continue;
    }
    if (prev && *prev == *cur) return {*cur, n};
    prev = std::move(cur);
  }
  throw PrecisionExhausted("no two consecutive precisions agreed below cap " + std::to_string(cap));
}

}  // namespace insep
