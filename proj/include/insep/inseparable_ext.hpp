#pragma once

#include <optional>
#include <string>
#include <vector>

#include "insep/rational_field.hpp"

namespace insep {

/// K' = K[xi]/(xi^p - x) for x in K \ K^p. Elements are coefficient vectors
/// of 1, xi, .., xi^{p-1}.
class SimpleInseparableExt {
 public:
  using Elem = std::vector<RatFunc>;

  SimpleInseparableExt(const RationalField& K, RatFunc x);

  const RationalField& base() const { return K_; }
  const RatFunc& x() const { return x_; }
  std::uint32_t p() const { return K_.characteristic(); }

  Elem zero() const;
  Elem one() const;
  Elem xi() const;
  Elem embed(const RatFunc& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const;
  /// a^p, which lies in K.
  RatFunc frobenius_norm(const Elem& a) const;
  Elem inverse(const Elem& a) const;

  /// Index i when x = t_i (so K' is F_q(.., t_i^{1/p}, ..)).
  std::optional<int> basis_variable() const { return var_; }
  RationalField flat_field() const;
  RatFunc to_flat(const Elem& a) const;
  Elem from_flat(const RatFunc& a) const;

  std::string to_string(const Elem& a, const std::string& name = "xi") const;

 private:
  RationalField K_;
  RatFunc x_;
  std::optional<int> var_;
};

SimpleInseparableExt adjoin_pth_root(const RationalField& K, const RatFunc& x);

}  // namespace insep
