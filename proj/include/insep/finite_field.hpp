#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace insep {

/// Element of a finite field, encoded as the integer whose base-p digits are
/// the coefficients of its representative polynomial modulo the field modulus.
using Fq = std::uint32_t;

/// The finite field F_q, q = p^e, presented as F_p[a]/(modulus).
///
/// Instances are interned: `FiniteField::get` returns a reference that stays
/// valid for the lifetime of the program, so polynomials may hold raw
/// pointers to their coefficient field.
class FiniteField {
 public:
  /// Prime field F_p.
  static const FiniteField& prime(std::uint32_t p);
  /// F_{p^e} with the lexicographically first monic irreducible modulus.
  static const FiniteField& get(std::uint32_t p, std::uint32_t e);
  /// F_{p^e} with an explicit modulus (coefficients low to high, monic,
  /// degree e). Throws std::invalid_argument if it is reducible.
  static const FiniteField& get(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t k) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Fq from_int(long long v) const;
  /// a -> a^p
  Fq frobenius(Fq a) const { return frob_[a]; }
  /// a -> a^{p^{e-1}}, the inverse of the Frobenius.
  Fq frobenius_inverse(Fq a) const { return frob_inv_[a]; }

  std::string to_string(Fq a) const;

  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

 private:
  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  // Tables are only populated for e > 1; prime fields use modular arithmetic.
  std::vector<Fq> add_;
  std::vector<Fq> mul_;
  std::vector<Fq> inv_;
  std::vector<Fq> frob_;
  std::vector<Fq> frob_inv_;
};

bool is_prime(std::uint64_t n);

/// Irreducibility of a monic polynomial over F_p by trial division.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace insep
