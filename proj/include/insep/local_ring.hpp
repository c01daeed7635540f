#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "insep/linalg.hpp"
#include "insep/series.hpp"

namespace insep {

/// Polynomial (or truncated series) in S, T_1..T_m with K coefficients.
/// Key layout: [exponent of S, exponent of T_1, ..., exponent of T_m].
using STPoly = std::map<std::vector<int>, RatFunc>;

/// K[[S]][T_1..T_m]/(T_i^{d_i} - F_i). The tails F_i are stored as
/// polynomials in S and T known modulo S^tail_precision. Their S^0 parts may
/// only involve T_1..T_{i-1}; higher S-orders may involve every generator.
struct Presentation {
  RationalField K;
  std::vector<std::string> gens;
  std::vector<int> degrees;
  std::vector<STPoly> tails;
  int tail_precision = kExact;
  std::string uniformizer = "S";

  int m() const { return static_cast<int>(gens.size()); }
  int rank() const;  // D = prod d_i
  std::uint32_t p() const { return K.characteristic(); }
  /// Relations rendered as "T^9 - (t + S^2)".
  std::vector<std::string> relation_strings() const;
};

std::string stpoly_to_string(const STPoly& f, const RationalField& K, const std::string& s,
                             const std::vector<std::string>& gens);

/// Build a presentation from relation polynomials P_i monic in T_i.
Presentation presentation_from_relations(const RationalField& K, std::vector<std::string> gens,
                                         const std::vector<STPoly>& relations,
                                         int precision = kExact);

/// Element of a ring presentation: one truncated series per basis monomial.
struct Elem {
  std::vector<Series> c;
};

/// Arithmetic in a presentation, truncated at S^N.
class Ring {
 public:
  Ring(const Presentation& pres, int N);

  const Presentation& pres() const { return *pres_; }
  const RationalField& K() const { return pres_->K; }
  const FiniteField& fq() const { return pres_->K.fq(); }
  int N() const { return n_; }
  int D() const { return d_; }
  std::uint32_t p() const { return pres_->p(); }
  const std::vector<std::vector<int>>& basis() const { return basis_; }
  int index_of(const std::vector<int>& b) const;

  Elem zero() const;
  Elem one() const;
  Elem constant(const RatFunc& a) const;
  Elem s_power(int k) const;
  Elem gen(int i) const;
  /// Normal form of the monomial T^e.
  Elem monomial(const std::vector<int>& e) const;
  Elem from_poly(const STPoly& f) const;
  /// Element with the given coordinates at S^0 (a lift of a residue class).
  Elem lift(const KVector& coords) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, const RatFunc& c) const;
  Elem scale_series(const Elem& a, const Series& c) const;
  Elem shift(const Elem& a, int k) const;  // times S^k
  Elem div_s(const Elem& a, int k) const;  // exact division by S^k
  Elem pow(const Elem& a, std::uint64_t k) const;
  /// a^p using (sum c_b T^b)^p = sum c_b^p tau_b.
  Elem frobenius(const Elem& a) const;
  /// a^{p^k}.
  Elem frobenius(const Elem& a, int k) const;
  Elem truncate(const Elem& a, int n) const;

  /// Valuation when determined by the known coefficients.
  std::optional<int> valuation(const Elem& a) const;
  /// Valuation or PrecisionExhausted.
  int valuation_or_throw(const Elem& a) const;
  int precision(const Elem& a) const;
  /// Coefficients of S^k in every coordinate: the class of a/S^k in L when
  /// k = v(a).
  KVector slice(const Elem& a, int k) const;
  KVector residue(const Elem& a) const { return slice(a, 0); }
  /// Inverse of a unit, by residue inversion followed by Newton iteration.
  Elem unit_inverse(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const;
  KVector basis_vector(int b) const;

  std::string to_string(const Elem& a) const;

 private:
  Elem reduce_worklist(std::map<std::vector<int>, Series> work) const;
  const Series& tau_coord(int b, int k) const;

  std::shared_ptr<const Presentation> pres_;
  int n_;
  int d_;
  std::vector<std::vector<int>> basis_;
  std::vector<int> radix_;
  // Tails as T-polynomials with series coefficients.
  std::vector<std::vector<std::pair<std::vector<int>, Series>>> tails_;
  // Normal forms of T^e for e_i <= 2(d_i - 1).
  std::vector<int> table_radix_;
  std::vector<Elem> table_;
  // tau_b = T^{pb}, computed lazily.
  mutable std::vector<std::optional<Elem>> tau_;
};

/// The residue field L = R/(S), a K-algebra of dimension D.
class ResidueField {
 public:
  explicit ResidueField(const Presentation& pres);

  int degree() const { return ring_.D(); }
  const Ring& ring() const { return ring_; }
  const RationalField& K() const { return ring_.K(); }
  KVector zero() const;
  KVector one() const;
  KVector from_k(const RatFunc& a) const;
  KVector gen(int i) const;
  KVector add(const KVector& a, const KVector& b) const;
  KVector sub(const KVector& a, const KVector& b) const;
  KVector mul(const KVector& a, const KVector& b) const;
  KVector pow(const KVector& a, std::uint64_t k) const;
  KVector scale(const KVector& a, const RatFunc& c) const;
  /// a^{p^j}
  KVector frobenius(const KVector& a, int j) const;
  std::optional<KVector> inverse(const KVector& a) const;
  bool is_zero(const KVector& a) const;
  /// b with b^{p^j} = c if it exists.
  std::optional<KVector> pth_root(const KVector& c, int j) const;
  std::string to_string(const KVector& a) const;

 private:
  Elem to_elem(const KVector& a) const;
  Presentation pres_;
  Ring ring_;
};

/// b in L with b^{p^j} = c, or nullopt.
std::optional<KVector> residue_is_pth_power(const ResidueField& L, const KVector& c, int j);

/// Structural checks: residue-triangularity and that R/(S) is a field.
/// Throws InputError with a diagnostic; returns a short summary on success.
std::string check_presentation(const Presentation& pres);

/// Factors of f = A*B in K[[S]][Y], as coefficient series by Y-degree.
struct HenselFactors {
  std::vector<Series> A;
  std::vector<Series> B;  // monic
  std::vector<Series> f;  // f after normalizing its leading coefficient
};
/// f is a polynomial in S and Y (STPoly keys [s, y]); point_factor is the
/// factor of f mod S cutting out the point. Linear Hensel lifting to S^N.
HenselFactors hensel_factor(const RationalField& K, const STPoly& f, const STPoly& point_factor, int N);

/// R = K[[S]][Y]/(B) for the lifted factor B, validated by check_presentation.
Presentation hensel_prepare(const RationalField& K, const STPoly& f, const STPoly& point_factor,
                            int N, const std::string& gen_name = "T");

}  // namespace insep
