#pragma once

#include <string>
#include <vector>

#include "insep/local_ring.hpp"

namespace insep {

/// Parse error carrying the 0-based column of the offending token.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t column)
      : InputError(what + " at column " + std::to_string(column + 1)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parse a polynomial in S and the generators with coefficients in K.
/// Grammar: + - * / ^ and parentheses, no implicit multiplication. Field
/// variables use K.symbol_names(); "a" names the generator of F_q when q is
/// not prime. Division is only allowed by elements of K.
STPoly parse_stpoly(const std::string& text, const RationalField& K, const std::string& s_name,
                    const std::vector<std::string>& gens);

/// A relation as printed by Presentation::relation_strings, where the tail may
/// end in "+ O(S^k)". The O-term sets the precision (kExact when absent).
struct ParsedRelation {
  STPoly poly;
  int precision;
};
ParsedRelation parse_relation(const std::string& text, const RationalField& K, const std::string& s_name,
                              const std::vector<std::string>& gens);

/// Parse an element of K, e.g. "(t1^2 + 2*t2)/(t1 - 1)".
RatFunc parse_field_element(const std::string& text, const RationalField& K);

}  // namespace insep
