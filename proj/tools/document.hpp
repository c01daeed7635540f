#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "insep/invariants.hpp"

namespace insep::cli {

/// Either a hypersurface with a point factor (completed by Hensel lifting)
/// or explicit relations T_i^{d_i} - F_i.
struct RingSpec {
  std::string uniformizer = "S";
  std::string hypersurface;
  std::string point_factor;
  std::string variable = "Y";
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  bool is_hypersurface() const { return !hypersurface.empty(); }
};

struct InputDocument {
  std::uint32_t p = 0;
  const FiniteField* fq = nullptr;
  std::vector<std::string> variables;
  std::vector<int> root_levels;
  RingSpec ring;
  std::optional<RingSpec> step2;  // over K(x^{1/p})
  int x_index = 0;
  std::optional<int> precision;
  std::optional<int> cap;

  RationalField field() const;
  RationalField step2_field() const;
};

/// Validates the document; errors name the offending key.
InputDocument load_document(const nlohmann::json& j);
InputDocument read_document(const std::string& path);

PresentationSource ring_source(const RingSpec& spec, const RationalField& K, const std::string& where);

/// The JSON schema published for input documents.
const char* document_schema();

}  // namespace insep::cli
