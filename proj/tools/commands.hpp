#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "document.hpp"
#include "insep/verify.hpp"

namespace insep::cli {

struct Options {
  std::optional<int> precision;
  std::optional<int> cap;
  bool trace = false;
};

struct Outcome {
  nlohmann::json report;
  std::string text;
  int exit_code = 0;
};

Outcome cmd_invariants(const InputDocument& doc, const Options& opt);
Outcome cmd_normalize(const InputDocument& doc, const Options& opt);
Outcome cmd_jacobian(const InputDocument& doc, const Options& opt);
Outcome cmd_verify(const InputDocument& doc, const Options& opt);
Outcome cmd_verify_fixture(const std::string& id, const Options& opt);
Outcome cmd_corpus(int random_per_p, const Options& opt);

nlohmann::json verdicts_json(const VerdictSet& v);
std::string verdict_table(const VerdictSet& v);
/// Indented "key: value" rendering of a report.
std::string render_text(const nlohmann::json& j);

}  // namespace insep::cli
