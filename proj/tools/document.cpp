#include "document.hpp"

#include <fstream>

#include "insep/errors.hpp"
#include "insep/parser.hpp"

namespace insep::cli {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing key \"" + key + "\"");
  return j.at(key);
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

long long get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<long long>();
}

std::vector<std::string> get_strings(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

RingSpec load_ring(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  RingSpec r;
  if (j.contains("uniformizer")) r.uniformizer = get_string(j["uniformizer"], where + ".uniformizer");
  const bool hyper = j.contains("hypersurface");
  const bool rels = j.contains("relations");
  if (hyper == rels) throw InputError(where + ": give exactly one of \"hypersurface\" and \"relations\"");
  if (hyper) {
    r.hypersurface = get_string(j["hypersurface"], where + ".hypersurface");
    r.point_factor = get_string(require(j, "point_factor", where), where + ".point_factor");
    if (j.contains("variable")) r.variable = get_string(j["variable"], where + ".variable");
  } else {
    r.relations = get_strings(j["relations"], where + ".relations");
    r.generators = get_strings(require(j, "generators", where), where + ".generators");
    if (r.generators.size() != r.relations.size()) {
      throw InputError(where + ": " + std::to_string(r.generators.size()) + " generators but " +
                       std::to_string(r.relations.size()) + " relations");
    }
  }
  return r;
}

}  // namespace

RationalField InputDocument::field() const { return RationalField(*fq, variables, root_levels); }

RationalField InputDocument::step2_field() const { return field().adjoin_root_of_var(x_index); }

InputDocument load_document(const json& j) {
  if (!j.is_object()) throw InputError("document: expected a JSON object");
  InputDocument d;
  const long long p = get_int(require(j, "characteristic", "document"), "characteristic");
  if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint32_t>(p))) {
    throw InputError("characteristic: " + std::to_string(p) + " is not a supported prime");
  }
  d.p = static_cast<std::uint32_t>(p);
  d.fq = &FiniteField::prime(d.p);
  if (j.contains("field")) {
    const json& f = j["field"];
    const long long q = get_int(require(f, "q", "field"), "field.q");
    std::uint32_t e = 0;
    long long r = 1;
    while (r < q) {
      r *= p;
      ++e;
    }
    if (r != q || e == 0) throw InputError("field.q: " + std::to_string(q) + " is not a power of the characteristic");
    if (f.contains("modulus")) {
      std::vector<std::uint32_t> mod;
      for (const auto& c : f["modulus"]) {
        const long long v = get_int(c, "field.modulus");
        if (v < 0 || v >= p) throw InputError("field.modulus: coefficient " + std::to_string(v) + " not in [0, p)");
        mod.push_back(static_cast<std::uint32_t>(v));
      }
      if (mod.size() != e + 1) throw InputError("field.modulus: expected degree " + std::to_string(e));
      try {
        d.fq = &FiniteField::get(d.p, mod);
      } catch (const std::invalid_argument& ex) {
        throw InputError(std::string("field.modulus: ") + ex.what());
      }
    } else {
      d.fq = &FiniteField::get(d.p, e);
    }
  }
  d.variables = get_strings(require(j, "variables", "document"), "variables");
  if (d.variables.empty() || d.variables.size() > static_cast<std::size_t>(kMaxVars)) {
    throw InputError("variables: between 1 and " + std::to_string(kMaxVars) + " names required");
  }
  d.root_levels.assign(d.variables.size(), 0);
  if (j.contains("root_levels")) {
    const json& lv = j["root_levels"];
    if (!lv.is_array() || lv.size() != d.variables.size()) throw InputError("root_levels: one entry per variable");
    for (std::size_t i = 0; i < lv.size(); ++i) d.root_levels[i] = static_cast<int>(get_int(lv[i], "root_levels"));
  }
  d.ring = load_ring(require(j, "ring", "document"), "ring");
  if (j.contains("x")) {
    const std::string x = get_string(j["x"], "x");
    const auto names = d.field().symbol_names();
    auto it = std::find(names.begin(), names.end(), x);
    if (it == names.end()) throw InputError("x: \"" + x + "\" is not one of the field variables");
    d.x_index = static_cast<int>(it - names.begin());
  }
  if (j.contains("step2")) d.step2 = load_ring(j["step2"], "step2");
  if (j.contains("precision")) d.precision = static_cast<int>(get_int(j["precision"], "precision"));
  if (j.contains("cap")) d.cap = static_cast<int>(get_int(j["cap"], "cap"));
  return d;
}

InputDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return load_document(j);
}

PresentationSource ring_source(const RingSpec& spec, const RationalField& K, const std::string& where) {
  if (spec.is_hypersurface()) {
    STPoly f, b0;
    try {
      f = parse_stpoly(spec.hypersurface, K, spec.uniformizer, {spec.variable});
    } catch (const InputError& e) {
      throw InputError(where + ".hypersurface: " + e.what());
    }
    try {
      b0 = parse_stpoly(spec.point_factor, K, spec.uniformizer, {spec.variable});
    } catch (const InputError& e) {
      throw InputError(where + ".point_factor: " + e.what());
    }
    const std::string gen = spec.variable;
    const std::string s = spec.uniformizer;
    return [K, f, b0, gen, s](int N) {
      Presentation pres = hensel_prepare(K, f, b0, N, gen);
      pres.uniformizer = s;
      return pres;
    };
  }
  std::vector<STPoly> polys;
  int precision = kExact;
  for (std::size_t i = 0; i < spec.relations.size(); ++i) {
    try {
      ParsedRelation r = parse_relation(spec.relations[i], K, spec.uniformizer, spec.generators);
      polys.push_back(std::move(r.poly));
      precision = std::min(precision, r.precision);
    } catch (const InputError& e) {
      throw InputError(where + ".relations[" + std::to_string(i) + "]: " + e.what());
    }
  }
  Presentation pres = presentation_from_relations(K, spec.generators, polys, precision);
  pres.uniformizer = spec.uniformizer;
  return constant_source(pres);
}

const char* document_schema() {
  return R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "insep input document",
  "type": "object",
  "required": ["characteristic", "variables", "ring"],
  "properties": {
    "characteristic": {"type": "integer", "description": "prime p"},
    "field": {
      "type": "object",
      "required": ["q"],
      "properties": {
        "q": {"type": "integer", "description": "order of the constant field, a power of p"},
        "modulus": {"type": "array", "items": {"type": "integer"}, "description": "monic, low to high"}
      }
    },
    "variables": {"type": "array", "items": {"type": "string"}, "minItems": 1, "maxItems": 3},
    "root_levels": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "ring": {"$ref": "#/$defs/ring"},
    "step2": {"$ref": "#/$defs/ring", "description": "R(1_x) over K(x^(1/p)), used when re-presentation fails"},
    "x": {"type": "string", "description": "p-basis variable, default the first"},
    "precision": {"type": "integer", "minimum": 2},
    "cap": {"type": "integer", "minimum": 2}
  },
  "$defs": {
    "ring": {
      "type": "object",
      "properties": {
        "uniformizer": {"type": "string", "default": "S"},
        "hypersurface": {"type": "string"},
        "point_factor": {"type": "string"},
        "variable": {"type": "string", "default": "Y"},
        "generators": {"type": "array", "items": {"type": "string"}},
        "relations": {"type": "array", "items": {"type": "string"}}
      },
      "oneOf": [
        {"required": ["hypersurface", "point_factor"]},
        {"required": ["generators", "relations"]}
      ]
    }
  }
})";
}

}  // namespace insep::cli
