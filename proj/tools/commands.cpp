#include "commands.hpp"

#include <sstream>

#include "insep/errors.hpp"

namespace insep::cli {

using nlohmann::json;

namespace {

int n0_of(const InputDocument& d, const Options& o) { return o.precision.value_or(d.precision.value_or(16)); }
int cap_of(const InputDocument& d, const Options& o) { return o.cap.value_or(d.cap.value_or(1024)); }

json invariants_json(const InvariantReport& inv) {
  json j;
  j["x"] = inv.x;
  j["q"] = inv.q;
  j["e"] = inv.e;
  j["f"] = inv.f;
  j["delta"] = inv.delta;
  j["conductor_exponent"] = inv.conductor_exponent;
  j["genus_step"] = inv.genus_step;
  j["residue_degree"] = inv.residue_degree;
  j["degree_over_kx"] = inv.degree_over_kx;
  j["delta_combinatorial"] = inv.delta_combinatorial;
  j["combinatorial_agrees"] = inv.combinatorial_agrees;
  j["precision"] = inv.precision;
  return j;
}

json step_json(const StepData& s) {
  json j = invariants_json(s.inv);
  j["rank"] = s.rank;
  return j;
}

PresentationSource step2_source(const InputDocument& doc) {
  if (!doc.step2) return {};
  return ring_source(*doc.step2, doc.step2_field(), "step2");
}

Representation represent_escalating(const PresentationSource& src, int var, int n0, int cap) {
  for (int N = n0;; N *= 2) {
    try {
      return represent_normalization(src(N), var, N);
    } catch (const PrecisionExhausted&) {
      if (2 * N > cap) throw;
    }
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream out;
  std::function<void(const json&, int)> walk = [&](const json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = v.begin(); it != v.end(); ++it) {
      const json& x = it.value();
      if (x.is_object()) {
        out << pad << it.key() << ":\n";
        walk(x, indent + 2);
      } else if (x.is_array() && !x.empty() && x.front().is_object()) {
        out << pad << it.key() << ":\n";
        for (std::size_t i = 0; i < x.size(); ++i) {
          out << pad << "  [" << i << "]\n";
          walk(x[i], indent + 4);
        }
      } else if (x.is_array() && !x.empty() && x.front().is_string()) {
        out << pad << it.key() << ":\n";
        for (const auto& s : x) out << pad << "  " << s.get<std::string>() << "\n";
      } else {
        out << pad << it.key() << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  };
  walk(j, 0);
  return out.str();
}

json verdicts_json(const VerdictSet& v) {
  json j;
  j["verdicts"] = json::array();
  long long failed = 0;
  for (const auto& x : v.verdicts) {
    j["verdicts"].push_back(
        {{"subject", x.subject}, {"criterion", x.criterion}, {"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
    if (!x.pass) ++failed;
  }
  json crit = json::object();
  for (int c = 1; c <= 10; ++c) {
    if (auto ok = v.criterion_pass(c)) crit[std::to_string(c)] = *ok;
  }
  j["summary"] = {{"total", v.verdicts.size()}, {"failed", failed}, {"criteria", crit}};
  return j;
}

std::string verdict_table(const VerdictSet& v) {
  std::ostringstream out;
  long long failed = 0;
  for (const auto& x : v.verdicts) {
    out << (x.pass ? "PASS" : "FAIL") << "  [" << x.criterion << "]  " << x.subject << " | " << x.name << " | "
        << x.detail << "\n";
    if (!x.pass) ++failed;
  }
  out << v.verdicts.size() << " checks, " << failed << " failed\n";
  return out.str();
}

Outcome cmd_invariants(const InputDocument& doc, const Options& opt) {
  const RationalField K = doc.field();
  const PresentationSource src = ring_source(doc.ring, K, "ring");
  const int n0 = n0_of(doc, opt);
  const int cap = cap_of(doc, opt);
  const Presentation base = src(n0);
  Outcome o;
  json& r = o.report;
  r["ring"] = check_presentation(base);
  r["relations"] = base.relation_strings();
  const InvariantReport inv = delta_conductor(src, K.var(doc.x_index), n0, cap);
  r["invariants"] = invariants_json(inv);
  if (opt.trace) {
    const ResidueField L(base);
    json t = json::array();
    for (const auto& st : inv.trace) {
      t.push_back({{"q_r", st.q_r}, {"improved", st.improved}, {"lead", L.to_string(st.lead)}});
    }
    r["trace"] = t;
  }
  try {
    const NormalFormData nf = extract_normal_form(src, n0, cap);
    json entries = json::array();
    for (const auto& e : nf.entries) {
      entries.push_back({{"n", e.n}, {"f", e.f_string}, {"q", e.q}, {"q_prime", e.q_prime}, {"u", e.u_string},
                         {"w", e.w_string}});
    }
    r["normal_form"] = entries;
  } catch (const InputError& e) {
    r["normal_form_note"] = e.what();
  }
  o.exit_code = inv.combinatorial_agrees ? 0 : 1;
  return o;
}

Outcome cmd_normalize(const InputDocument& doc, const Options& opt) {
  const RationalField K = doc.field();
  const PresentationSource src = ring_source(doc.ring, K, "ring");
  const int n0 = n0_of(doc, opt);
  const int cap = cap_of(doc, opt);
  const int var = doc.x_index;
  Outcome o;
  json& r = o.report;
  r["ring"] = check_presentation(src(n0));
  const InvariantReport inv = delta_conductor(src, K.var(var), n0, cap);
  r["invariants"] = invariants_json(inv);
  if (inv.q > 0) {
    const NormalizationLattice lat = normalization_lattice(src, var, inv);
    r["lattice"] = {{"k_max", lat.k_max}, {"dims", lat.dims}, {"g10", lat.g10}, {"stable", lat.stable},
                    {"conductor_exponent", lat.conductor_exponent}, {"generators", lat.generators}};
    const DeltaOracle orc = delta_oracle(src, var, inv);
    r["delta_routes"] = {{"formula", orc.formula}, {"combinatorial", orc.combinatorial}, {"lattice", orc.lattice},
                         {"conductor_identity", orc.conductor_identity}};
    const Representation rep = represent_escalating(src, var, n0, cap);
    json rj;
    rj["field_variables"] = rep.pres.K.display_names();
    rj["uniformizer"] = rep.pres.uniformizer;
    rj["relations"] = rep.pres.relation_strings();
    rj["images"] = rep.images;
    rj["e"] = rep.e;
    rj["q"] = rep.q;
    if (!rep.note.empty()) rj["note"] = rep.note;
    r["representation"] = rj;
  }
  bool ok = true;
  const TwoStepReport two = two_step_analysis(src, var, step2_source(doc));
  json tj;
  tj["case"] = two.case_id;
  tj["step1"] = step_json(two.step1);
  tj["step2"] = step_json(two.step2);
  tj["second_step_from_document"] = two.fallback;
  if (two.simple_extension) tj["simple_extension"] = *two.simple_extension;
  tj["case_law"] = two.case_law;
  tj["genus_law"] = two.genus_law;
  if (!two.notes.empty()) tj["notes"] = two.notes;
  ok = ok && two.case_law && two.genus_law;
  json ineq = json::array();
  for (const auto& v : check_step_inequalities(two, doc.p)) {
    ineq.push_back({{"name", v.name}, {"holds", v.holds}, {"detail", v.detail}});
    ok = ok && v.holds;
  }
  tj["inequalities"] = ineq;
  r["two_step"] = tj;
  const ChainReport chain = full_genus_change(src);
  r["g10_full"] = chain.g10_full;
  o.exit_code = ok ? 0 : 1;
  return o;
}

Outcome cmd_jacobian(const InputDocument& doc, const Options& opt) {
  const RationalField K = doc.field();
  const PresentationSource src = ring_source(doc.ring, K, "ring");
  const int n0 = n0_of(doc, opt);
  const int cap = cap_of(doc, opt);
  Outcome o;
  json& r = o.report;
  r["ring"] = check_presentation(src(n0));
  const JacobianReport jr = jac_number(src, n0, cap);
  r["jacobian"] = {{"matrix", jr.matrix},       {"elementary_divisor_exponents", jr.exponents},
                   {"jac_smith", jr.jac_smith}, {"jac_fitting", jr.jac_fitting},
                   {"torsion_dim", jr.torsion_dim}, {"residue_degree", jr.residue_degree},
                   {"precision", jr.precision}};
  const KernelChain kc = kernel_dims_along_chain(src);
  json steps = json::array();
  bool ok = kc.total == jr.jac_smith;
  for (const auto& st : kc.steps) {
    steps.push_back({{"x", K.symbol_names()[st.var]}, {"q", st.q}, {"e", st.e}, {"length", st.length},
                     {"dim", st.dim}, {"closed_form", st.closed_form}});
    ok = ok && st.dim == st.closed_form;
  }
  r["kernel_chain"] = {{"steps", steps}, {"total", kc.total}};
  const ChainReport chain = full_genus_change(src);
  const Verdict gj = genus_jacobian_identity(chain.g10_full, jr.jac_smith, doc.p);
  r["g10_full"] = chain.g10_full;
  r["identity"] = {{"holds", gj.pass}, {"detail", gj.detail}};
  ok = ok && gj.pass;
  o.exit_code = ok ? 0 : 1;
  return o;
}

Outcome cmd_verify(const InputDocument& doc, const Options& opt) {
  const RationalField K = doc.field();
  const PresentationSource src = ring_source(doc.ring, K, "ring");
  check_presentation(src(n0_of(doc, opt)));
  VerdictSet v = run_single_checks("document", src, doc.x_index);
  v.merge(run_two_step_checks("document", src, doc.x_index, step2_source(doc)));
  Outcome o;
  o.report = verdicts_json(v);
  o.text = verdict_table(v);
  o.exit_code = v.all_pass() ? 0 : 1;
  return o;
}

Outcome cmd_verify_fixture(const std::string& id, const Options&) {
  const auto fx = find_fixture(id);
  if (!fx) {
    std::string known;
    for (const auto& f : corpus_fixtures()) known += " " + f.id();
    throw InputError("unknown fixture id \"" + id + "\"; known ids:" + known);
  }
  const VerdictSet v = run_fixture(*fx);
  Outcome o;
  o.report = verdicts_json(v);
  o.text = verdict_table(v);
  o.exit_code = v.all_pass() ? 0 : 1;
  return o;
}

Outcome cmd_corpus(int random_per_p, const Options&) {
  const VerdictSet v = run_corpus(random_per_p);
  Outcome o;
  o.report = verdicts_json(v);
  o.text = verdict_table(v);
  o.exit_code = v.all_pass() ? 0 : 1;
  return o;
}

}  // namespace insep::cli
