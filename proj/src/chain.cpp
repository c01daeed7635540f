#include "insep/normalize.hpp"

namespace insep {

namespace {

StepData run_step(const PresentationSource& src, int var) {
  const Presentation probe = src(16);
  StepData s;
  s.var = var;
  const RatFunc x = probe.K.var(var);
  s.x = probe.K.to_string(x);
  s.inv = delta_conductor(src, x);
  s.rank = probe.rank();
  return s;
}

}  // namespace

TwoStepReport two_step_analysis(const PresentationSource& src, int var, const PresentationSource& fallback_step2) {
  TwoStepReport r;
  r.step1 = run_step(src, var);
  PresentationSource src2 = normalized_source(src, var);
  try {
    src2(16);
  } catch (const std::exception& err) {
    if (!fallback_step2) throw;
    r.fallback = true;
    r.notes.push_back(std::string("re-presentation failed (") + err.what() + "); using supplied R(1)");
    src2 = fallback_step2;
  }
  r.step2 = run_step(src2, var);
  const long long p = src(16).p();
  const auto& a = r.step1.inv;
  const auto& b = r.step2.inv;
  if (a.q == 0 || b.q == 0) {
    r.notes.push_back("a step has q = 0; no case law applies");
    r.case_law = true;
    r.genus_law = p * b.genus_step <= a.genus_step;
    return r;
  }
  const long long q1 = a.q, q2 = b.q, d1 = a.delta, d2 = b.delta;
  const long long g1 = a.genus_step, g2 = b.genus_step;
  const long long corr = p * (p - 1) / 2;
  if (a.e == p && b.e == p) {
    r.case_id = 1;
    r.case_law = q2 == q1 && d2 == d1;
    r.genus_law = p * g2 == g1;
  } else if (a.e == p) {
    r.case_id = 2;
    r.case_law = q2 < q1 && d2 <= d1;
    r.genus_law = p * g2 <= g1;
  } else if (b.e == 1) {
    r.case_id = 3;
    r.case_law = p * q2 <= q1 && p * d2 <= d1 && ((p * q2 == q1) == (p * d2 == d1));
    const ModelStep2 m = second_step_in_model(src, var);
    if (m.q != q2) {
      r.notes.push_back("q(x^(1/p)) differs between the K-model (" + std::to_string(m.q) +
                        ") and the re-presentation (" + std::to_string(q2) + ")");
      r.case_law = false;
    }
    r.simple_extension = !m.lead_in_L;
    if (*r.simple_extension != (p * q2 == q1)) r.case_law = false;
    r.genus_law = p * g2 <= g1 && (!*r.simple_extension || p * g2 == g1);
  } else {
    r.case_id = 4;
    r.case_law = p * q2 <= q1 && p * d2 + corr <= d1 && ((p * q2 == q1) == (p * d2 + corr == d1));
    r.genus_law = p * g2 + corr <= g1;
  }
  return r;
}

ChainReport full_genus_change(const PresentationSource& src, const std::vector<int>& order) {
  ChainReport out;
  out.order = order;
  if (out.order.empty()) {
    for (int v = 0; v < src(16).K.nvars(); ++v) out.order.push_back(v);
  }
  PresentationSource cur = src;
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    const int var = out.order[i];
    out.steps.push_back(run_step(cur, var));
    out.g10_full += out.steps.back().inv.genus_step;
    if (i + 1 < out.order.size()) cur = normalized_source(cur, var);
  }
  return out;
}

std::vector<InequalityVerdict> check_step_inequalities(const TwoStepReport& r, std::uint32_t p_u) {
  const long long p = p_u;
  const long long g1 = r.step1.inv.genus_step, g2 = r.step2.inv.genus_step;
  std::vector<InequalityVerdict> out;
  out.push_back({"p*g21 <= g10", p * g2 <= g1, std::to_string(p * g2) + " <= " + std::to_string(g1)});
  out.push_back({"case law (q, delta)", r.case_law, "case " + std::to_string(r.case_id)});
  out.push_back({"case law (genus)", r.genus_law, "case " + std::to_string(r.case_id)});
  if (r.case_id == 4) {
    const long long lhs = p * g2 + p * (p - 1) / 2;
    out.push_back({"p*g21 + p(p-1)/2 <= g10", lhs <= g1, std::to_string(lhs) + " <= " + std::to_string(g1)});
  }
  return out;
}

}  // namespace insep
