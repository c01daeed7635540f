#include "insep/verify.hpp"

#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "insep/errors.hpp"
#include "insep/parser.hpp"

namespace insep {

void VerdictSet::merge(const VerdictSet& o) {
  verdicts.insert(verdicts.end(), o.verdicts.begin(), o.verdicts.end());
}

bool VerdictSet::all_pass() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

std::optional<bool> VerdictSet::criterion_pass(int criterion) const {
  std::optional<bool> out;
  for (const auto& v : verdicts) {
    if (v.criterion != criterion) continue;
    out = out.value_or(true) && v.pass;
  }
  return out;
}

Verdict check_tate(long long g, std::uint32_t p) {
  Verdict v;
  v.criterion = 9;
  v.name = "tate divisibility";
  const long long d = p == 2 ? 1 : (static_cast<long long>(p) - 1) / 2;
  v.pass = g % d == 0;
  v.detail = "g = " + std::to_string(g) + ", (p-1)/2 = " + std::to_string(d);
  return v;
}

Verdict genus_jacobian_identity(long long g10_full, long long jac, std::uint32_t p) {
  Verdict v;
  v.criterion = 8;
  v.name = "2p*g10 == (p-1)*jac";
  const long long lhs = 2LL * p * g10_full;
  const long long rhs = (static_cast<long long>(p) - 1) * jac;
  v.pass = lhs == rhs;
  v.detail = "g10 = " + std::to_string(g10_full) + ", jac = " + std::to_string(jac) + ": " +
             std::to_string(lhs) + (v.pass ? " == " : " != ") + std::to_string(rhs);
  return v;
}

Verdict check_genus_jacobian(const PresentationSource& src, std::uint32_t p) {
  return genus_jacobian_identity(full_genus_change(src).g10_full, jac_number(src).jac_smith, p);
}

namespace {

using Check = std::function<std::pair<bool, std::string>()>;

void guarded(VerdictSet& out, const std::string& subject, int criterion, const std::string& name,
             const Check& fn) {
  Verdict v;
  v.subject = subject;
  v.criterion = criterion;
  v.name = name;
  try {
    auto [ok, detail] = fn();
    v.pass = ok;
    v.detail = detail;
  } catch (const CheckFailure& e) {
    v.detail = std::string("check failure: ") + e.what();
  } catch (const PrecisionExhausted& e) {
    v.detail = std::string("precision exhausted: ") + e.what();
  } catch (const InputError& e) {
    v.detail = std::string("input error: ") + e.what();
  } catch (const std::exception& e) {
    v.detail = std::string("error: ") + e.what();
  }
  out.add(std::move(v));
}

void add_verdict(VerdictSet& out, const std::string& subject, Verdict v) {
  v.subject = subject;
  out.add(std::move(v));
}

std::string ipow(std::uint32_t p, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return std::to_string(r);
}

std::string num(long long v) { return std::to_string(v); }

std::string eq_detail(long long a, long long b) { return num(a) + (a == b ? " == " : " != ") + num(b); }

PresentationSource hensel_source(const RationalField& K, const std::string& f, const std::string& b0) {
  const STPoly fp = parse_stpoly(f, K, "S", {"Y"});
  const STPoly bp = parse_stpoly(b0, K, "S", {"Y"});
  return [K, fp, bp](int N) { return hensel_prepare(K, fp, bp, N); };
}

}  // namespace

std::string Fixture::id() const {
  std::string s = family + ":p=" + std::to_string(p);
  if (n) s += ":n=" + std::to_string(n);
  if (m) s += ":m=" + std::to_string(m);
  return s;
}

std::vector<Fixture> corpus_fixtures() {
  std::vector<Fixture> out;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const std::string P = std::to_string(p);
    const std::string P2 = ipow(p, 2);
    const std::string P3 = ipow(p, 3);
    const std::string tr = "t_r" + P;
    auto base = [&](const std::string& fam) {
      Fixture f;
      f.family = fam;
      f.p = p;
      f.field_vars = {"t"};
      return f;
    };
    {
      Fixture f = base("fam3");
      f.hypersurface = "Y^" + num(p + 1) + " - t*Y - S^" + P2;
      f.point_factor = "Y^" + P + " - t";
      f.step2_hypersurface = "Y^" + num(p + 1) + " - " + tr + "*Y - S^" + P;
      f.step2_point_factor = "Y^" + P + " - " + tr;
      f.case_id = 3;
      f.strict_branch = false;
      f.simple_extension = true;
      out.push_back(f);
    }
    {
      Fixture f = base("fam3prime");
      f.field_vars = {"s", "t"};
      f.var = 1;
      f.hypersurface = "Y^" + P + " - t - Y*S^" + P3 + " + s^" + P + "*S^" + P2;
      f.point_factor = "Y^" + P + " - t";
      f.step2_hypersurface = "Y^" + P + " - " + tr + " - Y*S^" + P2 + " + s*S^" + P;
      f.step2_point_factor = "Y^" + P + " - " + tr;
      f.case_id = 3;
      f.q1 = static_cast<int>(p * p * p);
      f.q2 = static_cast<int>(p);
      f.strict_branch = true;
      f.simple_extension = false;
      out.push_back(f);
    }
    for (int n = 2; n <= 4; ++n) {
      if (n % static_cast<int>(p) == 0) continue;
      const std::string N = std::to_string(n);
      {
        Fixture f = base("fam1");
        f.n = n;
        f.hypersurface = "Y^" + P2 + " - t - S^" + N;
        f.point_factor = "Y^" + P2 + " - t";
        f.step2_hypersurface = "Y^" + P + " - " + tr + " - S^" + N;
        f.step2_point_factor = "Y^" + P + " - " + tr;
        f.case_id = 1;
        f.e1 = f.e2 = static_cast<int>(p);
        f.q1 = f.q2 = n;
        out.push_back(f);
      }
      {
        Fixture f = base("fam2");
        f.n = n;
        f.hypersurface = "Y^" + num(p + p * p) + " - t*Y^" + P + " - S^" + num(p + n) + " + S^" + P;
        f.point_factor = "Y^" + P2 + " - t";
        f.step2_hypersurface = "Y^" + num(p + 1) + " - " + tr + "*Y - S^" + num(p + n) + " + S^" + P;
        f.step2_point_factor = "Y^" + P + " - " + tr;
        f.case_id = 2;
        f.e1 = static_cast<int>(p);
        out.push_back(f);
      }
      {
        Fixture f = base("fam4");
        f.n = n;
        f.hypersurface = "Y^" + num(p + 1) + " - t*Y - S^" + num(n * p);
        f.point_factor = "Y^" + P + " - t";
        f.step2_hypersurface = "Y^" + num(p + 1) + " - " + tr + "*Y - S^" + N;
        f.step2_point_factor = "Y^" + P + " - " + tr;
        f.case_id = 4;
        f.e2 = static_cast<int>(p);
        f.q1 = n * static_cast<int>(p);
        f.q2 = n;
        f.strict_branch = false;
        out.push_back(f);
      }
      {
        Fixture f = base("fam4prime");
        f.n = n;
        f.m = n + 2;
        f.hypersurface = "Y^" + num(p + 1) + " - t*Y + S^" + num(n * p) + "*Y - S^" + num(f.m * p);
        f.point_factor = "Y^" + P + " - t";
        f.step2_hypersurface =
            "Y^" + num(p + 1) + " - " + tr + "*Y + S^" + N + "*Y - S^" + num(f.m);
        f.step2_point_factor = "Y^" + P + " - " + tr;
        f.case_id = 4;
        f.e2 = static_cast<int>(p);
        f.q1 = f.m * static_cast<int>(p);
        f.q2 = n;
        f.strict_branch = true;
        out.push_back(f);
      }
    }
  }
  return out;
}

std::optional<Fixture> find_fixture(const std::string& id) {
  for (const auto& f : corpus_fixtures()) {
    if (f.id() == id) return f;
  }
  return std::nullopt;
}

RationalField fixture_field(const Fixture& fx) {
  return RationalField(FiniteField::prime(fx.p), fx.field_vars);
}

PresentationSource fixture_source(const Fixture& fx, const RationalField& K) {
  return hensel_source(K, fx.hypersurface, fx.point_factor);
}

PresentationSource fixture_step2_source(const Fixture& fx, const RationalField& K1) {
  return hensel_source(K1, fx.step2_hypersurface, fx.step2_point_factor);
}

namespace {
using Res = std::pair<bool, std::string>;
}  // namespace

VerdictSet run_single_checks(const std::string& subject, const PresentationSource& src, int var) {
  VerdictSet out;
  const Presentation base = src(16);
  const std::uint32_t p = base.p();
  const int m = base.m();
  const RatFunc x = base.K.var(var);

  guarded(out, subject, 2, "q_invariant == brute_force_q", [&]() -> Res {
    const QWitness w = q_invariant(src, x);
    const int vb = w.q + 1;
    const int b = brute_force_q(src(vb + 2), x, w.q / static_cast<int>(p) + 1, vb);
    return {b == w.q, "q = " + eq_detail(w.q, b)};
  });

  std::optional<InvariantReport> inv;
  std::optional<DeltaOracle> oracle;
  guarded(out, subject, 3, "delta: formula == combinatorial == lattice", [&]() -> Res {
    inv = delta_conductor(src, x);
    if (inv->q == 0) return {inv->delta == 0, "x^(1/p) not in L, delta = " + num(inv->delta)};
    oracle = delta_oracle(src, var, *inv);
    const bool ok = oracle->formula == oracle->combinatorial && oracle->formula == oracle->lattice;
    return {ok, "formula " + num(oracle->formula) + ", combinatorial " + num(oracle->combinatorial) +
                    ", lattice " + num(oracle->lattice)};
  });
  guarded(out, subject, 4, "conductor * f == 2 delta", [&]() -> Res {
    if (!inv) throw CheckFailure("invariants unavailable");
    bool ok = inv->conductor_exponent * inv->f == 2 * inv->delta;
    std::string d = "c = " + num(inv->conductor_exponent) + ", f = " + num(inv->f) + ", delta = " + num(inv->delta);
    if (oracle) {
      ok = ok && oracle->conductor_identity && oracle->lattice_conductor == inv->conductor_exponent;
      d += ", lattice conductor " + num(oracle->lattice_conductor);
    }
    return {ok, d};
  });

  std::optional<JacobianReport> jr;
  guarded(out, subject, 7, "jac: Smith == Fitting, generic rank 1", [&]() -> Res {
    jr = jac_number(src);
    const bool ok = jr->jac_smith == jr->jac_fitting && jr->torsion_dim == jr->jac_smith &&
                    static_cast<int>(jr->exponents.size()) == m;
    return {ok, "Smith " + num(jr->jac_smith) + ", Fitting " + num(jr->jac_fitting) + ", divisors " +
                    num(static_cast<long long>(jr->exponents.size())) + " for m = " + num(m)};
  });

  std::optional<ChainReport> chain;
  guarded(out, subject, 8, "2p*g10 == (p-1)*jac", [&]() -> Res {
    if (!jr) throw CheckFailure("jacobian number unavailable");
    chain = full_genus_change(src);
    const Verdict v = genus_jacobian_identity(chain->g10_full, jr->jac_smith, p);
    return {v.pass, v.detail};
  });
  if (chain) {
    for (const auto& st : chain->steps) add_verdict(out, subject + " step " + st.x, check_tate(st.inv.genus_step, p));
    add_verdict(out, subject + " full", check_tate(chain->g10_full, p));
  }

  guarded(out, subject, 10, "kernel chain sums to jac", [&]() -> Res {
    if (!jr) throw CheckFailure("jacobian number unavailable");
    const KernelChain kc = kernel_dims_along_chain(src);
    bool ok = kc.total == jr->jac_smith;
    std::string d = "sum " + eq_detail(kc.total, jr->jac_smith) + "; steps";
    for (const auto& st : kc.steps) {
      ok = ok && st.dim == st.closed_form;
      d += " " + num(st.dim) + "/" + num(st.closed_form);
    }
    return {ok, d};
  });
  return out;
}

VerdictSet run_fixture(const Fixture& fx) {
  VerdictSet out;
  const std::string subject = fx.id();
  const RationalField K = fixture_field(fx);
  const RationalField K1 = K.adjoin_root_of_var(fx.var);
  const PresentationSource src = fixture_source(fx, K);
  const PresentationSource src2 = fixture_step2_source(fx, K1);
  const std::uint32_t p = fx.p;

  bool ingested = false;
  guarded(out, subject, 0, "ingestion", [&]() -> Res {
    const std::string s = check_presentation(src(16));
    const std::string s2 = check_presentation(src2(16));
    ingested = true;
    return {true, s + "; R(1): " + s2};
  });
  if (!ingested) return out;
  out.merge(run_single_checks(subject, src, fx.var));
  out.merge(run_single_checks(subject + " R(1)", src2, fx.var));

  std::optional<TwoStepReport> r;
  guarded(out, subject, 5, "two-step case law", [&]() -> Res {
    r = two_step_analysis(src, fx.var, src2);
    const bool ok = r->case_id == fx.case_id && r->step1.inv.e == fx.e1 && r->step2.inv.e == fx.e2 &&
                    r->case_law && r->genus_law;
    std::ostringstream d;
    d << "case " << r->case_id << " (expected " << fx.case_id << "), e = (" << r->step1.inv.e << ", "
      << r->step2.inv.e << "), q = (" << r->step1.inv.q << ", " << r->step2.inv.q << "), laws "
      << r->case_law << r->genus_law;
    if (r->fallback) d << ", second step from the explicit R(1)";
    return {ok, d.str()};
  });
  if (!r) return out;

  if (fx.q1 || fx.q2) {
    guarded(out, subject, 2, "stated q values", [&]() -> Res {
      const bool ok = (!fx.q1 || *fx.q1 == r->step1.inv.q) && (!fx.q2 || *fx.q2 == r->step2.inv.q);
      return {ok, "q(t) = " + num(r->step1.inv.q) + ", q(t^(1/p)) = " + num(r->step2.inv.q)};
    });
  }
  guarded(out, subject, 2, "second step agrees with the explicit R(1)", [&]() -> Res {
    const InvariantReport i2 = delta_conductor(src2, K1.var(fx.var));
    const bool ok = i2.q == r->step2.inv.q && i2.delta == r->step2.inv.delta && i2.e == r->step2.inv.e;
    return {ok, "q " + eq_detail(r->step2.inv.q, i2.q) + ", delta " + eq_detail(r->step2.inv.delta, i2.delta)};
  });
  if (fx.strict_branch) {
    const bool strict = *fx.strict_branch;
    guarded(out, subject, 5, strict ? "strict branch p*q2 < q1" : "equality branch p*q2 == q1", [&]() -> Res {
      const long long lhs = static_cast<long long>(p) * r->step2.inv.q;
      const long long q1 = r->step1.inv.q;
      return {strict ? lhs < q1 : lhs == q1, "p*q2 = " + num(lhs) + ", q1 = " + num(q1)};
    });
  }
  if (fx.simple_extension) {
    guarded(out, subject, 5, "simplicity of L(2_x) over L", [&]() -> Res {
      if (!r->simple_extension) return {false, "not determined"};
      return {*r->simple_extension == *fx.simple_extension,
              std::string(*r->simple_extension ? "simple" : "not simple")};
    });
  }
  for (const auto& iv : check_step_inequalities(*r, p)) {
    Verdict v;
    v.criterion = 6;
    v.name = iv.name;
    v.pass = iv.holds;
    v.detail = iv.detail;
    add_verdict(out, subject, v);
  }
  add_verdict(out, subject + " g21", check_tate(r->step2.inv.genus_step, p));
  return out;
}

VerdictSet run_two_step_checks(const std::string& subject, const PresentationSource& src, int var,
                               const PresentationSource& step2) {
  VerdictSet out;
  std::optional<TwoStepReport> r;
  guarded(out, subject, 5, "two-step case law", [&]() -> Res {
    r = two_step_analysis(src, var, step2);
    return {r->case_law && r->genus_law, "case " + num(r->case_id) + ", q = (" + num(r->step1.inv.q) + ", " +
                                              num(r->step2.inv.q) + ")"};
  });
  if (!r) return out;
  const std::uint32_t p = src(16).p();
  for (const auto& iv : check_step_inequalities(*r, p)) {
    Verdict v;
    v.criterion = 6;
    v.name = iv.name;
    v.pass = iv.holds;
    v.detail = iv.detail;
    add_verdict(out, subject, v);
  }
  add_verdict(out, subject + " g21", check_tate(r->step2.inv.genus_step, p));
  return out;
}

VerdictSet run_random(std::uint32_t p, int count, std::uint32_t seed) {
  VerdictSet out;
  std::mt19937 rng(seed);
  const RationalField K(FiniteField::prime(p), {"t"});
  for (int i = 0; i < count; ++i) {
    const bool two = i % 2 == 1;
    int a = 0, b = 0;
    do {
      a = 1 + static_cast<int>(rng() % 11);
      b = a + 1 + static_cast<int>(rng() % static_cast<std::uint32_t>(12 - a));
    } while (b % static_cast<int>(p) == 0 || (two && a % static_cast<int>(p) == 0));
    const std::string c = num(1 + rng() % (p - 1));
    const std::string d = num(1 + rng() % (p - 1));
    std::vector<std::string> gens;
    std::vector<std::string> rels;
    if (two) {
      gens = {"T1", "T2"};
      rels = {"T1^" + num(p) + " - t - " + c + "*S^" + num(a), "T2^" + num(p) + " - T1 - " + d + "*S^" + num(b)};
    } else {
      const int k = 1 + static_cast<int>(rng() % 2);
      gens = {"T"};
      rels = {"T^" + ipow(p, k) + " - t - " + c + "*S^" + num(a) + " - " + d + "*S^" + num(b)};
    }
    std::string subject = "random:p=" + num(p) + ":" + num(i) + " [";
    for (std::size_t j = 0; j < rels.size(); ++j) subject += (j ? ", " : "") + rels[j];
    subject += "]";
    std::optional<Presentation> pres;
    guarded(out, subject, 0, "ingestion", [&]() -> Res {
      std::vector<STPoly> polys;
      for (const auto& s : rels) polys.push_back(parse_stpoly(s, K, "S", gens));
      pres.emplace(presentation_from_relations(K, gens, polys));
      return {true, check_presentation(*pres)};
    });
    if (pres) out.merge(run_single_checks(subject, constant_source(*pres), 0));
  }
  return out;
}

VerdictSet coin_suite(int max_mn, int trials, std::uint32_t seed) {
  VerdictSet out;
  std::mt19937 rng(seed);
  const FiniteField& F = FiniteField::prime(7);
  for (int m = 2; m <= max_mn; ++m) {
    for (int n = 2; n <= max_mn; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const long long dim = static_cast<long long>(m - 1) * (n - 1) / 2;
      const long long cond = static_cast<long long>(m - 1) * (n - 1);
      guarded(out, "coin:m=" + num(m) + ":n=" + num(n), 1, "coin dimension and conductor", [&]() -> Res {
        bool ok = true;
        std::string d;
        for (int k = 0; k < trials; ++k) {
          std::vector<Fq> g(6), h(6);
          for (auto& x : g) x = static_cast<Fq>(rng() % 7);
          for (auto& x : h) x = static_cast<Fq>(rng() % 7);
          g[0] = static_cast<Fq>(1 + rng() % 6);
          h[0] = static_cast<Fq>(1 + rng() % 6);
          const CoinResult r = coin_dim(m, n, g, h, F);
          const bool here = r.dimension == dim && r.gap_count == dim && r.reduction_dimension == dim &&
                            r.conductor_exponent == cond && r.reduction_conductor == cond;
          if (!here) {
            d += "trial " + num(k) + ": reduction " + num(r.reduction_dimension) + "/" +
                 num(r.reduction_conductor) + "; ";
          }
          ok = ok && here;
        }
        return {ok, d.empty() ? "dim " + num(dim) + ", conductor " + num(cond) : d};
      });
    }
  }
  return out;
}

VerdictSet run_corpus(int random_per_p) {
  VerdictSet out;
  out.merge(coin_suite(30, 5, 1));
  for (const auto& fx : corpus_fixtures()) out.merge(run_fixture(fx));
  for (std::uint32_t p : {2u, 3u, 5u}) out.merge(run_random(p, random_per_p, 1000 + p));
  return out;
}

}  // namespace insep
