#include "insep/normalize.hpp"

#include <algorithm>
#include <memory>

namespace insep {

namespace {

std::string fresh_name(const std::string& base, const std::vector<std::string>& used) {
  auto taken = [&](const std::string& s) { return std::find(used.begin(), used.end(), s) != used.end(); };
  if (!taken(base)) return base;
  for (int i = 2;; ++i) {
    const std::string s = base + std::to_string(i);
    if (!taken(s)) return s;
  }
}

// Coordinates of an element of R as a polynomial in S and T, padded with
// `extra` trailing zero exponents.
STPoly elem_to_stpoly(const Ring& R, const Elem& a, int extra) {
  STPoly out;
  for (int b = 0; b < R.D(); ++b) {
    for (const auto& [j, c] : a.c[b].terms()) {
      std::vector<int> key{j};
      key.insert(key.end(), R.basis()[b].begin(), R.basis()[b].end());
      key.insert(key.end(), extra, 0);
      out[key] = c;
    }
  }
  return out;
}

STPoly pad_keys(const STPoly& f, int extra) {
  STPoly out;
  for (const auto& [key, c] : f) {
    std::vector<int> k = key;
    k.insert(k.end(), extra, 0);
    out[k] = c;
  }
  return out;
}

// R(1_x) as a K[[S]]-algebra on T_1..T_m and one more generator W:
// W = U with U^p = g when e = 1, W = Z with Z^p = S u^a when e = p.
class NormalizedModel {
 public:
  NormalizedModel(const Presentation& pres, const Ring& R, const QWitness& w, int N) : old_(pres) {
    p_ = static_cast<int>(pres.p());
    D_ = pres.rank();
    q_ = w.q;
    e_ = q_ % p_ == 0 ? 1 : p_;
    NB_ = N - q_;
    if (NB_ < 2) throw PrecisionExhausted("precision too small for normalization");
    const RatFunc x = w.x;
    const Elem u = R.div_s(R.sub(R.frobenius(w.r), R.constant(x)), q_);
    std::vector<std::string> used = pres.gens;
    used.push_back(pres.uniformizer);
    wname_ = fresh_name(e_ == 1 ? "U" : "Z", used);
    presK_.emplace(Presentation{pres.K, pres.gens, pres.degrees, {}, std::min(pres.tail_precision, NB_),
                          pres.uniformizer});
    for (const auto& t : pres.tails) presK_->tails.push_back(pad_keys(t, 1));
    presK_->gens.push_back(wname_);
    presK_->degrees.push_back(p_);
    Elem u_inv;
    if (e_ == 1) {
      presK_->tails.push_back(elem_to_stpoly(R, R.truncate(u, NB_), 1));
    } else {
      a_ = 1;
      while ((a_ * q_) % p_ != 1) ++a_;
      b_ = (a_ * q_ - 1) / p_;
      u_inv = R.unit_inverse(R.truncate(u, NB_));
      presK_->tails.push_back(elem_to_stpoly(R, R.shift(R.pow(R.truncate(u, NB_), a_), 1), 1));
    }
    B_ = std::make_unique<Ring>(*presK_, NB_);
    const Elem r = embed(w.r);
    if (e_ == 1) {
      xi_ = B_->sub(r, B_->shift(B_->gen(D_index_w()), q_ / p_));
      L_ = std::make_unique<ResidueField>(*presK_);
    } else {
      std::vector<int> zq(presK_->m(), 0);
      zq.back() = q_;
      xi_ = B_->sub(r, B_->mul(B_->monomial(zq), embed(R.pow(u_inv, b_))));
      u_inv_a_ = embed(R.pow(u_inv, a_));
      L_ = std::make_unique<ResidueField>(pres);
    }
  }

  int e() const { return e_; }
  int q() const { return q_; }
  const Ring& B() const { return *B_; }
  const ResidueField& L() const { return *L_; }
  const Presentation& presK() const { return *presK_; }
  const Elem& xi() const { return xi_; }
  const std::string& wname() const { return wname_; }
  int D_index_w() const { return presK_->m() - 1; }

  Elem embed(const Elem& a) const {
    Elem z = B_->zero();
    for (int b = 0; b < D_; ++b) z.c[b] = a.c[b].truncated(NB_);
    return z;
  }

  KVector residue(const Elem& z) const {
    if (e_ == 1) return B_->residue(z);
    KVector out;
    for (int b = 0; b < D_; ++b) out.push_back(z.c[b].coeff(0));
    return out;
  }

  Elem div_pi(const Elem& z) const {
    if (e_ == 1) return B_->div_s(z, 1);
    Elem shifted = B_->zero();
    Elem z0 = B_->zero();
    for (int b = 0; b < D_; ++b) z0.c[b] = z.c[b];
    for (int k = 1; k < p_; ++k) {
      for (int b = 0; b < D_; ++b) shifted.c[(k - 1) * D_ + b] = z.c[k * D_ + b];
    }
    for (int b = 0; b < D_; ++b) shifted.c[(p_ - 1) * D_ + b] = Series(B_->fq(), kExact);
    std::vector<int> zp(presK_->m(), 0);
    zp.back() = p_ - 1;
    const Elem tail = B_->mul(B_->mul(B_->div_s(z0, 1), u_inv_a_), B_->monomial(zp));
    return B_->add(shifted, tail);
  }

  int precision_pi(const Elem& z) const {
    if (e_ == 1) return B_->precision(z);
    int best = kExact;
    for (int k = 0; k < p_; ++k) {
      for (int b = 0; b < D_; ++b) best = std::min(best, p_ * z.c[k * D_ + b].precision() + k);
    }
    return best;
  }

  Elem uniformizer_image() const { return B_->s_power(1); }

 private:
  const Presentation& old_;
  int p_ = 0, D_ = 0, q_ = 0, e_ = 1, NB_ = 0, a_ = 0, b_ = 0;
  std::string wname_;
  std::optional<Presentation> presK_;
  std::unique_ptr<Ring> B_;
  std::unique_ptr<ResidueField> L_;
  Elem xi_;
  Elem u_inv_a_;
};

struct Tower {
  std::vector<int> chosen;
  std::vector<int> degrees;
  std::vector<std::vector<int>> betas;  // mixed radix, first chosen generator fastest
  std::unique_ptr<SquareSolver> solver;
};

bool in_span(const std::vector<KVector>& vs, const KVector& x, std::size_t n) {
  KMatrix a(n, KVector());
  for (std::size_t r = 0; r < n; ++r) {
    a[r].reserve(vs.size());
    for (const auto& v : vs) a[r].push_back(v[r]);
  }
  return solve(a, x, vs.size()).has_value();
}

Tower build_tower(const ResidueField& L, const KVector& xi, const std::vector<KVector>& cands, int p) {
  const std::size_t n = static_cast<std::size_t>(L.degree());
  Tower t;
  t.betas = {{}};
  std::vector<KVector> V;
  KVector xp = L.one();
  for (int a = 0; a < p; ++a) {
    V.push_back(xp);
    xp = L.mul(xp, xi);
  }
  for (std::size_t i = 0; i < cands.size() && V.size() < n; ++i) {
    const KVector& g = cands[i];
    std::vector<KVector> W = V;
    KVector gp = g;
    int d = 1;
    while (!in_span(W, gp, n)) {
      for (const auto& v : V) W.push_back(L.mul(v, gp));
      gp = L.mul(gp, g);
      ++d;
      if (W.size() > n) throw CheckFailure("tower construction exceeded the residue degree");
    }
    if (d == 1) continue;
    t.chosen.push_back(static_cast<int>(i));
    t.degrees.push_back(d);
    std::vector<std::vector<int>> nb;
    for (int j = 0; j < d; ++j) {
      for (const auto& b : t.betas) {
        std::vector<int> e = b;
        e.push_back(j);
        nb.push_back(e);
      }
    }
    for (auto& b : t.betas) b.push_back(0);
    t.betas = std::move(nb);
    V = std::move(W);
  }
  if (V.size() != n) throw CheckFailure("residue field tower over K' is incomplete");
  KMatrix M(n, KVector(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) M[r][c] = V[c][r];
  }
  t.solver = std::make_unique<SquareSolver>(M);
  if (!t.solver->invertible()) throw CheckFailure("residue basis over K' is singular");
  return t;
}

class Expander {
 public:
  Expander(const NormalizedModel& nm, const Tower& tower, const std::vector<int>& cand_gen, int var)
      : nm_(nm), tower_(tower), var_(var), p_(static_cast<int>(nm.B().p())) {
    const Ring& B = nm.B();
    Kp_ = std::make_unique<RationalField>(B.K().adjoin_root_of_var(var));
    std::vector<Elem> xipow{B.one()};
    for (int a = 1; a < p_; ++a) xipow.push_back(B.mul(xipow.back(), nm.xi()));
    for (const auto& beta : tower.betas) {
      Elem y = B.one();
      for (std::size_t k = 0; k < beta.size(); ++k) {
        if (beta[k] > 0) y = B.mul(y, B.pow(B.gen(cand_gen[tower.chosen[k]]), beta[k]));
      }
      for (int a = 0; a < p_; ++a) E_.push_back(B.mul(xipow[a], y));
    }
  }

  const RationalField& Kp() const { return *Kp_; }

  STPoly expand(Elem z, int target, int* known) const {
    const Ring& B = nm_.B();
    STPoly out;
    const int prec = std::min(target, nm_.precision_pi(z));
    *known = prec;
    const RatFunc s = Kp_->var(var_);
    for (int j = 0; j < prec; ++j) {
      const KVector c = tower_.solver->solve(nm_.residue(z));
      Elem sub = B.zero();
      for (std::size_t bi = 0; bi < tower_.betas.size(); ++bi) {
        RatFunc kappa = Kp_->zero();
        RatFunc sp = Kp_->one();
        for (int a = 0; a < p_; ++a) {
          const RatFunc& ca = c[a + p_ * bi];
          if (!ca.is_zero()) {
            kappa += Kp_->embed_into_root_ext(ca, var_) * sp;
            sub = B.add(sub, B.scale(E_[a + p_ * bi], ca));
          }
          sp *= s;
        }
        if (kappa.is_zero()) continue;
        std::vector<int> key{j};
        key.insert(key.end(), tower_.betas[bi].begin(), tower_.betas[bi].end());
        out[key] = kappa;
      }
      z = B.sub(z, sub);
      if (j + 1 < prec) z = nm_.div_pi(z);
    }
    return out;
  }

 private:
  const NormalizedModel& nm_;
  const Tower& tower_;
  int var_;
  int p_;
  std::unique_ptr<RationalField> Kp_;
  std::vector<Elem> E_;
};

Representation trivial_base_change(const Presentation& pres, int var) {
  const RationalField Kp = pres.K.adjoin_root_of_var(var);
  Representation rep(Presentation{Kp, pres.gens, pres.degrees, {}, pres.tail_precision, pres.uniformizer});
  for (const auto& t : pres.tails) {
    STPoly f;
    for (const auto& [key, c] : t) f[key] = Kp.embed_into_root_ext(c, var);
    rep.pres.tails.push_back(std::move(f));
  }
  std::vector<std::string> names{pres.uniformizer};
  names.insert(names.end(), pres.gens.begin(), pres.gens.end());
  for (int i = 0; i <= pres.m(); ++i) {
    rep.images.push_back(names[i] + " -> " + names[i]);
    std::vector<int> key(pres.m() + 1, 0);
    key[i] = 1;
    rep.image_polys.push_back(STPoly{{key, Kp.one()}});
  }
  return rep;
}

}  // namespace

Representation represent_normalization(const Presentation& pres, int var, int N) {
  const Ring R(pres, N);
  const RatFunc x = pres.K.var(var);
  const QWitness w = q_invariant(pres, x, N);
  if (w.q == 0) {
    Representation rep = trivial_base_change(pres, var);
    rep.note = "x^(1/p) not in the residue field: base change is already normal";
    return rep;
  }
  const NormalizedModel nm(pres, R, w, N);
  std::vector<KVector> cands;
  std::vector<int> cand_gen;
  std::vector<std::string> cand_names;
  const int ncand = nm.e() == 1 ? nm.presK().m() : pres.m();
  for (int i = 0; i < ncand; ++i) {
    cands.push_back(nm.L().gen(i));
    cand_gen.push_back(i);
    cand_names.push_back(nm.presK().gens[i]);
  }
  const int p = static_cast<int>(pres.p());
  const Tower tower = build_tower(nm.L(), nm.residue(nm.xi()), cands, p);
  const Expander ex(nm, tower, cand_gen, var);

  Representation rep(Presentation{ex.Kp(), {}, {}, {}, kExact, pres.uniformizer});
  rep.q = w.q;
  rep.e = nm.e();
  std::vector<std::string> gens;
  for (int c : tower.chosen) gens.push_back(cand_names[c]);
  const std::string uni = nm.e() == 1 ? pres.uniformizer : nm.wname();
  rep.pres.gens = gens;
  rep.pres.degrees = tower.degrees;
  rep.pres.uniformizer = uni;
  const Ring& B = nm.B();
  const int target = nm.e() == 1 ? N : p * N;
  for (std::size_t k = 0; k < tower.chosen.size(); ++k) {
    int known = 0;
    const Elem z = B.pow(B.gen(cand_gen[tower.chosen[k]]), static_cast<std::uint64_t>(tower.degrees[k]));
    rep.pres.tails.push_back(ex.expand(z, target, &known));
    rep.pres.tail_precision = std::min(rep.pres.tail_precision, known);
  }
  auto image = [&](const std::string& name, const Elem& z) {
    int known = 0;
    STPoly f = ex.expand(z, target, &known);
    rep.image_precision = std::min(rep.image_precision, known);
    rep.images.push_back(name + " -> " + stpoly_to_string(f, ex.Kp(), uni, gens) + " + O(" + uni + "^" +
                         std::to_string(known) + ")");
    rep.image_polys.push_back(std::move(f));
  };
  image(pres.uniformizer, nm.uniformizer_image());
  for (int i = 0; i < pres.m(); ++i) image(pres.gens[i], B.gen(i));
  try {
    check_presentation(rep.pres);
  } catch (const InputError& err) {
    throw CheckFailure(std::string("re-presentation failed: ") + err.what());
  }
  return rep;
}

ModelStep2 second_step_in_model(const Presentation& pres, int var, int N) {
  const Ring R(pres, N);
  const QWitness w = q_invariant(pres, pres.K.var(var), N);
  if (w.q == 0 || w.q % static_cast<int>(pres.p()) != 0) throw InputError("second_step_in_model needs e_1 = 1");
  const NormalizedModel nm(pres, R, w, N);
  ModelStep2 out;
  auto root = nm.L().pth_root(nm.residue(nm.xi()), 1);
  if (!root) return out;
  const Climb c = hill_climb(nm.B(), nm.L(), nm.xi(), nm.B().lift(*root), 1);
  out.q = c.q;
  out.lead_in_L = true;
  const int D = pres.rank();
  for (std::size_t i = D; i < c.lead.size(); ++i) {
    if (!c.lead[i].is_zero()) out.lead_in_L = false;
  }
  return out;
}

ModelStep2 second_step_in_model(const PresentationSource& src, int var, int n0, int cap) {
  ModelStep2 last;
  std::function<std::pair<int, bool>(int)> f = [&](int N) {
    last = second_step_in_model(src(N), var, N);
    return std::make_pair(last.q, last.lead_in_L);
  };
  const auto st = stable_compute(f, n0, cap);
  return ModelStep2{st.value.first, st.value.second};
}

PresentationSource normalized_source(const PresentationSource& src, int var, int cap) {
  auto cache = std::make_shared<std::optional<Presentation>>();
  return [src, var, cap, cache](int N) -> Presentation {
    if (*cache && (*cache)->tail_precision >= N) return **cache;
    int M = N + 8;
    for (;;) {
      try {
        Representation rep = represent_normalization(src(M), var, M);
        if (rep.pres.tail_precision >= N) {
          *cache = rep.pres;
          return rep.pres;
        }
      } catch (const PrecisionExhausted&) {
      }
      if (M > cap) throw PrecisionExhausted("normalized presentation not reachable below cap");
      M *= 2;
    }
  };
}

}  // namespace insep
