#include "insep/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace insep {

namespace mono {

Monomial make(const std::array<std::uint32_t, kMaxVars>& e) {
  std::uint64_t total = 0;
  for (auto x : e) {
    if (x > 0xFFFFu) throw std::overflow_error("exponent overflow");
    total += x;
  }
  if (total > 0xFFFFu) throw std::overflow_error("total degree overflow");
  return (total << 48) | (static_cast<std::uint64_t>(e[0]) << 32) |
         (static_cast<std::uint64_t>(e[1]) << 16) | static_cast<std::uint64_t>(e[2]);
}

std::array<std::uint32_t, kMaxVars> exps(Monomial m) {
  return {exp(m, 0), exp(m, 1), exp(m, 2)};
}

Monomial mul(Monomial a, Monomial b) {
  if (total(a) + total(b) > 0xFFFFu) throw std::overflow_error("total degree overflow");
  for (int v = 0; v < kMaxVars; ++v) {
    if (exp(a, v) + exp(b, v) > 0xFFFFu) throw std::overflow_error("exponent overflow");
  }
  return a + b;
}

bool divides(Monomial a, Monomial b) {
  for (int v = 0; v < kMaxVars; ++v) {
    if (exp(a, v) > exp(b, v)) return false;
  }
  return true;
}

Monomial gcd(Monomial a, Monomial b) {
  std::array<std::uint32_t, kMaxVars> e{};
  for (int v = 0; v < kMaxVars; ++v) e[v] = std::min(exp(a, v), exp(b, v));
  return make(e);
}

Monomial var(int i, std::uint32_t power) {
  std::array<std::uint32_t, kMaxVars> e{};
  e[i] = power;
  return make(e);
}

}  // namespace mono

MPoly::MPoly(const FiniteField& f, Fq constant) : f_(&f) {
  if (constant != 0) terms_.push_back({0, constant});
}

MPoly::MPoly(const FiniteField& f, std::vector<Term> terms) : f_(&f), terms_(std::move(terms)) {
  normalize();
}

MPoly MPoly::monomial(const FiniteField& f, Monomial m, Fq c) {
  MPoly r(f);
  if (c != 0) r.terms_.push_back({m, c});
  return r;
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = f_->add(out.back().c, t.c);
    } else {
      out.push_back(t);
    }
    if (out.back().c == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Fq MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().m == 0) return terms_.back().c;
  return 0;
}

std::uint32_t MPoly::degree_in(int var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, mono::exp(t.m, var));
  return d;
}

std::uint32_t MPoly::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = 0xFFFFFFFFu;
  for (const auto& t : terms_) d = std::min(d, mono::exp(t.m, var));
  return d;
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return o;
  MPoly r(*f_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].m > o.terms_[j].m)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].m > terms_[i].m) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      const Fq c = f_->add(terms_[i].c, o.terms_[j].c);
      if (c != 0) r.terms_.push_back({terms_[i].m, c});
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.c = f_->neg(t.c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return MPoly(f_ ? *f_ : *o.f_);
  if (o.terms_.size() == 1) return shifted(o.terms_[0].m).scaled(o.terms_[0].c);
  if (terms_.size() == 1) return o.shifted(terms_[0].m).scaled(terms_[0].c);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) acc.push_back({mono::mul(a.m, b.m), f_->mul(a.c, b.c)});
  }
  return MPoly(*f_, std::move(acc));
}

MPoly MPoly::scaled(Fq c) const {
  if (c == 0) return MPoly(*f_);
  if (c == 1) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) t.c = f_->mul(t.c, c);
  return r;
}

MPoly MPoly::shifted(Monomial m) const {
  if (m == 0) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) t.m = mono::mul(t.m, m);
  return r;
}

MPoly MPoly::pow(std::uint64_t k) const {
  MPoly result(*f_, 1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const std::uint32_t e = mono::exp(t.m, var);
    if (e == 0) continue;
    const Fq c = f_->mul(t.c, f_->from_int(e));
    if (c == 0) continue;
    auto ex = mono::exps(t.m);
    ex[var] -= 1;
    out.push_back({mono::make(ex), c});
  }
  return MPoly(*f_, std::move(out));
}

std::optional<MPoly> MPoly::exact_div(const MPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return *this;
  if (d.terms_.size() == 1) {
    const Term& dt = d.terms_[0];
    const Fq inv = f_->inv(dt.c);
    MPoly r(*f_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!mono::divides(dt.m, t.m)) return std::nullopt;
      r.terms_.push_back({mono::div(t.m, dt.m), f_->mul(t.c, inv)});
    }
    return r;
  }
  const Term& lead = d.terms_.front();
  const Fq inv = f_->inv(lead.c);
  MPoly rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& rt = rem.terms_.front();
    if (!mono::divides(lead.m, rt.m)) return std::nullopt;
    const Term q{mono::div(rt.m, lead.m), f_->mul(rt.c, inv)};
    quot.push_back(q);
    rem = rem - d.shifted(q.m).scaled(q.c);
  }
  return MPoly(*f_, std::move(quot));
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(terms_.front().c));
}

MPoly MPoly::frobenius(int k) const {
  std::uint32_t factor = 1;
  for (int i = 0; i < k; ++i) factor *= f_->characteristic();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto ex = mono::exps(t.m);
    for (auto& e : ex) e *= factor;
    Fq c = t.c;
    for (int i = 0; i < k; ++i) c = f_->frobenius(c);
    out.push_back({mono::make(ex), c});
  }
  return MPoly(*f_, std::move(out));
}

MPoly MPoly::stretch_var(int var, std::uint32_t factor) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto ex = mono::exps(t.m);
    ex[var] *= factor;
    out.push_back({mono::make(ex), t.c});
  }
  return MPoly(*f_, std::move(out));
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string mon;
    for (int v = 0; v < kMaxVars; ++v) {
      const auto e = mono::exp(t.m, v);
      if (e == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v);
      if (e > 1) mon += "^" + std::to_string(e);
    }
    std::string coef = f_->to_string(t.c);
    std::string term;
    if (mon.empty()) {
      term = coef;
    } else if (t.c == 1) {
      term = mon;
    } else {
      term = coef + "*" + mon;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

namespace {

// Coefficients of `a` viewed as a polynomial in `var`.
std::map<std::uint32_t, MPoly> coefficients_in(const MPoly& a, int var) {
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (const auto& t : a.terms()) {
    auto ex = mono::exps(t.m);
    const std::uint32_t d = ex[var];
    ex[var] = 0;
    buckets[d].push_back({mono::make(ex), t.c});
  }
  std::map<std::uint32_t, MPoly> out;
  for (auto& [d, ts] : buckets) out.emplace(d, MPoly(a.field(), std::move(ts)));
  return out;
}

MPoly lead_coeff_in(const MPoly& a, int var) {
  auto cs = coefficients_in(a, var);
  return cs.rbegin()->second;
}

MPoly content_in(const MPoly& a, int var) {
  MPoly g(a.field());
  for (const auto& [d, c] : coefficients_in(a, var)) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MPoly primitive_part_in(const MPoly& a, int var) {
  if (a.is_zero()) return a;
  return *a.exact_div(content_in(a, var));
}

MPoly pseudo_rem(const MPoly& a, const MPoly& b, int var) {
  const std::uint32_t db = b.degree_in(var);
  const MPoly lb = lead_coeff_in(b, var);
  MPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const std::uint32_t dr = r.degree_in(var);
    const MPoly lr = lead_coeff_in(r, var);
    r = lb * r - (lr * b).shifted(mono::var(var, dr - db));
  }
  return r;
}

Monomial monomial_content(const MPoly& a) {
  Monomial g = a.terms().front().m;
  for (const auto& t : a.terms()) g = mono::gcd(g, t.m);
  return g;
}

int single_var(const MPoly& a, const MPoly& b) {
  int found = -1;
  for (int v = 0; v < kMaxVars; ++v) {
    if (a.involves(v) || b.involves(v)) {
      if (found >= 0) return -2;
      found = v;
    }
  }
  return found;
}

MPoly univariate_gcd(MPoly a, MPoly b, int var) {
  while (!b.is_zero()) {
    // a mod b with b made monic in var
    const MPoly bm = b.monic();
    const std::uint32_t db = bm.degree_in(var);
    MPoly r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
      const Term lt = r.leading();
      const std::uint32_t dr = mono::exp(lt.m, var);
      r = r - bm.shifted(mono::var(var, dr - db)).scaled(lt.c);
    }
    a = bm;
    b = r;
  }
  return a.monic();
}

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(a.field(), 1);

  const Monomial ma = monomial_content(a);
  const Monomial mb = monomial_content(b);
  const Monomial mg = mono::gcd(ma, mb);
  const MPoly a1 = *a.exact_div(MPoly::monomial(a.field(), ma));
  const MPoly b1 = *b.exact_div(MPoly::monomial(b.field(), mb));
  const MPoly gm = MPoly::monomial(a.field(), mg);
  if (a1.is_constant() || b1.is_constant()) return gm;

  const int sv = single_var(a1, b1);
  if (sv >= 0) return gm * univariate_gcd(a1, b1, sv);

  int var = -1;
  for (int v = 0; v < kMaxVars; ++v) {
    if (a1.involves(v) && b1.involves(v)) {
      var = v;
      break;
    }
  }
  if (var < 0) {
    // No shared variable: the gcd divides the content of each in any variable
    // appearing in only one of them.
    for (int v = 0; v < kMaxVars; ++v) {
      if (a1.involves(v)) return gm * gcd_rec(content_in(a1, v), b1);
    }
  }
  const MPoly ca = content_in(a1, var);
  const MPoly cb = content_in(b1, var);
  const MPoly c = gcd_rec(ca, cb);
  MPoly x = *a1.exact_div(ca);
  MPoly y = *b1.exact_div(cb);
  if (x.degree_in(var) < y.degree_in(var)) std::swap(x, y);
  MPoly g;
  while (true) {
    const MPoly r = pseudo_rem(x, y, var);
    if (r.is_zero()) {
      g = y;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = MPoly(a.field(), 1);
      break;
    }
    x = y;
    y = primitive_part_in(r, var);
  }
  return (gm * c * primitive_part_in(g, var)).monic();
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  return gcd_rec(a, b).monic();
}

}  // namespace insep
