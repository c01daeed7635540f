#include "insep/rational_field.hpp"

#include <map>
#include <stdexcept>

namespace insep {

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(num_.field(), 1) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly(den_.field(), 1);
    return;
  }
  if (!den_.is_constant()) {
    const MPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *num_.exact_div(g);
      den_ = *den_.exact_div(g);
    }
  }
  const Fq lead = den_.leading().c;
  if (lead != 1) {
    const Fq inv = num_.field().inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ + o.num_);
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  if (o.den_.is_one()) {
    RatFunc r;
    r.num_ = num_ + o.num_ * den_;
    r.den_ = den_;
    if (r.num_.is_zero()) r.den_ = MPoly(field(), 1);
    return r;  // already reduced: gcd(n + m d, d) = gcd(n, d) = 1
  }
  if (den_.is_one()) return o + *this;
  const MPoly g = gcd(den_, o.den_);
  const MPoly d1 = *den_.exact_div(g);
  const MPoly d2 = *o.den_.exact_div(g);
  return RatFunc(num_ * d2 + o.num_ * d1, d1 * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  if (den_.is_one() && o.den_.is_one()) return RatFunc(num_ * o.num_);
  if (o.is_constant()) return scaled(o.num_.constant_term());
  if (is_constant()) return o.scaled(num_.constant_term());
  const MPoly g1 = gcd(num_, o.den_);
  const MPoly g2 = gcd(o.num_, den_);
  MPoly n1 = g1.is_one() ? num_ : *num_.exact_div(g1);
  MPoly d2 = g1.is_one() ? o.den_ : *o.den_.exact_div(g1);
  MPoly n2 = g2.is_one() ? o.num_ : *o.num_.exact_div(g2);
  MPoly d1 = g2.is_one() ? den_ : *den_.exact_div(g2);
  RatFunc r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  const Fq lead = r.den_.leading().c;
  if (lead != 1) {
    const Fq inv = field().inv(lead);
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in rational function field");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  const Fq lead = r.den_.leading().c;
  if (lead != 1) {
    const Fq inv = field().inv(lead);
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc r;
  r.num_ = num_.pow(static_cast<std::uint64_t>(k));
  r.den_ = den_.pow(static_cast<std::uint64_t>(k));
  return r;
}

RatFunc RatFunc::scaled(Fq c) const {
  RatFunc r = *this;
  r.num_ = num_.scaled(c);
  if (r.num_.is_zero()) r.den_ = MPoly(field(), 1);
  return r;
}

RatFunc RatFunc::derivative(int var) const {
  if (den_.is_one()) return RatFunc(num_.derivative(var));
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::frobenius(int k) const {
  RatFunc r;
  r.num_ = num_.frobenius(k);
  r.den_ = den_.frobenius(k);
  return r;
}

RatFunc RatFunc::stretch_var(int var, std::uint32_t factor) const {
  RatFunc r;
  r.num_ = num_.stretch_var(var, factor);
  r.den_ = den_.stretch_var(var, factor);
  return r;
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
  if (den_.is_one()) return num_.to_string(names);
  auto wrap = [&](const MPoly& p) {
    const std::string s = p.to_string(names);
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalField::RationalField(const FiniteField& fq, std::vector<std::string> base_names,
                             std::vector<int> root_levels)
    : fq_(&fq), names_(std::move(base_names)), levels_(std::move(root_levels)) {
  if (static_cast<int>(names_.size()) > kMaxVars) {
    throw std::invalid_argument("at most 3 transcendental variables are supported");
  }
  if (levels_.empty()) levels_.assign(names_.size(), 0);
  if (levels_.size() != names_.size()) throw std::invalid_argument("root levels mismatch");
}

std::vector<std::string> RationalField::display_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (levels_[i] == 0) {
      out.push_back(names_[i]);
    } else {
      std::uint64_t d = 1;
      for (int k = 0; k < levels_[i]; ++k) d *= characteristic();
      out.push_back(names_[i] + "^(1/" + std::to_string(d) + ")");
    }
  }
  return out;
}

std::vector<std::string> RationalField::symbol_names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (levels_[i] == 0) {
      out.push_back(names_[i]);
    } else {
      std::uint64_t d = 1;
      for (int k = 0; k < levels_[i]; ++k) d *= characteristic();
      out.push_back(names_[i] + "_r" + std::to_string(d));
    }
  }
  return out;
}

RatFunc RationalField::var(int i) const {
  if (i < 0 || i >= nvars()) throw std::out_of_range("variable index");
  return RatFunc(MPoly::monomial(*fq_, mono::var(i)));
}

RationalField RationalField::adjoin_root_of_var(int i) const {
  std::vector<int> lv = levels_;
  lv.at(i) += 1;
  return RationalField(*fq_, names_, lv);
}

RatFunc RationalField::embed_into_root_ext(const RatFunc& a, int i) const {
  return a.stretch_var(i, characteristic());
}

bool RationalField::same_as(const RationalField& o) const {
  return fq_ == o.fq_ && names_ == o.names_ && levels_ == o.levels_;
}

std::optional<RatFunc> is_pth_power(const RatFunc& a) {
  const FiniteField& f = a.field();
  const std::uint32_t p = f.characteristic();
  auto root = [&](const MPoly& x) -> std::optional<MPoly> {
    std::vector<Term> out;
    for (const auto& t : x.terms()) {
      auto ex = mono::exps(t.m);
      for (auto& e : ex) {
        if (e % p != 0) return std::nullopt;
        e /= p;
      }
      out.push_back({mono::make(ex), f.frobenius_inverse(t.c)});
    }
    return MPoly(f, std::move(out));
  };
  auto n = root(a.num());
  if (!n) return std::nullopt;
  auto d = root(a.den());
  if (!d) return std::nullopt;
  return RatFunc(*n, *d);
}

RatFunc partial_derivative(const RatFunc& a, int var) { return a.derivative(var); }

std::size_t decomp_size(const std::array<std::uint32_t, kMaxVars>& moduli) {
  std::size_t n = 1;
  for (auto m : moduli) n *= m;
  return n;
}

std::size_t decomp_index(const std::array<std::uint32_t, kMaxVars>& alpha,
                         const std::array<std::uint32_t, kMaxVars>& moduli) {
  std::size_t idx = 0;
  for (int v = 0; v < kMaxVars; ++v) idx = idx * moduli[v] + alpha[v];
  return idx;
}

namespace {

MPoly apply_psi(const MPoly& x, const std::array<std::uint32_t, kMaxVars>& moduli, int k) {
  const FiniteField& f = x.field();
  std::vector<Term> out;
  out.reserve(x.terms().size());
  for (const auto& t : x.terms()) {
    auto ex = mono::exps(t.m);
    for (int v = 0; v < kMaxVars; ++v) ex[v] /= moduli[v];
    Fq c = t.c;
    for (int i = 0; i < k; ++i) c = f.frobenius_inverse(c);
    out.push_back({mono::make(ex), c});
  }
  return MPoly(f, std::move(out));
}

bool in_subfield(const MPoly& x, const std::array<std::uint32_t, kMaxVars>& moduli) {
  for (const auto& t : x.terms()) {
    for (int v = 0; v < kMaxVars; ++v) {
      if (mono::exp(t.m, v) % moduli[v] != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<DecompTerm> decompose_over_subfield(const RatFunc& a,
                                                const std::array<std::uint32_t, kMaxVars>& moduli,
                                                int frobenius_k) {
  const FiniteField& f = a.field();
  std::uint32_t big = 1;
  for (auto m : moduli) big = std::max(big, m);
  MPoly num = a.num();
  MPoly den = a.den();
  if (!in_subfield(den, moduli)) {
    // d^big lies in the subfield; rewrite a = n d^{big-1} / d^big.
    std::uint32_t k = 0;
    for (std::uint32_t b = big; b > 1; b /= f.characteristic()) ++k;
    const MPoly dpow = den.frobenius(static_cast<int>(k));
    num = num * den.pow(big - 1);
    den = dpow;
  }
  const MPoly den_img = apply_psi(den, moduli, frobenius_k);
  std::map<std::size_t, std::pair<std::array<std::uint32_t, kMaxVars>, std::vector<Term>>> buckets;
  for (const auto& t : num.terms()) {
    auto ex = mono::exps(t.m);
    std::array<std::uint32_t, kMaxVars> alpha{};
    for (int v = 0; v < kMaxVars; ++v) {
      alpha[v] = ex[v] % moduli[v];
      ex[v] -= alpha[v];
    }
    auto& slot = buckets[decomp_index(alpha, moduli)];
    slot.first = alpha;
    slot.second.push_back({mono::make(ex), t.c});
  }
  std::vector<DecompTerm> out;
  for (auto& [idx, slot] : buckets) {
    const MPoly part(f, std::move(slot.second));
    out.push_back({slot.first, RatFunc(apply_psi(part, moduli, frobenius_k), den_img)});
  }
  return out;
}

std::vector<RatFunc> split_over_base(const RatFunc& a, int var, std::uint32_t p) {
  std::array<std::uint32_t, kMaxVars> moduli{1, 1, 1};
  moduli[var] = p;
  std::vector<RatFunc> out(p, RatFunc(a.field()));
  for (auto& term : decompose_over_subfield(a, moduli, 0)) out[term.alpha[var]] = term.coeff;
  return out;
}

}  // namespace insep
