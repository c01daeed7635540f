#include "insep/inseparable_ext.hpp"

#include "insep/errors.hpp"

namespace insep {

SimpleInseparableExt::SimpleInseparableExt(const RationalField& K, RatFunc x) : K_(K), x_(std::move(x)) {
  if (is_pth_power(x_)) throw InputError("x is a p-th power in K");
  for (int i = 0; i < K_.nvars(); ++i) {
    if (x_ == K_.var(i)) var_ = i;
  }
}

SimpleInseparableExt::Elem SimpleInseparableExt::zero() const { return Elem(p(), K_.zero()); }

SimpleInseparableExt::Elem SimpleInseparableExt::one() const {
  Elem e = zero();
  e[0] = K_.one();
  return e;
}

SimpleInseparableExt::Elem SimpleInseparableExt::xi() const {
  Elem e = zero();
  e[1] = K_.one();
  return e;
}

SimpleInseparableExt::Elem SimpleInseparableExt::embed(const RatFunc& a) const {
  Elem e = zero();
  e[0] = a;
  return e;
}

SimpleInseparableExt::Elem SimpleInseparableExt::add(const Elem& a, const Elem& b) const {
  Elem r(p());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

SimpleInseparableExt::Elem SimpleInseparableExt::sub(const Elem& a, const Elem& b) const {
  Elem r(p());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

SimpleInseparableExt::Elem SimpleInseparableExt::mul(const Elem& a, const Elem& b) const {
  const std::size_t n = p();
  Elem r = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const RatFunc c = a[i] * b[j];
      if (i + j < n) {
        r[i + j] += c;
      } else {
        r[i + j - n] += c * x_;
      }
    }
  }
  return r;
}

bool SimpleInseparableExt::is_zero(const Elem& a) const {
  for (const auto& c : a) {
    if (!c.is_zero()) return false;
  }
  return true;
}

RatFunc SimpleInseparableExt::frobenius_norm(const Elem& a) const {
  RatFunc acc = K_.zero();
  RatFunc xp = K_.one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += a[i].frobenius(1) * xp;
    xp *= x_;
  }
  return acc;
}

SimpleInseparableExt::Elem SimpleInseparableExt::inverse(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  Elem pw = one();
  for (std::uint32_t i = 1; i < p(); ++i) pw = mul(pw, a);
  const RatFunc n = frobenius_norm(a).inverse();
  for (auto& c : pw) c *= n;
  return pw;
}

RationalField SimpleInseparableExt::flat_field() const {
  if (!var_) throw std::logic_error("x is not a p-basis variable");
  return K_.adjoin_root_of_var(*var_);
}

RatFunc SimpleInseparableExt::to_flat(const Elem& a) const {
  if (!var_) throw std::logic_error("x is not a p-basis variable");
  const RatFunc s = K_.var(*var_);
  RatFunc acc = K_.zero();
  RatFunc sp = K_.one();
  for (const auto& c : a) {
    acc += K_.embed_into_root_ext(c, *var_) * sp;
    sp *= s;
  }
  return acc;
}

SimpleInseparableExt::Elem SimpleInseparableExt::from_flat(const RatFunc& a) const {
  if (!var_) throw std::logic_error("x is not a p-basis variable");
  return split_over_base(a, *var_, p());
}

std::string SimpleInseparableExt::to_string(const Elem& a, const std::string& name) const {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = K_.to_string(a[i]);
    if (i == 0) {
      out += c;
      continue;
    }
    if (!a[i].is_one()) out += "(" + c + ")*";
    out += name;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

SimpleInseparableExt adjoin_pth_root(const RationalField& K, const RatFunc& x) {
  return SimpleInseparableExt(K, x);
}

}  // namespace insep
