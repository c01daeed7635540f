#include "insep/normalize.hpp"

namespace insep {

BaseChangedRing::BaseChangedRing(const Ring& R, int var, int e) : R_(&R), var_(var), e_(e) {
  if (var < 0 || var >= R.K().nvars()) throw InputError("base change needs a p-basis variable");
}

BaseChangedRing::Elem2 BaseChangedRing::from_ring(const Elem& a) const {
  Elem2 w(R_->p(), R_->zero());
  w[0] = a;
  return w;
}

BaseChangedRing::Elem2 BaseChangedRing::xi() const {
  Elem2 w(R_->p(), R_->zero());
  w[1] = R_->one();
  return w;
}

BaseChangedRing::Elem2 BaseChangedRing::add(const Elem2& a, const Elem2& b) const {
  Elem2 r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = R_->add(a[i], b[i]);
  return r;
}

BaseChangedRing::Elem2 BaseChangedRing::sub(const Elem2& a, const Elem2& b) const {
  Elem2 r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = R_->sub(a[i], b[i]);
  return r;
}

BaseChangedRing::Elem2 BaseChangedRing::mul(const Elem2& a, const Elem2& b) const {
  const std::size_t p = a.size();
  Elem2 r(p, R_->zero());
  const RatFunc x = this->x();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      Elem t = R_->mul(a[i], b[j]);
      if (i + j >= p) {
        r[i + j - p] = R_->add(r[i + j - p], R_->scale(t, x));
      } else {
        r[i + j] = R_->add(r[i + j], t);
      }
    }
  }
  return r;
}

Elem BaseChangedRing::frobenius(const Elem2& w) const {
  Elem acc = R_->zero();
  RatFunc xp = R_->K().one();
  for (const auto& c : w) {
    acc = R_->add(acc, R_->scale(R_->frobenius(c), xp));
    xp *= x();
  }
  return acc;
}

int BaseChangedRing::v1(const Elem2& w) const {
  const int v = R_->valuation_or_throw(frobenius(w));
  const int p = static_cast<int>(R_->p());
  if ((e_ * v) % p != 0) throw std::logic_error("extended valuation is not an integer");
  return e_ * v / p;
}

}  // namespace insep
