#include "insep/series.hpp"

#include <algorithm>
#include <map>

namespace insep {

namespace {

int add_prec(int a, int b) {
  if (a >= kExact || b >= kExact) return kExact;
  return std::min(a + b, kExact);
}

}  // namespace

Series Series::constant(const RatFunc& c, int prec) { return monomial(c, 0, prec); }

Series Series::monomial(const RatFunc& c, int k, int prec) {
  Series s(c.field(), prec);
  if (k < prec && !c.is_zero()) s.terms_.push_back({k, c});
  return s;
}

RatFunc Series::coeff(int j) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), j,
                             [](const auto& t, int k) { return t.first < k; });
  if (it != terms_.end() && it->first == j) return it->second;
  return RatFunc(*f_);
}

void Series::add_term(int j, const RatFunc& c) {
  if (j >= prec_ || c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), j,
                             [](const auto& t, int k) { return t.first < k; });
  if (it != terms_.end() && it->first == j) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {j, c});
  }
}

std::optional<int> Series::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first;
}

Series Series::operator+(const Series& o) const {
  Series r(*f_, std::min(prec_, o.prec_));
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    int ja = a != terms_.end() ? a->first : INT_MAX;
    int jb = b != o.terms_.end() ? b->first : INT_MAX;
    int j = std::min(ja, jb);
    if (j >= r.prec_) break;
    if (ja == jb) {
      RatFunc c = a->second + b->second;
      if (!c.is_zero()) r.terms_.push_back({j, std::move(c)});
      ++a;
      ++b;
    } else if (ja < jb) {
      r.terms_.push_back(*a++);
    } else {
      r.terms_.push_back(*b++);
    }
  }
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::mul(const Series& o, int cap) const {
  const int va = terms_.empty() ? prec_ : terms_.front().first;
  const int vb = o.terms_.empty() ? o.prec_ : o.terms_.front().first;
  int prec = std::min(add_prec(prec_, vb), add_prec(o.prec_, va));
  prec = std::min(prec, cap);
  Series r(*f_, prec);
  if (terms_.empty() || o.terms_.empty()) return r;
  std::map<int, RatFunc> acc;
  for (const auto& [i, ci] : terms_) {
    if (i + vb >= prec) break;
    for (const auto& [j, cj] : o.terms_) {
      if (i + j >= prec) break;
      auto it = acc.find(i + j);
      if (it == acc.end()) {
        acc.emplace(i + j, ci * cj);
      } else {
        it->second += ci * cj;
      }
    }
  }
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back({k, std::move(c)});
  }
  return r;
}

Series Series::scaled(const RatFunc& c) const {
  if (c.is_zero()) return Series(*f_, prec_);
  if (c.is_one()) return *this;
  Series r(*f_, prec_);
  r.terms_.reserve(terms_.size());
  for (const auto& [j, a] : terms_) r.terms_.push_back({j, a * c});
  return r;
}

Series Series::truncated(int n) const {
  if (n >= prec_) return *this;
  Series r(*f_, n);
  for (const auto& t : terms_) {
    if (t.first >= n) break;
    r.terms_.push_back(t);
  }
  return r;
}

Series Series::shifted(int k) const {
  Series r(*f_, add_prec(prec_, k));
  r.terms_.reserve(terms_.size());
  for (const auto& [j, a] : terms_) r.terms_.push_back({j + k, a});
  return r;
}

Series Series::divided_by_s(int k) const {
  if (k == 0) return *this;
  if (!terms_.empty() && terms_.front().first < k) {
    throw std::domain_error("series not divisible by the requested power of S");
  }
  if (prec_ < k) throw PrecisionExhausted("series division by S beyond known precision");
  Series r(*f_, prec_ >= kExact ? kExact : prec_ - k);
  r.terms_.reserve(terms_.size());
  for (const auto& [j, a] : terms_) r.terms_.push_back({j - k, a});
  return r;
}

Series Series::frobenius_power(int cap) const {
  const int p = static_cast<int>(f_->characteristic());
  int prec = prec_ >= kExact ? kExact : prec_ * p;
  prec = std::min(prec, cap);
  Series r(*f_, prec);
  for (const auto& [j, a] : terms_) {
    if (j * p >= prec) break;
    r.terms_.push_back({j * p, a.frobenius(1)});
  }
  return r;
}

Series Series::derivative() const {
  Series r(*f_, prec_ >= kExact ? kExact : std::max(prec_ - 1, 0));
  for (const auto& [j, a] : terms_) {
    if (j == 0) continue;
    RatFunc c = a.scaled(f_->from_int(j));
    if (!c.is_zero()) r.terms_.push_back({j - 1, std::move(c)});
  }
  return r;
}

Series Series::map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const {
  Series r(*f_, prec_);
  for (const auto& [j, a] : terms_) {
    RatFunc c = fn(a);
    if (!c.is_zero()) {
      if (r.f_ != &c.field()) r.f_ = &c.field();
      r.terms_.push_back({j, std::move(c)});
    }
  }
  return r;
}

Series Series::stretched(int k) const {
  Series r(*f_, prec_ >= kExact ? kExact : prec_ * k);
  for (const auto& [j, a] : terms_) r.terms_.push_back({j * k, a});
  return r;
}

Series Series::unit_inverse() const {
  if (terms_.empty() || terms_.front().first != 0) {
    throw std::domain_error("unit_inverse: constant coefficient is zero");
  }
  const int n = prec_ >= kExact ? kExact : prec_;
  Series w = Series::constant(terms_.front().second.inverse(), 1);
  if (terms_.size() == 1) {
    w.prec_ = n;
    return w;
  }
  if (n >= kExact) throw PrecisionExhausted("inverse of a non-constant exact series needs a precision");
  const Series two = Series::constant(RatFunc(*f_, f_->from_int(2)), kExact);
  int have = 1;
  w.prec_ = kExact;  // treated as an exact candidate between steps
  while (have < n) {
    have = std::min(2 * have, n);
    Series uw = truncated(have).mul(w, have);
    w = w.mul(two - uw, have);
    w.prec_ = kExact;
  }
  w.prec_ = n;
  return w;
}

bool Series::operator==(const Series& o) const {
  if (prec_ != o.prec_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second) return false;
  }
  return true;
}

std::string Series::to_string(const std::vector<std::string>& names, const std::string& s) const {
  std::string out;
  for (const auto& [j, a] : terms_) {
    std::string c = a.to_string(names);
    const bool compound = c.find_first_of("+-/ ") != std::string::npos && !a.is_constant();
    if (!out.empty()) out += " + ";
    if (j == 0) {
      out += c;
      continue;
    }
    if (!a.is_one()) out += (compound ? "(" + c + ")" : c) + "*";
    out += s;
    if (j > 1) out += "^" + std::to_string(j);
  }
  if (out.empty()) out = "0";
  if (prec_ < kExact) out += " + O(" + s + "^" + std::to_string(prec_) + ")";
  return out;
}

}  // namespace insep
