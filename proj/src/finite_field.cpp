#include "insep/finite_field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace insep {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(Fq a, std::uint32_t p, std::uint32_t e) {
  Digits d(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Fq from_digits(const Digits& d, std::uint32_t p) {
  Fq a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Remainder of poly modulo a monic polynomial over F_p.
Digits poly_mod(Digits a, const Digits& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Digits f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Digits g(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      Digits r = poly_mod(f, g, p);
      trim(r);
      if (r.empty()) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  trim(modulus_);
  if (modulus_.empty()) modulus_ = {0, 1};
  e_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  if (modulus_.back() != 1) throw std::invalid_argument("field modulus must be monic");
  if (!is_irreducible_mod_p(modulus_, p)) {
    throw std::invalid_argument("field modulus is reducible over F_p");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e_; ++i) q *= p;
  if (q > 1024 && e_ > 1) throw std::invalid_argument("extension fields limited to q <= 1024");
  if (q > (1u << 30)) throw std::invalid_argument("characteristic too large");
  q_ = static_cast<std::uint32_t>(q);

  if (e_ > 1) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    for (Fq a = 0; a < q_; ++a) {
      const Digits da = to_digits(a, p_, e_);
      for (Fq b = 0; b < q_; ++b) {
        const Digits db = to_digits(b, p_, e_);
        Digits s(e_);
        for (std::uint32_t i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = from_digits(s, p_);
        Digits prod(2 * e_ - 1, 0);
        for (std::uint32_t i = 0; i < e_; ++i) {
          for (std::uint32_t j = 0; j < e_; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
          }
        }
        Digits r = poly_mod(prod, modulus_, p_);
        r.resize(e_, 0);
        mul_[a * q_ + b] = from_digits(r, p_);
      }
    }
    inv_.assign(q_, 0);
    for (Fq a = 1; a < q_; ++a) {
      for (Fq b = 1; b < q_; ++b) {
        if (mul_[a * q_ + b] == 1) {
          inv_[a] = b;
          break;
        }
      }
    }
  }
  frob_.resize(q_);
  frob_inv_.resize(q_);
  if (e_ == 1) {
    for (Fq a = 0; a < q_; ++a) frob_[a] = frob_inv_[a] = a;
  } else {
    for (Fq a = 0; a < q_; ++a) frob_[a] = pow(a, p_);
    for (Fq a = 0; a < q_; ++a) frob_inv_[frob_[a]] = a;
  }
}

const FiniteField& FiniteField::prime(std::uint32_t p) { return get(p, 1); }

const FiniteField& FiniteField::get(std::uint32_t p, std::uint32_t e) {
  if (e == 0) throw std::invalid_argument("extension degree must be positive");
  if (e == 1) return get(p, std::vector<std::uint32_t>{0, 1});
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Digits g(e + 1, 0);
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < e; ++i) {
      g[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    g[e] = 1;
    if (is_irreducible_mod_p(g, p)) return get(p, g);
  }
  throw std::logic_error("no irreducible polynomial found");
}

const FiniteField& FiniteField::get(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FiniteField>>
      registry;
  Digits key = modulus;
  for (auto& c : key) c %= p;
  trim(key);
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find({p, key});
  if (it != registry.end()) return *it->second;
  auto field = std::make_unique<FiniteField>(p, key);
  const FiniteField& ref = *field;
  registry.emplace(std::make_pair(p, key), std::move(field));
  return ref;
}

Fq FiniteField::add(Fq a, Fq b) const {
  if (e_ == 1) {
    const Fq s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  return add_[a * q_ + b];
}

Fq FiniteField::neg(Fq a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  Digits d = to_digits(a, p_, e_);
  for (auto& x : d) x = (p_ - x) % p_;
  return from_digits(d, p_);
}

Fq FiniteField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FiniteField::mul(Fq a, Fq b) const {
  if (e_ == 1) return static_cast<Fq>((static_cast<std::uint64_t>(a) * b) % p_);
  return mul_[a * q_ + b];
}

Fq FiniteField::inv(Fq a) const {
  if (a == 0) throw std::domain_error("division by zero in finite field");
  if (e_ == 1) return pow(a, p_ - 2);
  return inv_[a];
}

Fq FiniteField::pow(Fq a, std::uint64_t k) const {
  Fq result = 1;
  Fq base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Fq FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Fq>(r);
}

std::string FiniteField::to_string(Fq a) const {
  if (e_ == 1) return std::to_string(a);
  // Elements of extension fields print as polynomials in the generator `a`.
  const Digits d = to_digits(a, p_, e_);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string term;
    if (i == 0) {
      term = std::to_string(d[i]);
    } else {
      if (d[i] != 1) term = std::to_string(d[i]) + "*";
      term += "a";
      if (i > 1) term += "^" + std::to_string(i);
    }
    out += term;
  }
  return out.empty() ? "0" : "(" + out + ")";
}

}  // namespace insep
