#include "insep/local_ring.hpp"

#include <algorithm>
#include <sstream>

namespace insep {

namespace {

std::string term_names(const std::vector<int>& key, const std::string& s,
                       const std::vector<std::string>& gens) {
  std::string out;
  auto put = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  put(s, key[0]);
  for (std::size_t i = 1; i < key.size(); ++i) put(gens[i - 1], key[i]);
  return out;
}

std::string coeff_string(const RatFunc& c, const std::vector<std::string>& names) {
  std::string str = c.to_string(names);
  if (!c.is_constant() && (c.num().terms().size() > 1 || !c.den().is_one())) str = "(" + str + ")";
  return str;
}

}  // namespace

std::string stpoly_to_string(const STPoly& f, const RationalField& K, const std::string& s,
                             const std::vector<std::string>& gens) {
  std::string out;
  const auto names = K.symbol_names();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    const std::string mono = term_names(it->first, s, gens);
    std::string coeff = coeff_string(it->second, names);
    std::string piece;
    if (mono.empty()) {
      piece = coeff;
    } else if (it->second.is_one()) {
      piece = mono;
    } else {
      piece = coeff + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += piece;
  }
  return out.empty() ? "0" : out;
}

int Presentation::rank() const {
  int d = 1;
  for (int x : degrees) d *= x;
  return d;
}

std::vector<std::string> Presentation::relation_strings() const {
  std::vector<std::string> out;
  for (int i = 0; i < m(); ++i) {
    std::string lhs = gens[i] + (degrees[i] > 1 ? "^" + std::to_string(degrees[i]) : "");
    std::string rhs = stpoly_to_string(tails[i], K, uniformizer, gens);
    if (tail_precision < kExact) rhs += " + O(" + uniformizer + "^" + std::to_string(tail_precision) + ")";
    out.push_back(lhs + " - (" + rhs + ")");
  }
  return out;
}

Presentation presentation_from_relations(const RationalField& K, std::vector<std::string> gens,
                                         const std::vector<STPoly>& relations, int precision) {
  Presentation pres{K, std::move(gens), {}, {}, precision, "S"};
  const int m = pres.m();
  if (static_cast<int>(relations.size()) != m) throw InputError("need one relation per generator");
  for (int i = 0; i < m; ++i) {
    int d = 0;
    for (const auto& [key, c] : relations[i]) {
      if (static_cast<int>(key.size()) != m + 1) throw InputError("relation key size mismatch");
      d = std::max(d, key[i + 1]);
    }
    if (d == 0) throw InputError("relation " + std::to_string(i + 1) + " does not involve " + pres.gens[i]);
    STPoly tail;
    bool lead_ok = false;
    for (const auto& [key, c] : relations[i]) {
      if (key[i + 1] == d) {
        bool pure = key[0] == 0;
        for (int j = 0; j < m; ++j) {
          if (j != i && key[j + 1] != 0) pure = false;
        }
        if (!pure || !c.is_one()) {
          throw InputError("relation " + std::to_string(i + 1) + " is not monic in " + pres.gens[i]);
        }
        lead_ok = true;
        continue;
      }
      tail[key] = -c;
    }
    if (!lead_ok) throw InputError("relation " + std::to_string(i + 1) + " is not monic");
    pres.degrees.push_back(d);
    pres.tails.push_back(std::move(tail));
  }
  return pres;
}

Ring::Ring(const Presentation& pres, int N)
    : pres_(std::make_shared<const Presentation>(pres)), n_(N) {
  if (N > pres.tail_precision) {
    throw PrecisionExhausted("presentation known modulo " + pres.uniformizer + "^" +
                             std::to_string(pres.tail_precision) + ", requested " +
                             std::to_string(N));
  }
  const int m = pres.m();
  d_ = 1;
  radix_.assign(m, 1);
  table_radix_.assign(m, 1);
  int table_size = 1;
  for (int i = 0; i < m; ++i) {
    radix_[i] = d_;
    d_ *= pres.degrees[i];
    table_radix_[i] = table_size;
    table_size *= 2 * pres.degrees[i] - 1;
  }
  basis_.resize(d_);
  for (int idx = 0; idx < d_; ++idx) {
    std::vector<int> b(m);
    int r = idx;
    for (int i = 0; i < m; ++i) {
      b[i] = r % pres.degrees[i];
      r /= pres.degrees[i];
    }
    basis_[idx] = b;
  }
  const FiniteField& f = fq();
  tails_.resize(m);
  for (int i = 0; i < m; ++i) {
    std::map<std::vector<int>, Series> grouped;
    for (const auto& [key, c] : pres.tails[i]) {
      std::vector<int> texp(key.begin() + 1, key.end());
      auto it = grouped.find(texp);
      if (it == grouped.end()) it = grouped.emplace(texp, Series(f, std::min(N, pres.tail_precision))).first;
      it->second.add_term(key[0], c);
    }
    for (auto& [texp, s] : grouped) tails_[i].push_back({texp, std::move(s)});
  }
  table_.resize(table_size);
  for (int t = 0; t < table_size; ++t) {
    std::vector<int> e(m);
    int r = t;
    for (int i = 0; i < m; ++i) {
      e[i] = r % (2 * pres.degrees[i] - 1);
      r /= 2 * pres.degrees[i] - 1;
    }
    const int idx = index_of(e);
    if (idx >= 0) {
      Elem u = zero();
      u.c[idx] = Series::constant(K().one(), n_);
      table_[t] = std::move(u);
    } else {
      std::map<std::vector<int>, Series> work;
      work.emplace(e, Series::constant(K().one(), n_));
      table_[t] = reduce_worklist(std::move(work));
    }
  }
  tau_.resize(d_);
}

int Ring::index_of(const std::vector<int>& b) const {
  int idx = 0;
  for (int i = 0; i < pres_->m(); ++i) {
    if (b[i] < 0 || b[i] >= pres_->degrees[i]) return -1;
    idx += b[i] * radix_[i];
  }
  return idx;
}

Elem Ring::reduce_worklist(std::map<std::vector<int>, Series> work) const {
  Elem res = zero();
  const int m = pres_->m();
  std::size_t steps = 0;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    std::vector<int> e = it->first;
    Series s = std::move(it->second);
    work.erase(it);
    if (s.is_zero_to_precision() && s.precision() >= n_) continue;
    const int idx = index_of(e);
    if (idx >= 0) {
      res.c[idx] = res.c[idx] + s;
      continue;
    }
    if (++steps > 5'000'000) throw std::runtime_error("reduction does not terminate");
    int i = m - 1;
    while (i >= 0 && e[i] < pres_->degrees[i]) --i;
    e[i] -= pres_->degrees[i];
    for (const auto& [texp, ts] : tails_[i]) {
      std::vector<int> key = e;
      for (int j = 0; j < m; ++j) key[j] += texp[j];
      Series prod = s.mul(ts, n_);
      auto slot = work.find(key);
      if (slot == work.end()) {
        work.emplace(std::move(key), std::move(prod));
      } else {
        slot->second = slot->second + prod;
      }
    }
    if (tails_[i].empty()) {
      // T_i^{d_i} = 0 modulo the known precision of the tail.
      Series z(fq(), std::min(s.precision(), pres_->tail_precision));
      if (z.precision() < n_) {
        auto slot = work.find(e);
        if (slot == work.end()) work.emplace(e, z);
      }
    }
  }
  for (auto& c : res.c) c = c.truncated(n_);
  return res;
}

Elem Ring::zero() const {
  Elem z;
  z.c.assign(d_, Series(fq(), n_));
  return z;
}

Elem Ring::one() const { return constant(K().one()); }

Elem Ring::constant(const RatFunc& a) const {
  Elem z = zero();
  z.c[0] = Series::constant(a, n_);
  return z;
}

Elem Ring::s_power(int k) const {
  Elem z = zero();
  z.c[0] = Series::monomial(K().one(), k, n_);
  return z;
}

Elem Ring::gen(int i) const {
  std::vector<int> e(pres_->m(), 0);
  e[i] = 1;
  return monomial(e);
}

Elem Ring::monomial(const std::vector<int>& e) const {
  bool in_table = true;
  int t = 0;
  for (int i = 0; i < pres_->m(); ++i) {
    if (e[i] > 2 * (pres_->degrees[i] - 1)) in_table = false;
    t += e[i] * table_radix_[i];
  }
  if (in_table) return table_[t];
  std::vector<int> e1(e.size()), e2(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e1[i] = e[i] / 2;
    e2[i] = e[i] - e1[i];
  }
  return mul(monomial(e1), monomial(e2));
}

Elem Ring::from_poly(const STPoly& f) const {
  std::map<std::vector<int>, Series> work;
  for (const auto& [key, c] : f) {
    if (key[0] >= n_) continue;
    std::vector<int> texp(key.begin() + 1, key.end());
    auto it = work.find(texp);
    if (it == work.end()) it = work.emplace(texp, Series(fq(), n_)).first;
    it->second.add_term(key[0], c);
  }
  Elem res = zero();
  for (auto& [texp, s] : work) {
    if (s.is_zero_to_precision()) continue;
    res = add(res, scale_series(monomial(texp), s));
  }
  return res;
}

Elem Ring::lift(const KVector& coords) const {
  Elem z = zero();
  for (int i = 0; i < d_; ++i) z.c[i] = Series::constant(coords[i], n_);
  return z;
}

Elem Ring::add(const Elem& a, const Elem& b) const {
  Elem r;
  r.c.resize(d_);
  for (int i = 0; i < d_; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Elem Ring::sub(const Elem& a, const Elem& b) const {
  Elem r;
  r.c.resize(d_);
  for (int i = 0; i < d_; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

Elem Ring::neg(const Elem& a) const {
  Elem r;
  r.c.resize(d_);
  for (int i = 0; i < d_; ++i) r.c[i] = -a.c[i];
  return r;
}

Elem Ring::mul(const Elem& a, const Elem& b) const {
  std::vector<std::optional<Series>> acc(table_.size());
  const int m = pres_->m();
  for (int i = 0; i < d_; ++i) {
    const Series& ai = a.c[i];
    if (ai.is_zero_to_precision() && ai.precision() >= n_) continue;
    for (int j = 0; j < d_; ++j) {
      const Series& bj = b.c[j];
      if (bj.is_zero_to_precision() && bj.precision() >= n_) continue;
      int t = 0;
      for (int k = 0; k < m; ++k) t += (basis_[i][k] + basis_[j][k]) * table_radix_[k];
      Series prod = ai.mul(bj, n_);
      if (acc[t]) {
        *acc[t] = *acc[t] + prod;
      } else {
        acc[t] = std::move(prod);
      }
    }
  }
  Elem r = zero();
  for (std::size_t t = 0; t < acc.size(); ++t) {
    if (!acc[t]) continue;
    const Series& s = *acc[t];
    if (s.is_zero_to_precision() && s.precision() >= n_) continue;
    const Elem& nf = table_[t];
    for (int k = 0; k < d_; ++k) {
      const Series& ck = nf.c[k];
      if (ck.is_zero_to_precision() && ck.precision() >= n_) continue;
      r.c[k] = r.c[k] + s.mul(ck, n_);
    }
  }
  return r;
}

Elem Ring::scale(const Elem& a, const RatFunc& c) const {
  Elem r;
  r.c.reserve(d_);
  for (const auto& s : a.c) r.c.push_back(s.scaled(c));
  return r;
}

Elem Ring::scale_series(const Elem& a, const Series& c) const {
  Elem r;
  r.c.reserve(d_);
  for (const auto& s : a.c) r.c.push_back(s.mul(c, n_));
  return r;
}

Elem Ring::shift(const Elem& a, int k) const {
  Elem r;
  r.c.reserve(d_);
  for (const auto& s : a.c) r.c.push_back(s.shifted(k).truncated(n_));
  return r;
}

Elem Ring::div_s(const Elem& a, int k) const {
  Elem r;
  r.c.reserve(d_);
  for (const auto& s : a.c) r.c.push_back(s.divided_by_s(k));
  return r;
}

Elem Ring::pow(const Elem& a, std::uint64_t k) const {
  Elem result = one();
  Elem base = a;
  bool first = true;
  while (k > 0) {
    if (k & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

const Series& Ring::tau_coord(int b, int k) const {
  if (!tau_[b]) {
    std::vector<int> e = basis_[b];
    for (auto& x : e) x *= static_cast<int>(p());
    tau_[b] = monomial(e);
  }
  return tau_[b]->c[k];
}

Elem Ring::frobenius(const Elem& a) const {
  Elem r = zero();
  for (int b = 0; b < d_; ++b) {
    const Series& cb = a.c[b];
    if (cb.is_zero_to_precision() && cb.precision() >= n_) continue;
    Series fb = cb.frobenius_power(n_);
    if (b == 0) {
      r.c[0] = r.c[0] + fb;
      continue;
    }
    for (int k = 0; k < d_; ++k) {
      const Series& t = tau_coord(b, k);
      if (t.is_zero_to_precision() && t.precision() >= n_) continue;
      r.c[k] = r.c[k] + fb.mul(t, n_);
    }
  }
  return r;
}

Elem Ring::frobenius(const Elem& a, int k) const {
  Elem r = a;
  for (int i = 0; i < k; ++i) r = frobenius(r);
  return r;
}

Elem Ring::truncate(const Elem& a, int n) const {
  Elem r;
  r.c.reserve(d_);
  for (const auto& s : a.c) r.c.push_back(s.truncated(n));
  return r;
}

std::optional<int> Ring::valuation(const Elem& a) const {
  int found = kExact;
  int zero_prec = kExact;
  for (const auto& s : a.c) {
    if (auto v = s.valuation()) {
      found = std::min(found, *v);
    } else {
      zero_prec = std::min(zero_prec, s.precision());
    }
  }
  if (found == kExact || found > zero_prec) return std::nullopt;
  return found;
}

int Ring::valuation_or_throw(const Elem& a) const {
  auto v = valuation(a);
  if (!v) {
    throw PrecisionExhausted("valuation not determined modulo " + pres_->uniformizer + "^" +
                             std::to_string(precision(a)));
  }
  return *v;
}

int Ring::precision(const Elem& a) const {
  int p = kExact;
  for (const auto& s : a.c) p = std::min(p, s.precision());
  return p;
}

KVector Ring::slice(const Elem& a, int k) const {
  KVector out;
  out.reserve(d_);
  for (const auto& s : a.c) {
    if (k >= s.precision()) throw PrecisionExhausted("coefficient beyond known precision");
    out.push_back(s.coeff(k));
  }
  return out;
}

Elem Ring::unit_inverse(const Elem& a) const {
  // Residue inverse: solve (a mod S) * y = 1 over K.
  const KVector a0 = residue(a);
  KMatrix mat = zero_matrix(fq(), d_, d_);
  for (int b = 0; b < d_; ++b) {
    Elem col = mul(truncate(lift(a0), 1), truncate(lift(basis_vector(b)), 1));
    for (int k = 0; k < d_; ++k) mat[k][b] = col.c[k].coeff(0);
  }
  KVector rhs(d_, K().zero());
  rhs[0] = K().one();
  auto y = solve(mat, rhs, d_);
  if (!y) throw std::domain_error("unit_inverse: element is not a unit");
  const int target = precision(a);
  auto exactify = [&](Elem e) {
    for (auto& s : e.c) {
      Series t(fq(), kExact);
      for (const auto& [j, c] : s.terms()) t.add_term(j, c);
      s = t;
    }
    return e;
  };
  Elem w = exactify(truncate(lift(*y), 1));
  int have = 1;
  const Elem two = constant(K().constant(2));
  while (have < target) {
    have = std::min(2 * have, target);
    Elem aw = truncate(mul(truncate(a, have), w), have);
    w = exactify(truncate(mul(w, sub(two, aw)), have));
  }
  return truncate(w, target);
}

KVector Ring::basis_vector(int b) const {
  KVector v(d_, K().zero());
  v[b] = K().one();
  return v;
}

bool Ring::equal(const Elem& a, const Elem& b) const {
  const Elem d = sub(a, b);
  for (const auto& s : d.c) {
    if (!s.is_zero_to_precision()) return false;
  }
  return true;
}

std::string Ring::to_string(const Elem& a) const {
  const auto names = K().symbol_names();
  std::string out;
  for (int b = 0; b < d_; ++b) {
    const Series& s = a.c[b];
    if (s.is_zero_to_precision()) continue;
    std::string mono = term_names([&] {
      std::vector<int> key{0};
      key.insert(key.end(), basis_[b].begin(), basis_[b].end());
      return key;
    }(), pres_->uniformizer, pres_->gens);
    std::string coeff = s.to_string(names, pres_->uniformizer);
    if (!out.empty()) out += " + ";
    out += mono.empty() ? "(" + coeff + ")" : "(" + coeff + ")*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace insep
