#include "insep/parser.hpp"

#include <cctype>
#include <regex>

namespace insep {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RationalField& K, const std::string& s_name,
         const std::vector<std::string>& gens)
      : text_(text), K_(K), s_name_(s_name), gens_(gens), width_(gens.size() + 1) {}

  STPoly parse() {
    STPoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  STPoly constant(const RatFunc& c) const {
    STPoly r;
    if (!c.is_zero()) r[std::vector<int>(width_, 0)] = c;
    return r;
  }

  static void add_into(STPoly& a, const STPoly& b, bool negate) {
    for (const auto& [k, c] : b) {
      auto it = a.find(k);
      const RatFunc v = negate ? -c : c;
      if (it == a.end()) {
        a.emplace(k, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) a.erase(it);
      }
    }
  }

  STPoly mul(const STPoly& a, const STPoly& b) const {
    STPoly r;
    for (const auto& [ka, ca] : a) {
      for (const auto& [kb, cb] : b) {
        std::vector<int> k(width_);
        for (std::size_t i = 0; i < width_; ++i) k[i] = ka[i] + kb[i];
        add_into(r, STPoly{{k, ca * cb}}, false);
      }
    }
    return r;
  }

  STPoly expr() {
    skip_ws();
    STPoly r;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    add_into(r, term(), neg);
    for (;;) {
      if (accept('+')) {
        add_into(r, term(), false);
      } else if (accept('-')) {
        add_into(r, term(), true);
      } else {
        return r;
      }
    }
  }

  STPoly term() {
    STPoly r = unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) {
        r = mul(r, unary());
      } else if (accept('/')) {
        STPoly d = unary();
        if (d.size() != 1 || d.begin()->first != std::vector<int>(width_, 0)) {
          throw ParseError("division is only allowed by nonzero elements of the base field", at);
        }
        const RatFunc inv = d.begin()->second.inverse();
        for (auto& [k, c] : r) c = c * inv;
      } else {
        return r;
      }
    }
  }

  STPoly unary() {
    if (accept('-')) {
      STPoly r = unary();
      for (auto& [k, c] : r) c = -c;
      return r;
    }
    STPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      long long e = number(at);
      if (e < 0) throw ParseError("negative exponent", at);
      STPoly r = constant(K_.one());
      for (long long i = 0; i < e; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  long long number(std::size_t at) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected a number", at);
    }
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000'000LL) throw ParseError("number too large", at);
    }
    return v;
  }

  STPoly atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", at);
    if (accept('(')) {
      STPoly r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) return constant(K_.constant(number(at)));
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string id;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        id += text_[pos_++];
      }
      std::vector<int> key(width_, 0);
      if (id == s_name_) {
        key[0] = 1;
        return STPoly{{key, K_.one()}};
      }
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (id == gens_[i]) {
          key[i + 1] = 1;
          return STPoly{{key, K_.one()}};
        }
      }
      const auto names = K_.symbol_names();
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (id == names[i]) return constant(K_.var(static_cast<int>(i)));
      }
      if (id == "a" && K_.fq().degree() > 1) {
        return constant(RatFunc(K_.fq(), K_.fq().characteristic()));  // digit encoding: a = p
      }
      throw ParseError("unknown symbol '" + id + "'", at);
    }
    throw ParseError("unexpected '" + std::string(1, ch) + "'", at);
  }

  const std::string& text_;
  const RationalField& K_;
  std::string s_name_;
  std::vector<std::string> gens_;
  std::size_t width_;
  std::size_t pos_ = 0;
};

}  // namespace

STPoly parse_stpoly(const std::string& text, const RationalField& K, const std::string& s_name,
                    const std::vector<std::string>& gens) {
  return Parser(text, K, s_name, gens).parse();
}

ParsedRelation parse_relation(const std::string& text, const RationalField& K, const std::string& s_name,
                              const std::vector<std::string>& gens) {
  const std::regex big_o("\\+\\s*O\\(\\s*" + s_name + "\\s*\\^\\s*([0-9]+)\\s*\\)");
  std::smatch m;
  if (!std::regex_search(text, m, big_o)) return {parse_stpoly(text, K, s_name, gens), kExact};
  const int precision = std::stoi(m[1].str());
  std::string rest = text;
  rest.replace(static_cast<std::size_t>(m.position(0)), static_cast<std::size_t>(m.length(0)), "");
  return {parse_stpoly(rest, K, s_name, gens), precision};
}

RatFunc parse_field_element(const std::string& text, const RationalField& K) {
  STPoly p = parse_stpoly(text, K, "", {});
  if (p.empty()) return K.zero();
  return p.begin()->second;
}

}  // namespace insep
