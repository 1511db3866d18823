#include "placeone/parse.hpp"

#include <cctype>
#include <utility>

namespace placeone {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  SparsePoly run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
    SparsePoly p = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static void add_into(SparsePoly& acc, const SparsePoly& b, int sign) {
    for (const auto& [e, c] : b) {
      Rational& slot = acc[e];
      slot += sign > 0 ? c : Rational(-c);
      if (is_zero(slot)) acc.erase(e);
    }
  }
  static SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        std::vector<unsigned> e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        Rational& slot = r[e];
        slot += ca * cb;
        if (is_zero(slot)) r.erase(e);
      }
    return r;
  }
  SparsePoly constant(const Rational& c) const {
    SparsePoly r;
    if (!is_zero(c)) r[std::vector<unsigned>(vars_.size(), 0)] = c;
    return r;
  }

  SparsePoly expr() {
    SparsePoly acc = term();
    for (;;) {
      if (accept('+')) {
        add_into(acc, term(), 1);
      } else if (accept('-')) {
        add_into(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  SparsePoly term() {
    SparsePoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = mul(acc, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        SparsePoly d = unary();
        const std::vector<unsigned> zero(vars_.size(), 0);
        if (d.size() != 1 || d.begin()->first != zero) throw ParseError("division by a non-constant", at);
        acc = mul(acc, constant(Rational(1) / d.begin()->second));
      } else {
        return acc;
      }
    }
  }

  SparsePoly unary() {
    if (accept('-')) {
      SparsePoly r;
      add_into(r, unary(), -1);
      return r;
    }
    if (accept('+')) return unary();
    return power();
  }

  SparsePoly power() {
    SparsePoly base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("exponent must be a nonnegative integer literal", at);
    unsigned long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (e > 4096) throw ParseError("exponent too large", at);
      ++pos_;
    }
    SparsePoly r = constant(Rational(1));
    for (unsigned long i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  SparsePoly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] != name) continue;
        std::vector<unsigned> e(vars_.size(), 0);
        e[i] = 1;
        return SparsePoly{{e, Rational(1)}};
      }
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

QBiPoly parse_curve(const std::string& text) {
  const SparsePoly sp = parse_polynomial(text, {"x", "y"});
  std::map<std::pair<std::size_t, std::size_t>, Rational> terms;
  for (const auto& [e, c] : sp) terms[{e[0], e[1]}] = c;
  return bipoly_from_terms(terms);
}

QPoly parse_univariate(const std::string& text, const std::string& var) {
  const SparsePoly sp = parse_polynomial(text, {var});
  std::vector<Rational> c;
  for (const auto& [e, a] : sp) {
    if (c.size() <= e[0]) c.resize(e[0] + 1);
    c[e[0]] = a;
  }
  return QPoly(std::move(c));
}

}  // namespace placeone
