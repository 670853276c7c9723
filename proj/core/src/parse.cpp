#include "mrep/parse.hpp"

#include <cctype>

#include "mrep/errors.hpp"

namespace mrep {

Ambient x_ambient(std::size_t n, Field field) {
  Ambient a{{}, field};
  for (std::size_t i = 1; i <= n; ++i) a.names.push_back("X" + std::to_string(i));
  return a;
}

Ambient t_ambient(std::size_t n, Field field) {
  Ambient a{{}, field};
  for (std::size_t i = 0; i < n; ++i) a.names.push_back("T" + std::to_string(i));
  return a;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Ambient& a) : s_(s), a_(a), n_(a.names.size()) {}

  MultiPoly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) unexpected();
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void unexpected() {
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '/') throw ParseError("division is not supported", pos_);
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
      throw ParseError("implicit multiplication is not allowed", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (peek() == '*') {
      ++pos_;
      acc = acc * unary();
    }
    char c = peek();
    if (c != '\0' && c != '+' && c != '-' && c != ')') unexpected();
    return acc;
  }

  MultiPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("exponent must be a nonnegative integer", start);
      if (pos_ - start > 4) throw ParseError("exponent too large", start);
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      return base.pow(e);
    }
    return base;
  }

  MultiPoly atom() {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string lit(s_.substr(start, pos_ - start));
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        std::size_t dstart = ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string den(s_.substr(dstart, pos_ - dstart));
        if (mpz_class(den) == 0) throw ParseError("zero denominator", dstart);
        mpq_class q{mpz_class(lit), mpz_class(den)};
        q.canonicalize();
        return MultiPoly::constant(n_, a_.field.from_mpq(q));
      }
      return MultiPoly::constant(n_, a_.field.from_mpz(mpz_class(lit)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < n_; ++i)
        if (a_.names[i] == name) return MultiPoly::variable(n_, i, a_.field);
      throw ParseError("unknown variable '" + name + "'", start);
    }
    unexpected();
  }

  std::string_view s_;
  const Ambient& a_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Ambient& ambient) {
  MultiPoly p = Parser(text, ambient).run();
  if (p.nvars() == 0 && !ambient.names.empty()) return MultiPoly(ambient.names.size(), ambient.field);
  return p;
}

std::string print_poly(const MultiPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c.modulus() == 0 && c.sign() < 0;
    Scalar a = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool unit = a.is_one();
    if (m.degree() == 0) {
      out += a.to_string();
    } else {
      if (!unit) out += a.to_string() + "*";
      out += monomial_string(m, names);
    }
  }
  return out;
}

}  // namespace mrep
