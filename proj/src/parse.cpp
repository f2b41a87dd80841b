#include "branchcount/parse.hpp"

#include <cctype>

#include "branchcount/error.hpp"

namespace branchcount {

namespace {

constexpr unsigned kMaxExponent = 1000;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  std::string_view s_;
  const Ring& ring_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError("parse error at position " + std::to_string(at) + ": " + what, at);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Polynomial f = term();
    if (negate) f = -f;
    for (;;) {
      if (eat('+')) f += term();
      else if (eat('-')) f -= term();
      else return f;
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (eat('*')) f = f * factor();
    return f;
  }

  Polynomial factor() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (digit(c)) {
      mpz_class num(digits());
      mpz_class den = 1;
      if (eat('/')) {
        const std::size_t den_at = (skip(), pos_);
        den = mpz_class(digits());
        if (den == 0) fail_at("zero denominator", den_at);
      }
      Rational q(num, den);
      q.canonicalize();
      if (pos_ < s_.size() && ident_start(s_[pos_])) fail("implicit multiplication is not allowed; use '*'");
      return Polynomial::constant(ring_.size(), q);
    }
    if (ident_start(c)) {
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      const std::string name(s_.substr(at, pos_ - at));
      std::size_t var = ring_.size();
      for (std::size_t i = 0; i < ring_.size(); ++i) {
        if (ring_[i] == name) var = i;
      }
      if (var == ring_.size()) fail_at("unknown variable '" + name + "'", at);
      unsigned power = 1;
      if (eat('^')) {
        const std::size_t exp_at = (skip(), pos_);
        const std::string d = digits();
        if (d.size() > 4 || std::stoul(d) > kMaxExponent) {
          fail_at("exponent exceeds " + std::to_string(kMaxExponent), exp_at);
        }
        power = static_cast<unsigned>(std::stoul(d));
      }
      return Polynomial::monomial(ExponentVector::unit(ring_.size(), var, power));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Ring parse_ring(std::string_view text) {
  Ring ring;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::size_t lead = 0;
    while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead]))) ++lead;
    std::size_t end = item.size();
    while (end > lead && std::isspace(static_cast<unsigned char>(item[end - 1]))) --end;
    const std::string name(item.substr(lead, end - lead));
    const std::size_t at = start + lead;
    if (name.empty() || !ident_start(name[0])) throw ParseError("ring: expected a variable name", at);
    for (char ch : name) {
      if (!ident_char(ch)) throw ParseError("ring: '" + name + "' is not an identifier", at);
    }
    for (const auto& seen : ring) {
      if (seen == name) throw ParseError("ring: variable '" + name + "' is declared twice", at);
    }
    ring.push_back(name);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (ring.size() > kMaxVariables) {
    throw ParseError("ring: at most " + std::to_string(kMaxVariables) + " variables are supported", 0);
  }
  return ring;
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  if (ring.empty()) throw ParseError("the ring has no variables", 0);
  return Parser(text, ring).run();
}

std::string format_polynomial(const Polynomial& f, const Ring& ring) {
  if (f.nvars() != ring.size()) throw DimensionError("format_polynomial: ring has the wrong number of names");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const int s = sgn(t.coefficient);
    if (first) out += s < 0 ? "-" : "";
    else out += s < 0 ? " - " : " + ";
    first = false;
    const Rational mag = abs(t.coefficient);
    std::string mono;
    for (std::size_t v = 0; v < ring.size(); ++v) {
      if (t.exponent[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring[v];
      if (t.exponent[v] > 1) mono += '^' + std::to_string(t.exponent[v]);
    }
    if (mono.empty()) out += rational_to_string(mag);
    else if (mag == 1) out += mono;
    else out += rational_to_string(mag) + '*' + mono;
  }
  return out;
}

std::string caret_diagnostic(std::string_view text, std::size_t position, const std::string& message) {
  if (position > text.size()) position = text.size();
  return message + "\n  " + std::string(text) + "\n  " + std::string(position, ' ') + "^";
}

}  // namespace branchcount
