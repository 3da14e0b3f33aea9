#include "dmod_cli/parse.hpp"

#include <cctype>
#include <limits>
#include <unordered_set>

#include "dmod/errors.hpp"

namespace dmod::cli {

namespace {

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, std::size_t offset)
      : text_(text), ring_(ring), offset_(offset) {}

  Polynomial parseAll() {
    skipSpace();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expression();
    skipSpace();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, offset_ + at); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = acc * factor();
    }
    skipSpace();
    if (pos_ < text_.size() && (isIdentStart(text_[pos_]) || isDigit(text_[pos_]) || text_[pos_] == '('))
      fail("missing '*' (implicit multiplication is not allowed)");
    return acc;
  }

  Polynomial factor() {
    skipSpace();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner.pow(exponent());
    }
    if (isDigit(c)) return Polynomial::constant(ring_, rational());
    if (isIdentStart(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && isIdentChar(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->indexOf(name);
      if (!idx) fail("undeclared identifier '" + name + "'", start);
      return Polynomial::variable(ring_, *idx).pow(exponent());
    }
    fail(std::string("unexpected '") + c + "'");
  }

  // Optional '^' natural; returns 1 when absent.
  unsigned exponent() {
    if (!peek('^')) return 1;
    ++pos_;
    skipSpace();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent", start);
    if (pos_ == text_.size() || !isDigit(text_[pos_])) fail("expected a natural number exponent", start);
    unsigned long value = 0;
    while (pos_ < text_.size() && isDigit(text_[pos_])) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint16_t>::max()) fail("exponent too large", start);
      ++pos_;
    }
    return static_cast<unsigned>(value);
  }

  Rational rational() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && isDigit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (pos_ == text_.size() || !isDigit(text_[pos_])) fail("malformed rational literal", start);
      while (pos_ < text_.size() && isDigit(text_[pos_])) ++pos_;
    }
    if (pos_ < text_.size() && text_[pos_] == '.')
      fail("malformed rational literal", start);
    try {
      return parseRational(text_.substr(start, pos_ - start));
    } catch (const Error&) {
      fail("malformed rational literal", start);
    }
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

RingPtr polynomialRing(const std::vector<std::string>& vars) {
  if (vars.empty()) throw PreconditionError("at least one variable must be declared");
  std::unordered_set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !isIdentStart(v.front()))
      throw PreconditionError("invalid variable name '" + v + "'");
    for (char c : v)
      if (!isIdentChar(c)) throw PreconditionError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw PreconditionError("variable '" + v + "' declared twice");
  }
  return makeRing(vars);
}

Polynomial parsePolynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring, 0).parseAll(); }

ParsedInput parse(std::string_view text, const std::vector<std::string>& vars) {
  ParsedInput out{vars, {}};
  auto ring = polynomialRing(vars);
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      else if (text[i] == ')') --depth;
      if (text[i] != ',' || depth != 0) continue;
    }
    out.polynomials.push_back(Parser(text.substr(start, i - start), ring, start).parseAll());
    start = i + 1;
  }
  return out;
}

std::vector<std::string> splitList(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') continue;
    auto piece = text.substr(start, i - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    out.emplace_back(piece);
    start = i + 1;
  }
  return out;
}

}  // namespace dmod::cli
