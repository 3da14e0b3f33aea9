#include "dmod/rational.hpp"

#include <cctype>

#include "dmod/errors.hpp"

namespace dmod {

Rational makeRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parseRational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t numEnd = digits(i);
  if (numEnd == i) throw ParseError("malformed rational '" + std::string(text) + "'", i);
  BigInt num(std::string(text.substr(i, numEnd - i)));
  BigInt den = 1;
  std::size_t j = numEnd;
  if (j < text.size() && text[j] == '/') {
    std::size_t denEnd = digits(j + 1);
    if (denEnd == j + 1) throw ParseError("malformed rational '" + std::string(text) + "'", j + 1);
    den = BigInt(std::string(text.substr(j + 1, denEnd - j - 1)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", j + 1);
    j = denEnd;
  }
  if (j != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'", j);
  Rational q = makeRational(num, den);
  return negative ? Rational(-q) : q;
}

std::string toString(const BigInt& z) { return z.get_str(); }

std::string toString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool isInteger(const Rational& q) { return q.get_den() == 1; }

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace dmod
