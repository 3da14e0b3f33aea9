#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dmod {

using BigInt = mpz_class;
// mpq_class keeps numerator and denominator coprime with a positive denominator
// as long as every value goes through canonicalize(), which the helpers below do.
using Rational = mpq_class;

Rational makeRational(const BigInt& num, const BigInt& den = 1);
Rational parseRational(std::string_view text);
std::string toString(const Rational& q);
std::string toString(const BigInt& z);

bool isInteger(const Rational& q);
BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

}  // namespace dmod
