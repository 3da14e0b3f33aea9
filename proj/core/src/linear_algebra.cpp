#include "dmod/linear_algebra.hpp"

#include "dmod/errors.hpp"

namespace dmod {

namespace {

void divideOutContent(engine::IPoly& vec, std::vector<BigInt>& comb) {
  BigInt g = engine::content(vec);
  for (const auto& c : comb) {
    if (g == 1) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g <= 1) return;
  for (auto& t : vec) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
  for (auto& c : comb) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::optional<std::vector<Rational>> DependencyFinder::add(const Polynomial& v) {
  if (v.ring() && !v.ring()->sameAlgebra(*ring_)) throw RingMismatch("DependencyFinder: vector from another ring");
  const std::size_t k = rows_.size();
  Rational scale;
  Row cur{engine::toIntegral(v.reordered(ring_), &scale), std::vector<BigInt>(k + 1)};
  // cur.vec = scale * v; track it as comb[k] * (scale * v).
  cur.comb[k] = 1;
  std::size_t steps = 0;
  while (!cur.vec.empty()) {
    auto it = pivots_.find(cur.vec.front().mono);
    if (it == pivots_.end()) break;
    const Row& row = rows_[it->second];
    BigInt a = row.vec.front().coef, b = cur.vec.front().coef, g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    cur.vec = engine::combine(*ring_, a, cur.vec, b, row.vec);
    for (std::size_t j = 0; j < row.comb.size(); ++j) {
      cur.comb[j] *= a;
      mpz_submul(cur.comb[j].get_mpz_t(), b.get_mpz_t(), row.comb[j].get_mpz_t());
    }
    for (std::size_t j = row.comb.size(); j <= k; ++j) cur.comb[j] *= a;
    if (++steps % 8 == 0) divideOutContent(cur.vec, cur.comb);
  }
  if (cur.vec.empty()) {
    // sum_j comb[j] * scale_j * v_j + comb[k] * scale * v = 0.
    std::vector<Rational> coeffs(k);
    Rational denom = Rational(cur.comb[k]) * scale;
    for (std::size_t j = 0; j < k; ++j) {
      coeffs[j] = -Rational(cur.comb[j]) * scales_[j] / denom;
      coeffs[j].canonicalize();
    }
    return coeffs;
  }
  divideOutContent(cur.vec, cur.comb);
  pivots_.emplace(cur.vec.front().mono, k);
  for (auto& row : rows_) row.comb.resize(k + 1);
  rows_.push_back(std::move(cur));
  scales_.push_back(scale);
  return std::nullopt;
}

}  // namespace dmod
