#include "yangian/field.hpp"

namespace yang {

namespace {

// Small binomial C(a, b) mod p for 0 <= a, b < p.
Coeff small_binom(long a, long b, long p) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Coeff num = 1, den = 1;
  for (long k = 1; k <= b; ++k) {
    num = fp::mul(num, fp::normalize(a - k + 1, p), p);
    den = fp::mul(den, fp::normalize(k, p), p);
  }
  return fp::mul(num, fp::inv(den, p), p);
}

}  // namespace

FieldElem binom_mod_p(unsigned long long a, unsigned long long b, const Prime& pr) {
  const long p = pr.value();
  Coeff r = 1;
  while (a || b) {
    long ad = long(a % std::uint64_t(p));
    long bd = long(b % std::uint64_t(p));
    r = fp::mul(r, small_binom(ad, bd, p), p);
    if (r == 0) return {0, p};
    a /= std::uint64_t(p);
    b /= std::uint64_t(p);
  }
  return {long(r), p};
}

FieldElem orbit_size_mod_p(const std::vector<long>& lambda, const Prime& pr) {
  const long p = pr.value();
  if (long(lambda.size()) != p)
    throw std::invalid_argument("partition must have exactly p parts");
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  if (!lambda.empty() && lambda.back() < 0)
    throw std::invalid_argument("partition parts must be non-negative");

  // multinomial(p; m_1, ..., m_k) = prod_t C(m_1 + ... + m_t, m_t)
  Coeff r = 1;
  unsigned long long prefix = 0;
  std::size_t i = 0;
  while (i < lambda.size()) {
    std::size_t j = i;
    while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
    unsigned long long mult = j - i;
    prefix += mult;
    r = fp::mul(r, Coeff(binom_mod_p(prefix, mult, pr).value), p);
    i = j;
  }
  return {long(r), p};
}

}  // namespace yang
