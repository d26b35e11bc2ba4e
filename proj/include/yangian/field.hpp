#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace yang {

// Residues are stored as canonical representatives in [0, p).
using Coeff = std::uint32_t;

class Prime {
public:
  explicit Prime(long p) : p_(p) {
    if (p < 2) throw std::invalid_argument("characteristic must be >= 2");
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("characteristic must be prime");
  }
  long value() const { return p_; }
  bool operator==(const Prime& o) const { return p_ == o.p_; }

private:
  long p_;
};

struct FieldElem {
  long value = 0;  // canonical representative in [0, p)
  long prime = 2;

  FieldElem() = default;
  FieldElem(long v, long p) : prime(p) {
    value = v % p;
    if (value < 0) value += p;
  }
  FieldElem(long v, const Prime& p) : FieldElem(v, p.value()) {}

  FieldElem operator+(const FieldElem& o) const { return {value + o.value, prime}; }
  FieldElem operator-(const FieldElem& o) const { return {value - o.value, prime}; }
  FieldElem operator*(const FieldElem& o) const { return {value * o.value, prime}; }
  FieldElem operator-() const { return {-value, prime}; }
  bool operator==(const FieldElem& o) const { return value == o.value && prime == o.prime; }
  bool is_zero() const { return value == 0; }
};

namespace fp {

inline Coeff normalize(long v, long p) {
  long r = v % p;
  if (r < 0) r += p;
  return static_cast<Coeff>(r);
}

inline Coeff add(Coeff a, Coeff b, long p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return s >= std::uint64_t(p) ? Coeff(s - p) : Coeff(s);
}

inline Coeff sub(Coeff a, Coeff b, long p) {
  return a >= b ? a - b : Coeff(a + p - b);
}

inline Coeff neg(Coeff a, long p) { return a == 0 ? 0 : Coeff(p - a); }

inline Coeff mul(Coeff a, Coeff b, long p) {
  return Coeff((std::uint64_t(a) * b) % std::uint64_t(p));
}

inline Coeff pow(Coeff a, unsigned long e, long p) {
  Coeff r = 1 % Coeff(p);
  Coeff base = a;
  while (e) {
    if (e & 1) r = mul(r, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return r;
}

inline Coeff inv(Coeff a, long p) {
  if (a == 0) throw std::domain_error("division by zero in GF(p)");
  return pow(a, static_cast<unsigned long>(p - 2), p);  // Fermat
}

}  // namespace fp

// C(a, b) mod p via base-p digits (Lucas). Returns 0 when b > a.
FieldElem binom_mod_p(unsigned long long a, unsigned long long b, const Prime& p);

// |S_p / S_lambda| mod p, i.e. the multinomial coefficient of p over the
// multiplicities of the parts of lambda. lambda must have exactly p parts,
// weakly decreasing (zeros allowed).
FieldElem orbit_size_mod_p(const std::vector<long>& lambda, const Prime& p);

}  // namespace yang
