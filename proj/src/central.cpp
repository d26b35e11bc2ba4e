#include "yangian/central.hpp"

#include <algorithm>
#include <numeric>

namespace yang {

namespace {

int permutation_sign(const std::vector<int>& g) {
  int inv = 0;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (g[a] > g[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

Series qdet_series(const Ctx& cx, int trunc) {
  const int n = cx->n();
  const long p = cx->p();
  Series out(cx, trunc);
  std::vector<int> g(n);
  std::iota(g.begin(), g.end(), 1);
  do {
    Series prod = Series::one(cx, trunc);
    for (int c = 1; c <= n; ++c)
      prod = prod * generator_series(cx, g[c - 1], c, trunc)
                        .shift_arg(fp::normalize(c - 1, p));
    if (permutation_sign(g) < 0) prod = -prod;
    out = out + prod;
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

Series product_center_series(const Drinfeld& dr) {
  const Ctx& cx = dr.context();
  const long p = cx->p();
  Series out = Series::one(cx, dr.trunc());
  for (int i = 1; i <= cx->n(); ++i)
    out = out * dr.D(i).shift_arg(fp::normalize(i - 1, p));
  return out;
}

Series B_series(const Drinfeld& dr, int i) {
  const Ctx& cx = dr.context();
  const long p = cx->p();
  Series out = Series::one(cx, dr.trunc());
  for (long k = 0; k < p; ++k) out = out * dr.D(i).shift_arg(fp::normalize(k, p));
  return out;
}

Series BC_series(const Drinfeld& dr) {
  const Ctx& cx = dr.context();
  const long p = cx->p();
  Series via_b = Series::one(cx, dr.trunc());
  for (int i = 1; i <= cx->n(); ++i)
    via_b = via_b * B_series(dr, i).shift_arg(fp::normalize(i - 1, p));
  Series c = product_center_series(dr);
  Series via_c = Series::one(cx, dr.trunc());
  for (long k = 0; k < p; ++k) via_c = via_c * c.shift_arg(fp::normalize(k, p));
  if (via_b != via_c)
    throw std::logic_error("the two factorizations of BC disagree");
  return via_b;
}

Series root_E_series(const Drinfeld& dr, int i, int j) {
  Series s(dr.context(), dr.trunc());
  if (j == i + 1) return dr.E(i, j);
  for (int r = 1; r <= dr.trunc(); ++r)
    s.set_coefficient(r, dr.higher_root_E(i, j, r));
  return s;
}

Series root_F_series(const Drinfeld& dr, int i, int j) {
  Series s(dr.context(), dr.trunc());
  if (j == i + 1) return dr.F(i, j);
  for (int r = 1; r <= dr.trunc(); ++r)
    s.set_coefficient(r, dr.higher_root_F(i, j, r));
  return s;
}

Series P_series(const Drinfeld& dr, int i, int j) {
  return root_E_series(dr, i, j).pow_int(
      static_cast<unsigned long>(dr.context()->p()));
}

Series Q_series(const Drinfeld& dr, int i, int j) {
  return root_F_series(dr, i, j).pow_int(
      static_cast<unsigned long>(dr.context()->p()));
}

Series S_series(const Ctx& cx, int i, int j, int trunc) {
  const long p = cx->p();
  Series out = Series::one(cx, trunc);
  for (long k = 0; k < p; ++k)
    out = out * generator_series(cx, i, j, trunc).shift_arg(fp::normalize(k, p));
  return out;
}

Series A_series(const Drinfeld& dr, int i) {
  const Ctx& cx = dr.context();
  const long p = cx->p();
  Series direct = Series::one(cx, dr.trunc());
  for (long k = 0; k < p; ++k)
    direct = direct * dr.H(i).shift_arg(fp::normalize(k, p));
  Series ratio = (-B_series(dr, i + 1) * B_series(dr, i).invert());
  if (direct != ratio)
    throw std::logic_error("the two factorizations of A disagree");
  return direct;
}

std::optional<CentralityWitness> certify_central(const Element& x, int smax) {
  const Ctx& cx = x.context();
  for (int k = 1; k <= cx->n(); ++k)
    for (int l = 1; l <= cx->n(); ++l)
      for (int s = 1; s <= smax; ++s) {
        Element br = commutator(x, generator(cx, k, l, s));
        if (!br.is_zero()) return CentralityWitness{k, l, s, std::move(br)};
      }
  return std::nullopt;
}

}  // namespace yang
