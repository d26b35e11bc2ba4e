#pragma once

#include <functional>

#include "yangian/series.hpp"

namespace yang {

// Structured products of series with commuting coefficients, together with
// closed-form expansions of their coefficients used as independent oracles.

// X(u)^p for a series with zero constant term.
template <class A>
SeriesT<A> series_power_p(const SeriesT<A>& x) {
  if (!x.coefficient(0).is_zero())
    throw std::invalid_argument("series must have zero constant term");
  return x.pow_int(static_cast<unsigned long>(x.context()->p()));
}

// X_1(u) X_2(u-1) ... X_n(u-n+1) for series with constant term 1.
template <class A>
SeriesT<A> staggered_product(const std::vector<SeriesT<A>>& xs) {
  if (xs.empty()) throw std::invalid_argument("need at least one series");
  const Ctx& cx = xs.front().context();
  const long p = cx->p();
  SeriesT<A> out = SeriesT<A>::one(cx, xs.front().trunc());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].coefficient(0).as_scalar() != Coeff(1))
      throw std::invalid_argument("factors must have constant term 1");
    out = out * xs[i].shift_arg(fp::normalize(long(i), p));
  }
  return out;
}

// X(u) X(u-1) ... X(u-p+1) for a single series with constant term 1.
template <class A>
SeriesT<A> frobenius_product(const SeriesT<A>& x) {
  if (x.coefficient(0).as_scalar() != Coeff(1))
    throw std::invalid_argument("series must have constant term 1");
  const long p = x.context()->p();
  SeriesT<A> out = SeriesT<A>::one(x.context(), x.trunc());
  for (long k = 0; k < p; ++k) out = out * x.shift_arg(fp::normalize(k, p));
  return out;
}

// Same p-fold staggered product but for a series with zero constant term.
template <class A>
SeriesT<A> frobenius_product_nilpotent(const SeriesT<A>& x) {
  if (!x.coefficient(0).is_zero())
    throw std::invalid_argument("series must have zero constant term");
  const long p = x.context()->p();
  SeriesT<A> out = SeriesT<A>::one(x.context(), x.trunc());
  for (long k = 0; k < p; ++k) out = out * x.shift_arg(fp::normalize(k, p));
  return out;
}

// Enumeration helpers for the closed forms.
std::vector<std::vector<int>> compositions(int parts, int total);
// Partitions of total into at most max_parts parts (padded with zeros to
// max_parts, weakly decreasing).
std::vector<std::vector<int>> partitions(int total, int max_parts);

// The coefficient of X^(mu) in the r-th coefficient of the staggered product
// of p copies of X evaluated at shift points x_1..x_p:
//   sum over compositions nu of r - |mu| into p parts, and over distinct
//   arrangements alpha of mu, of prod_i C(alpha_i + nu_i - 1, nu_i) x_i^nu_i.
// mu must be weakly decreasing with exactly p parts (zeros allowed).
Coeff gamma_coeff(const std::vector<int>& mu, int r, const std::vector<Coeff>& x,
                  const Prime& p);

// Closed form for the r-th coefficient of staggered_product(xs) as a map from
// exponent vectors (mu_1..mu_n) to coefficients:
//   sum over compositions lambda of r, mu_i in {0} or 1..lambda_i, with
//   coefficient prod_i C(lambda_i - 1, lambda_i - mu_i) (i-1)^{lambda_i - mu_i}.
template <class A>
A staggered_coefficient_closed_form(const std::vector<SeriesT<A>>& xs, int r) {
  const Ctx& cx = xs.front().context();
  const long p = cx->p();
  const int n = int(xs.size());
  A out = A::zero(cx);
  for (const auto& lambda : compositions(n, r)) {
    // enumerate mu below lambda (mu_i = 0 iff lambda_i = 0)
    std::vector<int> mu(n);
    std::function<void(int, Coeff)> rec = [&](int i, Coeff coef) {
      if (coef == 0) return;
      if (i == n) {
        A term = A::scalar(cx, long(coef));
        for (int q = 0; q < n; ++q)
          if (mu[q] > 0) term = term * xs[q].coefficient(mu[q]);
        out = out + term;
        return;
      }
      if (lambda[i] == 0) {
        mu[i] = 0;
        rec(i + 1, coef);
        return;
      }
      for (int m = 1; m <= lambda[i]; ++m) {
        mu[i] = m;
        Coeff c = cx->mul(cx->binom(lambda[i] - 1, lambda[i] - m),
                          cx->pow(fp::normalize(i, p),
                                  static_cast<unsigned long>(lambda[i] - m)));
        rec(i + 1, cx->mul(coef, c));
      }
    };
    rec(0, 1);
  }
  return out;
}

// Closed form for the r-th coefficient of frobenius_product(x):
//   sum_{s=0}^{r} sum over partitions mu of s into at most p parts of
//   gamma_coeff(mu, r, (0, 1, ..., p-1)) * X^(mu).
template <class A>
A frobenius_coefficient_closed_form(const SeriesT<A>& x, int r) {
  const Ctx& cx = x.context();
  const long p = cx->p();
  std::vector<Coeff> pts(p);
  for (long k = 0; k < p; ++k) pts[k] = fp::normalize(k, p);
  Prime pr(p);
  A out = A::zero(cx);
  for (int s = 0; s <= r; ++s)
    for (const auto& mu : partitions(s, int(p))) {
      Coeff g = gamma_coeff(mu, r, pts, pr);
      if (g == 0) continue;
      A term = A::scalar(cx, long(g));
      for (int part : mu)
        if (part > 0) term = term * x.coefficient(part);
      out = out + term;
    }
  return out;
}

// Power sum pi_l(x_1..x_k) and elementary symmetric polynomial eps_k over GF(p).
Coeff power_sum(const std::vector<Coeff>& x, int l, const Prime& p);
Coeff elementary_symmetric(const std::vector<Coeff>& x, int k, const Prime& p);

// Checks Newton's identity k * e_k = sum_{i=1}^{k} (-1)^{i-1} pi_i e_{k-i}
// at the given points.
bool newton_check(int k, const std::vector<Coeff>& x, const Prime& p);

// d assigns a weight to each superscript; a target degree r > 1 is "optimal"
// when every multiset mu of at most n superscripts with |mu| < r, or
// |mu| = r and more than one part, has strictly smaller total weight than
// d(r).
bool is_optimal_degree(int r, const std::function<long(int)>& d, int n);

}  // namespace yang
