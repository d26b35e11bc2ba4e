#pragma once

#include <stdexcept>
#include <vector>

#include "yangian/algebra.hpp"

namespace yang {

struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A formal power series a_0 + a_1 u^-1 + a_2 u^-2 + ... kept exactly up to
// u^-trunc; asking for a coefficient beyond the truncation throws.
template <class A>
class SeriesT {
public:
  SeriesT() : trunc_(-1) {}
  SeriesT(Ctx cx, int trunc)
      : cx_(std::move(cx)), trunc_(trunc), c_(trunc + 1, A::zero(cx_)) {
    if (trunc < 0) throw std::invalid_argument("truncation order must be >= 0");
  }

  static SeriesT constant(Ctx cx, int trunc, long v) {
    SeriesT s(std::move(cx), trunc);
    s.c_[0] = A::scalar(s.cx_, v);
    return s;
  }

  static SeriesT one(Ctx cx, int trunc) { return constant(std::move(cx), trunc, 1); }

  const Ctx& context() const { return cx_; }
  int trunc() const { return trunc_; }

  const A& coefficient(int r) const {
    if (r < 0) throw std::invalid_argument("negative series index");
    if (r > trunc_)
      throw precision_error("series coefficient requested beyond truncation order");
    return c_[r];
  }

  void set_coefficient(int r, A v) {
    if (r < 0 || r > trunc_)
      throw precision_error("series coefficient set beyond truncation order");
    c_[r] = std::move(v);
  }

  // Operations truncate to the smaller precision of the operands.
  SeriesT operator+(const SeriesT& o) const {
    SeriesT r(cx_, std::min(trunc_, o.trunc_));
    for (int t = 0; t <= r.trunc_; ++t) r.c_[t] = c_[t] + o.c_[t];
    return r;
  }

  SeriesT operator-(const SeriesT& o) const {
    SeriesT r(cx_, std::min(trunc_, o.trunc_));
    for (int t = 0; t <= r.trunc_; ++t) r.c_[t] = c_[t] - o.c_[t];
    return r;
  }

  SeriesT operator-() const {
    SeriesT r(cx_, trunc_);
    for (int t = 0; t <= trunc_; ++t) r.c_[t] = -c_[t];
    return r;
  }

  SeriesT operator*(const SeriesT& o) const {
    SeriesT r(cx_, std::min(trunc_, o.trunc_));
    for (int t = 0; t <= r.trunc_; ++t)
      for (int s = 0; s <= t; ++s) r.c_[t] = r.c_[t] + c_[s] * o.c_[t - s];
    return r;
  }

  SeriesT scale(Coeff v) const {
    SeriesT r(cx_, trunc_);
    for (int t = 0; t <= trunc_; ++t) r.c_[t] = c_[t].scale(v);
    return r;
  }

  bool operator==(const SeriesT& o) const {
    if (trunc_ != o.trunc_) return false;
    for (int t = 0; t <= trunc_; ++t)
      if (!(c_[t] == o.c_[t])) return false;
    return true;
  }
  bool operator!=(const SeriesT& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const A& a : c_)
      if (!a.is_zero()) return false;
    return true;
  }

  // Multiplicative inverse; requires an invertible scalar constant term.
  SeriesT invert() const {
    auto s0 = c_[0].as_scalar();
    if (!s0 || *s0 == 0)
      throw std::domain_error("series is not invertible: constant term is not a unit");
    const Coeff g0 = cx_->inv(*s0);
    SeriesT g(cx_, trunc_);
    g.c_[0] = A::scalar(cx_, long(g0));
    for (int r = 1; r <= trunc_; ++r) {
      A acc = A::zero(cx_);
      for (int t = 1; t <= r; ++t) acc = acc + c_[t] * g.c_[r - t];
      g.c_[r] = (-acc).scale(g0);
    }
    return g;
  }

  // Substitutes u -> u - c: the u^-t coefficient of f(u - c) is
  // sum_{s=1}^{t} C(t-1, t-s) c^{t-s} f_s for t >= 1.
  SeriesT shift_arg(Coeff c) const {
    SeriesT r(cx_, trunc_);
    r.c_[0] = c_[0];
    for (int t = 1; t <= trunc_; ++t) {
      A acc = A::zero(cx_);
      for (int s = 1; s <= t; ++s) {
        Coeff coef = cx_->mul(cx_->binom(t - 1, t - s),
                              cx_->pow(c, static_cast<unsigned long>(t - s)));
        acc = acc + c_[s].scale(coef);
      }
      r.c_[t] = std::move(acc);
    }
    return r;
  }

  SeriesT pow_int(unsigned long e) const {
    SeriesT r = one(cx_, trunc_);
    SeriesT base = *this;
    while (e) {
      if (e & 1) r = r * base;
      if (e >>= 1) base = base * base;
    }
    return r;
  }

private:
  Ctx cx_;
  int trunc_;
  std::vector<A> c_;
};

using Series = SeriesT<Element>;

// T_{i,j}(u) = delta_{i,j} + T[i,j,1] u^-1 + T[i,j,2] u^-2 + ...
inline Series generator_series(const Ctx& cx, int i, int j, int trunc) {
  Series s(cx, trunc);
  s.set_coefficient(0, Element::scalar(cx, i == j ? 1 : 0));
  for (int r = 1; r <= trunc; ++r) s.set_coefficient(r, generator(cx, i, j, r));
  return s;
}

struct MatrixSeries {
  int n = 0;
  std::vector<Series> e;  // row-major, 1-based access via at()

  MatrixSeries() = default;
  MatrixSeries(int n_, const Series& fill) : n(n_), e(n_ * n_, fill) {}

  Series& at(int i, int j) { return e[(i - 1) * n + (j - 1)]; }
  const Series& at(int i, int j) const { return e[(i - 1) * n + (j - 1)]; }
};

inline MatrixSeries t_matrix(const Ctx& cx, int trunc) {
  MatrixSeries m(cx->n(), Series(cx, trunc));
  for (int i = 1; i <= cx->n(); ++i)
    for (int j = 1; j <= cx->n(); ++j)
      m.at(i, j) = generator_series(cx, i, j, trunc);
  return m;
}

inline MatrixSeries mat_mul(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
  const Ctx& cx = a.e.front().context();
  const int trunc = std::min(a.e.front().trunc(), b.e.front().trunc());
  MatrixSeries r(a.n, Series(cx, trunc));
  for (int i = 1; i <= a.n; ++i)
    for (int j = 1; j <= a.n; ++j) {
      Series acc(cx, trunc);
      for (int k = 1; k <= a.n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

}  // namespace yang
