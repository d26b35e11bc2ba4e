#include "yangian/gauss.hpp"

namespace yang {

namespace {

void check_unit_constant_term(const MatrixSeries& t) {
  for (int i = 1; i <= t.n; ++i)
    for (int j = 1; j <= t.n; ++j) {
      auto s = t.at(i, j).coefficient(0).as_scalar();
      if (!s || *s != (i == j ? 1u : 0u))
        throw std::invalid_argument(
            "matrix constant term must be the identity for factorization");
    }
}

}  // namespace

GaussFactors gauss_factorize(const MatrixSeries& t) {
  check_unit_constant_term(t);
  const int n = t.n;
  const Ctx& cx = t.e.front().context();
  const int trunc = t.e.front().trunc();
  const Series zero(cx, trunc);
  const Series unit = Series::one(cx, trunc);

  GaussFactors g{MatrixSeries(n, zero), MatrixSeries(n, zero), MatrixSeries(n, zero)};
  for (int i = 1; i <= n; ++i) {
    g.F.at(i, i) = unit;
    g.E.at(i, i) = unit;
  }

  MatrixSeries a = t;  // successive Schur complements, active block k..n
  for (int k = 1; k <= n; ++k) {
    const Series d = a.at(k, k);
    const Series dinv = d.invert();
    g.D.at(k, k) = d;
    for (int j = k + 1; j <= n; ++j) {
      g.E.at(k, j) = dinv * a.at(k, j);
      g.F.at(j, k) = a.at(j, k) * dinv;
    }
    for (int i = k + 1; i <= n; ++i)
      for (int j = k + 1; j <= n; ++j)
        a.at(i, j) = a.at(i, j) - a.at(i, k) * dinv * a.at(k, j);
  }
  return g;
}

MatrixSeries mat_invert(const MatrixSeries& m) {
  const int n = m.n;
  const Ctx& cx = m.e.front().context();
  const int trunc = m.e.front().trunc();
  MatrixSeries work = m;
  MatrixSeries inv(n, Series(cx, trunc));
  for (int i = 1; i <= n; ++i) inv.at(i, i) = Series::one(cx, trunc);

  // Row reduction by left multiplications, valid entry-by-entry even though
  // the entries do not commute.
  for (int k = 1; k <= n; ++k) {
    const Series pivot_inv = work.at(k, k).invert();
    for (int j = 1; j <= n; ++j) {
      work.at(k, j) = pivot_inv * work.at(k, j);
      inv.at(k, j) = pivot_inv * inv.at(k, j);
    }
    for (int i = 1; i <= n; ++i) {
      if (i == k) continue;
      const Series factor = work.at(i, k);
      if (factor.is_zero()) continue;
      for (int j = 1; j <= n; ++j) {
        work.at(i, j) = work.at(i, j) - factor * work.at(k, j);
        inv.at(i, j) = inv.at(i, j) - factor * inv.at(k, j);
      }
    }
  }
  return inv;
}

namespace {

// The boxed minor T[row, col] - T[row, 1..m] * A^{-1} * T[1..m, col], where A
// is the leading m x m block of the generator matrix and m = i - 1.
Series boxed_minor(const Ctx& cx, int row, int col, int m, int trunc) {
  Series res = generator_series(cx, row, col, trunc);
  if (m == 0) return res;
  MatrixSeries a(m, Series(cx, trunc));
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y) a.at(x, y) = generator_series(cx, x, y, trunc);
  MatrixSeries ainv = mat_invert(a);
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      res = res - generator_series(cx, row, x, trunc) * ainv.at(x, y) *
                      generator_series(cx, y, col, trunc);
  return res;
}

}  // namespace

Series quasideterminant_D(const Ctx& cx, int i, int trunc) {
  return boxed_minor(cx, i, i, i - 1, trunc);
}

Series quasideterminant_E(const Ctx& cx, int i, int j, int trunc) {
  if (!(i < j)) throw std::invalid_argument("need i < j");
  return quasideterminant_D(cx, i, trunc).invert() * boxed_minor(cx, i, j, i - 1, trunc);
}

Series quasideterminant_F(const Ctx& cx, int i, int j, int trunc) {
  if (!(i < j)) throw std::invalid_argument("need i < j");
  return boxed_minor(cx, j, i, i - 1, trunc) * quasideterminant_D(cx, i, trunc).invert();
}

Drinfeld::Drinfeld(Ctx cx, int trunc) : cx_(std::move(cx)), trunc_(trunc) {
  g_ = gauss_factorize(t_matrix(cx_, trunc_));
  dinv_.reserve(cx_->n());
  for (int i = 1; i <= cx_->n(); ++i) dinv_.push_back(g_.D.at(i, i).invert());
}

const Series& Drinfeld::D(int i) const {
  if (i < 1 || i > cx_->n()) throw std::invalid_argument("diagonal index out of range");
  return g_.D.at(i, i);
}

const Series& Drinfeld::D_inv(int i) const {
  if (i < 1 || i > cx_->n()) throw std::invalid_argument("diagonal index out of range");
  return dinv_[i - 1];
}

Series Drinfeld::E(int i, int j) const {
  if (!(1 <= i && i < j && j <= cx_->n()))
    throw std::invalid_argument("need 1 <= i < j <= n");
  return g_.E.at(i, j);
}

Series Drinfeld::F(int i, int j) const {
  if (!(1 <= i && i < j && j <= cx_->n()))
    throw std::invalid_argument("need 1 <= i < j <= n");
  return g_.F.at(j, i);
}

Series Drinfeld::H(int i) const {
  if (!(1 <= i && i < cx_->n())) throw std::invalid_argument("need 1 <= i < n");
  return (-D(i + 1)) * D_inv(i);
}

Element Drinfeld::higher_root_E(int i, int j, int r) const {
  if (!(1 <= i && i < j && j <= cx_->n()))
    throw std::invalid_argument("need 1 <= i < j <= n");
  if (j == i + 1) return E(i, j).coefficient(r);
  return commutator(higher_root_E(i, j - 1, r), E(j - 1, j).coefficient(1));
}

Element Drinfeld::higher_root_F(int i, int j, int r) const {
  if (!(1 <= i && i < j && j <= cx_->n()))
    throw std::invalid_argument("need 1 <= i < j <= n");
  if (j == i + 1) return F(i, j).coefficient(r);
  return commutator(F(j - 1, j).coefficient(1), higher_root_F(i, j - 1, r));
}

}  // namespace yang
