#pragma once

#include <map>

#include "yangian/series.hpp"

namespace yang {

// Triangular factorization T = F * D * E of a matrix of series whose constant
// term is the identity: F is lower unitriangular, D diagonal, E upper
// unitriangular.
struct GaussFactors {
  MatrixSeries F, D, E;
};

GaussFactors gauss_factorize(const MatrixSeries& t);

// Caches the factorization data of the generator matrix at a fixed
// truncation: the diagonal series D_i, their inverses, the off-diagonal
// series E_{i,j} (i < j) and F_{i,j} (i < j, stored at entry (j, i) of the
// lower factor), plus the simple-root combinations H_i.
class Drinfeld {
public:
  Drinfeld(Ctx cx, int trunc);

  const Ctx& context() const { return cx_; }
  int trunc() const { return trunc_; }

  const Series& D(int i) const;         // 1 <= i <= n
  const Series& D_inv(int i) const;
  Series E(int i, int j) const;         // 1 <= i < j <= n
  Series F(int i, int j) const;
  Series E(int i) const { return E(i, i + 1); }
  Series F(int i) const { return F(i, i + 1); }
  Series H(int i) const;                // -D(i+1) * D_inv(i), 1 <= i < n

  Element D_coeff(int i, int r) const { return D(i).coefficient(r); }
  Element D_inv_coeff(int i, int r) const { return D_inv(i).coefficient(r); }
  Element E_coeff(int i, int r) const { return E(i).coefficient(r); }
  Element F_coeff(int i, int r) const { return F(i).coefficient(r); }

  // Root coefficients beyond the simple ones, via the bracket recursion
  // X[i,j,r] = [X[i,j-1,r], X[j-1,j,1]] (upper) and its lower mirror.
  Element higher_root_E(int i, int j, int r) const;
  Element higher_root_F(int i, int j, int r) const;

private:
  Ctx cx_;
  int trunc_;
  GaussFactors g_;
  std::vector<Series> dinv_;
};

// Independent characterizations of the factorization entries as ratios of
// boxed minors of the generator matrix; used to cross-check gauss_factorize.
Series quasideterminant_D(const Ctx& cx, int i, int trunc);
Series quasideterminant_E(const Ctx& cx, int i, int j, int trunc);  // i < j
Series quasideterminant_F(const Ctx& cx, int i, int j, int trunc);  // i < j

// Inverse of a matrix of series with invertible-scalar constant term on the
// diagonal after elimination (errors otherwise).
MatrixSeries mat_invert(const MatrixSeries& m);

}  // namespace yang
