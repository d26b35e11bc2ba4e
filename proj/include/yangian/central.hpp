#pragma once

#include <optional>

#include "yangian/gauss.hpp"

namespace yang {

// The distinguished series whose coefficients are (or are conjectured to be)
// central in characteristic p. All series are truncated at the precision of
// the inputs.

// Column-shifted signed permutation expansion of the generator matrix:
// sum_g sgn(g) T_{g(1),1}(u) T_{g(2),2}(u-1) ... T_{g(n),n}(u-n+1).
Series qdet_series(const Ctx& cx, int trunc);

// D_1(u) D_2(u-1) ... D_n(u-n+1); equals qdet_series for the generator matrix.
Series product_center_series(const Drinfeld& dr);

// B_i(u) = D_i(u) D_i(u-1) ... D_i(u-p+1).
Series B_series(const Drinfeld& dr, int i);

// BC(u) = B_1(u) B_2(u-1) ... B_n(u-n+1); also checked internally against
// C(u) C(u-1) ... C(u-p+1) with C the product form.
Series BC_series(const Drinfeld& dr);

// Series of root coefficients for (i, j), i < j: constant term 0, and the
// u^-r coefficient is the nested-bracket root element of superscript r.
Series root_E_series(const Drinfeld& dr, int i, int j);
Series root_F_series(const Drinfeld& dr, int i, int j);

// P_{i,j}(u) = E_{i,j}(u)^p and Q_{i,j}(u) = F_{i,j}(u)^p.
Series P_series(const Drinfeld& dr, int i, int j);
Series Q_series(const Drinfeld& dr, int i, int j);

// S_{i,j}(u) = T_{i,j}(u) T_{i,j}(u-1) ... T_{i,j}(u-p+1).
Series S_series(const Ctx& cx, int i, int j, int trunc);

// A_i(u) = H_i(u) H_i(u-1) ... H_i(u-p+1), computed as -B_{i+1}(u) B_i(u)^-1
// and checked internally against the direct product.
Series A_series(const Drinfeld& dr, int i);

struct CentralityWitness {
  int k, l, s;       // the generator T[k,l,s] that fails to commute
  Element bracket;   // the nonzero commutator
};

// Commutes x against every T[k,l,s] with k,l in 1..n and s in 1..smax;
// returns the first failure, or nullopt if x passed the whole grid.
std::optional<CentralityWitness> certify_central(const Element& x, int smax);

}  // namespace yang
