#pragma once

#include "yangian/algebra.hpp"

namespace yang {

// The filtration places T[i,j,r] in degree r - 1; the degree of a monomial is
// the sum over its factors and the degree of an element is the maximum over
// its monomials. The associated graded algebra is the enveloping algebra of
// the current algebra, with T[i,j,r] passing to e[i,j,r-1].

// Filtration degree; errors on the zero element.
int filtration_degree(const Element& x);

// Image of x in graded degree d: monomials of degree exactly d map factorwise
// to the current algebra, lower ones are dropped, and a monomial of degree
// greater than d is an error.
UgElement leading_term(const Element& x, int d);

// sum_i e[i,i,r], central in the current algebra.
UgElement zr(const Ctx& cx, int r);

// e[i,j,r]^p - delta_{i,j} e[i,j,rp]: the generators of the part of the
// centre special to characteristic p.
UgElement p_centre_gen(const Ctx& cx, int i, int j, int r);

// Commutes x against every e[k,l,s] with s <= smax; true if all vanish.
bool is_loop_central(const UgElement& x, int smax);

}  // namespace yang
