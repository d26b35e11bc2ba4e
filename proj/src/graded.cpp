#include "yangian/graded.hpp"

namespace yang {

namespace {

int word_degree(const Word& w) {
  int d = 0;
  for (GenCode g : w) d += gen_r(g) - 1;
  return d;
}

}  // namespace

int filtration_degree(const Element& x) {
  if (x.is_zero())
    throw std::invalid_argument("the zero element has no filtration degree");
  int d = 0;
  for (const auto& [w, c] : x.terms()) d = std::max(d, word_degree(w));
  return d;
}

UgElement leading_term(const Element& x, int d) {
  const Ctx& cx = x.context();
  TermMap out;
  for (const auto& [w, c] : x.terms()) {
    const int wd = word_degree(w);
    if (wd > d)
      throw std::invalid_argument(
          "element exceeds the requested filtration degree");
    if (wd < d) continue;
    Word lw;
    lw.reserve(w.size());
    for (GenCode g : w) lw.push_back(pack_gen(gen_i(g), gen_j(g), gen_r(g) - 1));
    straighten(*cx, AlgebraKind::loop, std::move(lw), c, out);
  }
  return UgElement::from_terms(cx, std::move(out));
}

UgElement zr(const Ctx& cx, int r) {
  UgElement out = UgElement::zero(cx);
  for (int i = 1; i <= cx->n(); ++i) out = out + loop_gen(cx, i, i, r);
  return out;
}

UgElement p_centre_gen(const Ctx& cx, int i, int j, int r) {
  UgElement out = pth_power(loop_gen(cx, i, j, r));
  if (i == j) out = out - loop_gen(cx, i, j, int(r * cx->p()));
  return out;
}

bool is_loop_central(const UgElement& x, int smax) {
  const Ctx& cx = x.context();
  for (int k = 1; k <= cx->n(); ++k)
    for (int l = 1; l <= cx->n(); ++l)
      for (int s = 0; s <= smax; ++s)
        if (!commutator(x, loop_gen(cx, k, l, s)).is_zero()) return false;
  return true;
}

}  // namespace yang
