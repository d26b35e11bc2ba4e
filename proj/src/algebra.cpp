#include "yangian/algebra.hpp"

#include <algorithm>
#include <utility>

namespace yang {

namespace {

void add_term(TermMap& m, const Context& cx, const Word& w, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = m.emplace(w, c);
  if (!inserted) {
    it->second = cx.add(it->second, c);
    if (it->second == 0) m.erase(it);
  }
}

// Degree component of the termination measure: total superscript weight for
// the deformed algebra (its commutators drop the weight by one), word length
// for the current algebra (its commutators shorten words), zero for the
// commutative algebra.
long measure_degree(AlgebraKind kind, const Word& w) {
  switch (kind) {
    case AlgebraKind::rtt: {
      long d = 0;
      for (GenCode g : w) d += gen_r(g);
      return d;
    }
    case AlgebraKind::loop:
      return long(w.size());
    case AlgebraKind::comm:
      return 0;
  }
  return 0;
}

long inversion_count(const Word& w) {
  long inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv;
}

struct Measure {
  long degree;
  long inversions;
  bool operator<(const Measure& o) const {
    return degree != o.degree ? degree < o.degree : inversions < o.inversions;
  }
};

Measure measure_of(AlgebraKind kind, const Word& w) {
  return {measure_degree(kind, w), inversion_count(w)};
}

}  // namespace

Context::Context(int n, long p) : n_(n), prime_(p), p_(prime_.value()) {
  if (n < 1 || n > 255)
    throw std::invalid_argument("matrix size n must be in 1..255");
}

Ctx make_context(int n, long p) { return std::make_shared<Context>(n, p); }

namespace {

// Appends T[x,y,e] to w; an exponent of 0 means the Kronecker delta, so the
// factor is dropped when x == y and the whole product dies when x != y.
bool push_factor(Word& w, int x, int y, int e) {
  if (e == 0) return x == y;
  w.push_back(pack_gen(x, y, e));
  return true;
}

TermMap compute_rtt_bracket(const Context& cx, GenCode a, GenCode b) {
  const int i = gen_i(a), j = gen_j(a), r = gen_r(a);
  const int k = gen_i(b), l = gen_j(b), s = gen_r(b);
  TermMap out;
  if (i == k && j == l) return out;  // same-entry coefficients commute
  const Coeff minus_one = cx.neg(1);
  for (int t = 0; t < std::min(r, s); ++t) {
    const int u = r + s - 1 - t;
    Word w1;
    if (push_factor(w1, k, j, t) && push_factor(w1, i, l, u))
      straighten(cx, AlgebraKind::rtt, std::move(w1), 1, out);
    Word w2;
    if (push_factor(w2, k, j, u) && push_factor(w2, i, l, t))
      straighten(cx, AlgebraKind::rtt, std::move(w2), minus_one, out);
  }
  return out;
}

TermMap compute_loop_bracket(const Context& cx, GenCode a, GenCode b) {
  const int i = gen_i(a), j = gen_j(a), r = gen_r(a);
  const int k = gen_i(b), l = gen_j(b), s = gen_r(b);
  if (r + s > 255)
    throw std::overflow_error("current-algebra degree exceeds representable range");
  TermMap out;
  if (j == k) add_term(out, cx, Word{pack_gen(i, l, r + s)}, 1);
  if (l == i) add_term(out, cx, Word{pack_gen(k, j, r + s)}, cx.neg(1));
  return out;
}

}  // namespace

const TermMap& Context::bracket(AlgebraKind kind, GenCode a, GenCode b) const {
  static const TermMap kEmpty;
  if (kind == AlgebraKind::comm) return kEmpty;
  const int idx = kind == AlgebraKind::rtt ? 0 : 1;
  const std::uint64_t key = (std::uint64_t(a) << 32) | b;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_[idx].find(key);
    if (it != cache_[idx].end()) return *it->second;
  }
  // Computed outside the lock: the recursion through straighten() re-enters
  // bracket() for lower-degree pairs.
  TermMap m = kind == AlgebraKind::rtt ? compute_rtt_bracket(*this, a, b)
                                       : compute_loop_bracket(*this, a, b);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] =
      cache_[idx].emplace(key, std::make_shared<const TermMap>(std::move(m)));
  return *it->second;
}

void straighten(const Context& cx, AlgebraKind kind, Word w0, Coeff c0, TermMap& acc) {
  if (c0 == 0) return;
  std::vector<std::pair<Word, Coeff>> work;
  work.emplace_back(std::move(w0), c0);
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t k = 0;
    while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
    if (k + 1 >= w.size()) {
      add_term(acc, cx, w, c);
      continue;
    }
    const Measure before = measure_of(kind, w);
    const GenCode ga = w[k], gb = w[k + 1];
    // ga * gb = gb * ga + [ga, gb]
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    if (!(measure_of(kind, swapped) < before))
      throw std::logic_error("straightening measure failed to decrease on swap");
    work.emplace_back(std::move(swapped), c);
    for (const auto& [bw, bc] : cx.bracket(kind, ga, gb)) {
      Word spliced;
      spliced.reserve(w.size() - 2 + bw.size());
      spliced.insert(spliced.end(), w.begin(), w.begin() + k);
      spliced.insert(spliced.end(), bw.begin(), bw.end());
      spliced.insert(spliced.end(), w.begin() + k + 2, w.end());
      if (!(measure_of(kind, spliced) < before))
        throw std::logic_error("straightening measure failed to decrease on splice");
      work.emplace_back(std::move(spliced), cx.mul(c, bc));
    }
  }
}

Element generator(const Ctx& cx, int i, int j, int r) {
  if (i < 1 || i > cx->n() || j < 1 || j > cx->n())
    throw std::invalid_argument("generator indices must be in 1..n");
  if (r < 1 || r > 255)
    throw std::invalid_argument("generator superscript must be in 1..255");
  TermMap t;
  t[Word{pack_gen(i, j, r)}] = 1;
  return Element::from_terms(cx, std::move(t));
}

UgElement loop_gen(const Ctx& cx, int i, int j, int r) {
  if (i < 1 || i > cx->n() || j < 1 || j > cx->n())
    throw std::invalid_argument("generator indices must be in 1..n");
  if (r < 0 || r > 255)
    throw std::invalid_argument("degree must be in 0..255");
  TermMap t;
  t[Word{pack_gen(i, j, r)}] = 1;
  return UgElement::from_terms(cx, std::move(t));
}

CommPoly comm_gen(const Ctx& cx, GenCode id) {
  TermMap t;
  t[Word{id}] = 1;
  return CommPoly::from_terms(cx, std::move(t));
}

Element swap_rule(const Ctx& cx, int i, int j, int r, int k, int l, int s) {
  generator(cx, i, j, r);  // validate the indices
  generator(cx, k, l, s);
  TermMap out = cx->bracket(AlgebraKind::rtt, pack_gen(i, j, r), pack_gen(k, l, s));
  return Element::from_terms(cx, std::move(out));
}

namespace {

// Replaces each generator of each word by images(gen) and expands.
template <class F>
Element substitute(const Element& a, F&& images) {
  const Ctx& cx = a.context();
  Element out = Element::zero(cx);
  for (const auto& [w, c] : a.terms()) {
    Element prod = Element::scalar(cx, long(c));
    for (GenCode g : w) prod = prod * images(g);
    out = out + prod;
  }
  return out;
}

}  // namespace

Element apply_translation(const Element& a, Coeff c) {
  const Ctx& cx = a.context();
  return substitute(a, [&](GenCode g) {
    const int i = gen_i(g), j = gen_j(g), r = gen_r(g);
    Element img = Element::zero(cx);
    for (int s = 1; s <= r; ++s) {
      Coeff coef = cx->mul(cx->binom(r - 1, r - s),
                           cx->pow(c, static_cast<unsigned long>(r - s)));
      img = img + generator(cx, i, j, s).scale(coef);
    }
    return img;
  });
}

Element apply_mul_series(const Element& a, const std::vector<Coeff>& f) {
  const Ctx& cx = a.context();
  if (f.empty() || f[0] != 1 % Coeff(cx->p()))
    throw std::invalid_argument("multiplier series must have constant term 1");
  return substitute(a, [&](GenCode g) {
    const int i = gen_i(g), j = gen_j(g), r = gen_r(g);
    if (std::size_t(r) >= f.size())
      throw std::invalid_argument("multiplier series too short for this element");
    Element img = Element::zero(cx);
    for (int s = 0; s <= r; ++s) {
      if (s == r) {
        if (i == j) img = img + Element::scalar(cx, long(f[s]));
      } else {
        img = img + generator(cx, i, j, r - s).scale(f[s]);
      }
    }
    return img;
  });
}

Element apply_transpose(const Element& a) {
  const Ctx& cx = a.context();
  TermMap out;
  for (const auto& [w, c] : a.terms()) {
    Word rw;
    rw.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      rw.push_back(pack_gen(gen_j(*it), gen_i(*it), gen_r(*it)));
    straighten(*cx, AlgebraKind::rtt, std::move(rw), c, out);
  }
  return Element::from_terms(cx, std::move(out));
}

Element apply_permutation(const Element& a, const std::vector<int>& w) {
  const Ctx& cx = a.context();
  const int n = cx->n();
  if (int(w.size()) != n)
    throw std::invalid_argument("permutation must have length n");
  std::vector<bool> seen(n + 1, false);
  for (int v : w) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
  TermMap out;
  for (const auto& [word, c] : a.terms()) {
    Word nw;
    nw.reserve(word.size());
    for (GenCode g : word)
      nw.push_back(pack_gen(w[gen_i(g) - 1], w[gen_j(g) - 1], gen_r(g)));
    straighten(*cx, AlgebraKind::rtt, std::move(nw), c, out);
  }
  return Element::from_terms(cx, std::move(out));
}

}  // namespace yang
