#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "yangian/field.hpp"

namespace yang {

// A generator is packed into 32 bits as (i << 16) | (j << 8) | r, so that the
// numeric order on codes coincides with (i, j, r) ascending lexicographic.
// This packing is shared by T[i,j,r] (r >= 1), the current-algebra basis
// e[i,j,r] (r >= 0), and the free commutative indeterminates used as a
// cross-check algebra (arbitrary ids).
using GenCode = std::uint32_t;
using Word = std::vector<GenCode>;       // product of generators, left to right
using TermMap = std::map<Word, Coeff>;   // normal form: each word non-decreasing

constexpr GenCode pack_gen(int i, int j, int r) {
  return (GenCode(i) << 16) | (GenCode(j) << 8) | GenCode(r);
}
constexpr int gen_i(GenCode g) { return int((g >> 16) & 0xff); }
constexpr int gen_j(GenCode g) { return int((g >> 8) & 0xff); }
constexpr int gen_r(GenCode g) { return int(g & 0xff); }

enum class AlgebraKind { rtt, loop, comm };

struct context_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Shared per-(n, p) state: field arithmetic plus the memoized commutator
// tables driving straightening. Safe for concurrent use.
class Context : public std::enable_shared_from_this<Context> {
public:
  Context(int n, long p);

  int n() const { return n_; }
  long p() const { return prime_.value(); }
  const Prime& prime() const { return prime_; }

  Coeff add(Coeff a, Coeff b) const { return fp::add(a, b, p_); }
  Coeff sub(Coeff a, Coeff b) const { return fp::sub(a, b, p_); }
  Coeff mul(Coeff a, Coeff b) const { return fp::mul(a, b, p_); }
  Coeff neg(Coeff a) const { return fp::neg(a, p_); }
  Coeff inv(Coeff a) const { return fp::inv(a, p_); }
  Coeff pow(Coeff a, unsigned long e) const { return fp::pow(a, e, p_); }
  Coeff binom(unsigned long long a, unsigned long long b) const {
    return Coeff(binom_mod_p(a, b, prime_).value);
  }

  // Normalized commutator [a, b] of two generators in the given algebra.
  const TermMap& bracket(AlgebraKind kind, GenCode a, GenCode b) const;

private:
  int n_;
  Prime prime_;
  long p_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const TermMap>> cache_[2];
};

using Ctx = std::shared_ptr<const Context>;
Ctx make_context(int n, long p);

// Rewrites c * w into normal form, accumulating into acc. Straightening swaps
// the first out-of-order adjacent pair and splices in the commutator; every
// rewrite step strictly decreases (degree measure, inversion count)
// lexicographically, which is checked at runtime.
void straighten(const Context& cx, AlgebraKind kind, Word w, Coeff c, TermMap& acc);

template <AlgebraKind K>
class BasicElement {
public:
  BasicElement() = default;  // zero with no context; usable only as a placeholder
  explicit BasicElement(Ctx cx) : cx_(std::move(cx)) {}

  static BasicElement zero(Ctx cx) { return BasicElement(std::move(cx)); }

  static BasicElement scalar(Ctx cx, long v) {
    BasicElement e(std::move(cx));
    Coeff c = fp::normalize(v, e.cx_->p());
    if (c != 0) e.terms_[Word{}] = c;
    return e;
  }

  static BasicElement one(Ctx cx) { return scalar(std::move(cx), 1); }

  static BasicElement from_terms(Ctx cx, TermMap terms) {
    BasicElement e(std::move(cx));
    e.terms_ = std::move(terms);
    return e;
  }

  const Ctx& context() const { return cx_; }
  long prime() const { return cx_->p(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Scalar value if the element is a constant, otherwise nullopt.
  std::optional<Coeff> as_scalar() const {
    if (terms_.empty()) return Coeff(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty())
      return terms_.begin()->second;
    return std::nullopt;
  }

  bool operator==(const BasicElement& o) const {
    if (cx_ && o.cx_ && (cx_->n() != o.cx_->n() || cx_->p() != o.cx_->p()))
      return false;
    return terms_ == o.terms_;
  }
  bool operator!=(const BasicElement& o) const { return !(*this == o); }

  BasicElement operator+(const BasicElement& o) const {
    const Context& cx = *check_same(o);
    BasicElement r(cx_ ? cx_ : o.cx_);
    r.terms_ = terms_;
    for (const auto& [w, c] : o.terms_) add_term(r.terms_, cx, w, c);
    return r;
  }

  BasicElement operator-(const BasicElement& o) const {
    const Context& cx = *check_same(o);
    BasicElement r(cx_ ? cx_ : o.cx_);
    r.terms_ = terms_;
    for (const auto& [w, c] : o.terms_) add_term(r.terms_, cx, w, cx.neg(c));
    return r;
  }

  BasicElement operator-() const { return scale(cx_ ? cx_->neg(1) : 0); }

  BasicElement operator*(const BasicElement& o) const {
    const Context& cx = *check_same(o);
    BasicElement r(cx_ ? cx_ : o.cx_);
    for (const auto& [wa, ca] : terms_) {
      for (const auto& [wb, cb] : o.terms_) {
        Word w;
        w.reserve(wa.size() + wb.size());
        w.insert(w.end(), wa.begin(), wa.end());
        w.insert(w.end(), wb.begin(), wb.end());
        straighten(cx, K, std::move(w), cx.mul(ca, cb), r.terms_);
      }
    }
    return r;
  }

  BasicElement scale(Coeff c) const {
    BasicElement r(cx_);
    if (!cx_ || c == 0) return r;
    for (const auto& [w, t] : terms_) {
      Coeff v = cx_->mul(t, c);
      if (v != 0) r.terms_[w] = v;
    }
    return r;
  }

  BasicElement pow(unsigned long e) const {
    BasicElement r = one(cx_);
    BasicElement base = *this;
    while (e) {
      if (e & 1) r = r * base;
      if (e >>= 1) base = base * base;
    }
    return r;
  }

private:
  static void add_term(TermMap& m, const Context& cx, const Word& w, Coeff c) {
    auto [it, inserted] = m.emplace(w, c);
    if (!inserted) {
      it->second = cx.add(it->second, c);
      if (it->second == 0) m.erase(it);
    }
  }

  const Ctx& check_same(const BasicElement& o) const {
    if (!cx_) return o.cx_;
    if (o.cx_ && (cx_->n() != o.cx_->n() || cx_->p() != o.cx_->p()))
      throw context_mismatch("elements belong to different (n, p) contexts");
    return cx_;
  }

  Ctx cx_;
  TermMap terms_;
};

using Element = BasicElement<AlgebraKind::rtt>;    // the deformed algebra on T[i,j,r]
using UgElement = BasicElement<AlgebraKind::loop>; // enveloping algebra of gl_n[t]
using CommPoly = BasicElement<AlgebraKind::comm>;  // free commutative cross-check algebra

// T[i,j,r], 1 <= i,j <= n, r >= 1.
Element generator(const Ctx& cx, int i, int j, int r);
// e[i,j,r], 1 <= i,j <= n, r >= 0.
UgElement loop_gen(const Ctx& cx, int i, int j, int r);
// Free commutative indeterminate with an arbitrary id.
CommPoly comm_gen(const Ctx& cx, GenCode id);

template <AlgebraKind K>
BasicElement<K> commutator(const BasicElement<K>& a, const BasicElement<K>& b) {
  return a * b - b * a;
}

// [T[i,j,r], T[k,l,s]] as a normal-form element.
Element swap_rule(const Ctx& cx, int i, int j, int r, int k, int l, int s);

template <AlgebraKind K>
BasicElement<K> pth_power(const BasicElement<K>& a) {
  return a.pow(static_cast<unsigned long>(a.context()->p()));
}

// The substitution automorphisms, applied generator-wise and renormalized.
Element apply_translation(const Element& a, Coeff c);
// f given by its coefficients a_0..a_N with a_0 == 1; errors if a superscript
// in a exceeds N.
Element apply_mul_series(const Element& a, const std::vector<Coeff>& f);
Element apply_transpose(const Element& a);
// w maps index i to w[i-1]; must be a permutation of 1..n.
Element apply_permutation(const Element& a, const std::vector<int>& w);

}  // namespace yang
