#include "yangian/serieslab.hpp"

#include <algorithm>

namespace yang {

std::vector<std::vector<int>> compositions(int parts, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == parts - 1) {
      cur[i] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[i] = v;
      rec(i + 1, rem - v);
    }
  };
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  rec(0, total);
  return out;
}

std::vector<std::vector<int>> partitions(int total, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int max_part) {
    if (rem == 0) {
      std::vector<int> padded = cur;
      padded.resize(max_parts, 0);
      out.push_back(std::move(padded));
      return;
    }
    if (int(cur.size()) == max_parts) return;
    for (int v = std::min(rem, max_part); v >= 1; --v) {
      cur.push_back(v);
      rec(rem - v, v);
      cur.pop_back();
    }
  };
  rec(total, total == 0 ? 1 : total);
  return out;
}

Coeff gamma_coeff(const std::vector<int>& mu, int r, const std::vector<Coeff>& x,
                  const Prime& pr) {
  const long p = pr.value();
  if (long(mu.size()) != long(x.size()))
    throw std::invalid_argument("mu and x must have the same length");
  for (std::size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] < mu[i + 1])
      throw std::invalid_argument("mu must be weakly decreasing");
  int weight = 0;
  for (int m : mu) {
    if (m < 0) throw std::invalid_argument("mu parts must be non-negative");
    weight += m;
  }
  if (weight > r) return 0;
  const int k = int(mu.size());

  Coeff total = 0;
  // distinct arrangements of mu: start from the ascending order and walk all
  // multiset permutations
  std::vector<int> alpha(mu.rbegin(), mu.rend());
  do {
    for (const auto& nu : compositions(k, r - weight)) {
      Coeff term = 1;
      for (int i = 0; i < k && term != 0; ++i) {
        if (nu[i] == 0) continue;  // factor is 1
        if (alpha[i] == 0) {
          term = 0;
          break;
        }
        Coeff b = Coeff(binom_mod_p(alpha[i] + nu[i] - 1, nu[i], pr).value);
        term = fp::mul(term, b, p);
        term = fp::mul(term, fp::pow(x[i], static_cast<unsigned long>(nu[i]), p), p);
      }
      total = fp::add(total, term, p);
    }
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return total;
}

Coeff power_sum(const std::vector<Coeff>& x, int l, const Prime& pr) {
  const long p = pr.value();
  Coeff s = 0;
  for (Coeff v : x) s = fp::add(s, fp::pow(v, static_cast<unsigned long>(l), p), p);
  return s;
}

Coeff elementary_symmetric(const std::vector<Coeff>& x, int k, const Prime& pr) {
  const long p = pr.value();
  if (k < 0 || k > int(x.size())) return 0;
  // coefficients of prod_i (1 + x_i t)
  std::vector<Coeff> e(k + 1, 0);
  e[0] = fp::normalize(1, p);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int d = std::min<int>(k, int(i) + 1); d >= 1; --d)
      e[d] = fp::add(e[d], fp::mul(e[d - 1], x[i], p), p);
  return e[k];
}

bool newton_check(int k, const std::vector<Coeff>& x, const Prime& pr) {
  const long p = pr.value();
  Coeff lhs = fp::mul(fp::normalize(k, p), elementary_symmetric(x, k, pr), p);
  Coeff rhs = 0;
  for (int i = 1; i <= k; ++i) {
    Coeff term = fp::mul(power_sum(x, i, pr), elementary_symmetric(x, k - i, pr), p);
    if (i % 2 == 0) term = fp::neg(term, p);
    rhs = fp::add(rhs, term, p);
  }
  return lhs == rhs;
}

bool is_optimal_degree(int r, const std::function<long(int)>& d, int n) {
  if (r <= 1) throw std::invalid_argument("optimality is defined for r > 1");
  const long dr = d(r);
  for (int s = 1; s <= r; ++s)
    for (const auto& mu : partitions(s, std::min(s, n))) {
      int len = 0;
      long weight = 0;
      for (int part : mu)
        if (part > 0) {
          ++len;
          weight += d(part);
        }
      if (len == 0) continue;
      const bool constrained = s < r || len > 1;
      if (constrained && weight >= dr) return false;
    }
  return true;
}

}  // namespace yang
