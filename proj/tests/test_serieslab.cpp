#include <doctest.h>

#include "yangian/central.hpp"
#include "yangian/serieslab.hpp"

using namespace yang;

namespace {

// Coefficients of the simple-root series E_1(u) or the diagonal series D_1(u)
// of the n = 2 algebra, as a convenient indexed family X[r].
std::vector<Element> coeffs(const Series& s) {
  std::vector<Element> x(s.trunc() + 1, Element::zero(s.context()));
  for (int r = 0; r <= s.trunc(); ++r) x[r] = s.coefficient(r);
  return x;
}

}  // namespace

TEST_CASE("square of the simple-root series at p = 2, frozen table") {
  Ctx cx = make_context(2, 2);
  const int N = 8;
  Drinfeld dr(cx, N);
  Series e = dr.E(1);
  Series sq = series_power_p(e);
  auto x = coeffs(e);

  CHECK(sq.coefficient(0).is_zero());
  CHECK(sq.coefficient(1).is_zero());
  CHECK(sq.coefficient(2) == x[1] * x[1]);
  CHECK(sq.coefficient(3) == x[1] * x[1]);
  CHECK(sq.coefficient(4) == x[2] * x[2] + x[1] * x[1]);
  CHECK(sq.coefficient(5) == x[1] * x[1]);
  CHECK(sq.coefficient(6) == x[3] * x[3] + x[2] * x[2] + x[1] * x[1]);
  CHECK(sq.coefficient(7) == x[3] * x[3] + x[1] * x[1]);
  CHECK(sq.coefficient(8) == x[4] * x[4] + x[2] * x[2] + x[1] * x[1]);
}

TEST_CASE("staggered p-fold product of the diagonal series at p = 2, frozen table") {
  Ctx cx = make_context(2, 2);
  const int N = 6;
  Drinfeld dr(cx, N);
  Series b = frobenius_product(dr.D(1));
  CHECK(b == B_series(dr, 1));
  auto x = coeffs(dr.D(1));

  Element v2 = x[1] * x[1] + x[1];
  Element v4 = x[2] * x[2] + x[3] + x[1] * x[2] + x[2] + v2;
  Element v6 =
      x[3] * x[3] + x[5] + x[1] * x[3] + x[1] * x[4] + x[2] * x[3] + x[3] + v4;
  CHECK(b.coefficient(0) == Element::one(cx));
  CHECK(b.coefficient(1).is_zero());
  CHECK(b.coefficient(2) == v2);
  CHECK(b.coefficient(3) == v2);
  CHECK(b.coefficient(4) == v4);
  CHECK(b.coefficient(5) == v2);
  CHECK(b.coefficient(6) == v6);
}

TEST_CASE("staggered p-fold product of the diagonal series at p = 3, frozen table") {
  Ctx cx = make_context(2, 3);
  const int N = 6;
  Drinfeld dr(cx, N);
  Series b = frobenius_product(dr.D(1));
  auto x = coeffs(dr.D(1));

  Element v3 = x[1] * x[1] * x[1] - x[1];
  Element v6 = x[2] * x[2] * x[2] - x[4] + x[1] * x[3] - x[1] * x[1] * x[2] +
               x[2] - x[2] * x[2];
  CHECK(b.coefficient(0) == Element::one(cx));
  CHECK(b.coefficient(1).is_zero());
  CHECK(b.coefficient(2).is_zero());
  CHECK(b.coefficient(3) == v3);
  CHECK(b.coefficient(4).is_zero());
  CHECK(b.coefficient(5) == v3);
  CHECK(b.coefficient(6) == v6);
}

TEST_CASE("coefficient p+1 of the power families vanishes for odd p") {
  for (long p : {3L, 5L}) {
    CAPTURE(p);
    Ctx cx = make_context(2, p);
    const int N = int(p) + 1;
    Drinfeld dr(cx, N);
    CHECK(series_power_p(dr.E(1)).coefficient(N).is_zero());
    CHECK(P_series(dr, 1, 2).coefficient(N).is_zero());
  }
}

TEST_CASE("boundary coefficients of the structured products") {
  for (long p : {2L, 3L}) {
    CAPTURE(p);
    Ctx cx = make_context(2, p);
    const int N = int(p) + 1;
    Drinfeld dr(cx, N);
    Element d1 = dr.D(1).coefficient(1);
    Element e1 = dr.E(1).coefficient(1);
    CHECK(frobenius_product(dr.D(1)).coefficient(int(p)) ==
          pth_power(d1) - d1);
    CHECK(series_power_p(dr.E(1)).coefficient(int(p)) == pth_power(e1));
    CHECK(frobenius_product_nilpotent(dr.E(1)).coefficient(int(p)) ==
          pth_power(e1));
  }
}

TEST_CASE("closed forms match the products on free commuting coefficients") {
  Ctx cx = make_context(2, 3);
  const int N = 6;
  auto mk = [&](int tag, long constant) {
    SeriesT<CommPoly> s(cx, N);
    s.set_coefficient(0, CommPoly::scalar(cx, constant));
    for (int r = 1; r <= N; ++r)
      s.set_coefficient(r, comm_gen(cx, GenCode((tag << 12) | r)));
    return s;
  };

  SUBCASE("two and three staggered factors") {
    for (int k : {2, 3}) {
      std::vector<SeriesT<CommPoly>> xs;
      for (int i = 0; i < k; ++i) xs.push_back(mk(i + 1, 1));
      SeriesT<CommPoly> prod = staggered_product(xs);
      for (int r = 0; r <= N; ++r)
        CHECK(prod.coefficient(r) == staggered_coefficient_closed_form(xs, r));
    }
  }

  SUBCASE("p staggered copies of one series") {
    SeriesT<CommPoly> x = mk(9, 1);
    SeriesT<CommPoly> prod = frobenius_product(x);
    for (int r = 0; r <= N; ++r)
      CHECK(prod.coefficient(r) == frobenius_coefficient_closed_form(x, r));
  }
}

TEST_CASE("structure-constant table of the p-fold product") {
  for (long p : {2L, 3L}) {
    CAPTURE(p);
    Prime pr(p);
    std::vector<Coeff> pts(p);
    for (long k = 0; k < p; ++k) pts[k] = fp::normalize(k, p);

    SUBCASE("empty exponent vector selects the constant term") {
      std::vector<int> mu0(p, 0);
      for (int r = 0; r <= 6; ++r)
        CHECK(gamma_coeff(mu0, r, pts, pr) == (r == 0 ? 1u : 0u));
    }

    SUBCASE("full-weight coefficients count arrangements") {
      for (int s = 1; s <= 6; ++s)
        for (const auto& mu : partitions(s, int(p))) {
          std::vector<long> parts(mu.begin(), mu.end());
          CHECK(gamma_coeff(mu, s, pts, pr) ==
                Coeff(orbit_size_mod_p(parts, pr).value));
        }
    }

    SUBCASE("coefficients vanish in the band below full weight") {
      for (int r = 1; r <= 8; ++r)
        for (int s = 0; s <= r; ++s) {
          const int gap = r - s;
          if (!(0 < gap && gap < p - 1)) continue;
          for (const auto& mu : partitions(s, int(p)))
            CHECK(gamma_coeff(mu, r, pts, pr) == 0);
        }
    }
  }
}

TEST_CASE("input validation of the structure-constant table") {
  Prime pr(3);
  std::vector<Coeff> pts = {0, 1, 2};
  CHECK_THROWS_AS(gamma_coeff({1, 2, 0}, 3, pts, pr), std::invalid_argument);
  CHECK_THROWS_AS(gamma_coeff({1, 1}, 2, pts, pr), std::invalid_argument);
}

TEST_CASE("power sums over all residues") {
  for (long p : {3L, 5L, 7L}) {
    CAPTURE(p);
    Prime pr(p);
    std::vector<Coeff> pts(p);
    for (long k = 0; k < p; ++k) pts[k] = fp::normalize(k, p);
    for (int l = 1; l <= p - 2; ++l) CHECK(power_sum(pts, l, pr) == 0);
    CHECK(power_sum(pts, int(p) - 1, pr) == fp::normalize(-1, p));
  }
}

TEST_CASE("Newton's identity at explicit points") {
  Prime pr(7);
  std::vector<Coeff> x = {1, 2, 3, 5, 6};
  for (int k = 1; k <= 5; ++k) CHECK(newton_check(k, x, pr));

  SUBCASE("elementary symmetric sanity") {
    CHECK(elementary_symmetric(x, 0, pr) == 1);
    CHECK(elementary_symmetric(x, 1, pr) == fp::normalize(1 + 2 + 3 + 5 + 6, 7));
    CHECK(elementary_symmetric(x, 5, pr) == fp::normalize(1 * 2 * 3 * 5 * 6, 7));
    CHECK(elementary_symmetric(x, 6, pr) == 0);
  }
}

TEST_CASE("degree-sequence optimality") {
  for (int m : {1, 2, 3}) {
    CAPTURE(m);
    auto d = [m](int r) { return r < m ? 0L : long(m) * (r / m) - m; };
    for (int r = 2; r <= 10; ++r) {
      CAPTURE(r);
      CHECK(is_optimal_degree(m * r, d, 4));
    }
  }
  CHECK(is_optimal_degree(2, [](int r) { return long(r - 1); }, 2));
  CHECK(!is_optimal_degree(3, [](int) { return 0L; }, 2));
  CHECK_THROWS_AS(is_optimal_degree(1, [](int) { return 0L; }, 2),
                  std::invalid_argument);
}

TEST_CASE("enumeration helpers") {
  CHECK(compositions(3, 2).size() == 6);   // C(4, 2)
  CHECK(compositions(0, 0).size() == 1);
  CHECK(compositions(0, 1).empty());
  CHECK(partitions(4, 4).size() == 5);
  CHECK(partitions(4, 2).size() == 3);     // 4, 3+1, 2+2
  CHECK(partitions(0, 3).size() == 1);     // the empty partition, padded
  for (const auto& mu : partitions(5, 3)) CHECK(mu.size() == 3);
}
