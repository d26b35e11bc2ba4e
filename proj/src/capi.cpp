#include "yn.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "yangian/central.hpp"
#include "yangian/io.hpp"
#include "yangian/serieslab.hpp"
#include "yangian/verify.hpp"

using namespace yang;
using nlohmann::json;

struct yn_engine {
  Ctx cx;
  int trunc;
  std::optional<Drinfeld> dr;  // built on first use

  const Drinfeld& drinfeld() {
    if (!dr) dr.emplace(cx, trunc);
    return *dr;
  }
};

namespace {

thread_local std::string g_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
yn_status wrap(Fn&& fn) {
  try {
    return fn();
  } catch (const precision_error& e) {
    g_error = e.what();
    return YN_ERR_PRECISION;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return YN_ERR_INVALID;
  } catch (const std::domain_error& e) {
    g_error = e.what();
    return YN_ERR_INVALID;
  } catch (const std::exception& e) {
    g_error = e.what();
    return YN_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown error";
    return YN_ERR_INTERNAL;
  }
}

std::optional<ShiftMatrix> parse_sigma(const char* sigma_json, int n) {
  if (!sigma_json || !*sigma_json) return std::nullopt;
  ShiftMatrix s = ShiftMatrix::from_json(json::parse(sigma_json));
  if (s.n() != n)
    throw std::invalid_argument("shift matrix size does not match the engine");
  return s;
}

std::string series_to_text(const Series& s) {
  std::string out;
  for (int r = 0; r <= s.trunc(); ++r) {
    out += std::to_string(r);
    out += ": ";
    out += element_to_text(s.coefficient(r));
    out += '\n';
  }
  return out;
}

Element parse_element(const std::string& text, const Ctx& cx) {
  std::size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{')
    return element_from_json(json::parse(text), cx);
  return element_from_text(text, cx);
}

json matrix_to_json(const MatrixSeries& m) {
  json rows = json::array();
  for (int i = 1; i <= m.n; ++i) {
    json row = json::array();
    for (int j = 1; j <= m.n; ++j) row.push_back(series_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

extern "C" {

yn_engine* yn_engine_create(int n, long p, int trunc) {
  yn_engine* e = nullptr;
  yn_status st = wrap([&]() -> yn_status {
    if (n < 1 || n > 16) throw std::invalid_argument("n must be in 1..16");
    if (trunc < 0 || trunc > 64)
      throw std::invalid_argument("trunc must be in 0..64");
    e = new yn_engine{make_context(n, p), trunc, std::nullopt};
    return YN_OK;
  });
  return st == YN_OK ? e : nullptr;
}

void yn_engine_destroy(yn_engine* e) { delete e; }

const char* yn_last_error(void) { return g_error.c_str(); }

void yn_string_free(char* s) { std::free(s); }

yn_status yn_compute(yn_engine* e, const char* family, int i, int j, int r,
                     const char* sigma_json, int as_json, char** out) {
  return wrap([&]() -> yn_status {
    if (!e || !family || !out) throw std::invalid_argument("null argument");
    const std::string fam = family;
    const int n = e->cx->n();

    // coefficient families driven by the shift matrix
    if (fam == "E" || fam == "F") {
      if (r < 0)
        throw std::invalid_argument("root families support only r >= 1");
      ShiftMatrix sigma =
          parse_sigma(sigma_json, n).value_or(ShiftMatrix::zero(n));
      Element x = fam == "E" ? shifted_E(e->drinfeld(), sigma, i, j, r)
                             : shifted_F(e->drinfeld(), sigma, i, j, r);
      *out = dup_string(as_json ? element_to_json(x).dump()
                                : element_to_text(x));
      return YN_OK;
    }

    Series s(e->cx, e->trunc);
    if (fam == "C") {
      s = qdet_series(e->cx, e->trunc);
    } else if (fam == "B") {
      s = B_series(e->drinfeld(), i);
    } else if (fam == "BC") {
      s = BC_series(e->drinfeld());
    } else if (fam == "P") {
      s = P_series(e->drinfeld(), i, j);
    } else if (fam == "Q") {
      s = Q_series(e->drinfeld(), i, j);
    } else if (fam == "S") {
      s = S_series(e->cx, i, j, e->trunc);
    } else if (fam == "A") {
      s = A_series(e->drinfeld(), i);
    } else {
      throw std::invalid_argument("unknown family: " + fam);
    }
    if (r < 0) {
      *out = dup_string(as_json ? series_to_json(s).dump() : series_to_text(s));
    } else {
      Element x = s.coefficient(r);
      *out = dup_string(as_json ? element_to_json(x).dump()
                                : element_to_text(x));
    }
    return YN_OK;
  });
}

yn_status yn_certify(yn_engine* e, const char* element, int smax, char** out) {
  return wrap([&]() -> yn_status {
    if (!e || !element || !out) throw std::invalid_argument("null argument");
    if (smax < 1) throw std::invalid_argument("smax must be >= 1");
    Element x = parse_element(element, e->cx);
    auto w = certify_central(x, smax);
    json report;
    report["smax"] = smax;
    report["certified"] = !w.has_value();
    if (w) {
      report["witness"] = {{"k", w->k},
                           {"l", w->l},
                           {"s", w->s},
                           {"bracket", element_to_json(w->bracket)},
                           {"bracket_text", element_to_text(w->bracket)}};
    }
    *out = dup_string(report.dump());
    return w ? YN_NOT_CENTRAL : YN_OK;
  });
}

yn_status yn_gauss(yn_engine* e, char** out) {
  return wrap([&]() -> yn_status {
    if (!e || !out) throw std::invalid_argument("null argument");
    GaussFactors g = gauss_factorize(t_matrix(e->cx, e->trunc));
    json report = {{"n", e->cx->n()},
                   {"p", e->cx->p()},
                   {"trunc", e->trunc},
                   {"F", matrix_to_json(g.F)},
                   {"D", matrix_to_json(g.D)},
                   {"E", matrix_to_json(g.E)}};
    *out = dup_string(report.dump());
    return YN_OK;
  });
}

yn_status yn_verify(yn_engine* e, const char* suite, int smax, unsigned seed,
                    const char* sigma_json, char** out) {
  return wrap([&]() -> yn_status {
    if (!e || !suite || !out) throw std::invalid_argument("null argument");
    VerifyConfig cfg;
    cfg.n = e->cx->n();
    cfg.p = e->cx->p();
    cfg.trunc = e->trunc;
    cfg.smax = smax;
    cfg.seed = seed;
    cfg.sigma = parse_sigma(sigma_json, cfg.n);
    auto checks = run_suite(suite, cfg);
    const bool ok = all_passed(checks);
    *out = dup_string(report_json(cfg, std::move(checks)).dump());
    if (!ok) g_error = "verification suite reported failures";
    return ok ? YN_OK : YN_CHECK_FAILED;
  });
}

yn_status yn_lab(yn_engine* e, char** out) {
  return wrap([&]() -> yn_status {
    if (!e || !out) throw std::invalid_argument("null argument");
    const long p = e->cx->p();
    const int N = e->trunc;
    Ctx cx = e->cx->n() >= 2 ? e->cx : make_context(2, p);
    Drinfeld dr(cx, N);

    json tables;
    {
      // p-th power of the simple-root series
      Series sq = series_power_p(dr.E(1));
      json t = json::array();
      for (int r = 0; r <= N; ++r)
        t.push_back({{"r", r}, {"value", element_to_text(sq.coefficient(r))}});
      tables["root_series_power_p"] = std::move(t);
    }
    {
      // staggered p-fold product of the first diagonal series
      Series b = frobenius_product(dr.D(1));
      json t = json::array();
      for (int r = 0; r <= N; ++r)
        t.push_back({{"r", r}, {"value", element_to_text(b.coefficient(r))}});
      tables["diagonal_staggered_product"] = std::move(t);
    }

    VerifyConfig cfg;
    cfg.n = e->cx->n();
    cfg.p = p;
    cfg.trunc = N;
    auto checks = run_suite("serieslab", cfg);
    const bool ok = all_passed(checks);
    json report = report_json(cfg, std::move(checks));
    report["tables"] = std::move(tables);
    *out = dup_string(report.dump());
    if (!ok) g_error = "series checks reported failures";
    return ok ? YN_OK : YN_CHECK_FAILED;
  });
}

}  // extern "C"
