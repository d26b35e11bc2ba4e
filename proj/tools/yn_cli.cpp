// Command-line front end. Talks to the engine exclusively through the C API
// in yn.h; all exact computation lives behind that boundary.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "yn.h"

namespace {

struct Common {
  int n = 2;
  long p = 2;
  int trunc = 8;
  int smax = 4;
  unsigned seed = 1;
  std::string sigma;    // "upper=..,.. lower=..,.." or a JSON object
  std::string out = "text";  // text | json
};

void add_common(CLI::App* cmd, Common& c, bool with_sigma = true) {
  cmd->add_option("--n", c.n, "matrix size")->check(CLI::Range(1, 16));
  cmd->add_option("--p", c.p, "prime characteristic")->check(CLI::Range(2L, 1000003L));
  cmd->add_option("--trunc", c.trunc, "series truncation order")
      ->check(CLI::Range(0, 64));
  cmd->add_option("--smax", c.smax, "superscript bound for centrality grids")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--seed", c.seed, "seed for randomized sampling");
  if (with_sigma)
    cmd->add_option("--sigma", c.sigma,
                    "shift matrix: 'upper=1,0 lower=0,0' or JSON");
  cmd->add_option("--out", c.out, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

// The C API accepts the shift matrix as JSON only; expand the diagonal
// shorthand here.
std::string sigma_to_json(const std::string& text, int n) {
  if (text.empty() || text.front() == '{') return text;
  std::string upper, lower;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--sigma", "expected upper=... lower=... or JSON");
    std::string key = tok.substr(0, eq);
    std::string vals = tok.substr(eq + 1);
    if (key == "upper")
      upper = vals;
    else if (key == "lower")
      lower = vals;
    else
      throw CLI::ValidationError("--sigma", "unknown component: " + key);
  }
  auto list = [n](const std::string& csv) {
    if (csv.empty()) {
      std::string zeros;
      for (int k = 0; k + 1 < n; ++k) zeros += (k ? ",0" : "0");
      return "[" + zeros + "]";
    }
    return "[" + csv + "]";
  };
  return "{\"upper\":" + list(upper) + ",\"lower\":" + list(lower) + "}";
}

struct Engine {
  yn_engine* h = nullptr;
  explicit Engine(const Common& c) : h(yn_engine_create(c.n, c.p, c.trunc)) {
    if (!h) throw CLI::ValidationError("engine", yn_last_error());
  }
  ~Engine() { yn_engine_destroy(h); }
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;
};

int print_result(yn_status st, char* out, yn_status soft_failure) {
  if (out) {
    std::fputs(out, stdout);
    std::size_t len = std::strlen(out);
    if (len == 0 || out[len - 1] != '\n') std::fputc('\n', stdout);
    yn_string_free(out);
  }
  if (st == YN_OK) return 0;
  if (st == soft_failure) return 1;  // computed fine, but checks failed
  std::fprintf(stderr, "error: %s\n", yn_last_error());
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic engine for deformed matrix algebras over GF(p)"};
  app.require_subcommand(1);

  Common c;

  // compute
  std::string family;
  int gi = 1, gj = 2, gr = -1;
  auto* compute = app.add_subcommand("compute", "compute a distinguished series or coefficient");
  compute->add_option("family", family, "C | B | BC | P | Q | S | A | E | F")
      ->required()
      ->check(CLI::IsMember({"C", "B", "BC", "P", "Q", "S", "A", "E", "F"}));
  add_common(compute, c);
  compute->add_option("--i", gi, "first index, for families that need one");
  compute->add_option("--j", gj, "second index, for families that need one");
  compute->add_option("--r", gr, "coefficient index; omit for the whole series");

  // certify
  std::string expr;
  auto* certify = app.add_subcommand("certify", "certify that an element is central");
  add_common(certify, c, /*with_sigma=*/false);
  certify->add_option("--expr", expr,
                      "element as text or JSON; reads stdin when omitted");

  // gauss
  auto* gauss = app.add_subcommand("gauss", "triangular factorization of the generator matrix");
  add_common(gauss, c, /*with_sigma=*/false);

  // verify
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite,
                     "drinfeld | gauss-identities | center | graded | serieslab | shifted | all")
      ->check(CLI::IsMember({"drinfeld", "gauss-identities", "center", "graded",
                             "serieslab", "shifted", "all"}));
  add_common(verify, c);

  // lab
  auto* lab = app.add_subcommand("lab", "reference tables for the structured series products");
  add_common(lab, c, /*with_sigma=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message or help text
    return code == 0 ? 0 : 2;
  }

  try {
    Engine eng(c);
    char* out = nullptr;

    if (*compute) {
      std::string sj = sigma_to_json(c.sigma, c.n);
      yn_status st =
          yn_compute(eng.h, family.c_str(), gi, gj, gr,
                     sj.empty() ? nullptr : sj.c_str(), c.out == "json", &out);
      return print_result(st, out, YN_OK);
    }
    if (*certify) {
      if (expr.empty())
        expr.assign(std::istreambuf_iterator<char>(std::cin),
                    std::istreambuf_iterator<char>());
      yn_status st = yn_certify(eng.h, expr.c_str(), c.smax, &out);
      return print_result(st, out, YN_NOT_CENTRAL);
    }
    if (*gauss) {
      yn_status st = yn_gauss(eng.h, &out);
      return print_result(st, out, YN_OK);
    }
    if (*verify) {
      std::string sj = sigma_to_json(c.sigma, c.n);
      yn_status st = yn_verify(eng.h, suite.c_str(), c.smax, c.seed,
                               sj.empty() ? nullptr : sj.c_str(), &out);
      return print_result(st, out, YN_CHECK_FAILED);
    }
    if (*lab) {
      yn_status st = yn_lab(eng.h, &out);
      return print_result(st, out, YN_CHECK_FAILED);
    }
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  }
  return 2;
}
