#pragma once

#include <string>
#include <vector>

#include "yangian/gauss.hpp"

#include <json.hpp>

namespace yang {

// An n x n matrix of non-negative integers with zero diagonal satisfying
// s[i][j] + s[j][k] == s[i][k] whenever j lies between i and k. Such a matrix
// is determined by its first super- and sub-diagonals.
class ShiftMatrix {
public:
  explicit ShiftMatrix(std::vector<std::vector<int>> rows);

  static ShiftMatrix zero(int n);
  // upper = s[1][2..], ..., s[n-1][n]; lower = s[2][1], ..., s[n][n-1].
  static ShiftMatrix from_diagonals(const std::vector<int>& upper,
                                    const std::vector<int>& lower);
  // Accepts {"rows": [[...], ...]} or {"upper": [...], "lower": [...]}.
  static ShiftMatrix from_json(const nlohmann::json& j);
  // Accepts "upper=1,2 lower=0,0" (either part optional, n inferred);
  // missing parts default to zeros.
  static ShiftMatrix parse_cli(const std::string& text, int n);

  int n() const { return n_; }
  int at(int i, int j) const { return rows_[i - 1][j - 1]; }  // 1-based
  ShiftMatrix transpose() const;
  nlohmann::json to_json() const;
  bool operator==(const ShiftMatrix& o) const { return rows_ == o.rows_; }

private:
  int n_;
  std::vector<std::vector<int>> rows_;
};

// Root-series coefficients of the subalgebra cut out by sigma. For j = i+1
// these are the simple-root coefficients; beyond that they are nested
// brackets whose inner superscript is lowered by the shift. Superscripts are
// admissible only above the shift: r > s[i][j] for the upper family and
// s > s[j][i] for the lower one.
Element shifted_E(const Drinfeld& dr, const ShiftMatrix& sigma, int i, int j, int r);
Element shifted_F(const Drinfeld& dr, const ShiftMatrix& sigma, int i, int j, int s);

}  // namespace yang
