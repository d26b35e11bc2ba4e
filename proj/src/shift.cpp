#include "yangian/shift.hpp"

#include <sstream>

namespace yang {

ShiftMatrix::ShiftMatrix(std::vector<std::vector<int>> rows)
    : n_(int(rows.size())), rows_(std::move(rows)) {
  if (n_ < 1) throw std::invalid_argument("shift matrix must be non-empty");
  for (const auto& row : rows_)
    if (int(row.size()) != n_)
      throw std::invalid_argument("shift matrix must be square");
  for (int i = 0; i < n_; ++i) {
    if (rows_[i][i] != 0)
      throw std::invalid_argument("shift matrix diagonal must be zero");
    for (int j = 0; j < n_; ++j)
      if (rows_[i][j] < 0)
        throw std::invalid_argument("shift matrix entries must be non-negative");
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (std::abs(i - j) + std::abs(j - k) == std::abs(i - k) &&
            rows_[i][j] + rows_[j][k] != rows_[i][k])
          throw std::invalid_argument(
              "shift matrix entries must be additive along monotone index paths");
}

ShiftMatrix ShiftMatrix::zero(int n) {
  return ShiftMatrix(std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
}

ShiftMatrix ShiftMatrix::from_diagonals(const std::vector<int>& upper,
                                        const std::vector<int>& lower) {
  if (upper.size() != lower.size())
    throw std::invalid_argument("super- and sub-diagonal lengths must agree");
  const int n = int(upper.size()) + 1;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      if (i < j)
        for (int k = i; k < j; ++k) s += upper[k];
      else if (i > j)
        for (int k = j; k < i; ++k) s += lower[k];
      rows[i][j] = s;
    }
  return ShiftMatrix(std::move(rows));
}

ShiftMatrix ShiftMatrix::from_json(const nlohmann::json& j) {
  if (j.contains("rows"))
    return ShiftMatrix(j.at("rows").get<std::vector<std::vector<int>>>());
  return from_diagonals(j.at("upper").get<std::vector<int>>(),
                        j.at("lower").get<std::vector<int>>());
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer list: " + s);
    out.push_back(v);
  }
  return out;
}

}  // namespace

ShiftMatrix ShiftMatrix::parse_cli(const std::string& text, int n) {
  std::vector<int> upper(n - 1, 0), lower(n - 1, 0);
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("shift option must look like upper=... lower=...");
    const std::string key = tok.substr(0, eq);
    std::vector<int> vals = parse_int_list(tok.substr(eq + 1));
    if (int(vals.size()) != n - 1)
      throw std::invalid_argument("shift diagonal must have n-1 entries");
    if (key == "upper")
      upper = std::move(vals);
    else if (key == "lower")
      lower = std::move(vals);
    else
      throw std::invalid_argument("unknown shift component: " + key);
  }
  return from_diagonals(upper, lower);
}

ShiftMatrix ShiftMatrix::transpose() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[j][i] = rows_[i][j];
  return ShiftMatrix(std::move(rows));
}

nlohmann::json ShiftMatrix::to_json() const {
  return {{"n", n_}, {"rows", rows_}};
}

Element shifted_E(const Drinfeld& dr, const ShiftMatrix& sigma, int i, int j, int r) {
  const int n = dr.context()->n();
  if (sigma.n() != n) throw std::invalid_argument("shift matrix size mismatch");
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("need 1 <= i < j <= n");
  if (r <= sigma.at(i, j))
    throw std::invalid_argument("superscript not admissible for this shift");
  if (j == i + 1) return dr.E(i, j).coefficient(r);
  const int s = sigma.at(j - 1, j);
  return commutator(shifted_E(dr, sigma, i, j - 1, r - s),
                    dr.E(j - 1, j).coefficient(s + 1));
}

Element shifted_F(const Drinfeld& dr, const ShiftMatrix& sigma, int i, int j, int s) {
  const int n = dr.context()->n();
  if (sigma.n() != n) throw std::invalid_argument("shift matrix size mismatch");
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("need 1 <= i < j <= n");
  if (s <= sigma.at(j, i))
    throw std::invalid_argument("superscript not admissible for this shift");
  if (j == i + 1) return dr.F(i, j).coefficient(s);
  const int t = sigma.at(j, j - 1);
  return commutator(dr.F(j - 1, j).coefficient(t + 1),
                    shifted_F(dr, sigma, i, j - 1, s - t));
}

}  // namespace yang
