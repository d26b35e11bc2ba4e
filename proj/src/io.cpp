#include "yangian/io.hpp"

#include <cctype>
#include <sstream>

namespace yang {

namespace {

using nlohmann::json;

json monomial_to_json(const Word& w) {
  json mono = json::array();
  std::size_t k = 0;
  while (k < w.size()) {
    std::size_t e = 1;
    while (k + e < w.size() && w[k + e] == w[k]) ++e;
    mono.push_back({{"i", gen_i(w[k])}, {"j", gen_j(w[k])},
                    {"r", gen_r(w[k])}, {"e", e}});
    k += e;
  }
  return mono;
}

template <AlgebraKind K>
json to_json_impl(const BasicElement<K>& a) {
  json out;
  out["p"] = a.context()->p();
  out["n"] = a.context()->n();
  json terms = json::array();
  for (const auto& [w, c] : a.terms())
    terms.push_back({{"coeff", c}, {"monomial", monomial_to_json(w)}});
  out["terms"] = std::move(terms);
  return out;
}

template <AlgebraKind K>
BasicElement<K> from_json_impl(const json& j, const Ctx& cx) {
  if (j.at("p").get<long>() != cx->p() || j.at("n").get<int>() != cx->n())
    throw context_mismatch("element JSON does not match the (n, p) context");
  const int min_r = K == AlgebraKind::rtt ? 1 : 0;
  TermMap terms;
  for (const auto& t : j.at("terms")) {
    Word w;
    for (const auto& m : t.at("monomial")) {
      const int i = m.at("i").get<int>();
      const int jj = m.at("j").get<int>();
      const int r = m.at("r").get<int>();
      const long e = m.at("e").get<long>();
      if (i < 1 || i > cx->n() || jj < 1 || jj > cx->n() || r < min_r || r > 255 ||
          e < 1)
        throw std::invalid_argument("invalid generator in element JSON");
      for (long q = 0; q < e; ++q) w.push_back(pack_gen(i, jj, r));
    }
    Coeff c = fp::normalize(t.at("coeff").get<long>(), cx->p());
    straighten(*cx, K, std::move(w), c, terms);
  }
  return BasicElement<K>::from_terms(cx, std::move(terms));
}

template <AlgebraKind K>
std::string to_text_impl(const BasicElement<K>& a, const char* sym) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [w, c] : a.terms()) {
    if (!first_term) os << " + ";
    first_term = false;
    os << c;
    std::size_t k = 0;
    while (k < w.size()) {
      std::size_t e = 1;
      while (k + e < w.size() && w[k + e] == w[k]) ++e;
      os << " * " << sym << '[' << gen_i(w[k]) << ',' << gen_j(w[k]) << ','
         << gen_r(w[k]) << ']';
      if (e > 1) os << '^' << e;
      k += e;
    }
  }
  return os.str();
}

class TextParser {
public:
  TextParser(const std::string& s, const char* sym) : s_(s), sym_(sym) {}

  template <AlgebraKind K>
  BasicElement<K> parse(const Ctx& cx) {
    const int min_r = K == AlgebraKind::rtt ? 1 : 0;
    TermMap terms;
    skip_ws();
    if (peek() == '0' && (pos_ + 1 >= s_.size() || all_ws_after(pos_ + 1))) {
      return BasicElement<K>::zero(cx);
    }
    while (true) {
      // a term is [number] [* factor]... or factor [* factor]...
      skip_ws();
      Coeff c;
      Word w;
      if (peek() == sym_[0]) {
        c = fp::normalize(1, cx->p());
        parse_factor(cx, min_r, w);
      } else {
        c = fp::normalize(parse_number(), cx->p());
      }
      skip_ws();
      while (peek() == '*') {
        ++pos_;
        skip_ws();
        parse_factor(cx, min_r, w);
        skip_ws();
      }
      straighten(*cx, K, std::move(w), c, terms);
      skip_ws();
      if (pos_ >= s_.size()) break;
      expect('+');
      skip_ws();
    }
    return BasicElement<K>::from_terms(cx, std::move(terms));
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool all_ws_after(std::size_t p) const {
    for (; p < s_.size(); ++p)
      if (!std::isspace(static_cast<unsigned char>(s_[p]))) return false;
    return true;
  }
  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("element text: expected '") + c + "'");
    ++pos_;
  }
  long parse_number() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw std::invalid_argument("element text: expected a number");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }
  void parse_factor(const Ctx& cx, int min_r, Word& w) {
    for (const char* q = sym_; *q; ++q) expect(*q);
    expect('[');
    long i = parse_number();
    expect(',');
    long j = parse_number();
    expect(',');
    long r = parse_number();
    expect(']');
    long e = 1;
    if (peek() == '^') {
      ++pos_;
      e = parse_number();
    }
    if (i < 1 || i > cx->n() || j < 1 || j > cx->n() || r < min_r || r > 255 || e < 1)
      throw std::invalid_argument("element text: generator out of range");
    for (long q = 0; q < e; ++q) w.push_back(pack_gen(int(i), int(j), int(r)));
  }

  const std::string& s_;
  const char* sym_;
  std::size_t pos_ = 0;
};

}  // namespace

json element_to_json(const Element& a) { return to_json_impl(a); }
json element_to_json(const UgElement& a) { return to_json_impl(a); }

Element element_from_json(const json& j) {
  Ctx cx = make_context(j.at("n").get<int>(), j.at("p").get<long>());
  return from_json_impl<AlgebraKind::rtt>(j, cx);
}
Element element_from_json(const json& j, const Ctx& cx) {
  return from_json_impl<AlgebraKind::rtt>(j, cx);
}
UgElement ug_element_from_json(const json& j) {
  Ctx cx = make_context(j.at("n").get<int>(), j.at("p").get<long>());
  return from_json_impl<AlgebraKind::loop>(j, cx);
}
UgElement ug_element_from_json(const json& j, const Ctx& cx) {
  return from_json_impl<AlgebraKind::loop>(j, cx);
}

std::string element_to_text(const Element& a) { return to_text_impl(a, "T"); }
std::string element_to_text(const UgElement& a) { return to_text_impl(a, "e"); }

Element element_from_text(const std::string& s, const Ctx& cx) {
  return TextParser(s, "T").parse<AlgebraKind::rtt>(cx);
}
UgElement ug_element_from_text(const std::string& s, const Ctx& cx) {
  return TextParser(s, "e").parse<AlgebraKind::loop>(cx);
}

json series_to_json(const Series& s) {
  json out;
  out["trunc"] = s.trunc();
  json coeffs = json::object();
  for (int r = 0; r <= s.trunc(); ++r)
    if (!s.coefficient(r).is_zero())
      coeffs[std::to_string(r)] = element_to_json(s.coefficient(r));
  out["coeffs"] = std::move(coeffs);
  return out;
}

Series series_from_json(const json& j) {
  for (const auto& [key, val] : j.at("coeffs").items()) {
    (void)key;
    Ctx cx = make_context(val.at("n").get<int>(), val.at("p").get<long>());
    return series_from_json(j, cx);
  }
  throw std::invalid_argument("series JSON with no coefficients needs a context");
}

Series series_from_json(const json& j, const Ctx& cx) {
  Series s(cx, j.at("trunc").get<int>());
  for (const auto& [key, val] : j.at("coeffs").items()) {
    int r = std::stoi(key);
    s.set_coefficient(r, element_from_json(val, cx));
  }
  return s;
}

}  // namespace yang
