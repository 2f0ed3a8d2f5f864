#include "mplanes/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <span>
#include <vector>

namespace mplanes {

namespace {

using nlohmann::json;

struct Term {
  std::string_view name;  // "" for the scalar slot
  double* slot;
};

std::string format_terms(std::span<const std::pair<std::string_view, double>> terms) {
  std::string out;
  for (const auto& [name, value] : terms) {
    if (value == 0.0) continue;
    const std::string mag = format_number(std::abs(value));
    if (out.empty()) {
      if (value < 0.0) out += "-";
    } else {
      out += value < 0.0 ? " - " : " + ";
    }
    out += mag;
    if (!name.empty()) {
      out += " ";
      out += name;
    }
  }
  return out.empty() ? "0" : out;
}

bool name_at(std::string_view s, std::size_t pos, std::span<const Term> terms) {
  for (const auto& t : terms)
    if (!t.name.empty() && s.substr(pos, t.name.size()) == t.name) return true;
  return false;
}

// Extent of a decimal literal starting at pos. An exponent marker directly
// followed by a digit is left alone when it also starts a basis name.
std::size_t number_extent(std::string_view s, std::size_t pos, std::span<const Term> terms) {
  std::size_t i = pos;
  auto digits = [&] {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  };
  digits();
  if (i < s.size() && s[i] == '.') {
    ++i;
    digits();
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    const bool signed_exp = j < s.size() && (s[j] == '+' || s[j] == '-');
    if (signed_exp) ++j;
    const bool has_digit = j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]));
    if (has_digit && (signed_exp || !name_at(s, i, terms))) {
      i = j;
      digits();
    }
  }
  return i - pos;
}

void parse_terms(std::string_view input, std::span<const Term> terms, const char* what) {
  std::string s;
  s.reserve(input.size());
  for (char ch : input)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError(std::string("empty ") + what);

  // Longest names first so that e12 wins over e1.
  std::vector<Term> by_length(terms.begin(), terms.end());
  std::stable_sort(by_length.begin(), by_length.end(),
                   [](const Term& a, const Term& b) { return a.name.size() > b.name.size(); });

  const std::string_view text = s;
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    double sign = 1.0;
    bool saw_sign = false;
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -sign;
      saw_sign = true;
      ++pos;
    }
    if (!first && !saw_sign) {
      throw ParseError(std::string("expected '+' or '-' between terms in ") + what + " at \"" +
                       std::string(text.substr(pos)) + "\"");
    }
    first = false;

    double coef = 1.0;
    bool saw_number = false;
    const std::size_t len = number_extent(text, pos, terms);
    if (len > 0) {
      const std::string_view lit = text.substr(pos, len);
      double value = 0.0;
      const auto res = std::from_chars(lit.data(), lit.data() + lit.size(), value);
      if (res.ec != std::errc() || res.ptr != lit.data() + lit.size() || !std::isfinite(value)) {
        throw ParseError(std::string("bad number \"") + std::string(lit) + "\" in " + what);
      }
      coef = value;
      saw_number = true;
      pos += len;
      if (pos < text.size() && text[pos] == '*') ++pos;
    }

    const Term* matched = nullptr;
    for (const auto& t : by_length) {
      if (!t.name.empty() && text.substr(pos, t.name.size()) == t.name) {
        matched = &t;
        break;
      }
    }
    if (matched != nullptr) {
      pos += matched->name.size();
      *matched->slot += sign * coef;
    } else if (saw_number) {
      const auto scalar = std::find_if(terms.begin(), terms.end(), [](const Term& t) { return t.name.empty(); });
      *scalar->slot += sign * coef;
    } else {
      throw ParseError(std::string("unexpected \"") + std::string(text.substr(pos)) + "\" in " + what);
    }
  }
}

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

template <class T>
T parse_json_as(std::string_view text, const char* what) {
  try {
    return json::parse(text).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid ") + what + " JSON: " + e.what());
  }
}

double read_number(const json& j, const char* key) {
  if (!j.contains(key)) return 0.0;
  const json& v = j.at(key);
  if (!v.is_number()) throw ParseError(std::string("JSON key \"") + key + "\" must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string("JSON key \"") + key + "\" is not finite");
  return x;
}

void require_keys(const json& j, std::initializer_list<std::string_view> keys, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " JSON must be an object");
  for (const auto& [k, v] : j.items()) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw ParseError(std::string("unknown key \"") + k + "\" in " + what + " JSON");
    }
  }
}

Mat2 read_mat2(const json& j) {
  if (!j.is_object() || !j.contains("m")) throw ParseError("Mat2 JSON must be {\"m\": [[a, b], [c, d]]}");
  const json& rows = j.at("m");
  if (!rows.is_array() || rows.size() != 2) throw ParseError("Mat2 JSON needs two rows");
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 2) throw ParseError("Mat2 JSON rows need two entries");
    for (int c = 0; c < 2; ++c) {
      if (!rows[r][c].is_number()) throw ParseError("Mat2 JSON entries must be numbers");
      m.m[r][c] = rows[r][c].get<double>();
    }
  }
  return m;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_g2(const G2Multivector& g) {
  const std::pair<std::string_view, double> terms[] = {{"", g.s}, {"e1", g.v1}, {"e2", g.v2}, {"e12", g.b}};
  return format_terms(terms);
}

std::string format_g12(const G12Multivector& f) {
  std::vector<std::pair<std::string_view, double>> terms;
  for (std::size_t k = 0; k < G12Multivector::kSize; ++k) terms.emplace_back(k == 0 ? "" : kG12Names[k], f[k]);
  return format_terms(terms);
}

std::string format_hyperbolic(const HyperbolicNumber& w) {
  const std::pair<std::string_view, double> terms[] = {{"", w.x}, {"u", w.y}};
  return format_terms(terms);
}

G2Multivector parse_g2(std::string_view text) {
  if (trim_left(text).starts_with('{')) return parse_json_as<G2Multivector>(text, "G2");
  G2Multivector g;
  const Term terms[] = {{"", &g.s}, {"e1", &g.v1}, {"e2", &g.v2}, {"e12", &g.b}};
  parse_terms(text, terms, "G2 multivector");
  return g;
}

G12Multivector parse_g12(std::string_view text) {
  if (trim_left(text).starts_with('{')) return parse_json_as<G12Multivector>(text, "G12");
  G12Multivector f;
  std::vector<Term> terms;
  for (std::size_t k = 0; k < G12Multivector::kSize; ++k) terms.push_back({k == 0 ? "" : kG12Names[k], &f.c[k]});
  parse_terms(text, terms, "G12 multivector");
  return f;
}

HyperbolicNumber parse_hyperbolic(std::string_view text) {
  if (trim_left(text).starts_with('{')) return parse_json_as<HyperbolicNumber>(text, "hyperbolic");
  HyperbolicNumber w;
  const Term terms[] = {{"", &w.x}, {"u", &w.y}};
  parse_terms(text, terms, "hyperbolic number");
  return w;
}

bool looks_like_g12(std::string_view text) {
  const std::string_view t = trim_left(text);
  if (t.starts_with('{')) return t.find("\"g0") != std::string_view::npos || t.find("\"g1") != std::string_view::npos ||
                                 t.find("\"g2") != std::string_view::npos || t.find("\"1\"") != std::string_view::npos;
  return t.find('g') != std::string_view::npos;
}

void to_json(json& j, const G2Multivector& g) { j = json{{"s", g.s}, {"e1", g.v1}, {"e2", g.v2}, {"e12", g.b}}; }

void from_json(const json& j, G2Multivector& g) {
  require_keys(j, {"s", "e1", "e2", "e12"}, "G2");
  g = {read_number(j, "s"), read_number(j, "e1"), read_number(j, "e2"), read_number(j, "e12")};
}

void to_json(json& j, const G12Multivector& f) {
  j = json::object();
  for (std::size_t k = 0; k < G12Multivector::kSize; ++k) j[kG12Names[k]] = f[k];
}

void from_json(const json& j, G12Multivector& f) {
  require_keys(j, {"1", "g0", "g1", "g2", "g01", "g02", "g21", "g012"}, "G12");
  for (std::size_t k = 0; k < G12Multivector::kSize; ++k) f[k] = read_number(j, kG12Names[k]);
}

void to_json(json& j, const HyperbolicNumber& w) { j = json{{"x", w.x}, {"y", w.y}}; }

void from_json(const json& j, HyperbolicNumber& w) {
  require_keys(j, {"x", "y"}, "hyperbolic");
  w = {read_number(j, "x"), read_number(j, "y")};
}

void to_json(json& j, const Vector2& v) { j = json::array({v.v1, v.v2}); }

void to_json(json& j, const MinkowskiVector& x) { j = json{{"t", x.t}, {"x1", x.x1}, {"x2", x.x2}}; }

void to_json(json& j, const Mat2& m) {
  j = json{{"m", json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})})}};
}

void from_json(const json& j, Mat2& m) { m = read_mat2(j); }

void to_json(json& j, const Mat2Complexified& m) { j = json{{"re", m.re}, {"im", m.im}}; }

void from_json(const json& j, Mat2Complexified& m) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    throw ParseError("complexified matrix JSON must be {\"re\": ..., \"im\": ...}");
  }
  m.re = read_mat2(j.at("re"));
  m.im = read_mat2(j.at("im"));
}

}  // namespace mplanes
