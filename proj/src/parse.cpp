#include "sgfl/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "sgfl/error.hpp"

namespace sgfl {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

std::int64_t expect_int(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  if (!parse_int(s, v)) {
    throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(trim(s)) + "' in '" +
                                      std::string(context) + "'");
  }
  return v;
}

Element parse_tuple(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw Error(ErrorKind::Parse, "expected a tuple like (2,0), got '" + std::string(s) + "'");
  }
  std::vector<std::int64_t> coords;
  for (auto part : split(s.substr(1, s.size() - 2), ',')) coords.push_back(expect_int(part, context));
  return Element(std::move(coords));
}

}  // namespace

std::vector<Element> parse_generators(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty generator list");
  std::vector<Element> gens;
  if (text.front() != '(') {
    for (auto part : split(text, ',')) gens.push_back(Element{expect_int(part, text)});
    return gens;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t close = text.find(')', i);
    if (text[i] != '(' || close == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "malformed tuple list '" + std::string(text) + "'");
    }
    gens.push_back(parse_tuple(text.substr(i, close - i + 1), text));
    i = close + 1;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size()) {
      if (text[i] != ',') throw Error(ErrorKind::Parse, "expected ',' between tuples in '" + std::string(text) + "'");
      ++i;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i == text.size()) throw Error(ErrorKind::Parse, "trailing ',' in '" + std::string(text) + "'");
    }
  }
  for (const auto& g : gens) {
    if (g.dim() != gens.front().dim()) {
      throw Error(ErrorKind::DimensionMismatch, g.to_string() + " does not match dimension " +
                                                    std::to_string(gens.front().dim()));
    }
  }
  return gens;
}

Semigroup parse_semigroup(std::string_view line) {
  std::optional<std::int64_t> dim;
  std::string_view gens_text;
  bool keyed = false;
  for (auto field : split(line, ';')) {
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      if (keyed || !gens_text.empty()) throw Error(ErrorKind::Parse, "unexpected field '" + std::string(field) + "'");
      gens_text = field;
      continue;
    }
    keyed = true;
    auto key = trim(field.substr(0, eq));
    auto value = trim(field.substr(eq + 1));
    if (key == "dim") {
      dim = expect_int(value, line);
      if (*dim < 1) throw Error(ErrorKind::Parse, "dim must be positive");
    } else if (key == "gens") {
      gens_text = value;
    } else {
      throw Error(ErrorKind::Parse, "unknown key '" + std::string(key) + "'");
    }
  }
  auto gens = parse_generators(gens_text);
  std::size_t d = gens.front().dim();
  if (dim && static_cast<std::size_t>(*dim) != d) {
    throw Error(ErrorKind::DimensionMismatch, "dim=" + std::to_string(*dim) + " but generators have dimension " +
                                                  std::to_string(d));
  }
  return Semigroup::create(std::move(gens), d);
}

std::vector<Semigroup> read_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::vector<Semigroup> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_semigroup(t));
  }
  return out;
}

Element parse_element(std::string_view text, std::size_t dim) {
  text = trim(text);
  Element e = !text.empty() && text.front() == '(' ? parse_tuple(text, text) : Element{expect_int(text, text)};
  if (e.dim() != dim) {
    throw Error(ErrorKind::DimensionMismatch, e.to_string() + " is not in Z^" + std::to_string(dim));
  }
  return e;
}

std::vector<std::int64_t> parse_point(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> x;
  for (auto part : split(text, ',')) {
    std::int64_t v = 0;
    if (parse_int(part, v)) {
      x.push_back(v);
      continue;
    }
    // Decimals with a zero fractional part still name an integer point.
    char* end = nullptr;
    std::string s(part);
    double d = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw Error(ErrorKind::Parse, "expected a number, got '" + s + "'");
    if (d != static_cast<double>(static_cast<std::int64_t>(d))) {
      throw Error(ErrorKind::NotIntegerPoint, "coordinate " + s + " is not an integer");
    }
    x.push_back(static_cast<std::int64_t>(d));
  }
  return x;
}

}  // namespace sgfl
