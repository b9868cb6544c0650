#include "gbsp/polynomial.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace gbsp {

namespace {

std::string term_text(const Rational& abs_coeff, const std::vector<std::pair<std::string, int>>& powers) {
  std::string body;
  for (const auto& [var, deg] : powers) {
    if (deg == 0) continue;
    if (!body.empty()) body += "*";
    body += var;
    if (deg > 1) body += "^" + std::to_string(deg);
  }
  if (body.empty()) return abs_coeff.get_str();
  if (abs_coeff == 1) return body;
  return abs_coeff.get_str() + "*" + body;
}

std::string join_terms(std::vector<std::pair<Rational, std::vector<std::pair<std::string, int>>>> terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [c, powers] : terms) {
    bool neg = sgn(c) < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_text(a, powers);
  }
  return out;
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= s.size();
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) + ": " + what);
  }

  // number := digits [ '/' digits ]
  Rational number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      std::size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == dstart) fail("expected a denominator");
    }
    return parse_rational(s.substr(start, pos - start));
  }

  // term := factor ( '*' factor )* ; factor := number | var [ '^' digits ]
  void term(const std::vector<std::string>& vars, Rational& coeff, std::vector<int>& degs) {
    coeff = 1;
    degs.assign(vars.size(), 0);
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff *= number();
      } else {
        std::size_t v = 0;
        for (; v < vars.size(); ++v) {
          const std::string& name = vars[v];
          if (s.compare(pos, name.size(), name) == 0) break;
        }
        if (v == vars.size()) fail("expected a coefficient or variable");
        pos += vars[v].size();
        int d = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          skip_ws();
          std::size_t dstart = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          if (pos == dstart) fail("expected an exponent");
          d = std::stoi(s.substr(dstart, pos - dstart));
        }
        degs[v] += d;
      }
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
      } else {
        expect_factor = false;
      }
    }
  }
};

// Shared sum-of-terms parser over a fixed variable set.
std::vector<std::pair<Rational, std::vector<int>>> parse_terms(const std::string& text,
                                                               const std::vector<std::string>& vars) {
  Parser p(text);
  std::vector<std::pair<Rational, std::vector<int>>> terms;
  if (p.done()) p.fail("empty input");
  bool first = true;
  while (!p.done()) {
    p.skip_ws();
    int sign = 1;
    if (p.s[p.pos] == '+' || p.s[p.pos] == '-') {
      sign = p.s[p.pos] == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      p.fail("expected '+' or '-'");
    }
    Rational c;
    std::vector<int> degs;
    p.term(vars, c, degs);
    if (sign < 0) c = -c;
    terms.emplace_back(c, degs);
    first = false;
  }
  return terms;
}

}  // namespace

std::string render(const UniPoly& p, const std::string& var) {
  std::vector<std::pair<Rational, std::vector<std::pair<std::string, int>>>> terms;
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = p.coeff(d);
    if (sgn(c) == 0) continue;
    terms.push_back({c, {{var, d}}});
  }
  return join_terms(std::move(terms));
}

UniPoly parse_unipoly(const std::string& text, const std::string& var) {
  UniPoly r;
  for (const auto& [c, degs] : parse_terms(text, {var}))
    r += UniPoly::monomial(degs[0], c);
  return r;
}

std::string render(const BiPoly& p) {
  std::vector<std::pair<Rational, std::vector<std::pair<std::string, int>>>> terms;
  std::vector<std::pair<BiPoly::Key, Rational>> entries(p.terms().begin(), p.terms().end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second > b.first.second;
  });
  for (const auto& [k, c] : entries)
    terms.push_back({c, {{"x", k.first}, {"z", k.second}}});
  return join_terms(std::move(terms));
}

BiPoly parse_bipoly(const std::string& text) {
  BiPoly r;
  for (const auto& [c, degs] : parse_terms(text, {"x", "z"}))
    r += BiPoly::monomial(degs[0], degs[1], c);
  return r;
}

std::string bipoly_to_json(const BiPoly& p, int order) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [k, v] : p.terms())
    coeffs["(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")"] = v.get_str();
  nlohmann::json j;
  j["order"] = order;
  j["coeffs"] = coeffs;
  return j.dump();
}

BiPoly bipoly_from_json(const std::string& text, int* order) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (order) *order = j.at("order").get<int>();
  BiPoly r;
  for (const auto& [key, val] : j.at("coeffs").items()) {
    int dx = 0, dz = 0;
    char lparen = 0, comma = 0, rparen = 0;
    std::istringstream in(key);
    in >> lparen >> dx >> comma >> dz >> rparen;
    if (lparen != '(' || comma != ',' || rparen != ')')
      throw std::invalid_argument("bad coefficient key '" + key + "'");
    r += BiPoly::monomial(dx, dz, parse_rational(val.get<std::string>()));
  }
  return r;
}

}  // namespace gbsp
