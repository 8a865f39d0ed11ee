#include "dmm/poly_text.hpp"

#include <cctype>
#include <charconv>

#include "dmm/errors.hpp"

namespace dmm {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view s) {
  int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError("bad exponent '" + std::string(s) + "'");
  return v;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string s = strip(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad integer '" + std::string(text) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("bad integer '" + std::string(text) + "'");
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num = parse_integer(std::string_view(s).substr(0, slash));
    Integer den = parse_integer(std::string_view(s).substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(parse_integer(s));
  std::string frac = s.substr(dot + 1);
  std::string whole = s.substr(0, dot);
  bool neg = !whole.empty() && whole[0] == '-';
  if (whole.empty() || whole == "-" || whole == "+") whole += "0";
  if (frac.empty()) throw ParseError("bad rational '" + s + "'");
  for (char c : frac)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad rational '" + s + "'");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  Integer w = parse_integer(whole);
  Integer f(frac, 10);
  Rational q(abs(w) * scale + f, scale);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

SparsePoly parse_poly(std::string_view text, std::size_t nvars) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial line");
  if (s == "0") {
    if (nvars == 0) throw ParseError("zero polynomial needs an explicit variable count");
    return SparsePoly(nvars);
  }
  std::vector<Term> terms;
  for (std::string_view part : split(s, ';')) {
    if (part.empty()) throw ParseError("empty term in '" + s + "'");
    auto colon = part.find(':');
    if (colon == std::string_view::npos) throw ParseError("term without ':' in '" + std::string(part) + "'");
    Term t{parse_integer(part.substr(0, colon)), {}};
    for (std::string_view e : split(part.substr(colon + 1), ',')) t.exp.push_back(parse_int(e));
    if (nvars == 0) nvars = t.exp.size();
    if (t.exp.size() != nvars)
      throw ParseError("term '" + std::string(part) + "' has " + std::to_string(t.exp.size()) +
                       " exponents, expected " + std::to_string(nvars));
    terms.push_back(std::move(t));
  }
  return SparsePoly(nvars, std::move(terms));
}

std::string serialize_poly(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += ';';
    out += t.coeff.get_str();
    out += ':';
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(t.exp[i]);
    }
  }
  return out;
}

}  // namespace dmm
