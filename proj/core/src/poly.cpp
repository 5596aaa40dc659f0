#include "ru4/poly.hpp"

#include <stdexcept>

namespace ru4 {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

PolyZ4 parse_poly_z4(const std::string& text) {
  std::vector<Z4> c;
  for (const std::string& raw : split(text, ',')) {
    const std::string tok = strip(raw);
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '3')
      throw std::invalid_argument("parse_poly_z4: bad coefficient '" + raw +
                                  "' (want digits 0..3, comma-separated)");
    c.emplace_back(tok[0] - '0');
  }
  return PolyZ4(std::move(c));
}

PolyR parse_poly_r(const std::string& text) {
  std::vector<RElem> c;
  for (const std::string& raw : split(text, ','))
    c.push_back(RElem::parse(strip(raw)));
  return PolyR(std::move(c));
}

std::vector<PolyR> parse_generator_list(const std::string& text) {
  std::vector<PolyR> gens;
  for (const std::string& part : split(text, ';')) {
    const std::string p = strip(part);
    if (p.empty())
      throw std::invalid_argument("parse_generator_list: empty polynomial");
    gens.push_back(parse_poly_r(p));
  }
  return gens;
}

}  // namespace ru4
