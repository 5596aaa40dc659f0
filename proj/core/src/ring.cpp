#include "ru4/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace ru4 {

std::vector<RElem> ideal_generators(IdealLabel label) {
  const RElem two(2);
  const RElem u = RElem::u();
  switch (label) {
    case IdealLabel::Zero:
      return {};
    case IdealLabel::One:
      return {RElem::one()};
    case IdealLabel::Two:
      return {two};
    case IdealLabel::U:
      return {u};
    case IdealLabel::TwoU:
      return {two * u};
    case IdealLabel::TwoPlusU:
      return {two + u};
    case IdealLabel::TwoAndU:
      return {two, u};
  }
  throw std::invalid_argument("ideal_generators: bad label");
}

namespace {

std::vector<RElem> close_ideal(const std::vector<RElem>& gens) {
  // Multiples of generators, then additive closure.
  bool in[16] = {};
  in[0] = true;
  std::vector<uint8_t> members{0};
  for (RElem g : gens)
    for (RElem r : all_r_elements()) {
      const uint8_t c = (r * g).code();
      if (!in[c]) {
        in[c] = true;
        members.push_back(c);
      }
    }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      const uint8_t c =
          (RElem::from_code(members[i]) + RElem::from_code(members[j])).code();
      if (!in[c]) {
        in[c] = true;
        members.push_back(c);
      }
    }
  std::sort(members.begin(), members.end());
  std::vector<RElem> out;
  out.reserve(members.size());
  for (uint8_t c : members) out.push_back(RElem::from_code(c));
  return out;
}

}  // namespace

const std::vector<RElem>& ideal_elements(IdealLabel label) {
  static const std::array<std::vector<RElem>, 7> cache = [] {
    std::array<std::vector<RElem>, 7> all;
    for (IdealLabel l : kAllIdealLabels)
      all[size_t(l)] = close_ideal(ideal_generators(l));
    return all;
  }();
  return cache[size_t(label)];
}

bool ideal_contains(IdealLabel label, RElem x) {
  const auto& elems = ideal_elements(label);
  return std::binary_search(
      elems.begin(), elems.end(), x,
      [](RElem lhs, RElem rhs) { return lhs.code() < rhs.code(); });
}

const char* ideal_label_name(IdealLabel label) {
  switch (label) {
    case IdealLabel::Zero:
      return "0";
    case IdealLabel::One:
      return "<1>";
    case IdealLabel::Two:
      return "<2>";
    case IdealLabel::U:
      return "<u>";
    case IdealLabel::TwoU:
      return "<2u>";
    case IdealLabel::TwoPlusU:
      return "<2+u>";
    case IdealLabel::TwoAndU:
      return "<2,u>";
  }
  return "?";
}

IdealLabel parse_ideal_label(const std::string& name) {
  for (IdealLabel l : kAllIdealLabels)
    if (name == ideal_label_name(l)) return l;
  throw std::invalid_argument("parse_ideal_label: unknown ideal '" + name + "'");
}

}  // namespace ru4
