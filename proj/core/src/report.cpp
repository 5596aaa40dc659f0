#include "ru4/report.hpp"

#include <sstream>
#include <stdexcept>

#include "ru4/factor.hpp"

namespace ru4 {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name +
                              "' (want text, json or csv)");
}

namespace {

std::string coef_str(Z4 v) { return std::to_string(v.value()); }
std::string coef_str(RElem v) {
  if (v.b().is_zero()) return std::to_string(v.a().value());
  return "(" + v.to_string() + ")";
}

template <typename T>
std::string pretty_poly_impl(const Poly<T>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const T c = p.coeff(size_t(i));
    if (c.is_zero()) continue;
    if (!first) os << "+";
    first = false;
    const std::string cs = coef_str(c);
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs;
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

std::string pretty_poly(const PolyZ4& p) { return pretty_poly_impl(p); }
std::string pretty_poly(const PolyR& p) { return pretty_poly_impl(p); }

std::string profile_string(const std::vector<IdealLabel>& labels) {
  std::string s;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += ideal_label_name(labels[i]);
  }
  return s;
}

std::string generators_string(const std::vector<std::string>& gens) {
  std::string s;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += " ; ";
    s += gens[i];
  }
  return s;
}

std::string opt_int_string(const std::optional<int>& v, const char* none) {
  return v.has_value() ? std::to_string(*v) : std::string(none);
}

std::string flag_string(const std::optional<bool>& v, bool sampled) {
  if (!v.has_value()) return "n/a";
  std::string s = *v ? "true" : "false";
  return sampled ? "sampled-" + s : s;
}

std::string csv_header() {
  return "n,generators,log2_size,paper_rank,nakayama_count,d_lee,"
         "image_length,image_log2_size,image_d,linear,qc4";
}

std::string csv_row(const CodeSummary& s) {
  const char* none = s.d_budget_exceeded ? "na" : "inf";
  std::ostringstream os;
  os << s.n << ",\"" << generators_string(s.generators) << "\","
     << s.log2_size << "," << opt_int_string(s.paper_rank_value, "n/a") << ","
     << s.nakayama << "," << opt_int_string(s.d_lee, none) << ","
     << s.image.length << "," << s.image.log2_size << ","
     << opt_int_string(s.image.min_distance, none) << ","
     << flag_string(s.image.is_linear_set, s.image.sampled) << ","
     << flag_string(s.image.is_qc4, s.image.sampled);
  return os.str();
}

namespace {

using Idx = std::vector<int>;  // 1-based factor indices

struct TableBuilder {
  int n;
  std::vector<PolyZ4> g;  // g[0] = g_1

  PolyZ4 prod(const Idx& idx) const {
    PolyZ4 p = PolyZ4::one();
    for (int i : idx) p = p * g[size_t(i - 1)];
    return p;
  }

  static std::string gname(const Idx& idx) {
    std::string s;
    for (int i : idx) s += "g_" + std::to_string(i);
    return s;
  }

  // f1 + 2 f2 with index lists; an empty f1 means the bare "2 f2" shape
  PolyR first_gen(const Idx& f1, const Idx& f2) const {
    PolyR gen = to_r(prod(f2) * Z4(2));
    if (!f1.empty()) gen = to_r(prod(f1)) + gen;
    return gen.mod_xn_minus_1(n);
  }

  // u f3 + 2u f4; "3u" is the empty/empty case u + 2u
  PolyR second_gen(const Idx& f3, const Idx& f4) const {
    return (times_u(prod(f3)) + times_u(prod(f4) * Z4(2))).mod_xn_minus_1(n);
  }

  static std::string first_name(const Idx& f1, const Idx& f2) {
    if (f1.empty()) return "2" + gname(f2);
    return gname(f1) + "+2" + gname(f2);
  }

  static std::string second_name(const Idx& f3, const Idx& f4) {
    if (f3.empty() && f4.empty()) return "3u";
    return "u" + gname(f3) + "+2u" + gname(f4);
  }
};

struct SecondShape {
  Idx f3, f4;
  int rank;
};

}  // namespace

int paper_table_length(int which) {
  if (which == 1) return 3;
  if (which == 2) return 7;
  throw std::invalid_argument("paper_table: table must be 1 or 2, got " +
                              std::to_string(which));
}

std::vector<TableRow> paper_table(int which) {
  const int n = paper_table_length(which);
  const FactorizationResult fact = factor_xn_minus_1(n);
  TableBuilder b{n, fact.z4_lifts};
  std::vector<TableRow> rows;

  auto inst = [&](const Idx& f1, const Idx& f2, const Idx& f3, const Idx& f4) {
    return TableRow::Instance{"<" + TableBuilder::first_name(f1, f2) + ", " +
                                  TableBuilder::second_name(f3, f4) + ">",
                              b.first_gen(f1, f2), b.second_gen(f3, f4)};
  };
  auto add = [&](const std::string& label, int rank,
                 std::vector<TableRow::Instance> instances) {
    rows.push_back(TableRow{label, rank, std::move(instances)});
  };

  if (which == 1) {
    add("<2g_i, ug_1+2u>, i=1,2", 2, {inst({}, {1}, {1}, {}), inst({}, {2}, {1}, {})});
    add("<2g_i, ug_2+2u>, i=1,2", 1, {inst({}, {1}, {2}, {}), inst({}, {2}, {2}, {})});
    add("<2g_i, 3u>, i=1,2", 3, {inst({}, {1}, {}, {}), inst({}, {2}, {}, {})});
    add("<2, ug_1+2u>", 2, {inst({}, {}, {1}, {})});
    add("<2, ug_2+2u>", 1, {inst({}, {}, {2}, {})});
    add("<2, 3u>", 3, {inst({}, {}, {}, {})});
    add("<g_1+2, 3u>", 3, {inst({1}, {}, {}, {})});
    add("<g_2+2, 3u>", 3, {inst({2}, {}, {}, {})});
    return rows;
  }

  // length 7: thirteen second-generator shapes shared by the first three
  // blocks, with the published ranks
  const std::vector<SecondShape> seconds{
      {{1, 2}, {1}, 3}, {{1, 2}, {2}, 3}, {{1, 2}, {}, 3},
      {{1, 3}, {1}, 3}, {{1, 3}, {3}, 3}, {{1, 3}, {}, 3},
      {{2, 3}, {2}, 1}, {{2, 3}, {3}, 1}, {{2, 3}, {}, 1},
      {{1}, {}, 6},     {{2}, {}, 4},     {{3}, {}, 4},
      {{}, {}, 7}};

  const std::vector<Idx> gi_gj{{1, 2}, {1, 3}, {2, 3}};
  for (const SecondShape& s : seconds) {
    std::vector<TableRow::Instance> instances;
    for (const Idx& p : gi_gj) instances.push_back(inst({}, p, s.f3, s.f4));
    add("<2g_ig_j, " + TableBuilder::second_name(s.f3, s.f4) +
            ">, i!=j=1,2,3",
        s.rank, std::move(instances));
  }
  for (const SecondShape& s : seconds) {
    std::vector<TableRow::Instance> instances;
    for (int i : {1, 2, 3}) instances.push_back(inst({}, {i}, s.f3, s.f4));
    add("<2g_i, " + TableBuilder::second_name(s.f3, s.f4) + ">, i=1,2,3",
        s.rank, std::move(instances));
  }
  for (const SecondShape& s : seconds)
    add("<2, " + TableBuilder::second_name(s.f3, s.f4) + ">", s.rank,
        {inst({}, {}, s.f3, s.f4)});

  // mixed first generators g_ig_j + 2g_i / + 2g_j / + 2
  struct MixedBlock {
    int i, j;
    std::vector<SecondShape> seconds;
  };
  const std::vector<MixedBlock> mixed{
      {1, 2, {{{1}, {}, 6}, {{2}, {}, 4}, {{}, {}, 7}}},
      {1, 3, {{{1}, {}, 6}, {{3}, {}, 4}, {{}, {}, 7}}},
      {2, 3, {{{2}, {}, 4}, {{3}, {}, 4}, {{}, {}, 7}}}};
  for (const MixedBlock& blk : mixed) {
    for (const Idx& f2 : {Idx{blk.i}, Idx{blk.j}, Idx{}}) {
      for (const SecondShape& s : blk.seconds) {
        TableRow::Instance one = inst({blk.i, blk.j}, f2, s.f3, s.f4);
        add(one.name, s.rank, {std::move(one)});
      }
    }
  }
  for (int i : {1, 2, 3}) {
    TableRow::Instance one = inst({i}, {}, {}, {});
    add(one.name, 7, {std::move(one)});
  }
  return rows;
}

}  // namespace ru4
