#include "ru4/commands.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace ru4 {

namespace {

using Json = nlohmann::ordered_json;

Json poly_json(const PolyZ4& p) {
  Json a = Json::array();
  for (Z4 c : p.coeffs()) a.push_back(c.value());
  return a;
}

Json poly_json(const PolyF2& p) {
  Json a = Json::array();
  for (F2 c : p.coeffs()) a.push_back(c.value());
  return a;
}

Json value_or_tag(const std::optional<int>& v, const char* tag) {
  if (v.has_value()) return Json(*v);
  return Json(std::string(tag));
}

Json summary_json(const CodeSummary& s) {
  Json row = Json::object();
  row["n"] = s.n;
  row["generators"] = s.generators;
  if (s.crt_profile.has_value()) {
    Json labels = Json::array();
    for (IdealLabel l : *s.crt_profile) labels.push_back(ideal_label_name(l));
    row["crt_profile"] = labels;
  }
  if (s.residue_pair.has_value() && s.torsion_pair.has_value()) {
    row["canonical"] = Json{{"f1", s.residue_pair->first.to_string()},
                            {"f2", s.residue_pair->second.to_string()},
                            {"f3", s.torsion_pair->first.to_string()},
                            {"f4", s.torsion_pair->second.to_string()}};
  }
  const char* none = s.d_budget_exceeded ? "na" : "inf";
  row["log2_size"] = s.log2_size;
  row["paper_rank"] = value_or_tag(s.paper_rank_value, "n/a");
  row["nakayama_count"] = s.nakayama;
  row["d_lee"] = value_or_tag(s.d_lee, none);
  row["image_length"] = s.image.length;
  row["image_log2_size"] = s.image.log2_size;
  row["image_d"] = value_or_tag(s.image.min_distance, none);
  row["linear"] = flag_string(s.image.is_linear_set, s.image.sampled);
  row["qc4"] = flag_string(s.image.is_qc4, s.image.sampled);
  return row;
}

void text_summary_block(const CodeSummary& s, std::ostream& out) {
  out << "n:              " << s.n << "\n";
  out << "generators:     " << generators_string(s.generators) << "\n";
  if (s.crt_profile.has_value())
    out << "crt profile:    " << profile_string(*s.crt_profile) << "\n";
  if (s.residue_pair.has_value())
    out << "residue code:   <f1 + 2 f2>, f1 = "
        << pretty_poly(s.residue_pair->first)
        << ", f2 = " << pretty_poly(s.residue_pair->second) << "\n";
  if (s.torsion_pair.has_value())
    out << "torsion code:   <f3 + 2 f4>, f3 = "
        << pretty_poly(s.torsion_pair->first)
        << ", f4 = " << pretty_poly(s.torsion_pair->second) << "\n";
  const char* none = s.d_budget_exceeded ? "na" : "inf";
  out << "log2 |C|:       " << s.log2_size << "\n";
  out << "paper rank:     " << opt_int_string(s.paper_rank_value, "n/a")
      << "\n";
  out << "nakayama count: " << s.nakayama << "\n";
  out << "min Lee weight: " << opt_int_string(s.d_lee, none) << "\n";
  out << "gray image:     length " << s.image.length << ", log2 size "
      << s.image.log2_size << ", min distance "
      << opt_int_string(s.image.min_distance, none) << ", linear "
      << flag_string(s.image.is_linear_set, s.image.sampled) << ", qc4 "
      << flag_string(s.image.is_qc4, s.image.sampled) << "\n";
}

void rows_text_table(const std::vector<CodeSummary>& rows, std::ostream& out) {
  out << std::left << std::setw(6) << "n" << std::setw(26) << "crt_profile"
      << std::setw(10) << "log2|C|" << std::setw(11) << "paper_rank"
      << std::setw(10) << "nakayama" << std::setw(7) << "d_lee" << std::setw(9)
      << "image" << std::setw(15) << "linear" << "qc4\n";
  for (const CodeSummary& s : rows) {
    const char* none = s.d_budget_exceeded ? "na" : "inf";
    out << std::left << std::setw(6) << s.n << std::setw(26)
        << (s.crt_profile ? profile_string(*s.crt_profile) : std::string("-"))
        << std::setw(10) << s.log2_size << std::setw(11)
        << opt_int_string(s.paper_rank_value, "n/a") << std::setw(10)
        << s.nakayama << std::setw(7) << opt_int_string(s.d_lee, none)
        << std::setw(9)
        << ("(" + std::to_string(s.image.length) + "," +
            std::to_string(s.image.log2_size) + ")")
        << std::setw(15) << flag_string(s.image.is_linear_set, s.image.sampled)
        << flag_string(s.image.is_qc4, s.image.sampled) << "\n";
  }
}

}  // namespace

int cmd_factor(int n, const CommandOptions& opt, std::ostream& out) {
  const FactorizationResult fact = factor_xn_minus_1(n);
  switch (opt.format) {
    case Format::Text: {
      out << "x^" << n << "-1 over F2 and Z4: " << fact.factor_count()
          << " factor(s)\n";
      for (size_t i = 0; i < fact.factor_count(); ++i) {
        out << "factor " << i + 1 << ":\n";
        out << "  f2   = " << fact.f2_factors[i].to_string() << "  ("
            << pretty_poly(lift_01(fact.f2_factors[i])) << ")\n";
        out << "  lift = " << fact.z4_lifts[i].to_string() << "  ("
            << pretty_poly(fact.z4_lifts[i]) << ")\n";
        out << "  e    = " << fact.idempotents[i].to_string() << "\n";
      }
      break;
    }
    case Format::Json: {
      Json doc;
      doc["n"] = n;
      doc["m"] = fact.factor_count();
      doc["f2_factors"] = Json::array();
      doc["z4_lifts"] = Json::array();
      doc["idempotents"] = Json::array();
      for (size_t i = 0; i < fact.factor_count(); ++i) {
        doc["f2_factors"].push_back(poly_json(fact.f2_factors[i]));
        doc["z4_lifts"].push_back(poly_json(fact.z4_lifts[i]));
        doc["idempotents"].push_back(poly_json(fact.idempotents[i]));
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      out << "index,f2,z4_lift,idempotent\n";
      for (size_t i = 0; i < fact.factor_count(); ++i)
        out << i + 1 << ",\"" << fact.f2_factors[i].to_string() << "\",\""
            << fact.z4_lifts[i].to_string() << "\",\""
            << fact.idempotents[i].to_string() << "\"\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_enumerate(int n, const CommandOptions& opt, std::ostream& out) {
  const FactorizationResult fact = factor_xn_minus_1(n);
  const Z4PairTable table(fact);
  std::vector<CodeSummary> rows;
  for_each_cyclic_code(fact, [&](const CRTProfile&, const CyclicCode& code) {
    rows.push_back(summarize(code, table, opt.caps, /*partial_ok=*/true));
  });
  switch (opt.format) {
    case Format::Text:
      out << "cyclic codes of length " << n << " over Z4+uZ4: " << rows.size()
          << "\n";
      rows_text_table(rows, out);
      break;
    case Format::Json: {
      Json doc;
      doc["n"] = n;
      doc["count"] = rows.size();
      doc["rows"] = Json::array();
      for (const CodeSummary& s : rows) doc["rows"].push_back(summary_json(s));
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << csv_header() << "\n";
      for (const CodeSummary& s : rows) out << csv_row(s) << "\n";
      break;
  }
  return kExitOk;
}

int cmd_code_info(int n, const std::string& gens_text,
                  const CommandOptions& opt, std::ostream& out) {
  const CyclicCode code =
      CyclicCode::from_generators(n, parse_generator_list(gens_text));
  const Z4PairTable table(factor_xn_minus_1(n));
  const CodeSummary s = summarize(code, table, opt.caps);
  switch (opt.format) {
    case Format::Text:
      text_summary_block(s, out);
      if (code.f13_reduced())
        out << "note: supplied f13 term was absorbed by the u-part generator\n";
      break;
    case Format::Json:
      out << summary_json(s).dump(2) << "\n";
      break;
    case Format::Csv:
      out << csv_header() << "\n" << csv_row(s) << "\n";
      break;
  }
  return kExitOk;
}

int cmd_gray(int n, const std::string& gens_text, const CommandOptions& opt,
             std::ostream& out) {
  const CyclicCode code =
      CyclicCode::from_generators(n, parse_generator_list(gens_text));
  const BinaryParams p = params(code, opt.caps);
  std::vector<std::string> words;
  if (opt.dump_words) {
    const BinaryCodeSet set =
        gray_image(code, opt.caps.max_image_log2, opt.caps.workers);
    words.reserve(size_t(set.size()));
    for (uint64_t i = 0; i < set.size(); ++i)
      words.push_back(set.word_at(i).to_string());
  }
  switch (opt.format) {
    case Format::Text:
      out << "gray image: length " << p.length << ", log2 size " << p.log2_size
          << ", min distance " << opt_int_string(p.min_distance, "inf")
          << ", linear " << flag_string(p.is_linear_set, p.sampled) << ", qc4 "
          << flag_string(p.is_qc4, p.sampled) << "\n";
      for (const std::string& w : words) out << w << "\n";
      break;
    case Format::Json: {
      Json doc;
      doc["image_length"] = p.length;
      doc["image_log2_size"] = p.log2_size;
      doc["image_d"] = value_or_tag(p.min_distance, "inf");
      doc["linear"] = flag_string(p.is_linear_set, p.sampled);
      doc["qc4"] = flag_string(p.is_qc4, p.sampled);
      if (opt.dump_words) doc["words"] = words;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "image_length,image_log2_size,image_d,linear,qc4\n";
      out << p.length << "," << p.log2_size << ","
          << opt_int_string(p.min_distance, "inf") << ","
          << flag_string(p.is_linear_set, p.sampled) << ","
          << flag_string(p.is_qc4, p.sampled) << "\n";
      for (const std::string& w : words) out << w << "\n";
      break;
  }
  return kExitOk;
}

int cmd_tables(int which, const CommandOptions& opt, std::ostream& out) {
  const int n = paper_table_length(which);
  const std::vector<TableRow> rows = paper_table(which);
  const Z4PairTable table(factor_xn_minus_1(n));

  struct InstanceResult {
    std::string row_label;
    std::string name;
    int expected;
    std::optional<int> computed;
    int nakayama;
    bool match;
  };
  std::vector<InstanceResult> results;
  size_t mismatches = 0;
  size_t matched_rows = 0;
  for (const TableRow& row : rows) {
    bool row_ok = true;
    for (const TableRow::Instance& ins : row.instances) {
      const CyclicCode code =
          CyclicCode::from_generators(n, {ins.gen1, ins.gen2});
      const std::optional<int> rank = paper_rank(code, table);
      const bool ok = rank.has_value() && *rank == row.expected_rank;
      if (!ok) {
        ++mismatches;
        row_ok = false;
      }
      results.push_back(InstanceResult{row.label, ins.name, row.expected_rank,
                                       rank, code.nakayama_count(), ok});
    }
    if (row_ok) ++matched_rows;
  }

  switch (opt.format) {
    case Format::Text:
      out << "table " << which << " (length " << n << "): " << rows.size()
          << " rows, " << results.size() << " instances\n";
      for (const InstanceResult& r : results)
        out << (r.match ? "  ok   " : "  FAIL ") << r.name << ": rank "
            << opt_int_string(r.computed, "n/a") << " (expected " << r.expected
            << ", nakayama " << r.nakayama << ")\n";
      out << "result: " << matched_rows << "/" << rows.size()
          << " rows match, " << mismatches << " mismatching instance(s)\n";
      break;
    case Format::Json: {
      Json doc;
      doc["table"] = which;
      doc["n"] = n;
      doc["rows"] = rows.size();
      doc["mismatches"] = mismatches;
      doc["instances"] = Json::array();
      for (const InstanceResult& r : results)
        doc["instances"].push_back(
            Json{{"row", r.row_label},
                 {"generators", r.name},
                 {"expected_rank", r.expected},
                 {"computed_rank", value_or_tag(r.computed, "n/a")},
                 {"nakayama_count", r.nakayama},
                 {"match", r.match}});
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "row,generators,expected_rank,computed_rank,nakayama_count,match\n";
      for (const InstanceResult& r : results)
        out << "\"" << r.row_label << "\",\"" << r.name << "\"," << r.expected
            << "," << opt_int_string(r.computed, "n/a") << "," << r.nakayama
            << "," << (r.match ? "true" : "false") << "\n";
      break;
  }
  return mismatches == 0 ? kExitOk : kExitTableMismatch;
}

int cmd_search(int n, int top_k, const CommandOptions& opt, std::ostream& out) {
  const SearchResult result = search_best(n, top_k, opt.caps);
  const size_t shown = std::min(size_t(top_k), result.rows.size());
  switch (opt.format) {
    case Format::Text: {
      out << "searched " << result.rows.size() << " cyclic codes of length "
          << n << " (binary images of length " << 4 * n << ")\n";
      out << "pareto front (distance, log2 size):\n";
      for (size_t idx : result.pareto) {
        const CodeSummary& s = result.rows[idx];
        out << "  d=" << opt_int_string(s.d_lee, "inf") << " log2|B|="
            << s.image.log2_size << "  gens: "
            << generators_string(s.generators) << "\n";
      }
      out << "top " << shown << " by (distance, size):\n";
      std::vector<CodeSummary> head(result.rows.begin(),
                                    result.rows.begin() + long(shown));
      rows_text_table(head, out);
      break;
    }
    case Format::Json: {
      Json doc;
      doc["n"] = n;
      doc["count"] = result.rows.size();
      doc["top_k"] = top_k;
      doc["pareto"] = Json::array();
      for (size_t idx : result.pareto) doc["pareto"].push_back(idx);
      doc["rows"] = Json::array();
      for (const CodeSummary& s : result.rows)
        doc["rows"].push_back(summary_json(s));
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << csv_header() << "\n";
      for (const CodeSummary& s : result.rows) out << csv_row(s) << "\n";
      break;
  }
  return kExitOk;
}

}  // namespace ru4
