#pragma once

#include <string>
#include <vector>

#include "ru4/image.hpp"

namespace ru4 {

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& name);  // "text" | "json" | "csv"

// "x^3+2x^2+x+3" rendering for human output; the machine form stays the
// comma-separated coefficient list.
std::string pretty_poly(const PolyZ4& p);
std::string pretty_poly(const PolyR& p);

std::string profile_string(const std::vector<IdealLabel>& labels);
std::string generators_string(const std::vector<std::string>& gens);

// "inf" for the zero code's distance, "n/a" for a missing rank.
std::string opt_int_string(const std::optional<int>& v, const char* none);
// "true"/"false", prefixed with "sampled-" when the flag was estimated.
std::string flag_string(const std::optional<bool>& v, bool sampled);

// The 11 fixed report columns:
// n,generators,log2_size,paper_rank,nakayama_count,d_lee,image_length,
// image_log2_size,image_d,linear,qc4
std::string csv_header();
std::string csv_row(const CodeSummary& s);

/**
 * Machine-readable copy of the two published rank tables. Each row
 * carries the printed generator shape, the expected rank, and every
 * concrete (i, j) instance expanded into explicit generator pairs.
 */
struct TableRow {
  struct Instance {
    std::string name;
    PolyR gen1, gen2;
  };
  std::string label;
  int expected_rank = 0;
  std::vector<Instance> instances;
};

// which = 1 (length 3, 8 rows) or 2 (length 7, 69 row shapes).
std::vector<TableRow> paper_table(int which);

// Length of the codes in table `which` (3 or 7).
int paper_table_length(int which);

}  // namespace ru4
