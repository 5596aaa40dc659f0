// ru4: cyclic codes over Z4+uZ4 (u^2 = 0) and their binary Gray images.
//
// Subcommands: factor, codes enumerate, code info, code gray, tables,
// search. Exit codes: 0 success, 2 usage error, 3 budget exceeded,
// 4 table mismatch.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ru4/commands.hpp"
#include "ru4/errors.hpp"

namespace {

int env_enum_bits_default() {
  if (const char* env = std::getenv("RU4_MAX_ENUM_BITS")) {
    try {
      const int bits = std::stoi(env);
      if (bits > 0) return bits;
    } catch (...) {
      std::cerr << "warning: ignoring malformed RU4_MAX_ENUM_BITS='" << env
                << "'\n";
    }
  }
  return ru4::kDefaultMaxEnumBits;
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 1 << 13);  // line-buffered output

  CLI::App app{"cyclic codes over Z4+uZ4 and their binary Gray images"};
  app.require_subcommand(1);
  // global options (--format, caps, --workers) may appear after the
  // subcommand; unmatched ones bubble up to the parent parser
  app.fallthrough();

  ru4::CommandOptions opt;
  opt.caps.max_enum_bits = env_enum_bits_default();
  std::string format = "text";
  app.add_option("--format", format, "output format: text, json or csv")
      ->capture_default_str();
  app.add_option("--max-enum-bits", opt.caps.max_enum_bits,
                 "enumeration cap: refuse scans over codes larger than "
                 "2^bits (default from RU4_MAX_ENUM_BITS or 26)")
      ->capture_default_str();
  app.add_option("--max-image-log2", opt.caps.max_image_log2,
                 "materialization cap for image sets, in log2 words")
      ->capture_default_str();
  app.add_option("--workers", opt.caps.workers,
                 "worker threads for enumeration and distance kernels")
      ->capture_default_str();

  int n = 7;
  int which = 1;
  int top_k = 10;
  std::string gens;

  CLI::App* factor = app.add_subcommand(
      "factor", "factor x^n-1 over F2, lift to Z4, print CRT idempotents");
  factor->add_option("--n", n, "odd code length")->required();

  CLI::App* codes = app.add_subcommand("codes", "whole-family reports");
  codes->require_subcommand(1);
  CLI::App* codes_enumerate = codes->add_subcommand(
      "enumerate", "enumerate all 7^m cyclic codes of length n");
  codes_enumerate->add_option("--n", n, "odd code length")->required();

  CLI::App* code = app.add_subcommand("code", "single-code reports");
  code->require_subcommand(1);
  CLI::App* code_info = code->add_subcommand(
      "info", "detailed report for the code generated by --gens");
  code_info->add_option("--n", n, "odd code length")->required();
  code_info
      ->add_option("--gens", gens,
                   "generators, ';'-separated polynomials with ascending "
                   "comma-separated coefficients; R coefficients as a:b")
      ->required();
  CLI::App* code_gray =
      code->add_subcommand("gray", "gray image parameters (and words)");
  code_gray->add_option("--n", n, "odd code length")->required();
  code_gray->add_option("--gens", gens, "generators, as for 'code info'")
      ->required();
  code_gray->add_flag("--dump-words", opt.dump_words,
                      "also print every image word");

  CLI::App* tables = app.add_subcommand(
      "tables", "rebuild a rank table and diff against the expected values");
  tables->add_option("--which", which, "table number, 1 or 2")->required();

  CLI::App* search = app.add_subcommand(
      "search", "rank all cyclic codes of length n by image parameters");
  search->add_option("--n", n, "odd code length")->required();
  search->add_option("--top", top_k, "rows in the top list")
      ->capture_default_str();

  for (CLI::App* sub : {factor, codes, codes_enumerate, code, code_info,
                        code_gray, tables, search})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return ru4::kExitUsage;
  }

  try {
    opt.format = ru4::parse_format(format);
    if (factor->parsed()) return ru4::cmd_factor(n, opt, std::cout);
    if (codes_enumerate->parsed()) return ru4::cmd_enumerate(n, opt, std::cout);
    if (code_info->parsed()) return ru4::cmd_code_info(n, gens, opt, std::cout);
    if (code_gray->parsed()) return ru4::cmd_gray(n, gens, opt, std::cout);
    if (tables->parsed()) return ru4::cmd_tables(which, opt, std::cout);
    if (search->parsed()) return ru4::cmd_search(n, top_k, opt, std::cout);
    std::cerr << "error: no subcommand\n";
    return ru4::kExitUsage;
  } catch (const ru4::TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ru4::kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ru4::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
