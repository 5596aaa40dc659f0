#pragma once

#include <ostream>
#include <string>

#include "ru4/report.hpp"

namespace ru4 {

// Exit codes shared by the CLI and the command functions: 0 success,
// 2 usage error, 3 computation budget exceeded, 4 table mismatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitTableMismatch = 4;

struct CommandOptions {
  Format format = Format::Text;
  Caps caps{};
  bool dump_words = false;
};

int cmd_factor(int n, const CommandOptions& opt, std::ostream& out);
int cmd_enumerate(int n, const CommandOptions& opt, std::ostream& out);
int cmd_code_info(int n, const std::string& gens_text,
                  const CommandOptions& opt, std::ostream& out);
int cmd_gray(int n, const std::string& gens_text, const CommandOptions& opt,
             std::ostream& out);
int cmd_tables(int which, const CommandOptions& opt, std::ostream& out);
int cmd_search(int n, int top_k, const CommandOptions& opt, std::ostream& out);

}  // namespace ru4
