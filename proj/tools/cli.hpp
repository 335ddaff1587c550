#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace susy::cli {

struct CliConfig {
  std::string command;
  std::string input = "-";  // "-" reads stdin
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  int max_edges = 8;  // SUSY_KIT_MAX_EDGES overrides, --max-edges overrides both
};

// Exit status: 0 success, 1 validation failure or violated precondition,
// 2 malformed input, bad arguments or unknown command.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
// `args` without the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace susy::cli
