// Command-line front end. Lives in the library so tests can drive it.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ico {

enum class OutputFormat { Text, Json, Csv };

struct Config {
  std::string cache_path;  // empty: always enumerate
  OutputFormat format = OutputFormat::Text;
  int threads = 0;          // 0: OpenMP default
  unsigned precision = 60;  // decimal digits for the Valentiner computation
};

// Exit status: 0 if every requested check passed, 1 on a failed check or
// library error, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ico
