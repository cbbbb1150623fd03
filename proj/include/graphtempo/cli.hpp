#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphtempo::cli {

/// Runs the command line tool. Returns 0 on success, 1 on a domain error
/// (bad input data, lookups, unsupported requests) and 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CommandInfo {
  std::string command;                  // e.g. "op union"
  std::vector<std::string> operations;  // library operations it drives
};

/// Every subcommand with the library operations it exercises.
const std::vector<CommandInfo>& command_table();

/// Library operations that must be reachable from some subcommand.
std::vector<std::string> core_operations();

}  // namespace graphtempo::cli
