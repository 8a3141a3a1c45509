#pragma once

// Command dispatch for the toricforms tool.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "toric/report.hpp"

namespace toric::cli {

struct Invocation {
  std::string group;
  std::string action;
  /// Cone generators, e.g. "1,0,0;1,2,0".
  std::string rays;
  std::string fan_path;
  std::string fixture;
  /// Subdivision or blow-up ray.
  std::string ray;
  /// A single weight; "0" is the zero weight. Empty means the whole box.
  std::string weight;
  std::string sheaf = "tilde:1";
  /// Dilation factors, e.g. "2,2,2". Empty means the default sequence.
  std::string seq;
  std::optional<std::size_t> p;
  std::optional<std::size_t> t;
  long window = 3;
  std::string format = "tsv";
  bool parallel = false;
  /// Printed in the report header.
  std::string echo;
};

/// Runs one command. Throws toric::Error on bad input (UnknownCommand for an
/// unknown group or action).
Report dispatch(const Invocation& inv);

/// Parses arguments (without the program name), prints the report, and
/// returns the exit status: 0 pass, 1 failed check, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
