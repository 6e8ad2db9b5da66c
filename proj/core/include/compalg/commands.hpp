#pragma once

#include <string>
#include <vector>

#include "compalg/document.hpp"

namespace compalg {

inline constexpr int kDefaultMaxDegree = 3;

// One tool invocation: a deterministic JSON report plus the process exit
// code. 0 = pass, 1 = a mathematical failure (violated axiom, obstructed
// extension), 2 = unusable input.
struct CommandResult {
  int exit_code = 0;
  std::string report;  // JSON text, newline terminated
};

const std::vector<std::string>& command_names();

// Dispatches on the command name. Never throws: input problems come back
// as exit code 2 reports, mathematical failures as exit code 1 reports.
// max_degree bounds the cohomology / homology range where relevant.
CommandResult run_command(const std::string& command,
                          const AlgebraDocument& doc,
                          int max_degree = kDefaultMaxDegree);

// A ready-made exit code 2 report for failures that happen before a
// document reaches run_command (unreadable file, malformed JSON).
CommandResult input_error_result(const std::string& command,
                                 const std::string& message);

}  // namespace compalg
