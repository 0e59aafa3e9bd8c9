#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet {

enum class SolveStatus { Sat, Unsat, SolverError };

std::string to_string(SolveStatus status);

struct SolveVerdict {
  SolveStatus status = SolveStatus::SolverError;
  std::optional<Network> network;  // set for verified SAT verdicts
  std::vector<int> model;          // raw "v" literals for SAT
  std::string diagnostics;
  std::chrono::duration<double> elapsed{0};
};

inline constexpr std::chrono::seconds kDefaultSolverTimeout{600};

// Picks the solver command: `flag` if non-empty, else $SOLVER, else the
// first of a few well-known solver names found on PATH. Empty if none.
std::string resolve_solver_command(const std::string& flag = {});

// Runs `solver_cmd <cnf_path>` (the command is split on whitespace) with
// stdout captured. Exit status 10 is SAT (the "v" lines must parse), 20 is
// UNSAT; everything else, including a timeout or a missing binary, is
// SOLVER-ERROR. Never throws for solver-side failures.
SolveVerdict run_solver(const std::filesystem::path& cnf_path, const std::string& solver_cmd,
                        std::chrono::duration<double> timeout = kDefaultSolverTimeout);

// Literals from every line starting with "v ", stopping at 0. Nullopt if a
// token is not an integer or the terminating 0 is missing.
std::optional<std::vector<int>> parse_model_lines(const std::string& output);

}  // namespace sortnet
