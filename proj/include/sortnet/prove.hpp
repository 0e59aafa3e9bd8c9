#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sortnet/encode.hpp"
#include "sortnet/network.hpp"
#include "sortnet/solver.hpp"

namespace sortnet {

struct ProveOptions {
  Tier tier = Tier::Full;
  bool generalized_phi1 = false;
  bool parberry = false;
  std::optional<Network> prefix;
  std::string solver;  // command line; see resolve_solver_command
  std::chrono::duration<double> timeout = kDefaultSolverTimeout;
  // Keep the instance at this path instead of a temporary file.
  std::optional<std::filesystem::path> dimacs_out;
  std::filesystem::path work_dir = std::filesystem::temp_directory_path();
};

EncodeOptions encode_options(const ProveOptions& options);

// Decides whether an n-channel depth-d sorting network exists (extending the
// prefix, if any). SAT verdicts carry the decoded network, re-verified
// exhaustively; a model that fails verification yields SOLVER-ERROR.
SolveVerdict prove_depth(int n, int d, const ProveOptions& options);

struct DepthSearch {
  int max_depth = 0;
  // Smallest depth with a SAT verdict; empty when every depth up to
  // max_depth was UNSAT or a solver error stopped the search.
  std::optional<int> depth;
  bool inconclusive = false;
  std::vector<std::pair<int, SolveVerdict>> verdicts;

  std::string summary() const;
};

// Tries d = 1, 2, ... up to max_depth and stops at the first SAT.
DepthSearch find_optimal_depth(int n, int max_depth, const ProveOptions& options);

// Prefixes sharing channel count and depth, with a name each (file stem).
struct PrefixSet {
  std::vector<std::string> names;
  std::vector<Network> prefixes;

  std::size_t size() const noexcept { return prefixes.size(); }
  // Throws DomainError when empty, ShapeError when shapes differ.
  void validate() const;
  // Every *.net / *.txt file in `dir`, sorted by file name.
  static PrefixSet load_directory(const std::filesystem::path& dir);
};

enum class Aggregate { Sat, Unsat, Inconclusive };
std::string to_string(Aggregate aggregate);

struct BatchRow {
  std::string name;
  SolveVerdict verdict;
};

struct BatchResult {
  int n = 0;
  int depth = 0;
  std::vector<BatchRow> rows;  // submission order
  Aggregate aggregate = Aggregate::Inconclusive;
  std::size_t slowest = 0;  // row index
  std::chrono::duration<double> wall_time{0};

  std::string to_text() const;
  std::string to_json() const;
  std::string to_csv() const;
};

// One instance per prefix with that prefix fixed exactly, at most `jobs`
// solver processes at a time. SAT if any instance is SAT, UNSAT if all are,
// INCONCLUSIVE otherwise.
BatchResult batch_prove(const PrefixSet& prefixes, int n, int d, int jobs,
                        const ProveOptions& options);

}  // namespace sortnet
