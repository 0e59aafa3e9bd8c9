#include "sortnet/prove.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>

#include "sortnet/errors.hpp"
#include "sortnet/evaluate.hpp"

namespace sortnet {

namespace {

std::filesystem::path instance_path(const ProveOptions& options, int n, int d) {
  if (options.dimacs_out) return *options.dimacs_out;
  static std::atomic<unsigned> counter{0};
  std::ostringstream name;
  name << "sortnet-" << ::getpid() << '-' << counter++ << "-n" << n << "-d" << d << ".cnf";
  return options.work_dir / name.str();
}

}  // namespace

EncodeOptions encode_options(const ProveOptions& options) {
  auto enc = EncodeOptions::for_tier(options.tier);
  enc.generalized_phi1 = options.generalized_phi1;
  enc.parberry = options.parberry;
  enc.prefix = options.prefix;
  return enc;
}

SolveVerdict prove_depth(int n, int d, const ProveOptions& options) {
  Encoding enc = encode(n, d, encode_options(options));
  auto path = instance_path(options, n, d);
  {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_dimacs(out, enc.cnf);
  }

  SolveVerdict verdict = run_solver(path, options.solver, options.timeout);
  if (!options.dimacs_out) std::filesystem::remove(path);
  if (verdict.status != SolveStatus::Sat) return verdict;

  std::vector<bool> assignment(static_cast<std::size_t>(enc.vars.variable_count()) + 1, false);
  for (int lit : verdict.model) {
    if (lit > 0 && lit <= enc.vars.variable_count()) assignment[static_cast<std::size_t>(lit)] = true;
  }
  try {
    Network net = decode_model(enc.vars, assignment);
    std::optional<Network> prefix = options.prefix;
    if (options.parberry) prefix = Network(n, {parberry_layer(n)});
    if (!is_sorting_network(net)) {
      verdict.diagnostics = "decoded network is not a sorting network";
    } else if (prefix && !extends(net, *prefix)) {
      verdict.diagnostics = "decoded network does not extend the fixed prefix";
    } else {
      verdict.network = std::move(net);
      return verdict;
    }
  } catch (const IntegrityError& e) {
    verdict.diagnostics = e.what();
  }
  verdict.status = SolveStatus::SolverError;
  return verdict;
}

std::string DepthSearch::summary() const {
  std::ostringstream out;
  for (const auto& [d, v] : verdicts) {
    out << "depth " << d << ": " << to_string(v.status);
    if (!v.diagnostics.empty()) out << " (" << v.diagnostics << ")";
    out << '\n';
  }
  if (depth) {
    out << "optimal depth: " << *depth << '\n';
  } else if (inconclusive) {
    out << "optimal depth: unknown (solver error)\n";
  } else {
    out << "optimal depth: greater than " << max_depth << '\n';
  }
  return out.str();
}

DepthSearch find_optimal_depth(int n, int max_depth, const ProveOptions& options) {
  if (max_depth < 1 || max_depth > kMaxEncodeDepth) {
    throw RangeError("max depth must be in 1.." + std::to_string(kMaxEncodeDepth));
  }
  DepthSearch search;
  search.max_depth = max_depth;
  for (int d = 1; d <= max_depth; ++d) {
    auto verdict = prove_depth(n, d, options);
    auto status = verdict.status;
    search.verdicts.emplace_back(d, std::move(verdict));
    if (status == SolveStatus::Sat) {
      search.depth = d;
      break;
    }
    if (status == SolveStatus::SolverError) {
      search.inconclusive = true;
      break;
    }
  }
  return search;
}

}  // namespace sortnet
