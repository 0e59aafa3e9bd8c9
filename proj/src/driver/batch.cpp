#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sortnet/errors.hpp"
#include "sortnet/format.hpp"
#include "sortnet/prove.hpp"

namespace sortnet {

std::string to_string(Aggregate aggregate) {
  switch (aggregate) {
    case Aggregate::Sat:
      return "SAT";
    case Aggregate::Unsat:
      return "UNSAT";
    case Aggregate::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

void PrefixSet::validate() const {
  if (prefixes.empty()) throw DomainError("prefix set is empty");
  const auto& first = prefixes.front();
  for (std::size_t i = 1; i < prefixes.size(); ++i) {
    if (prefixes[i].channels() != first.channels() || prefixes[i].depth() != first.depth()) {
      throw ShapeError("prefix " + (i < names.size() ? names[i] : std::to_string(i)) +
                       " differs in shape from " + (names.empty() ? "the first" : names[0]));
    }
  }
}

PrefixSet PrefixSet::load_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".net" || ext == ".txt")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  PrefixSet set;
  for (const auto& f : files) {
    set.names.push_back(f.stem().string());
    set.prefixes.push_back(read_network_file(f));
  }
  set.validate();
  return set;
}

BatchResult batch_prove(const PrefixSet& prefixes, int n, int d, int jobs,
                        const ProveOptions& options) {
  prefixes.validate();
  if (prefixes.prefixes.front().channels() != n) {
    throw ShapeError("prefixes have " + std::to_string(prefixes.prefixes.front().channels()) +
                     " channels, expected " + std::to_string(n));
  }
  if (jobs < 1) throw RangeError("jobs must be >= 1");

  auto start = std::chrono::steady_clock::now();
  BatchResult result;
  result.n = n;
  result.depth = d;
  result.rows.resize(prefixes.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      ProveOptions local = options;
      local.parberry = false;
      local.prefix = prefixes.prefixes[i];
      local.dimacs_out.reset();
      BatchRow row;
      row.name = i < prefixes.names.size() ? prefixes.names[i] : std::to_string(i);
      try {
        row.verdict = prove_depth(n, d, local);
      } catch (const Error& e) {
        row.verdict.status = SolveStatus::SolverError;
        row.verdict.diagnostics = e.what();
      }
      result.rows[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  auto threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), prefixes.size());
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool any_sat = false;
  bool any_error = false;
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const auto& v = result.rows[i].verdict;
    any_sat |= v.status == SolveStatus::Sat;
    any_error |= v.status == SolveStatus::SolverError;
    if (v.elapsed > result.rows[result.slowest].verdict.elapsed) result.slowest = i;
  }
  result.aggregate = any_error ? Aggregate::Inconclusive
                     : any_sat ? Aggregate::Sat
                               : Aggregate::Unsat;
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

std::string BatchResult::to_text() const {
  std::ostringstream out;
  out << "n=" << n << " depth=" << depth << " instances=" << rows.size() << '\n';
  out << std::fixed << std::setprecision(3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << (i == slowest ? "* " : "  ") << std::left << std::setw(24) << r.name << ' '
        << std::setw(13) << to_string(r.verdict.status) << ' ' << std::right << std::setw(10)
        << r.verdict.elapsed.count() << " s";
    if (!r.verdict.diagnostics.empty()) out << "  " << r.verdict.diagnostics;
    out << '\n';
  }
  out << "aggregate: " << to_string(aggregate) << "  (wall " << wall_time.count()
      << " s, * = slowest)\n";
  return out.str();
}

std::string BatchResult::to_json() const {
  nlohmann::json instances = nlohmann::json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    nlohmann::json entry{{"prefix", r.name},
                         {"verdict", to_string(r.verdict.status)},
                         {"seconds", r.verdict.elapsed.count()},
                         {"slowest", i == slowest}};
    if (!r.verdict.diagnostics.empty()) entry["diagnostics"] = r.verdict.diagnostics;
    if (r.verdict.network) entry["network"] = format_network(*r.verdict.network);
    instances.push_back(std::move(entry));
  }
  return nlohmann::json{{"n", n},
                        {"depth", depth},
                        {"aggregate", to_string(aggregate)},
                        {"wall_seconds", wall_time.count()},
                        {"instances", instances}}
      .dump(2);
}

std::string BatchResult::to_csv() const {
  std::ostringstream out;
  out << "prefix,verdict,seconds,slowest\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << r.name << ',' << to_string(r.verdict.status) << ',' << r.verdict.elapsed.count() << ','
        << (i == slowest ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace sortnet
