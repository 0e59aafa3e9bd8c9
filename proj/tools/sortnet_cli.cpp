// sortnet: verify, normalize, enumerate and SAT-encode the last layers of
// comparator sorting networks.
//
// Exit status: 0 on success, 1 on a domain error (including "not a sorting
// network", solver errors and inconclusive batches), 2 on usage errors.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sortnet/analysis.hpp"
#include "sortnet/encode.hpp"
#include "sortnet/enumerate.hpp"
#include "sortnet/errors.hpp"
#include "sortnet/evaluate.hpp"
#include "sortnet/format.hpp"
#include "sortnet/normal_form.hpp"
#include "sortnet/prove.hpp"

namespace {

using namespace sortnet;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct SolveFlags {
  std::string tier = "full";
  bool parberry = false;
  bool phi1_all = false;
  std::string prefix_file;
  std::string solver;
  double timeout = static_cast<double>(kDefaultSolverTimeout.count());
  std::string dimacs_out;
};

void add_encoding_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--tier", f.tier, "Constraint tier")
      ->check(CLI::IsMember({"base", "necessary", "full"}))
      ->capture_default_str();
  auto* parberry = cmd->add_flag("--parberry", f.parberry, "Fix layer 1 to (1,2),(3,4),...");
  auto* prefix = cmd->add_option("--prefix", f.prefix_file, "Network file whose layers are fixed exactly")
                     ->check(CLI::ExistingFile);
  parberry->excludes(prefix);
  cmd->add_flag("--phi1-all", f.phi1_all, "Also add the generalized phi1(l) for every l < d");
  cmd->add_option("--dimacs-out", f.dimacs_out, "Write the CNF instance here");
}

void add_solver_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--solver", f.solver, "Solver command (default: $SOLVER or a solver on PATH)");
  cmd->add_option("--timeout", f.timeout, "Per-instance timeout in seconds")->capture_default_str();
}

ProveOptions prove_options(const SolveFlags& f) {
  ProveOptions o;
  o.tier = parse_tier(f.tier);
  o.parberry = f.parberry;
  o.generalized_phi1 = f.phi1_all;
  if (!f.prefix_file.empty()) o.prefix = read_network_file(f.prefix_file);
  o.solver = resolve_solver_command(f.solver);
  if (o.solver.empty()) throw DomainError("no SAT solver found; pass --solver or set SOLVER");
  o.timeout = std::chrono::duration<double>(f.timeout);
  if (!f.dimacs_out.empty()) o.dimacs_out = f.dimacs_out;
  return o;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

int cmd_verify(const std::string& file, const std::string& format, bool audit) {
  Network net = read_network_file(file);
  bool sorting = is_sorting_network(net);
  if (format == "json") {
    nlohmann::json j{{"sorting", sorting},
                     {"n", net.channels()},
                     {"depth", net.depth()},
                     {"size", net.size()}};
    if (audit) j["audit"] = nlohmann::json::parse(audit_endgame(remove_redundant(net)).to_json());
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "SORTING NETWORK: " << (sorting ? "yes" : "no") << " (n=" << net.channels()
              << ", depth=" << net.depth() << ", size=" << net.size() << ")\n";
    if (audit) std::cout << audit_endgame(remove_redundant(net)).to_text();
  }
  return sorting ? kExitOk : kExitDomain;
}

int cmd_normalize(const std::string& file, const std::string& to, const std::string& out) {
  Network net = read_network_file(file);
  Network result;
  if (to == "nonredundant") {
    result = remove_redundant(net);
  } else if (to == "llnf") {
    result = to_llnf(net);
  } else {
    result = co_saturate(net);
  }
  if (!is_sorting_network(result)) throw IntegrityError("normalized network no longer sorts");
  std::ostringstream text;
  text << "# " << to << " form, sorting network verified (n=" << result.channels()
       << ", depth=" << result.depth() << ", size=" << result.size() << ")\n"
       << format_network(result);
  emit(text.str(), out);
  return kExitOk;
}

void dump_layers(const std::vector<Layer>& layers, bool list) {
  std::cout << "count: " << layers.size() << '\n';
  if (!list) return;
  for (const auto& l : layers) std::cout << format_layer(l) << '\n';
}

int cmd_enumerate(const std::string& what, int n, int n_max, const std::string& format,
                  bool list, const std::string& out_dir) {
  if (what == "table") {
    auto table = build_count_table(n, std::max(n, n_max));
    std::cout << (format == "csv" ? table.to_csv() : table.to_text());
    auto bad = table.mismatches();
    for (int m : bad) std::cerr << "mismatch against reference counts at n=" << m << '\n';
    return bad.empty() ? kExitOk : kExitDomain;
  }
  if (what == "general") {
    std::cout << "count: " << count_general_layers(n) << '\n';
    return kExitOk;
  }
  if (what == "last") {
    auto layers = enumerate_nonredundant_last_layers(n);
    dump_layers(layers, list);
    std::cout << "closed form F_{n+1}-1: " << nonredundant_last_layer_count(n) << '\n';
    return kExitOk;
  }
  if (what == "llnf") {
    auto layers = enumerate_llnf_last_layers(n);
    dump_layers(layers, list);
    std::cout << "closed form P_{n+5}: " << llnf_last_layer_count(n) << '\n';
    return kExitOk;
  }
  auto suffixes = enumerate_cosaturated_suffixes(n);
  std::cout << "count: " << suffixes.size() << '\n';
  if (auto ref = reference_cosaturated_count(n)) {
    std::cout << "reference: " << *ref << (*ref == suffixes.size() ? " (match)" : " (MISMATCH)")
              << '\n';
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < suffixes.size(); ++i) {
      std::ostringstream name;
      name << "suffix-n" << n << '-' << std::setw(6) << std::setfill('0') << i << ".net";
      write_network_file(std::filesystem::path(out_dir) / name.str(), suffixes[i].as_network());
    }
  } else if (list) {
    for (const auto& s : suffixes) std::cout << "#\n" << format_network(s.as_network());
  }
  auto ref = reference_cosaturated_count(n);
  return !ref || *ref == suffixes.size() ? kExitOk : kExitDomain;
}

int cmd_encode(int n, int d, const SolveFlags& f, const std::string& map_out) {
  EncodeOptions o = EncodeOptions::for_tier(parse_tier(f.tier));
  o.parberry = f.parberry;
  o.generalized_phi1 = f.phi1_all;
  if (!f.prefix_file.empty()) o.prefix = read_network_file(f.prefix_file);
  Encoding enc = encode(n, d, o);
  if (f.dimacs_out.empty()) {
    write_dimacs(std::cout, enc.cnf);
  } else {
    std::ofstream out(f.dimacs_out);
    if (!out) throw Error("cannot write " + f.dimacs_out);
    write_dimacs(out, enc.cnf);
    std::cerr << "wrote " << f.dimacs_out << ": " << enc.cnf.variable_count() << " variables, "
              << enc.cnf.clause_count() << " clauses\n";
  }
  if (!map_out.empty()) emit(enc.vars.to_json() + "\n", map_out);
  return kExitOk;
}

void print_verdict(int n, int d, const SolveVerdict& v, const std::string& format) {
  if (format == "json") {
    nlohmann::json j{{"n", n},
                     {"depth", d},
                     {"verdict", to_string(v.status)},
                     {"seconds", v.elapsed.count()}};
    if (v.network) j["network"] = format_network(*v.network);
    if (!v.diagnostics.empty()) j["diagnostics"] = v.diagnostics;
    std::cout << j.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    std::cout << "n,depth,verdict,seconds\n"
              << n << ',' << d << ',' << to_string(v.status) << ',' << v.elapsed.count() << '\n';
    return;
  }
  std::cout << "n=" << n << " depth=" << d << ": " << to_string(v.status) << " ("
            << std::fixed << std::setprecision(3) << v.elapsed.count() << " s)\n";
  if (!v.diagnostics.empty()) std::cout << v.diagnostics << '\n';
  if (v.network) std::cout << format_network(*v.network);
}

int cmd_prove(int n, int d, int max_depth, const SolveFlags& f, const std::string& format) {
  ProveOptions o = prove_options(f);
  if (d > 0) {
    auto v = prove_depth(n, d, o);
    print_verdict(n, d, v, format);
    return v.status == SolveStatus::SolverError ? kExitDomain : kExitOk;
  }
  auto search = find_optimal_depth(n, max_depth, o);
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [depth, v] : search.verdicts) {
      rows.push_back({{"depth", depth}, {"verdict", to_string(v.status)}, {"seconds", v.elapsed.count()}});
    }
    nlohmann::json j{{"n", n}, {"max_depth", max_depth}, {"verdicts", rows}};
    j["optimal_depth"] = search.depth ? nlohmann::json(*search.depth) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << search.summary();
    if (search.depth) std::cout << format_network(*search.verdicts.back().second.network);
  }
  return search.inconclusive ? kExitDomain : kExitOk;
}

int cmd_batch(const std::string& dir, int n, int d, int jobs, const SolveFlags& f,
              const std::string& format) {
  ProveOptions o = prove_options(f);
  o.dimacs_out.reset();
  auto set = PrefixSet::load_directory(dir);
  auto result = batch_prove(set, n, d, jobs, o);
  if (format == "json") {
    std::cout << result.to_json() << '\n';
  } else if (format == "csv") {
    std::cout << result.to_csv();
  } else {
    std::cout << result.to_text();
  }
  return result.aggregate == Aggregate::Inconclusive ? kExitDomain : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze, normalize, enumerate and SAT-encode the last layers of sorting networks"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  bool audit = false;
  auto* verify = app.add_subcommand("verify", "Check a network file with the zero-one principle");
  verify->add_option("file", file, "Network file")->required()->check(CLI::ExistingFile);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--audit", audit, "Also audit the last layers after removing redundancy");

  std::string to = "cosat";
  std::string out;
  auto* normalize = app.add_subcommand("normalize", "Rewrite a sorting network into a normal form");
  normalize->add_option("file", file, "Network file")->required()->check(CLI::ExistingFile);
  normalize->add_option("--to", to, "Target form")
      ->check(CLI::IsMember({"nonredundant", "llnf", "cosat"}))
      ->capture_default_str();
  normalize->add_option("-o,--output", out, "Output file (default stdout)");

  std::string what = "table";
  int n = 0;
  int n_max = 0;
  bool list = false;
  std::string out_dir;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate and count last layers and suffixes");
  enumerate->add_option("--what", what, "last | llnf | cosat | general | table")
      ->check(CLI::IsMember({"last", "llnf", "cosat", "general", "table"}))
      ->capture_default_str();
  enumerate->add_option("--n", n, "Channels (first row for --what table)")->required();
  enumerate->add_option("--n-max", n_max, "Last row for --what table");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
  enumerate->add_flag("--list", list, "Print every enumerated layer or suffix");
  enumerate->add_option("--out-dir", out_dir, "Write each co-saturated suffix to its own file");

  int depth = 0;
  int max_depth = 0;
  std::string map_out;
  SolveFlags flags;
  auto* encode_cmd = app.add_subcommand("encode", "Write the DIMACS instance for (n, depth)");
  encode_cmd->add_option("--n", n, "Channels")->required();
  encode_cmd->add_option("--depth", depth, "Depth")->required();
  add_encoding_flags(encode_cmd, flags);
  encode_cmd->add_option("--map-out", map_out, "Write the variable map as JSON");

  auto* prove = app.add_subcommand("prove", "Decide existence of a depth-d network with a SAT solver");
  prove->add_option("--n", n, "Channels")->required();
  auto* depth_opt = prove->add_option("--depth", depth, "Depth to decide");
  auto* max_opt = prove->add_option("--max-depth", max_depth, "Search the optimal depth up to this bound");
  depth_opt->excludes(max_opt);
  add_encoding_flags(prove, flags);
  add_solver_flags(prove, flags);
  prove->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  std::string prefixes;
  int jobs = 1;
  auto* batch = app.add_subcommand("batch", "Decide one instance per prefix file, in parallel");
  batch->add_option("--prefixes", prefixes, "Directory of prefix network files")
      ->required()
      ->check(CLI::ExistingDirectory);
  batch->add_option("--n", n, "Channels")->required();
  batch->add_option("--depth", depth, "Depth")->required();
  batch->add_option("--jobs", jobs, "Concurrent solver processes")->capture_default_str();
  batch->add_option("--tier", flags.tier, "Constraint tier")
      ->check(CLI::IsMember({"base", "necessary", "full"}))
      ->capture_default_str();
  add_solver_flags(batch, flags);
  batch->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(file, format, audit);
    if (*normalize) return cmd_normalize(file, to, out);
    if (*enumerate) return cmd_enumerate(what, n, n_max, format, list, out_dir);
    if (*encode_cmd) return cmd_encode(n, depth, flags, map_out);
    if (*prove) {
      if (depth <= 0 && max_depth <= 0) {
        std::cerr << "prove: pass --depth or --max-depth\n" << prove->help();
        return kExitUsage;
      }
      return cmd_prove(n, depth, max_depth, flags, format);
    }
    if (*batch) return cmd_batch(prefixes, n, depth, jobs, flags, format);
  } catch (const sortnet::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
