#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sortnet/errors.hpp"
#include "sortnet/evaluate.hpp"
#include "sortnet/format.hpp"
#include "sortnet/prove.hpp"
#include "sortnet/solver.hpp"
#include "support/networks.hpp"
#include "support/solver_lookup.hpp"

#ifndef SORTNET_TEST_DPLL_SOLVER
#error "SORTNET_TEST_DPLL_SOLVER must name the test solver binary"
#endif

using namespace sortnet;
using namespace sortnet::testing;
namespace fs = std::filesystem;

namespace {

// Scratch directory removed at scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("sortnet-driver-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::size_t entries() const {
    return static_cast<std::size_t>(std::distance(fs::directory_iterator(path), fs::directory_iterator()));
  }
};

fs::path script(const TempDir& dir, const std::string& name, const std::string& body) {
  auto p = dir.path / name;
  std::ofstream(p) << "#!/bin/sh\n" << body;
  fs::permissions(p, fs::perms::owner_all);
  return p;
}

fs::path cnf_file(const TempDir& dir, const std::string& text) {
  auto p = dir.path / "in.cnf";
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProveOptions dpll_options(Tier tier, const TempDir& dir) {
  ProveOptions o;
  o.tier = tier;
  o.solver = SORTNET_TEST_DPLL_SOLVER;
  o.work_dir = dir.path;
  o.timeout = std::chrono::seconds(120);
  return o;
}

ProveOptions real_options(Tier tier, const TempDir& dir) {
  auto o = dpll_options(tier, dir);
  o.solver = external_solver();
  return o;
}

}  // namespace

TEST_SUITE("driver.solver") {
  TEST_CASE("model lines") {
    CHECK(parse_model_lines("s SATISFIABLE\nv 1 -2\nv 3 0\n") == std::vector<int>{1, -2, 3});
    CHECK(parse_model_lines("v 0\n") == std::vector<int>{});
    CHECK_FALSE(parse_model_lines("v 1 2\n").has_value());
    CHECK_FALSE(parse_model_lines("v 1 x 0\n").has_value());
    CHECK_FALSE(parse_model_lines("").has_value());
    CHECK(parse_model_lines("c v 9 0\nvalue\nv 4 0\n") == std::vector<int>{4});
  }

  TEST_CASE("command resolution") {
    CHECK(resolve_solver_command("my-solver --flag") == "my-solver --flag");
    const char* saved = std::getenv("SOLVER");
    std::string keep = saved ? saved : "";
    ::setenv("SOLVER", "from-env", 1);
    CHECK(resolve_solver_command() == "from-env");
    CHECK(resolve_solver_command("flag-wins") == "flag-wins");
    if (saved) {
      ::setenv("SOLVER", keep.c_str(), 1);
    } else {
      ::unsetenv("SOLVER");
    }
  }

  TEST_CASE("exit codes and models from fake solvers") {
    TempDir dir;
    auto cnf = cnf_file(dir, "p cnf 1 1\n1 0\n");
    auto sat = run_solver(cnf, script(dir, "sat.sh", "echo 's SATISFIABLE'\necho 'v 1 0'\nexit 10\n").string());
    CHECK(sat.status == SolveStatus::Sat);
    CHECK(sat.model == std::vector<int>{1});
    auto unsat = run_solver(cnf, script(dir, "unsat.sh", "exit 20\n").string());
    CHECK(unsat.status == SolveStatus::Unsat);
    auto garbled = run_solver(cnf, script(dir, "garbled.sh", "echo 'v 1 nope'\nexit 10\n").string());
    CHECK(garbled.status == SolveStatus::SolverError);
    CHECK(garbled.diagnostics.find("model") != std::string::npos);
    auto odd = run_solver(cnf, script(dir, "odd.sh", "exit 3\n").string());
    CHECK(odd.status == SolveStatus::SolverError);
    CHECK(odd.diagnostics.find("3") != std::string::npos);
    auto args = run_solver(cnf, script(dir, "args.sh", "test \"$1\" = '-q' && test -f \"$2\" && exit 20\nexit 1\n").string() + " -q");
    CHECK(args.status == SolveStatus::Unsat);
    // no solver output file is left behind
    CHECK_FALSE(fs::exists(dir.path / "in.cnf.solver-out"));
  }

  TEST_CASE("missing binary and empty command") {
    TempDir dir;
    auto cnf = cnf_file(dir, "p cnf 1 1\n1 0\n");
    auto missing = run_solver(cnf, (dir.path / "no-such-solver").string());
    CHECK(missing.status == SolveStatus::SolverError);
    CHECK_FALSE(missing.diagnostics.empty());
    auto empty = run_solver(cnf, "");
    CHECK(empty.status == SolveStatus::SolverError);
    CHECK(empty.diagnostics.find("no solver") != std::string::npos);
  }

  TEST_CASE("timeout is an error, never UNSAT") {
    TempDir dir;
    auto cnf = cnf_file(dir, "p cnf 1 1\n1 0\n");
    auto slow = script(dir, "slow.sh", "sleep 5\nexit 20\n");
    auto v = run_solver(cnf, slow.string(), std::chrono::milliseconds(200));
    CHECK(v.status == SolveStatus::SolverError);
    CHECK(v.diagnostics.find("timeout") != std::string::npos);
    CHECK(v.elapsed.count() < 3.0);
  }

  TEST_CASE("test solver on trivial files") {
    TempDir dir;
    auto sat = run_solver(cnf_file(dir, "p cnf 1 1\n1 0\n"), SORTNET_TEST_DPLL_SOLVER);
    CHECK(sat.status == SolveStatus::Sat);
    auto unsat = run_solver(cnf_file(dir, "p cnf 1 2\n1 0\n-1 0\n"), SORTNET_TEST_DPLL_SOLVER);
    CHECK(unsat.status == SolveStatus::Unsat);
  }
}

TEST_SUITE("driver.prove") {
  TEST_CASE("small verdicts") {
    TempDir dir;
    for (Tier tier : {Tier::Base, Tier::Necessary, Tier::Full}) {
      CAPTURE(to_string(tier));
      auto opts = dpll_options(tier, dir);
      auto two = prove_depth(2, 1, opts);
      REQUIRE(two.status == SolveStatus::Sat);
      REQUIRE(two.network.has_value());
      CHECK(is_sorting_network(*two.network));
      CHECK(prove_depth(3, 2, opts).status == SolveStatus::Unsat);
      auto three = prove_depth(3, 3, opts);
      REQUIRE(three.status == SolveStatus::Sat);
      CHECK(three.network->depth() == 3);
      CHECK(is_sorting_network(*three.network));
    }
    CHECK(dir.entries() == 0);
  }

  TEST_CASE("optimal depth search") {
    TempDir dir;
    auto opts = dpll_options(Tier::Full, dir);
    auto two = find_optimal_depth(2, 3, opts);
    CHECK(two.depth == 1);
    auto three = find_optimal_depth(3, 4, opts);
    CHECK(three.depth == 3);
    REQUIRE(three.verdicts.size() == 3);
    CHECK(three.verdicts[1].second.status == SolveStatus::Unsat);
    CHECK(three.summary().find("optimal depth: 3") != std::string::npos);
    auto bounded = find_optimal_depth(3, 2, opts);
    CHECK_FALSE(bounded.depth.has_value());
    CHECK_FALSE(bounded.inconclusive);
    CHECK(bounded.summary().find("greater than 2") != std::string::npos);
    CHECK_THROWS_AS(find_optimal_depth(3, 0, opts), RangeError);
  }

  TEST_CASE("a model that does not sort is rejected") {
    TempDir dir;
    auto opts = dpll_options(Tier::Base, dir);
    opts.solver = script(dir, "liar.sh", "echo 'v 0'\nexit 10\n").string();
    auto v = prove_depth(3, 3, opts);
    CHECK(v.status == SolveStatus::SolverError);
    CHECK(v.diagnostics.find("not a sorting network") != std::string::npos);
    auto search = find_optimal_depth(3, 4, opts);
    CHECK(search.inconclusive);
    CHECK_FALSE(search.depth.has_value());
  }

  TEST_CASE("instance files are byte-identical across runs") {
    TempDir dir;
    auto opts = dpll_options(Tier::Full, dir);
    opts.parberry = true;
    opts.solver = script(dir, "unsat.sh", "exit 20\n").string();
    opts.dimacs_out = dir.path / "a.cnf";
    prove_depth(5, 4, opts);
    opts.dimacs_out = dir.path / "b.cnf";
    prove_depth(5, 4, opts);
    CHECK(slurp(dir.path / "a.cnf") == slurp(dir.path / "b.cnf"));
    CHECK(slurp(dir.path / "a.cnf").rfind("p cnf ", 0) == 0);
  }

  TEST_CASE("prefix is honored") {
    TempDir dir;
    auto opts = dpll_options(Tier::Base, dir);
    opts.prefix = Network(4, {Layer{{1, 2}, {3, 4}}});
    auto v = prove_depth(4, 3, opts);
    REQUIRE(v.status == SolveStatus::Sat);
    CHECK(extends(*v.network, *opts.prefix));
  }
}

TEST_SUITE("driver.batch") {
  TEST_CASE("prefix set validation") {
    PrefixSet empty;
    CHECK_THROWS_AS(empty.validate(), DomainError);
    PrefixSet mixed{{"a", "b"}, {Network(4, {Layer{}}), Network(4, {Layer{}, Layer{}})}};
    CHECK_THROWS_AS(mixed.validate(), ShapeError);
    TempDir dir;
    auto opts = dpll_options(Tier::Base, dir);
    CHECK_THROWS_AS(batch_prove(empty, 4, 3, 2, opts), DomainError);
    PrefixSet one{{"p"}, {Network(4, {parberry_layer(4)})}};
    CHECK_THROWS_AS(batch_prove(one, 5, 3, 2, opts), ShapeError);
    CHECK_THROWS_AS(batch_prove(one, 4, 3, 0, opts), RangeError);
  }

  TEST_CASE("directory loading") {
    TempDir dir;
    write_network_file(dir.path / "b.net", Network(4, {Layer{{1, 2}, {3, 4}}}));
    write_network_file(dir.path / "a.net", Network(4, {Layer{{1, 3}, {2, 4}}}));
    std::ofstream(dir.path / "notes.md") << "ignored\n";
    auto set = PrefixSet::load_directory(dir.path);
    CHECK(set.names == std::vector<std::string>{"a", "b"});
    CHECK(set.prefixes[1] == Network(4, {Layer{{1, 2}, {3, 4}}}));
    CHECK_THROWS_AS(PrefixSet::load_directory(dir.path / "missing"), Error);
  }

  TEST_CASE("aggregation and submission order") {
    TempDir dir;
    auto opts = dpll_options(Tier::Base, dir);
    PrefixSet set;
    for (auto layer : all_layers(3)) {
      set.names.push_back(format_layer(layer));
      set.prefixes.push_back(Network(3, {layer}));
    }
    auto result = batch_prove(set, 3, 3, 3, opts);
    REQUIRE(result.rows.size() == set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
      CHECK(result.rows[i].name == set.names[i]);
      // depth 3 needs a nonempty first layer on 3 channels
      bool expect_sat = !set.prefixes[i].layer(1).empty();
      CHECK((result.rows[i].verdict.status == SolveStatus::Sat) == expect_sat);
    }
    CHECK(result.aggregate == Aggregate::Sat);
    CHECK(result.slowest < result.rows.size());
    CHECK(batch_prove(set, 3, 2, 8, opts).aggregate == Aggregate::Unsat);
    CHECK(result.to_text().find("aggregate: SAT") != std::string::npos);
    CHECK(result.to_csv().rfind("prefix,verdict,seconds,slowest\n", 0) == 0);
    CHECK(result.to_json().find("\"aggregate\": \"SAT\"") != std::string::npos);
    CHECK(dir.entries() == 0);
  }

  TEST_CASE("solver errors make the aggregate inconclusive") {
    TempDir dir;
    auto opts = dpll_options(Tier::Base, dir);
    opts.solver = (dir.path / "absent").string();
    PrefixSet set{{"p"}, {Network(4, {parberry_layer(4)})}};
    auto result = batch_prove(set, 4, 3, 1, opts);
    CHECK(result.aggregate == Aggregate::Inconclusive);
  }
}

TEST_SUITE("driver.external") {
  TEST_CASE("ground truth with an external solver") {
    if (external_solver().empty()) {
      MESSAGE("no external solver found; skipped");
      return;
    }
    TempDir dir;
    auto opts = real_options(Tier::Full, dir);
    auto four = prove_depth(4, 3, opts);
    REQUIRE(four.status == SolveStatus::Sat);
    CHECK(is_sorting_network(*four.network));
    CHECK(prove_depth(5, 4, opts).status == SolveStatus::Unsat);
    CHECK(find_optimal_depth(5, 6, opts).depth == 5);
    CHECK(find_optimal_depth(4, 6, opts).depth == 3);
    CHECK(find_optimal_depth(2, 6, opts).depth == 1);
  }

  TEST_CASE("tiers agree with exhaustive search for n <= 6") {
    if (external_solver().empty()) {
      MESSAGE("no external solver found; skipped");
      return;
    }
    TempDir dir;
    for (int n = 2; n <= 6; ++n) {
      int optimal = exhaustive_min_depth(n, 6);
      for (int d = 1; d <= 6; ++d) {
        for (Tier tier : {Tier::Base, Tier::Necessary, Tier::Full}) {
          CAPTURE(n);
          CAPTURE(d);
          CAPTURE(to_string(tier));
          auto v = prove_depth(n, d, real_options(tier, dir));
          REQUIRE(v.status != SolveStatus::SolverError);
          CHECK((v.status == SolveStatus::Sat) == (d >= optimal));
          if (v.network) CHECK(is_sorting_network(*v.network));
        }
      }
    }
  }

  TEST_CASE("parberry batches match direct proofs") {
    if (external_solver().empty()) {
      MESSAGE("no external solver found; skipped");
      return;
    }
    TempDir dir;
    auto opts = real_options(Tier::Full, dir);
    for (int n = 3; n <= 6; ++n) {
      PrefixSet set{{"parberry"}, {Network(n, {parberry_layer(n)})}};
      for (int d = 3; d <= 5; ++d) {
        CAPTURE(n);
        CAPTURE(d);
        auto batch = batch_prove(set, n, d, 2, opts);
        auto direct = prove_depth(n, d, opts);
        CHECK(to_string(batch.aggregate) == to_string(direct.status));
        if (batch.rows[0].verdict.network) {
          CHECK(extends(*batch.rows[0].verdict.network, set.prefixes[0]));
        }
      }
    }
  }
}
