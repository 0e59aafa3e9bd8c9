#include "sortnet/solver.hpp"

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

extern char** environ;

namespace sortnet {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Sat:
      return "SAT";
    case SolveStatus::Unsat:
      return "UNSAT";
    case SolveStatus::SolverError:
      return "SOLVER-ERROR";
  }
  return "?";
}

namespace {

std::vector<std::string> split_command(const std::string& cmd) {
  std::istringstream in(cmd);
  std::vector<std::string> parts;
  for (std::string tok; in >> tok;) parts.push_back(tok);
  return parts;
}

bool on_path(const std::string& name) {
  const char* path = std::getenv("PATH");
  if (!path) return false;
  std::istringstream dirs(path);
  for (std::string dir; std::getline(dirs, dir, ':');) {
    if (dir.empty()) continue;
    auto candidate = std::filesystem::path(dir) / name;
    if (::access(candidate.c_str(), X_OK) == 0) return true;
  }
  return false;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string resolve_solver_command(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SOLVER"); env && *env) return env;
  for (const char* name : {"kissat", "cadical", "minisat", "glucose", "cryptominisat5", "varisat"}) {
    if (on_path(name)) return name;
  }
  return {};
}

std::optional<std::vector<int>> parse_model_lines(const std::string& output) {
  std::vector<int> lits;
  bool terminated = false;
  std::istringstream in(output);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("v ", 0) != 0 && line != "v") continue;
    std::istringstream tokens(line.substr(1));
    for (std::string tok; tokens >> tok;) {
      int lit = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
      if (lit == 0) {
        terminated = true;
        break;
      }
      lits.push_back(lit);
    }
    if (terminated) break;
  }
  if (!terminated) return std::nullopt;
  return lits;
}

SolveVerdict run_solver(const std::filesystem::path& cnf_path, const std::string& solver_cmd,
                        std::chrono::duration<double> timeout) {
  using clock = std::chrono::steady_clock;
  SolveVerdict verdict;
  auto start = clock::now();
  auto finish = [&](SolveVerdict v) {
    v.elapsed = clock::now() - start;
    return v;
  };

  auto argv_parts = split_command(solver_cmd);
  if (argv_parts.empty()) {
    verdict.diagnostics = "no solver command given (use --solver or SOLVER)";
    return finish(std::move(verdict));
  }
  argv_parts.push_back(cnf_path.string());
  std::vector<char*> argv;
  for (auto& s : argv_parts) argv.push_back(s.data());
  argv.push_back(nullptr);

  auto out_path = cnf_path;
  out_path += ".solver-out";
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, STDOUT_FILENO, out_path.c_str(),
                                   O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawn_file_actions_addopen(&actions, STDERR_FILENO, "/dev/null", O_WRONLY, 0);

  pid_t pid = 0;
  int rc = posix_spawnp(&pid, argv[0], &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) {
    verdict.diagnostics = "cannot launch \"" + argv_parts[0] + "\": " + std::strerror(rc);
    std::filesystem::remove(out_path);
    return finish(std::move(verdict));
  }

  int status = 0;
  bool timed_out = false;
  auto poll = std::chrono::milliseconds(1);
  for (;;) {
    pid_t done = ::waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0 && errno != EINTR) {
      verdict.diagnostics = std::string("waitpid failed: ") + std::strerror(errno);
      return finish(std::move(verdict));
    }
    if (clock::now() - start > timeout) {
      ::kill(pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      timed_out = true;
      break;
    }
    std::this_thread::sleep_for(poll);
    poll = std::min(poll * 2, std::chrono::milliseconds(50));
  }

  std::string output = read_file(out_path);
  std::filesystem::remove(out_path);

  if (timed_out) {
    verdict.diagnostics = "timeout after " + std::to_string(timeout.count()) + " s";
    return finish(std::move(verdict));
  }
  if (!WIFEXITED(status)) {
    verdict.diagnostics = "solver terminated by signal " + std::to_string(WTERMSIG(status));
    return finish(std::move(verdict));
  }
  int code = WEXITSTATUS(status);
  if (code == 20) {
    verdict.status = SolveStatus::Unsat;
  } else if (code == 10) {
    auto model = parse_model_lines(output);
    if (!model) {
      verdict.diagnostics = "solver reported SAT but the model could not be parsed";
    } else {
      verdict.status = SolveStatus::Sat;
      verdict.model = std::move(*model);
    }
  } else {
    // posix_spawnp reports a missing binary through the child's exit code 127.
    verdict.diagnostics = "unexpected solver exit status " + std::to_string(code);
    if (code == 127) verdict.diagnostics += " (command not found: \"" + argv_parts[0] + "\")";
  }
  return finish(std::move(verdict));
}

}  // namespace sortnet
