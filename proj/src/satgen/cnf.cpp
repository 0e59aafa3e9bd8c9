#include "sortnet/cnf.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "sortnet/errors.hpp"

namespace sortnet {

std::size_t CnfInstance::clause_count() const noexcept {
  std::size_t n = 0;
  for (const auto& g : groups_) n += g.size();
  return n;
}

void CnfInstance::check(const Clause& clause) const {
  for (Literal lit : clause) {
    if (lit == 0 || std::abs(lit) > variables_) {
      throw IntegrityError("literal " + std::to_string(lit) + " outside 1.." +
                           std::to_string(variables_));
    }
  }
}

void CnfInstance::add_group(ClauseGroup group) {
  for (const auto& c : group.clauses) check(c);
  groups_.push_back(std::move(group));
}

void CnfInstance::add_clause(Clause clause) {
  check(clause);
  if (groups_.empty() || !groups_.back().name.empty()) groups_.push_back({});
  groups_.back().clauses.push_back(std::move(clause));
}

const ClauseGroup* CnfInstance::find_group(const std::string& name) const {
  for (const auto& g : groups_) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

void write_dimacs(std::ostream& out, const CnfInstance& instance) {
  out << "p cnf " << instance.variable_count() << ' ' << instance.clause_count() << '\n';
  for (const auto& g : instance.groups()) {
    if (!g.name.empty()) out << "c " << g.name << ": " << g.size() << '\n';
    for (const auto& clause : g.clauses) {
      for (Literal lit : clause) out << lit << ' ';
      out << "0\n";
    }
  }
}

std::string write_dimacs(const CnfInstance& instance) {
  std::ostringstream out;
  write_dimacs(out, instance);
  return out.str();
}

}  // namespace sortnet
