#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace sortnet {

// DIMACS literal: +v or -v for variable v >= 1.
using Literal = int;
using Clause = std::vector<Literal>;

struct ClauseGroup {
  // Empty names are written without a manifest comment.
  std::string name;
  std::vector<Clause> clauses;

  std::size_t size() const noexcept { return clauses.size(); }
};

class CnfInstance {
 public:
  CnfInstance() = default;
  explicit CnfInstance(int variables) : variables_(variables) {}

  int variable_count() const noexcept { return variables_; }
  std::size_t clause_count() const noexcept;
  const std::vector<ClauseGroup>& groups() const noexcept { return groups_; }

  // Throws IntegrityError on a literal that references an unallocated variable.
  void add_group(ClauseGroup group);
  void add_clause(Clause clause);

  // Nullptr if absent.
  const ClauseGroup* find_group(const std::string& name) const;

 private:
  void check(const Clause& clause) const;

  int variables_ = 0;
  std::vector<ClauseGroup> groups_;
};

// "p cnf <vars> <clauses>", then each group's clauses, one per line and
// 0-terminated, each named group preceded by "c <name>: <count>".
std::string write_dimacs(const CnfInstance& instance);
void write_dimacs(std::ostream& out, const CnfInstance& instance);

}  // namespace sortnet
