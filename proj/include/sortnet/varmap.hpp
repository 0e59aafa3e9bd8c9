#pragma once

#include <string>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet {

// Variable numbering for the depth-d, n-channel encoding:
//   comparator variables c(l,i,j), 1 <= l <= d, 1 <= i < j <= n;
//   used-channel variables u(l,k), 1 <= l <= d, 1 <= k <= n;
//   value variables v(x,l,k) for every unsorted input x, 0 <= l <= d.
// Blocks are numbered in that order, each lexicographically, from 1.
class VarMap {
 public:
  enum class Kind { Comparator, Used, Value };

  struct Role {
    Kind kind;
    int layer;        // level for value variables
    Channel i;        // channel k for used/value variables
    Channel j;        // 0 unless comparator
    int input = -1;   // index into inputs(), value variables only
  };

  // Throws RangeError unless 2 <= n <= 20 and d >= 1.
  VarMap(int channels, int depth);

  int channels() const noexcept { return n_; }
  int depth() const noexcept { return d_; }
  int variable_count() const noexcept;

  int comparator_var(int layer, Channel i, Channel j) const;
  int used_var(int layer, Channel k) const;
  int value_var(int input, int level, Channel k) const;

  // The unsorted words, in increasing numeric order.
  const std::vector<BinaryWord>& inputs() const noexcept { return inputs_; }

  Role role(int var) const;

  // {"n":..,"depth":..,"variables":[{"var":1,"kind":"c","layer":1,"i":1,"j":2},...]}
  std::string to_json() const;

 private:
  int pairs() const noexcept { return n_ * (n_ - 1) / 2; }
  int used_base() const noexcept { return d_ * pairs(); }
  int value_base() const noexcept { return used_base() + d_ * n_; }

  int n_;
  int d_;
  std::vector<BinaryWord> inputs_;
};

}  // namespace sortnet
