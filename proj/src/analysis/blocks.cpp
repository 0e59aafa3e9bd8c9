#include <algorithm>
#include <numeric>

#include "sortnet/analysis.hpp"
#include "sortnet/errors.hpp"

namespace sortnet {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::size_t> parent;
};

}  // namespace

std::size_t BlockPartition::block_of(Channel c) const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), c)) return b;
  }
  throw RangeError("channel " + std::to_string(c) + " not in partition");
}

BlockPartition k_blocks(const Network& net, int k) {
  if (k < 0 || k > net.depth()) {
    throw RangeError("k=" + std::to_string(k) + " outside 0.." + std::to_string(net.depth()));
  }
  auto n = static_cast<std::size_t>(net.channels());
  DisjointSets sets(n + 1);
  for (int l = k + 1; l <= net.depth(); ++l) {
    for (const auto& c : net.layer(l)) {
      sets.unite(static_cast<std::size_t>(c.lo), static_cast<std::size_t>(c.hi));
    }
  }
  // Roots are the smallest member, so iterating channels in order yields
  // blocks ordered by their minimum.
  BlockPartition partition{k, {}};
  std::vector<std::size_t> index_of_root(n + 1, n + 1);
  for (std::size_t ch = 1; ch <= n; ++ch) {
    auto root = sets.find(ch);
    if (index_of_root[root] > n) {
      index_of_root[root] = partition.blocks.size();
      partition.blocks.emplace_back();
    }
    partition.blocks[index_of_root[root]].push_back(static_cast<Channel>(ch));
  }
  return partition;
}

}  // namespace sortnet
