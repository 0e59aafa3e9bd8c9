#pragma once

#include <string>
#include <vector>

#include "sortnet/evaluate.hpp"
#include "sortnet/network.hpp"

namespace sortnet {

// A comparator at `layer_index` (1-based) is redundant when no input ever
// presents it with 1 on lo and 0 on hi. Throws DomainError if the comparator
// does not occur at that layer.
bool is_redundant(const Network& net, int layer_index, const Comparator& comp,
                  int capacity = kDefaultCapacity);

// Removes redundant comparators front to back until none is left. The
// result computes the same function and keeps the depth (layers may become
// empty).
Network remove_redundant(const Network& net, int capacity = kDefaultCapacity);

// Connected components of the channel graph formed by the comparators in
// layers k+1..d, ordered by smallest channel.
struct BlockPartition {
  int k = 0;
  std::vector<std::vector<Channel>> blocks;

  // Index into `blocks` of the block holding channel c.
  std::size_t block_of(Channel c) const;
  bool operator==(const BlockPartition&) const = default;
};

// Throws RangeError unless 0 <= k <= depth.
BlockPartition k_blocks(const Network& net, int k);

struct Violation {
  int layer = 0;  // 0 when the violation is not tied to a layer
  Comparator comparator;
  std::string message;
};

struct CheckResult {
  std::string name;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

struct StructureReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  std::size_t violation_count() const noexcept;
  const CheckResult& check(const std::string& name) const;

  std::string to_text() const;
  std::string to_json() const;
};

// Check names used in StructureReport.
inline constexpr const char* kCheckLastLayer = "last-layer-adjacent";
inline constexpr const char* kCheckPenultimate = "penultimate-span";
inline constexpr const char* kCheckBlockAdjacency = "k-block-adjacency";
inline constexpr const char* kCheckBlockSize = "k-block-size";

// Audits the structure that every non-redundant sorting network must have
// at its end:
//   - last layer: only comparators (i,i+1);
//   - layer d-1: span <= 3; span 2 needs (i,i+1) or (i+1,i+2) in layer d,
//     span 3 needs both (i,i+1) and (i+2,i+3) in layer d;
//   - a layer-k comparator whose endpoints lie in different k-blocks joins
//     two adjacent ones (contiguous blocks with max(upper)+1 == min(lower));
//   - a k-block holding m comparators spans at most m+1 channels.
StructureReport audit_endgame(const Network& net);

}  // namespace sortnet
