#pragma once

#include <cstdint>
#include <vector>

#include "sortnet/network.hpp"

namespace sortnet {

// Exhaustive operations enumerate all 2^n inputs and refuse larger n.
inline constexpr int kDefaultCapacity = 20;

// Propagates one input through every layer.
BinaryWord evaluate(const Network& net, const BinaryWord& input);

// Values on every channel for all 2^n binary inputs at once, one bit per
// input: bit t of word w on channel k is the value at k for input 64*w + t,
// where input x carries bit k-1 of x on channel k.
class BitState {
 public:
  // State before the first layer. Throws CapacityError if n > capacity.
  static BitState all_inputs(int channels, int capacity = kDefaultCapacity);

  int channels() const noexcept { return channels_; }
  std::size_t input_count() const noexcept { return std::size_t{1} << channels_; }

  void apply(const Comparator& c);
  void apply(const Layer& layer);
  void apply(const Network& net);

  // True iff some input carries 1 on `lo` and 0 on `hi`.
  bool can_be_inverted(Channel lo, Channel hi) const;
  // True iff every input is in ascending order.
  bool all_sorted() const;
  BinaryWord word(std::size_t input) const;
  // The distinct words currently present, in increasing numeric order.
  std::vector<BinaryWord> distinct_words() const;

 private:
  BitState(int channels, std::size_t words, std::uint64_t tail_mask);

  std::vector<std::uint64_t>& lane(Channel c) { return lanes_[static_cast<std::size_t>(c - 1)]; }
  const std::vector<std::uint64_t>& lane(Channel c) const {
    return lanes_[static_cast<std::size_t>(c - 1)];
  }

  int channels_;
  std::size_t words_;
  std::uint64_t tail_mask_;  // valid bits of the last word
  std::vector<std::vector<std::uint64_t>> lanes_;
};

// outputs(C): the image of {0,1}^n, sorted by numeric value.
std::vector<BinaryWord> outputs(const Network& net, int capacity = kDefaultCapacity);

bool is_sorting_network(const Network& net, int capacity = kDefaultCapacity);

}  // namespace sortnet
