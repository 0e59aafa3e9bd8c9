#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sortnet {

// Channels are 1-based throughout: a network on n channels uses 1..n.
using Channel = int;

// Comparator (lo, hi) with lo < hi; after it fires, the smaller value sits on lo.
struct Comparator {
  Channel lo = 0;
  Channel hi = 0;

  int span() const noexcept { return hi - lo; }
  bool touches(Channel c) const noexcept { return c == lo || c == hi; }

  auto operator<=>(const Comparator&) const = default;
};

std::string to_string(const Comparator& c);

// A set of comparators on pairwise-disjoint channels, kept sorted by lo.
class Layer {
 public:
  Layer() = default;
  // Throws ShapeError if a comparator has lo >= hi, lo < 1, or if two
  // comparators share a channel.
  explicit Layer(std::vector<Comparator> comparators);
  Layer(std::initializer_list<Comparator> comparators)
      : Layer(std::vector<Comparator>(comparators)) {}

  const std::vector<Comparator>& comparators() const noexcept { return comparators_; }
  auto begin() const noexcept { return comparators_.begin(); }
  auto end() const noexcept { return comparators_.end(); }
  std::size_t size() const noexcept { return comparators_.size(); }
  bool empty() const noexcept { return comparators_.empty(); }

  bool contains(const Comparator& c) const noexcept;
  bool uses(Channel c) const noexcept;
  std::optional<Comparator> comparator_on(Channel c) const noexcept;
  // Largest channel referenced, 0 for the empty layer.
  Channel max_channel() const noexcept;

  Layer with(const Comparator& c) const;
  Layer without(const Comparator& c) const;

  auto operator<=>(const Layer&) const = default;

 private:
  std::vector<Comparator> comparators_;
};

std::string to_string(const Layer& layer);

class Network {
 public:
  Network() = default;
  explicit Network(int channels, std::vector<Layer> layers = {});

  int channels() const noexcept { return channels_; }
  int depth() const noexcept { return static_cast<int>(layers_.size()); }
  std::size_t size() const noexcept;

  const std::vector<Layer>& layers() const noexcept { return layers_; }
  // 1-based layer access.
  const Layer& layer(int index) const;
  const Layer& last_layer() const { return layer(depth()); }

  Network with_layer(int index, Layer layer) const;
  Network with_appended(Layer layer) const;
  // First `depth` layers.
  Network prefix(int depth) const;

  bool operator==(const Network&) const = default;

 private:
  int channels_ = 0;
  std::vector<Layer> layers_;
};

// Layers of `prefix` followed by the layers of `suffix`.
Network concatenate(const Network& prefix, const Network& suffix);

// True iff the first prefix.depth() layers of `net` equal those of `prefix`.
bool extends(const Network& net, const Network& prefix);

// The first layer {(2k-1, 2k) | 1 <= k <= n/2}.
Layer parberry_layer(int channels);

// An n-bit input or output. Bit k-1 of `bits` holds the value on channel k.
struct BinaryWord {
  int length = 0;
  std::uint32_t bits = 0;

  static BinaryWord from_string(const std::string& text);
  static BinaryWord sorted(int length, int zeros);

  int at(Channel c) const noexcept { return static_cast<int>((bits >> (c - 1)) & 1u); }
  int popcount() const noexcept;
  bool is_sorted() const noexcept;
  // Channel 1 first.
  std::string to_string() const;

  auto operator<=>(const BinaryWord&) const = default;
};

// Bitwise x <= y.
bool bitwise_leq(const BinaryWord& x, const BinaryWord& y);

}  // namespace sortnet
