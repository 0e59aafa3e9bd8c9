#include "sortnet/evaluate.hpp"

#include <algorithm>

#include "sortnet/errors.hpp"

namespace sortnet {

BinaryWord evaluate(const Network& net, const BinaryWord& input) {
  if (input.length != net.channels()) {
    throw ShapeError("input has " + std::to_string(input.length) + " bits, network has " +
                     std::to_string(net.channels()) + " channels");
  }
  BinaryWord w = input;
  for (const auto& layer : net.layers()) {
    for (const auto& c : layer) {
      int a = w.at(c.lo);
      int b = w.at(c.hi);
      if (a > b) w.bits ^= (1u << (c.lo - 1)) | (1u << (c.hi - 1));
    }
  }
  return w;
}

namespace {

// Bit t set iff bit `k` of t is set, for k < 6.
constexpr std::uint64_t kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

BitState::BitState(int channels, std::size_t words, std::uint64_t tail_mask)
    : channels_(channels),
      words_(words),
      tail_mask_(tail_mask),
      lanes_(static_cast<std::size_t>(channels), std::vector<std::uint64_t>(words)) {}

BitState BitState::all_inputs(int channels, int capacity) {
  if (channels < 1) throw ShapeError("need at least one channel");
  if (channels > capacity) {
    throw CapacityError("exhaustive evaluation limited to " + std::to_string(capacity) +
                        " channels, got " + std::to_string(channels));
  }
  std::size_t inputs = std::size_t{1} << channels;
  std::size_t words = (inputs + 63) / 64;
  std::uint64_t tail = inputs >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << inputs) - 1;
  BitState s(channels, words, tail);
  for (int k = 0; k < channels; ++k) {
    auto& lane = s.lanes_[static_cast<std::size_t>(k)];
    for (std::size_t w = 0; w < words; ++w) {
      if (k < 6) {
        lane[w] = kLowPatterns[k];
      } else {
        lane[w] = ((w >> (k - 6)) & 1u) ? ~std::uint64_t{0} : 0;
      }
    }
    lane.back() &= tail;
  }
  return s;
}

void BitState::apply(const Comparator& c) {
  if (c.hi > channels_) throw ShapeError("comparator " + to_string(c) + " out of range");
  auto& lo = lane(c.lo);
  auto& hi = lane(c.hi);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t a = lo[w];
    std::uint64_t b = hi[w];
    lo[w] = a & b;
    hi[w] = a | b;
  }
}

void BitState::apply(const Layer& layer) {
  for (const auto& c : layer) apply(c);
}

void BitState::apply(const Network& net) {
  if (net.channels() != channels_) throw ShapeError("network/state channel mismatch");
  for (const auto& layer : net.layers()) apply(layer);
}

bool BitState::can_be_inverted(Channel lo, Channel hi) const {
  const auto& a = lane(lo);
  const auto& b = lane(hi);
  for (std::size_t w = 0; w < words_; ++w) {
    if (a[w] & ~b[w]) return true;
  }
  return false;
}

bool BitState::all_sorted() const {
  for (Channel k = 1; k < channels_; ++k) {
    if (can_be_inverted(k, k + 1)) return false;
  }
  return true;
}

BinaryWord BitState::word(std::size_t input) const {
  std::size_t w = input / 64;
  unsigned t = static_cast<unsigned>(input % 64);
  BinaryWord out{channels_, 0};
  for (int k = 0; k < channels_; ++k) {
    out.bits |= static_cast<std::uint32_t>((lanes_[static_cast<std::size_t>(k)][w] >> t) & 1u) << k;
  }
  return out;
}

std::vector<BinaryWord> BitState::distinct_words() const {
  std::vector<char> seen(input_count(), 0);
  for (std::size_t x = 0; x < input_count(); ++x) seen[word(x).bits] = 1;
  std::vector<BinaryWord> result;
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (seen[v]) result.push_back({channels_, static_cast<std::uint32_t>(v)});
  }
  return result;
}

std::vector<BinaryWord> outputs(const Network& net, int capacity) {
  auto state = BitState::all_inputs(net.channels(), capacity);
  state.apply(net);
  return state.distinct_words();
}

bool is_sorting_network(const Network& net, int capacity) {
  auto state = BitState::all_inputs(net.channels(), capacity);
  state.apply(net);
  return state.all_sorted();
}

}  // namespace sortnet
