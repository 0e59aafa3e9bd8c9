#include "sortnet/network.hpp"

#include <algorithm>
#include <bit>

#include "sortnet/errors.hpp"

namespace sortnet {

std::string to_string(const Comparator& c) {
  return "(" + std::to_string(c.lo) + "," + std::to_string(c.hi) + ")";
}

Layer::Layer(std::vector<Comparator> comparators) : comparators_(std::move(comparators)) {
  std::sort(comparators_.begin(), comparators_.end());
  std::vector<Channel> seen;
  seen.reserve(2 * comparators_.size());
  for (const auto& c : comparators_) {
    if (c.lo < 1 || c.lo >= c.hi) {
      throw ShapeError("invalid comparator " + to_string(c));
    }
    seen.push_back(c.lo);
    seen.push_back(c.hi);
  }
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end()) {
    throw ShapeError("duplicate channel " + std::to_string(*dup) + " in a layer");
  }
}

bool Layer::contains(const Comparator& c) const noexcept {
  return std::binary_search(comparators_.begin(), comparators_.end(), c);
}

bool Layer::uses(Channel c) const noexcept { return comparator_on(c).has_value(); }

std::optional<Comparator> Layer::comparator_on(Channel c) const noexcept {
  for (const auto& comp : comparators_) {
    if (comp.touches(c)) return comp;
  }
  return std::nullopt;
}

Channel Layer::max_channel() const noexcept {
  Channel m = 0;
  for (const auto& c : comparators_) m = std::max(m, c.hi);
  return m;
}

Layer Layer::with(const Comparator& c) const {
  auto comps = comparators_;
  comps.push_back(c);
  return Layer(std::move(comps));
}

Layer Layer::without(const Comparator& c) const {
  Layer out = *this;
  auto it = std::find(out.comparators_.begin(), out.comparators_.end(), c);
  if (it != out.comparators_.end()) out.comparators_.erase(it);
  return out;
}

std::string to_string(const Layer& layer) {
  if (layer.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < layer.size(); ++i) {
    if (i) s += ",";
    s += to_string(layer.comparators()[i]);
  }
  return s + "}";
}

Network::Network(int channels, std::vector<Layer> layers)
    : channels_(channels), layers_(std::move(layers)) {
  if (channels_ < 1) throw ShapeError("network needs at least one channel");
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    if (layers_[l].max_channel() > channels_) {
      throw ShapeError("layer " + std::to_string(l + 1) + " references channel " +
                       std::to_string(layers_[l].max_channel()) + " > n=" +
                       std::to_string(channels_));
    }
  }
}

std::size_t Network::size() const noexcept {
  std::size_t s = 0;
  for (const auto& l : layers_) s += l.size();
  return s;
}

const Layer& Network::layer(int index) const {
  if (index < 1 || index > depth()) {
    throw RangeError("layer index " + std::to_string(index) + " outside 1.." +
                     std::to_string(depth()));
  }
  return layers_[static_cast<std::size_t>(index - 1)];
}

Network Network::with_layer(int index, Layer layer) const {
  (void)this->layer(index);
  auto layers = layers_;
  layers[static_cast<std::size_t>(index - 1)] = std::move(layer);
  return Network(channels_, std::move(layers));
}

Network Network::with_appended(Layer layer) const {
  auto layers = layers_;
  layers.push_back(std::move(layer));
  return Network(channels_, std::move(layers));
}

Network Network::prefix(int d) const {
  if (d < 0 || d > depth()) throw RangeError("prefix depth out of range");
  return Network(channels_, std::vector<Layer>(layers_.begin(), layers_.begin() + d));
}

Network concatenate(const Network& prefix, const Network& suffix) {
  if (prefix.channels() != suffix.channels()) {
    throw ShapeError("cannot concatenate networks on " + std::to_string(prefix.channels()) +
                     " and " + std::to_string(suffix.channels()) + " channels");
  }
  auto layers = prefix.layers();
  layers.insert(layers.end(), suffix.layers().begin(), suffix.layers().end());
  return Network(prefix.channels(), std::move(layers));
}

bool extends(const Network& net, const Network& prefix) {
  if (net.channels() != prefix.channels() || net.depth() < prefix.depth()) return false;
  return std::equal(prefix.layers().begin(), prefix.layers().end(), net.layers().begin());
}

Layer parberry_layer(int channels) {
  std::vector<Comparator> comps;
  for (int k = 1; 2 * k <= channels; ++k) comps.push_back({2 * k - 1, 2 * k});
  return Layer(std::move(comps));
}

BinaryWord BinaryWord::from_string(const std::string& text) {
  if (text.empty() || text.size() > 32) throw ShapeError("binary word must have 1..32 bits");
  BinaryWord w{static_cast<int>(text.size()), 0};
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      w.bits |= 1u << i;
    } else if (text[i] != '0') {
      throw ShapeError("binary word contains '" + std::string(1, text[i]) + "'");
    }
  }
  return w;
}

BinaryWord BinaryWord::sorted(int length, int zeros) {
  if (length < 1 || length > 32 || zeros < 0 || zeros > length) {
    throw RangeError("sorted word shape out of range");
  }
  std::uint64_t full = (std::uint64_t{1} << length) - 1;
  std::uint64_t low = (std::uint64_t{1} << zeros) - 1;
  return {length, static_cast<std::uint32_t>(full & ~low)};
}

int BinaryWord::popcount() const noexcept { return std::popcount(bits); }

bool BinaryWord::is_sorted() const noexcept {
  // Ascending: the ones occupy a suffix of channels, i.e. the high bits.
  return *this == sorted(length, length - popcount());
}

std::string BinaryWord::to_string() const {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int c = 1; c <= length; ++c) {
    if (at(c)) s[static_cast<std::size_t>(c - 1)] = '1';
  }
  return s;
}

bool bitwise_leq(const BinaryWord& x, const BinaryWord& y) {
  if (x.length != y.length) throw ShapeError("word length mismatch");
  return (x.bits & ~y.bits) == 0;
}

}  // namespace sortnet
