#include <algorithm>

#include "sortnet/enumerate.hpp"
#include "sortnet/errors.hpp"

namespace sortnet {

namespace {

// Walks channels top to bottom; channel c is either left free or paired
// with c+1. With `forbid_adjacent_free`, two consecutive free channels are
// rejected.
void walk_adjacent_layers(int n, bool forbid_adjacent_free, Channel c, bool prev_free,
                          std::vector<Comparator>& current,
                          const std::function<void(const Layer&)>& visit) {
  if (c > n) {
    visit(Layer(current));
    return;
  }
  if (!(forbid_adjacent_free && prev_free)) {
    walk_adjacent_layers(n, forbid_adjacent_free, c + 1, true, current, visit);
  }
  if (c + 1 <= n) {
    current.push_back({c, c + 1});
    walk_adjacent_layers(n, forbid_adjacent_free, c + 2, false, current, visit);
    current.pop_back();
  }
}

}  // namespace

void for_each_nonredundant_last_layer(int n, const std::function<void(const Layer&)>& visit) {
  if (n < 1 || n > 30) throw RangeError("last-layer enumeration needs 1 <= n <= 30");
  std::vector<Comparator> current;
  walk_adjacent_layers(n, false, 1, false, current, [&](const Layer& layer) {
    if (!layer.empty()) visit(layer);
  });
}

std::vector<Layer> enumerate_nonredundant_last_layers(int n) {
  std::vector<Layer> layers;
  for_each_nonredundant_last_layer(n, [&](const Layer& l) { layers.push_back(l); });
  std::sort(layers.begin(), layers.end());
  return layers;
}

std::vector<Layer> enumerate_llnf_last_layers(int n) {
  if (n < 1 || n > 40) throw RangeError("llnf enumeration needs 1 <= n <= 40");
  std::vector<Layer> layers;
  std::vector<Comparator> current;
  walk_adjacent_layers(n, true, 1, false, current,
                       [&](const Layer& l) { layers.push_back(l); });
  std::sort(layers.begin(), layers.end());
  return layers;
}

}  // namespace sortnet
