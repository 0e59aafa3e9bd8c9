#include "sortnet/analysis.hpp"
#include "sortnet/errors.hpp"

namespace sortnet {

bool is_redundant(const Network& net, int layer_index, const Comparator& comp, int capacity) {
  if (!net.layer(layer_index).contains(comp)) {
    throw DomainError("comparator " + to_string(comp) + " does not occur at layer " +
                      std::to_string(layer_index));
  }
  auto state = BitState::all_inputs(net.channels(), capacity);
  for (int l = 1; l < layer_index; ++l) state.apply(net.layer(l));
  return !state.can_be_inverted(comp.lo, comp.hi);
}

Network remove_redundant(const Network& net, int capacity) {
  Network current = net;
  for (bool changed = true; changed;) {
    changed = false;
    auto state = BitState::all_inputs(net.channels(), capacity);
    std::vector<Layer> kept;
    kept.reserve(current.layers().size());
    for (const auto& layer : current.layers()) {
      // Comparators of one layer touch disjoint channels, so all of them can
      // be judged against the state before the layer.
      std::vector<Comparator> survivors;
      for (const auto& c : layer) {
        if (state.can_be_inverted(c.lo, c.hi)) {
          survivors.push_back(c);
        } else {
          changed = true;
        }
      }
      Layer filtered(std::move(survivors));
      state.apply(filtered);
      kept.push_back(std::move(filtered));
    }
    current = Network(net.channels(), std::move(kept));
  }
  return current;
}

}  // namespace sortnet
