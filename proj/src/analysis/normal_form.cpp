#include "sortnet/normal_form.hpp"

#include <vector>

#include "sortnet/analysis.hpp"
#include "sortnet/errors.hpp"
#include "sortnet/evaluate.hpp"

namespace sortnet {

namespace {

// Components of an llnf last layer: its comparators and its unused channels.
std::vector<std::vector<Channel>> last_layer_blocks(const Layer& last, int channels) {
  std::vector<std::vector<Channel>> blocks;
  for (Channel c = 1; c <= channels;) {
    auto comp = last.comparator_on(c);
    if (comp && comp->lo == c && comp->hi == c + 1) {
      blocks.push_back({c, c + 1});
      c += 2;
    } else {
      blocks.push_back({c});
      c += 1;
    }
  }
  return blocks;
}

std::vector<Channel> free_channels(const std::vector<Channel>& block, const Layer& layer) {
  std::vector<Channel> free;
  for (Channel c : block) {
    if (!layer.uses(c)) free.push_back(c);
  }
  return free;
}

Layer fill_adjacent_unused(Layer last, int channels) {
  for (Channel j = 1; j < channels; ++j) {
    if (!last.uses(j) && !last.uses(j + 1)) last = last.with({j, j + 1});
  }
  return last;
}

// Adds comparators between free channels of consecutive last-layer blocks
// in the penultimate layer, establishing condition (ii).
Network saturate_penultimate(const Network& net) {
  int d = net.depth();
  const Layer& last = net.layer(d);
  Layer pen = net.layer(d - 1);
  auto blocks = last_layer_blocks(last, net.channels());
  for (std::size_t t = 0; t + 1 < blocks.size(); ++t) {
    const auto& upper = blocks[t];
    const auto& lower = blocks[t + 1];
    auto free_upper = free_channels(upper, pen);
    auto free_lower = free_channels(lower, pen);
    if (free_upper.empty() || free_lower.empty()) continue;
    if (free_upper.size() == 2 && free_lower.size() == 2) {
      pen = pen.with({upper[0], lower[0]}).with({upper[1], lower[1]});
    } else {
      pen = pen.with({free_upper.front(), free_lower.front()});
    }
  }
  return net.with_layer(d - 1, std::move(pen));
}

struct PendingMove {
  Channel i;
  MoveDirection direction;
};

// First last-layer comparator violating condition (iii), left to right.
std::optional<PendingMove> find_condition_iii_violation(const Network& net) {
  int d = net.depth();
  int n = net.channels();
  const Layer& last = net.layer(d);
  const Layer& pen = net.layer(d - 1);
  for (const auto& c : last) {
    if (pen.uses(c.lo) || pen.uses(c.hi)) continue;
    if (c.hi + 1 <= n && !last.uses(c.hi + 1)) return PendingMove{c.lo, MoveDirection::Down};
    if (c.lo - 1 >= 1 && !last.uses(c.lo - 1)) return PendingMove{c.lo, MoveDirection::Up};
  }
  return std::nullopt;
}

}  // namespace

bool is_llnf_layer(const Layer& last, int channels) {
  for (const auto& c : last) {
    if (c.span() != 1) return false;
  }
  for (Channel j = 1; j < channels; ++j) {
    if (!last.uses(j) && !last.uses(j + 1)) return false;
  }
  return true;
}

bool is_llnf(const Network& net) {
  return net.depth() >= 1 && is_llnf_layer(net.last_layer(), net.channels());
}

bool is_co_saturated_suffix(const Layer& penultimate, const Layer& last, int channels) {
  if (!is_llnf_layer(last, channels)) return false;
  auto blocks = last_layer_blocks(last, channels);
  for (std::size_t t = 0; t + 1 < blocks.size(); ++t) {
    if (!free_channels(blocks[t], penultimate).empty() &&
        !free_channels(blocks[t + 1], penultimate).empty()) {
      return false;
    }
  }
  for (const auto& c : last) {
    if (penultimate.uses(c.lo) || penultimate.uses(c.hi)) continue;
    if (c.lo > 1 && !last.uses(c.lo - 1)) return false;
    if (c.hi < channels && !last.uses(c.hi + 1)) return false;
  }
  return true;
}

bool is_co_saturated(const Network& net) {
  if (net.depth() < 2) return false;
  return is_co_saturated_suffix(net.layer(net.depth() - 1), net.last_layer(), net.channels());
}

Network to_llnf(const Network& net) {
  if (net.depth() < 1) throw DomainError("llnf needs depth >= 1");
  if (!is_sorting_network(net)) throw DomainError("to_llnf requires a sorting network");
  Network reduced = remove_redundant(net);
  Network result = reduced.with_layer(reduced.depth(),
                                      fill_adjacent_unused(reduced.last_layer(), net.channels()));
  if (!is_llnf(result)) {
    throw IntegrityError("redundancy-free sorting network left a non-adjacent last-layer comparator");
  }
  return result;
}

Network move_to_penultimate(const Network& net, Channel i, MoveDirection direction) {
  int d = net.depth();
  if (d < 2) throw DomainError("move needs depth >= 2");
  const Layer& last = net.layer(d);
  const Layer& pen = net.layer(d - 1);
  Comparator moved{i, i + 1};
  if (!last.contains(moved)) {
    throw DomainError(to_string(moved) + " is not in the last layer");
  }
  if (pen.uses(i) || pen.uses(i + 1)) {
    throw DomainError("channels of " + to_string(moved) + " are used in the penultimate layer");
  }
  Comparator added = direction == MoveDirection::Down ? Comparator{i + 1, i + 2}
                                                      : Comparator{i - 1, i};
  Channel partner = direction == MoveDirection::Down ? i + 2 : i - 1;
  if (partner < 1 || partner > net.channels() || last.uses(partner)) {
    throw DomainError("partner channel " + std::to_string(partner) + " is not free in the last layer");
  }
  return net.with_layer(d - 1, pen.with(moved)).with_layer(d, last.without(moved).with(added));
}

Network co_saturate(const Network& net) {
  if (net.depth() < 2) throw DomainError("co-saturation needs depth >= 2");
  Network current = to_llnf(net);
  // Each round adds at least two channels to the penultimate layer.
  for (int round = 0; round <= net.channels(); ++round) {
    current = saturate_penultimate(current);
    auto move = find_condition_iii_violation(current);
    if (!move) break;
    current = move_to_penultimate(current, move->i, move->direction);
    current = current.with_layer(current.depth(),
                                 fill_adjacent_unused(current.last_layer(), current.channels()));
  }
  if (current.depth() != net.depth() || !is_co_saturated(current) ||
      !is_sorting_network(current)) {
    throw IntegrityError("co-saturation did not reach a co-saturated sorting network");
  }
  return current;
}

}  // namespace sortnet
