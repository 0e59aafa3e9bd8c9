#include <algorithm>

#include "sortnet/enumerate.hpp"
#include "sortnet/errors.hpp"
#include "sortnet/normal_form.hpp"

namespace sortnet {

namespace {

struct SuffixWalker {
  int n;
  const Layer& last;
  std::vector<int> block_of;  // by channel, 1-based
  std::vector<std::vector<Channel>> blocks;
  std::vector<char> used;
  std::vector<Comparator> current;
  std::vector<SuffixCandidate>& out;

  SuffixWalker(int channels, const Layer& last_layer, std::vector<SuffixCandidate>& sink)
      : n(channels),
        last(last_layer),
        block_of(static_cast<std::size_t>(channels) + 1, -1),
        used(static_cast<std::size_t>(channels) + 1, 0),
        out(sink) {
    for (Channel c = 1; c <= n;) {
      int id = static_cast<int>(blocks.size());
      if (last.contains({c, c + 1})) {
        blocks.push_back({c, c + 1});
        block_of[static_cast<std::size_t>(c)] = block_of[static_cast<std::size_t>(c + 1)] = id;
        c += 2;
      } else {
        blocks.push_back({c});
        block_of[static_cast<std::size_t>(c)] = id;
        c += 1;
      }
    }
  }

  // Channel c is either left alone or paired with a free channel of the next block.
  void walk(Channel c) {
    if (c > n) {
      Layer pen(current);
      if (is_co_saturated_suffix(pen, last, n)) out.push_back({n, std::move(pen), last});
      return;
    }
    auto uc = static_cast<std::size_t>(c);
    walk(c + 1);
    if (used[uc]) return;
    auto next = static_cast<std::size_t>(block_of[uc] + 1);
    if (next >= blocks.size()) return;
    for (Channel partner : blocks[next]) {
      auto up = static_cast<std::size_t>(partner);
      if (used[up]) continue;
      used[uc] = used[up] = 1;
      current.push_back({c, partner});
      walk(c + 1);
      current.pop_back();
      used[uc] = used[up] = 0;
    }
  }
};

}  // namespace

std::vector<SuffixCandidate> enumerate_cosaturated_suffixes(int n) {
  if (n < 2 || n > 24) throw RangeError("co-saturated suffix enumeration needs 2 <= n <= 24");
  std::vector<SuffixCandidate> result;
  for (const auto& last : enumerate_llnf_last_layers(n)) {
    SuffixWalker walker(n, last, result);
    walker.walk(1);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<std::uint64_t> reference_cosaturated_count(int n) {
  static constexpr std::uint64_t kReference[] = {4,    4,    12,   26,    44,    86,    180,  376,
                                                 700,  1440, 2892, 5676,  11488, 22848, 45664};
  if (n < 3 || n > 17) return std::nullopt;
  return kReference[n - 3];
}

}  // namespace sortnet
