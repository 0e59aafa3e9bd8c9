#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "sortnet/analysis.hpp"
#include "sortnet/errors.hpp"

namespace sortnet {

namespace {

bool is_contiguous(const std::vector<Channel>& block) {
  return block.back() - block.front() + 1 == static_cast<int>(block.size());
}

std::string block_to_string(const std::vector<Channel>& block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    s += (i ? "," : "") + std::to_string(block[i]);
  }
  return s + "}";
}

CheckResult check_last_layer(const Network& net) {
  CheckResult r{kCheckLastLayer, {}};
  if (net.depth() == 0) return r;
  for (const auto& c : net.last_layer()) {
    if (c.span() != 1) {
      r.violations.push_back({net.depth(), c, "last-layer comparator is not between adjacent channels"});
    }
  }
  return r;
}

CheckResult check_penultimate(const Network& net) {
  CheckResult r{kCheckPenultimate, {}};
  if (net.depth() < 2) return r;
  int d = net.depth();
  const Layer& last = net.layer(d);
  for (const auto& c : net.layer(d - 1)) {
    int i = c.lo;
    if (c.span() > 3) {
      r.violations.push_back({d - 1, c, "penultimate comparator spans more than 3 channels"});
    } else if (c.span() == 2 && !last.contains({i, i + 1}) && !last.contains({i + 1, i + 2})) {
      r.violations.push_back({d - 1, c, "span-2 comparator without (i,i+1) or (i+1,i+2) in the last layer"});
    } else if (c.span() == 3 && !(last.contains({i, i + 1}) && last.contains({i + 2, i + 3}))) {
      r.violations.push_back({d - 1, c, "span-3 comparator without both (i,i+1) and (i+2,i+3) in the last layer"});
    }
  }
  return r;
}

CheckResult check_block_adjacency(const Network& net) {
  CheckResult r{kCheckBlockAdjacency, {}};
  for (int k = 1; k <= net.depth(); ++k) {
    auto partition = k_blocks(net, k);
    for (const auto& c : net.layer(k)) {
      const auto& upper = partition.blocks[partition.block_of(c.lo)];
      const auto& lower = partition.blocks[partition.block_of(c.hi)];
      // Both endpoints inside one k-block is fine; only distinct blocks must touch.
      if (&upper == &lower) continue;
      if (!is_contiguous(upper) || !is_contiguous(lower) || upper.back() + 1 != lower.front()) {
        r.violations.push_back({k, c, "joins non-adjacent k-blocks " + block_to_string(upper) +
                                          " and " + block_to_string(lower)});
      }
    }
  }
  return r;
}

CheckResult check_block_size(const Network& net) {
  CheckResult r{kCheckBlockSize, {}};
  for (int k = 0; k <= net.depth(); ++k) {
    auto partition = k_blocks(net, k);
    std::vector<std::size_t> comparators(partition.blocks.size(), 0);
    for (int l = k + 1; l <= net.depth(); ++l) {
      for (const auto& c : net.layer(l)) ++comparators[partition.block_of(c.lo)];
    }
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
      const auto& block = partition.blocks[b];
      auto extent = static_cast<std::size_t>(block.back() - block.front() + 1);
      if (extent > comparators[b] + 1) {
        r.violations.push_back({k, {}, "k-block " + block_to_string(block) + " with " +
                                           std::to_string(comparators[b]) + " comparators spans " +
                                           std::to_string(extent) + " channels"});
      }
    }
  }
  return r;
}

}  // namespace

bool StructureReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

std::size_t StructureReport::violation_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.violations.size();
  return n;
}

const CheckResult& StructureReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw RangeError("no check named " + name);
}

std::string StructureReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << (c.passed() ? "pass" : "FAIL") << '\n';
    for (const auto& v : c.violations) {
      out << "  layer " << v.layer;
      if (v.comparator.hi != 0) out << ' ' << to_string(v.comparator);
      out << ": " << v.message << '\n';
    }
  }
  return out.str();
}

std::string StructureReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : c.violations) {
      nlohmann::json entry{{"layer", v.layer}, {"message", v.message}};
      if (v.comparator.hi != 0) entry["comparator"] = {v.comparator.lo, v.comparator.hi};
      violations.push_back(std::move(entry));
    }
    j.push_back({{"check", c.name}, {"passed", c.passed()}, {"violations", violations}});
  }
  return j.dump(2);
}

StructureReport audit_endgame(const Network& net) {
  return StructureReport{{check_last_layer(net), check_penultimate(net),
                          check_block_adjacency(net), check_block_size(net)}};
}

}  // namespace sortnet
