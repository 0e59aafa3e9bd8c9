#include "sortnet/varmap.hpp"

#include <json.hpp>

#include "sortnet/errors.hpp"

namespace sortnet {

VarMap::VarMap(int channels, int depth) : n_(channels), d_(depth) {
  if (n_ < 2 || n_ > 20) throw RangeError("variable map needs 2 <= n <= 20");
  if (d_ < 1) throw RangeError("variable map needs depth >= 1");
  for (std::uint32_t x = 0; x < (1u << n_); ++x) {
    BinaryWord w{n_, x};
    if (!w.is_sorted()) inputs_.push_back(w);
  }
}

int VarMap::variable_count() const noexcept {
  return value_base() + static_cast<int>(inputs_.size()) * (d_ + 1) * n_;
}

int VarMap::comparator_var(int layer, Channel i, Channel j) const {
  if (layer < 1 || layer > d_ || i < 1 || i >= j || j > n_) {
    throw RangeError("no comparator variable c(" + std::to_string(layer) + "," +
                     std::to_string(i) + "," + std::to_string(j) + ")");
  }
  int offset = (i - 1) * n_ - (i - 1) * i / 2;
  return (layer - 1) * pairs() + offset + (j - i - 1) + 1;
}

int VarMap::used_var(int layer, Channel k) const {
  if (layer < 1 || layer > d_ || k < 1 || k > n_) throw RangeError("no used variable");
  return used_base() + (layer - 1) * n_ + k;
}

int VarMap::value_var(int input, int level, Channel k) const {
  if (input < 0 || input >= static_cast<int>(inputs_.size()) || level < 0 || level > d_ ||
      k < 1 || k > n_) {
    throw RangeError("no value variable");
  }
  return value_base() + (input * (d_ + 1) + level) * n_ + k;
}

VarMap::Role VarMap::role(int var) const {
  if (var < 1 || var > variable_count()) throw RangeError("variable out of range");
  int v = var - 1;
  if (v < used_base()) {
    int layer = v / pairs() + 1;
    int idx = v % pairs();
    Channel i = 1;
    while (idx >= n_ - i) {
      idx -= n_ - i;
      ++i;
    }
    return {Kind::Comparator, layer, i, i + 1 + idx};
  }
  if (v < value_base()) {
    v -= used_base();
    return {Kind::Used, v / n_ + 1, v % n_ + 1, 0};
  }
  v -= value_base();
  int k = v % n_ + 1;
  v /= n_;
  return {Kind::Value, v % (d_ + 1), k, 0, v / (d_ + 1)};
}

std::string VarMap::to_json() const {
  nlohmann::json vars = nlohmann::json::array();
  for (int var = 1; var <= variable_count(); ++var) {
    auto r = role(var);
    switch (r.kind) {
      case Kind::Comparator:
        vars.push_back({{"var", var}, {"kind", "c"}, {"layer", r.layer}, {"i", r.i}, {"j", r.j}});
        break;
      case Kind::Used:
        vars.push_back({{"var", var}, {"kind", "u"}, {"layer", r.layer}, {"k", r.i}});
        break;
      case Kind::Value:
        vars.push_back({{"var", var},
                        {"kind", "v"},
                        {"input", inputs_[static_cast<std::size_t>(r.input)].to_string()},
                        {"level", r.layer},
                        {"k", r.i}});
        break;
    }
  }
  return nlohmann::json{{"n", n_}, {"depth", d_}, {"variables", vars}}.dump();
}

}  // namespace sortnet
