#include "sortnet/encode.hpp"
#include "sortnet/errors.hpp"

namespace sortnet {

Network decode_model(const VarMap& vars, const std::vector<bool>& assignment) {
  if (assignment.size() < static_cast<std::size_t>(vars.variable_count()) + 1) {
    throw ShapeError("assignment covers " + std::to_string(assignment.size() ? assignment.size() - 1 : 0) +
                     " of " + std::to_string(vars.variable_count()) + " variables");
  }
  int n = vars.channels();
  std::vector<Layer> layers;
  for (int l = 1; l <= vars.depth(); ++l) {
    std::vector<Comparator> comps;
    for (Channel i = 1; i <= n; ++i) {
      for (Channel j = i + 1; j <= n; ++j) {
        if (assignment[static_cast<std::size_t>(vars.comparator_var(l, i, j))]) comps.push_back({i, j});
      }
    }
    try {
      layers.emplace_back(std::move(comps));
    } catch (const ShapeError& e) {
      throw IntegrityError("model layer " + std::to_string(l) + " is not a layer: " + e.what());
    }
  }
  return Network(n, std::move(layers));
}

}  // namespace sortnet
