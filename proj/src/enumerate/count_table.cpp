#include <sstream>

#include "sortnet/enumerate.hpp"
#include "sortnet/errors.hpp"

namespace sortnet {

CountTable build_count_table(int n_min, int n_max, int cosat_max) {
  if (n_min < 1 || n_max > 30 || n_min > n_max) throw RangeError("count table needs 1 <= n_min <= n_max <= 30");
  CountTable table;
  for (int n = n_min; n <= n_max; ++n) {
    CountRow row;
    row.n = n;
    for_each_nonredundant_last_layer(n, [&](const Layer&) { ++row.nonredundant_last; });
    row.llnf_last = enumerate_llnf_last_layers(n).size();
    row.general_layers = count_general_layers(n);
    if (n >= 2 && n <= cosat_max) row.cosaturated = enumerate_cosaturated_suffixes(n).size();
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<int> CountTable::mismatches() const {
  std::vector<int> bad;
  for (const auto& row : rows) {
    bool ok = BigInt(row.nonredundant_last) == nonredundant_last_layer_count(row.n) &&
              BigInt(row.llnf_last) == llnf_last_layer_count(row.n);
    auto reference = reference_cosaturated_count(row.n);
    if (row.cosaturated && reference && *row.cosaturated != *reference) ok = false;
    if (!ok) bad.push_back(row.n);
  }
  return bad;
}

std::string CountTable::to_csv() const {
  std::ostringstream out;
  out << "n,L_n,K_n,G_n,cosaturated_count\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.nonredundant_last << ',' << row.llnf_last << ','
        << row.general_layers << ',';
    if (row.cosaturated) out << *row.cosaturated;
    out << '\n';
  }
  return out.str();
}

std::string CountTable::to_text() const {
  std::ostringstream out;
  out << "  n          L_n        K_n                  G_n   cosaturated\n";
  for (const auto& row : rows) {
    out.width(3);
    out << row.n;
    out.width(13);
    out << row.nonredundant_last;
    out.width(11);
    out << row.llnf_last;
    out.width(21);
    out << row.general_layers.str();
    out.width(14);
    out << (row.cosaturated ? std::to_string(*row.cosaturated) : "-") << '\n';
  }
  return out.str();
}

}  // namespace sortnet
