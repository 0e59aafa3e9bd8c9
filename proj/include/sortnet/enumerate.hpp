#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sortnet/network.hpp"

namespace sortnet {

using BigInt = boost::multiprecision::cpp_int;

// F_0 = 0, F_1 = F_2 = 1.
BigInt fibonacci(int index);
// P_0 = 1, P_1 = P_2 = 0, P_{k+3} = P_k + P_{k+1}.
BigInt padovan(int index);

// Number of layers (matchings, including the empty one) on n channels:
// G_n = G_{n-1} + (n-1) G_{n-2}, G_0 = G_1 = 1. Requires 1 <= n <= 30.
BigInt count_general_layers(int n);

// Closed forms for the enumerators below.
BigInt nonredundant_last_layer_count(int n);  // F_{n+1} - 1
BigInt llnf_last_layer_count(int n);          // P_{n+5}

// Nonempty layers made only of comparators (i,i+1). Requires 1 <= n <= 30.
void for_each_nonredundant_last_layer(int n, const std::function<void(const Layer&)>& visit);
std::vector<Layer> enumerate_nonredundant_last_layers(int n);

// Layers with only comparators (i,i+1) and no two adjacent unused channels.
// Requires 1 <= n <= 40.
std::vector<Layer> enumerate_llnf_last_layers(int n);

struct SuffixCandidate {
  int channels = 0;
  Layer penultimate;
  Layer last;

  Network as_network() const { return Network(channels, {penultimate, last}); }
  auto operator<=>(const SuffixCandidate&) const = default;
};

// Every co-saturated two-layer suffix whose penultimate comparators each join
// two distinct consecutive blocks of the llnf last layer. Sorted. Requires
// 2 <= n <= 24.
std::vector<SuffixCandidate> enumerate_cosaturated_suffixes(int n);

// Reference number of co-saturated two-layer suffixes for 3 <= n <= 17.
std::optional<std::uint64_t> reference_cosaturated_count(int n);

struct CountRow {
  int n = 0;
  std::uint64_t nonredundant_last = 0;  // enumerated L_n
  std::uint64_t llnf_last = 0;          // enumerated K_n
  BigInt general_layers;                // G_n
  std::optional<std::uint64_t> cosaturated;
};

struct CountTable {
  std::vector<CountRow> rows;

  // Rows whose enumerated counts disagree with the closed forms (or with the
  // reference co-saturated counts where available).
  std::vector<int> mismatches() const;
  // Columns: n,L_n,K_n,G_n,cosaturated_count
  std::string to_csv() const;
  std::string to_text() const;
};

// Enumerates all counts for n in [n_min, n_max]. Co-saturated suffixes are
// counted for n <= cosat_max (they grow roughly twofold per channel).
CountTable build_count_table(int n_min, int n_max, int cosat_max = 17);

}  // namespace sortnet
