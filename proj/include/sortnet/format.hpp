#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sortnet/network.hpp"

namespace sortnet {

// Network text format:
//
//   # comment lines start with '#'
//   n 5
//   2:3 4:5        <- one layer per line, tokens "lo:hi"
//   -              <- an empty layer
//
// Blank lines are ignored. Errors carry the offending line number.
Network parse_network(std::string_view text);

// One layer line: "lo:hi" tokens sorted by lo, or "-" when empty.
std::string format_layer(const Layer& layer);

// Canonical form: "n <channels>" then one line per layer, comparators sorted by lo.
std::string format_network(const Network& net);

Network read_network_file(const std::filesystem::path& path);
void write_network_file(const std::filesystem::path& path, const Network& net);

}  // namespace sortnet
