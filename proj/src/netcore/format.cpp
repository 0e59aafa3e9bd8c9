#include "sortnet/format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sortnet/errors.hpp"

namespace sortnet {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Network parse_network(std::string_view text) {
  int channels = 0;
  std::vector<Layer> layers;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    auto tokens = split_ws(line);
    if (channels == 0) {
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_int(tokens[1], channels) ||
          channels < 1) {
        throw ParseError(line_no, "expected header \"n <channels>\"");
      }
    } else if (tokens.size() == 1 && tokens[0] == "-") {
      layers.emplace_back();
    } else {
      std::vector<Comparator> comps;
      std::vector<char> used(static_cast<std::size_t>(channels) + 1, 0);
      for (auto tok : tokens) {
        auto colon = tok.find(':');
        Comparator c;
        if (colon == std::string_view::npos || !parse_int(tok.substr(0, colon), c.lo) ||
            !parse_int(tok.substr(colon + 1), c.hi)) {
          throw ParseError(line_no, "malformed comparator \"" + std::string(tok) + "\"");
        }
        if (c.lo < 1 || c.hi > channels || c.lo >= c.hi) {
          throw ParseError(line_no, "comparator " + std::string(tok) +
                                        " out of range for n=" + std::to_string(channels));
        }
        for (Channel ch : {c.lo, c.hi}) {
          if (used[static_cast<std::size_t>(ch)]) {
            throw ParseError(line_no, "duplicate channel " + std::to_string(ch) + " in a layer");
          }
          used[static_cast<std::size_t>(ch)] = 1;
        }
        comps.push_back(c);
      }
      layers.emplace_back(std::move(comps));
    }
    if (end == text.size()) break;
  }
  if (channels == 0) throw ParseError(line_no, "missing header \"n <channels>\"");
  return Network(channels, std::move(layers));
}

std::string format_layer(const Layer& layer) {
  if (layer.empty()) return "-";
  std::string line;
  for (const auto& c : layer) {
    if (!line.empty()) line += ' ';
    line += std::to_string(c.lo) + ':' + std::to_string(c.hi);
  }
  return line;
}

std::string format_network(const Network& net) {
  std::string out = "n " + std::to_string(net.channels()) + '\n';
  for (const auto& layer : net.layers()) out += format_layer(layer) + '\n';
  return out;
}

Network read_network_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_network(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

void write_network_file(const std::filesystem::path& path, const Network& net) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << format_network(net);
}

}  // namespace sortnet
