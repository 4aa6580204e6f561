#include "zagreb/tree_io.hpp"

#include <charconv>
#include <sstream>

namespace zagreb {
namespace {

bool skippable(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

std::vector<long> tokenize(std::string_view line) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long value = 0;
    auto token = line.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw TreeError("not an integer: '" + std::string(token) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

std::string to_line(const Tree& t) {
  std::string out = std::to_string(t.order());
  for (auto [u, v] : t.edges()) {
    out += ' ';
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Tree parse_line(std::string_view line) {
  auto tokens = tokenize(line);
  if (tokens.empty()) throw TreeError("empty tree line");
  long n = tokens[0];
  if (n < 1) throw TreeError("vertex count must be positive, got " + std::to_string(n));
  if (static_cast<long>(tokens.size()) != 1 + 2 * (n - 1)) {
    throw TreeError("expected " + std::to_string(2 * (n - 1)) + " endpoint integers for n=" +
                    std::to_string(n) + ", got " + std::to_string(tokens.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
    edges.emplace_back(static_cast<Vertex>(tokens[i]), static_cast<Vertex>(tokens[i + 1]));
  }
  return Tree::from_edges(static_cast<int>(n), edges);
}

std::vector<Tree> read_trees(std::istream& in) {
  std::vector<Tree> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (skippable(line)) continue;
    try {
      out.push_back(parse_line(line));
    } catch (const TreeError& e) {
      throw TreeError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

void write_trees(std::ostream& out, const std::vector<Tree>& trees) {
  for (const auto& t : trees) out << to_line(t) << '\n';
}

}  // namespace zagreb
