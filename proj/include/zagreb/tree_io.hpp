#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/tree.hpp"

namespace zagreb {

/// Tree text format: one tree per line, "n u0 v0 u1 v1 ...", 0-indexed.
/// Blank lines and lines starting with '#' are skipped.
std::string to_line(const Tree& t);

/// Parses a single non-comment line. Throws TreeError on malformed input.
Tree parse_line(std::string_view line);

/// Reads every tree in a stream. Errors are rethrown as TreeError prefixed
/// with "line N: ".
std::vector<Tree> read_trees(std::istream& in);
void write_trees(std::ostream& out, const std::vector<Tree>& trees);

}  // namespace zagreb
