#pragma once

#include "treeprof/tree.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace treeprof {

// Text format: a line "n", then n-1 lines "u v" with 0 <= u < v < n, ASCII
// decimal, every line newline-terminated. The writer emits edges in
// ascending (u, v) order.

void write_tree(std::ostream& out, const Tree& t);
std::string format_tree(const Tree& t);

/// Throws ParseError on malformed, disconnected or cyclic input.
Tree read_tree(std::istream& in);
Tree parse_tree(std::string_view text);

Tree load_tree(const std::string& path);
void save_tree(const std::string& path, const Tree& t);

}  // namespace treeprof
