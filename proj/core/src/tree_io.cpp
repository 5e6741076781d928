#include "treeprof/tree_io.hpp"

#include "treeprof/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace treeprof {

void write_tree(std::ostream& out, const Tree& t) {
  out << t.size() << '\n';
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_tree(const Tree& t) {
  std::ostringstream s;
  write_tree(s, t);
  return s.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    auto end = text_.find('\n', pos_);
    if (end == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no_ + 1) + " is not newline-terminated");
    line = text_.substr(pos_, end - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = end + 1;
    ++line_no_;
    return true;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::uint64_t parse_number(std::string_view& s, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr == s.data())
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

}  // namespace

Tree parse_tree(std::string_view text) {
  LineReader lines(text);
  std::string_view line;
  if (!lines.next(line)) throw ParseError("empty input");
  std::uint64_t n = parse_number(line, 1);
  if (!line.empty()) throw ParseError("line 1: trailing characters after vertex count");
  if (n == 0) throw ParseError("vertex count must be at least 1");

  std::vector<Edge> edges;
  while (lines.next(line)) {
    if (line.empty()) {
      // Allow trailing blank lines only.
      std::string_view rest;
      while (lines.next(rest))
        if (!rest.empty()) throw ParseError("line " + std::to_string(lines.line_no()) + ": edge after blank line");
      break;
    }
    auto no = lines.line_no();
    std::uint64_t u = parse_number(line, no);
    if (line.empty() || line.front() != ' ')
      throw ParseError("line " + std::to_string(no) + ": expected \"u v\"");
    line.remove_prefix(1);
    std::uint64_t v = parse_number(line, no);
    if (!line.empty()) throw ParseError("line " + std::to_string(no) + ": trailing characters");
    if (!(u < v && v < n))
      throw ParseError("line " + std::to_string(no) + ": edge must satisfy 0 <= u < v < n");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (edges.size() != n - 1)
    throw ParseError("expected " + std::to_string(n - 1) + " edges, found " + std::to_string(edges.size()));
  try {
    return Tree::from_edges(n, edges);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("not a tree: ") + e.what());
  }
}

Tree read_tree(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_tree(text);
}

Tree load_tree(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_tree(in);
}

void save_tree(const std::string& path, const Tree& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_tree(out, t);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace treeprof
