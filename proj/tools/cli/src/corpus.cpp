#include "treeprof_cli/corpus.hpp"

#include "treeprof/enumerate.hpp"
#include "treeprof/errors.hpp"
#include "treeprof/random_tree.hpp"
#include "treeprof/tree_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>

namespace treeprof::cli {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t number(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

constexpr const char* kUsage =
    "corpus must be exhaustive:N, random:COUNT:N:SEED, file:PATH or millipede:D1,..,DL:N[:EXTRA]";

}  // namespace

std::vector<std::size_t> parse_pendants(std::string_view text) {
  std::vector<std::size_t> out;
  for (auto part : split(text, ',')) out.push_back(number(part, "pendant count"));
  if (out.empty()) throw std::invalid_argument("empty pendant list");
  return out;
}

CorpusSpec parse_corpus(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument(kUsage);
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  CorpusSpec spec;
  if (kind == "exhaustive") {
    spec.kind = CorpusSpec::Kind::kExhaustive;
    spec.max_order = number(rest, "exhaustive order");
    if (spec.max_order < 1 || spec.max_order > kMaxExhaustiveOrder)
      throw std::invalid_argument("exhaustive corpus order must be in 1.." + std::to_string(kMaxExhaustiveOrder));
  } else if (kind == "random") {
    auto parts = split(rest, ':');
    if (parts.size() != 3) throw std::invalid_argument(kUsage);
    spec.kind = CorpusSpec::Kind::kRandom;
    spec.count = number(parts[0], "count");
    spec.max_order = number(parts[1], "tree size");
    spec.seed = number(parts[2], "seed");
    if (spec.max_order < 1) throw std::invalid_argument("random corpus tree size must be >= 1");
  } else if (kind == "file") {
    if (rest.empty()) throw std::invalid_argument(kUsage);
    spec.kind = CorpusSpec::Kind::kFile;
    spec.path = std::string(rest);
  } else if (kind == "millipede") {
    auto parts = split(rest, ':');
    if (parts.size() != 2 && parts.size() != 3) throw std::invalid_argument(kUsage);
    spec.kind = CorpusSpec::Kind::kMillipede;
    spec.millipede.pendants = parse_pendants(parts[0]);
    spec.millipede.length = number(parts[1], "millipede length");
    if (parts.size() == 3) spec.millipede.extra_pendants = number(parts[2], "extra pendants");
    if (spec.millipede.length < 1) throw std::invalid_argument("millipede length must be >= 1");
  } else {
    throw std::invalid_argument(kUsage);
  }
  return spec;
}

Tree random_corpus_tree(std::size_t max_order, std::uint64_t seed, std::size_t index) {
  // Per-index seeds make every tree independent of evaluation order.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  const std::size_t lo = std::min<std::size_t>(2, max_order);
  std::uniform_int_distribution<std::size_t> size(lo, max_order);
  const std::size_t n = size(rng);
  return random_tree(n, rng());
}

std::vector<Tree> load_corpus(const CorpusSpec& spec) {
  std::vector<Tree> out;
  switch (spec.kind) {
    case CorpusSpec::Kind::kExhaustive:
      for (std::size_t k = 1; k <= spec.max_order; ++k)
        for (auto& t : enumerate_trees(k, kMaxExhaustiveOrder)) out.push_back(std::move(t));
      break;
    case CorpusSpec::Kind::kRandom:
      out.reserve(spec.count);
      for (std::size_t i = 0; i < spec.count; ++i) out.push_back(random_corpus_tree(spec.max_order, spec.seed, i));
      break;
    case CorpusSpec::Kind::kFile: {
      std::ifstream in(spec.path, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + spec.path);
      std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      // Split into blocks: a header line "n" followed by n-1 edge lines.
      std::size_t pos = 0;
      while (pos < text.size()) {
        if (text[pos] == '\n') {
          ++pos;
          continue;
        }
        auto line_end = text.find('\n', pos);
        if (line_end == std::string::npos) line_end = text.size();
        std::uint64_t n = number(std::string_view(text).substr(pos, line_end - pos), "vertex count");
        std::size_t end = line_end;
        for (std::uint64_t i = 0; i + 1 < n && end < text.size(); ++i) {
          end = text.find('\n', end + 1);
          if (end == std::string::npos) end = text.size();
        }
        std::size_t block_end = std::min(end + 1, text.size());
        out.push_back(parse_tree(std::string_view(text).substr(pos, block_end - pos)));
        pos = block_end;
      }
      if (out.empty()) throw ParseError("no trees in " + spec.path);
      break;
    }
    case CorpusSpec::Kind::kMillipede:
      out.push_back(millipede(spec.millipede));
      break;
  }
  return out;
}

}  // namespace treeprof::cli
