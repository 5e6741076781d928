#pragma once

#include "treeprof/constructions.hpp"
#include "treeprof/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace treeprof::cli {

inline constexpr std::size_t kMaxExhaustiveOrder = 14;

/// Tree source for sweeps.
///   exhaustive:N           every isomorphism type on 1..N vertices (N <= 14)
///   random:COUNT:N:SEED    COUNT uniform labeled trees, sizes uniform in [min(2,N), N]
///   file:PATH              one or more trees in the text format, back to back
///   millipede:D1,..,DL:N[:EXTRA]
struct CorpusSpec {
  enum class Kind { kExhaustive, kRandom, kFile, kMillipede };
  Kind kind = Kind::kExhaustive;
  std::size_t max_order = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string path;
  MillipedeSpec millipede;
};

/// Throws std::invalid_argument with a usage message on malformed input.
CorpusSpec parse_corpus(std::string_view text);

/// Materializes the corpus in a deterministic order.
std::vector<Tree> load_corpus(const CorpusSpec& spec);

/// The i-th tree of a random corpus, independent of the others.
Tree random_corpus_tree(std::size_t max_order, std::uint64_t seed, std::size_t index);

/// Parses "0,0,3,4" into a pendant list.
std::vector<std::size_t> parse_pendants(std::string_view text);

}  // namespace treeprof::cli
