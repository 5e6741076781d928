#pragma once

#include "treeprof/canonical.hpp"
#include "treeprof/tree.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace treeprof {

inline constexpr std::size_t kDefaultEnumerationLimit = 12;
/// Upper bound accepted for any explicit limit; N_18 is already ~1.2e5.
inline constexpr std::size_t kMaxEnumerationLimit = 18;

/// All isomorphism types of k-vertex trees, one representative each.
///
/// Order is fixed: the path first, then the star (when k >= 4, where the two
/// differ), then the remaining types by ascending canonical code. For k = 5
/// this yields (path, star, wye). Throws CapabilityError when k > limit.
std::vector<Tree> enumerate_trees(std::size_t k, std::size_t limit = kDefaultEnumerationLimit);

/// The k-vertex types together with a code -> coordinate lookup.
class TypeCatalog {
 public:
  explicit TypeCatalog(std::size_t k, std::size_t limit = kMaxEnumerationLimit);

  std::size_t order() const noexcept { return k_; }
  std::size_t size() const noexcept { return types_.size(); }
  const std::vector<Tree>& types() const noexcept { return types_; }
  const Tree& type(std::size_t i) const { return types_.at(i); }
  const CanonicalCode& code(std::size_t i) const { return codes_.at(i); }

  std::optional<std::size_t> index_of(const CanonicalCode& code) const;

  /// Coordinates of the path and star types (equal when k <= 3).
  static constexpr std::size_t kPathIndex = 0;
  std::size_t star_index() const noexcept { return k_ >= 4 ? 1 : 0; }

 private:
  std::size_t k_;
  std::vector<Tree> types_;
  std::vector<CanonicalCode> codes_;
  std::unordered_map<CanonicalCode, std::size_t> index_;
};

}  // namespace treeprof
