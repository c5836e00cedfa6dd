#ifndef POSETCUT_MAXCUT_HPP
#define POSETCUT_MAXCUT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "posetcut/poset.hpp"

namespace posetcut {

/// Deficit: more elements above than below. Surplus: fewer. Balanced: equal.
enum class Category : std::uint8_t { Deficit, Surplus, Balanced };

std::string_view to_string(Category c);

inline Category categorize(std::size_t up, std::size_t down) {
  if (up > down) return Category::Deficit;
  if (up < down) return Category::Surplus;
  return Category::Balanced;
}

struct Classification {
  std::vector<Category> category;
  std::vector<std::size_t> up;
  std::vector<std::size_t> down;
  // Ascending element IDs.
  std::vector<Element> deficit;
  std::vector<Element> surplus;
  std::vector<Element> balanced;
};

/// One pass over the relation; O(n + m).
Classification classify(const Poset& p);

enum class Side : std::uint8_t { Bottom, Top };

/// A partition (B, U) of the elements; `size` is e(B, U). Both parts are
/// kept in ascending order.
struct Cut {
  std::vector<Element> bottom;
  std::vector<Element> top;
  std::uint64_t size = 0;

  friend bool operator==(const Cut&, const Cut&) = default;
};

/// Builds a cut from per-element sides and computes its size in O(n + m).
Cut make_cut(const Poset& p, std::span<const Side> sides);

/// Per-element sides of a cut. Throws NotAPartition unless bottom and top
/// are disjoint and together cover every element exactly once.
std::vector<Side> sides_of(const Poset& p, const Cut& c);

/// e(B, U) recomputed from the parts; the cached `size` is ignored.
std::uint64_t cut_size(const Poset& p, const Cut& c);

/// The maximum directed cut: B = deficit and balanced elements, U = surplus
/// elements. O(n + m).
Cut max_dicut(const Poset& p);
Cut max_dicut(const Poset& p, const Classification& cls);

inline constexpr std::size_t kOracleMaxElements = 24;

/// Exhaustive search over all 2^n partitions. Among maximum cuts, returns
/// the one whose bottom set, read as a bit mask, is numerically smallest.
/// Throws TooLargeForOracle for n > 24.
Cut brute_force_max_cut(const Poset& p);

/// Each element lands in B or U with probability 1/2, driven by a
/// mt19937_64 seeded with `seed`.
Cut random_cut(const Poset& p, std::uint64_t seed);

/// Hill climbing from `start` with two kinds of improving moves, tried in
/// this order on every round:
///   1. swap x in U with y in B where x < y (always gains at least 1);
///   2. move a minimal element of U to B, or a maximal element of B to U,
///      when that strictly increases the size.
/// Stops when neither applies, so B ends downward closed and U upward closed.
Cut local_search(const Poset& p, const Cut& start);

/// 2 * e(B, U) >= m.
bool verify_half_bound(const Poset& p, const Cut& c);

}  // namespace posetcut

#endif  // POSETCUT_MAXCUT_HPP
