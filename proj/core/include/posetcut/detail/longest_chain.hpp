#ifndef POSETCUT_DETAIL_LONGEST_CHAIN_HPP
#define POSETCUT_DETAIL_LONGEST_CHAIN_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "posetcut/detail/bit_matrix.hpp"
#include "posetcut/error.hpp"

namespace posetcut::detail {

// Longest-path DP over a strict order given by row accessors. `order` must be
// a linear extension. AboveRow(x) / BelowRow(x) return bit rows. Returns the
// chain top-down with the smallest-ID tie-break at every position.
template <typename AboveRow, typename BelowRow>
std::vector<Element> longest_chain_top_down(std::span<const Element> order,
                                            AboveRow above_row,
                                            BelowRow below_row) {
  const std::size_t n = order.size();
  if (n == 0) return {};
  // depth[v]: number of elements on a longest chain with v on top.
  std::vector<std::size_t> depth(n, 1);
  for (Element x : order) {
    const std::size_t next = depth[x] + 1;
    for_each_bit(above_row(x), [&](std::size_t y) {
      if (depth[y] < next) depth[y] = next;
    });
  }
  Element top = 0;
  for (Element v = 1; v < n; ++v) {
    if (depth[v] > depth[top]) top = v;
  }
  std::vector<Element> chain;
  chain.reserve(depth[top]);
  chain.push_back(top);
  Element current = top;
  while (depth[current] > 1) {
    const std::size_t want = depth[current] - 1;
    std::size_t pick = npos;
    for_each_bit(below_row(current), [&](std::size_t x) {
      if (pick == npos && depth[x] == want) pick = x;
    });
    current = static_cast<Element>(pick);
    chain.push_back(current);
  }
  return chain;
}

}  // namespace posetcut::detail

#endif  // POSETCUT_DETAIL_LONGEST_CHAIN_HPP
