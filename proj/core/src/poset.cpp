#include "posetcut/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "posetcut/detail/longest_chain.hpp"

namespace posetcut {

using detail::BitMatrix;
using detail::Word;

namespace {

std::string pair_str(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

void check_id(std::size_t n, std::size_t v) {
  if (v >= n) {
    throw Error(ErrorCode::IdOutOfRange,
                "element " + std::to_string(v) + " not in 0.." +
                    (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
  }
}

void check_pairs(std::size_t n, std::span<const Relation> pairs) {
  for (const Relation& r : pairs) {
    check_id(n, r.lower);
    check_id(n, r.upper);
  }
}

// Throws on the first axiom violation. Reflexive pairs are checked before
// antisymmetry, antisymmetry before transitivity, each in row order.
void check_axioms(const BitMatrix& above) {
  const std::size_t n = above.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (above.test(x, x)) {
      throw Error(ErrorCode::ReflexivePair, "pair " + pair_str(x, x),
                  {static_cast<Element>(x), static_cast<Element>(x)});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t witness = detail::npos;
    detail::for_each_bit(above.row(x), [&](std::size_t y) {
      if (witness == detail::npos && above.test(y, x)) witness = y;
    });
    if (witness != detail::npos) {
      throw Error(ErrorCode::AntisymmetryViolation,
                  "both " + pair_str(x, witness) + " and " +
                      pair_str(witness, x),
                  {static_cast<Element>(x), static_cast<Element>(witness)});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const auto row_x = above.row(x);
    std::size_t via = detail::npos;
    std::size_t missing = detail::npos;
    detail::for_each_bit(row_x, [&](std::size_t y) {
      if (missing != detail::npos) return;
      missing = detail::first_outside(above.row(y), row_x);
      if (missing != detail::npos) via = y;
    });
    if (missing != detail::npos) {
      throw Error(ErrorCode::TransitivityViolation,
                  "missing " + pair_str(x, missing) + " implied by " +
                      pair_str(x, via) + " and " + pair_str(via, missing),
                  {static_cast<Element>(x), static_cast<Element>(missing),
                   static_cast<Element>(via)});
    }
  }
}

std::vector<Word> membership(std::size_t n, std::span<const Element> s) {
  std::vector<Word> bits(detail::words_for(n), 0);
  for (Element v : s) {
    check_id(n, v);
    bits[v / detail::kWordBits] |= Word{1} << (v % detail::kWordBits);
  }
  return bits;
}

}  // namespace

Poset::Poset(BitMatrix above)
    : n_(above.size()), above_(std::move(above)), below_(n_) {
  offsets_.assign(n_ + 1, 0);
  for (std::size_t x = 0; x < n_; ++x) {
    offsets_[x + 1] = offsets_[x] + detail::popcount(above_.row(x));
  }
  m_ = offsets_[n_];
  successors_.resize(m_);
  for (std::size_t x = 0; x < n_; ++x) {
    std::size_t at = offsets_[x];
    detail::for_each_bit(above_.row(x), [&](std::size_t y) {
      successors_[at++] = static_cast<Element>(y);
      below_.set(y, x);
    });
  }
}

Poset Poset::from_matrix(BitMatrix above) {
  check_axioms(above);
  return Poset(std::move(above));
}

Poset Poset::from_relations(std::size_t n, std::span<const Relation> pairs) {
  check_pairs(n, pairs);
  BitMatrix above(n);
  for (const Relation& r : pairs) above.set(r.lower, r.upper);
  return from_matrix(std::move(above));
}

Poset Poset::from_covers(std::size_t n, std::span<const Relation> pairs) {
  check_pairs(n, pairs);
  std::vector<std::vector<Element>> succ(n);
  for (const Relation& r : pairs) succ[r.lower].push_back(r.upper);
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Iterative DFS; a gray target closes a cycle. Postorder is a reverse
  // topological order, which is the order the closure needs.
  enum class Color : std::uint8_t { White, Gray, Black };
  std::vector<Color> color(n, Color::White);
  std::vector<Element> postorder;
  postorder.reserve(n);
  std::vector<std::pair<Element, std::size_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != Color::White) continue;
    stack.emplace_back(static_cast<Element>(root), 0);
    color[root] = Color::Gray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < succ[v].size()) {
        const Element w = succ[v][next++];
        if (color[w] == Color::Gray) {
          std::vector<Element> cycle;
          auto it = std::find_if(stack.begin(), stack.end(),
                                 [w](const auto& f) { return f.first == w; });
          for (; it != stack.end(); ++it) cycle.push_back(it->first);
          std::string text;
          for (Element c : cycle) text += std::to_string(c) + " -> ";
          text += std::to_string(w);
          throw Error(ErrorCode::CycleDetected, "cycle " + text,
                      std::move(cycle));
        }
        if (color[w] == Color::White) {
          color[w] = Color::Gray;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = Color::Black;
        postorder.push_back(v);
        stack.pop_back();
      }
    }
  }

  BitMatrix above(n);
  for (Element v : postorder) {
    auto row = above.row(v);
    for (Element w : succ[v]) {
      const auto row_w = above.row(w);
      for (std::size_t i = 0; i < row.size(); ++i) row[i] |= row_w[i];
      above.set(v, w);
    }
  }
  return Poset(std::move(above));
}

std::vector<Relation> Poset::relations() const {
  std::vector<Relation> out;
  out.reserve(m_);
  for (std::size_t x = 0; x < n_; ++x) {
    for (Element y : above(static_cast<Element>(x))) {
      out.push_back({static_cast<Element>(x), y});
    }
  }
  return out;
}

Poset poset_from_relations(std::size_t n, std::span<const Relation> pairs) {
  return Poset::from_relations(n, pairs);
}

Poset poset_from_covers(std::size_t n, std::span<const Relation> pairs) {
  return Poset::from_covers(n, pairs);
}

bool is_cover(const Poset& p, Element x, Element y) {
  check_id(p.size(), x);
  check_id(p.size(), y);
  return p.less(x, y) && !detail::intersects(p.above_row(x), p.below_row(y));
}

CoverSet transitive_reduction(const Poset& p) {
  CoverSet covers;
  for (Element x = 0; x < p.size(); ++x) {
    const auto up = p.above_row(x);
    for (Element y : p.above(x)) {
      if (!detail::intersects(up, p.below_row(y))) covers.push_back({x, y});
    }
  }
  return covers;
}

Poset remove_relation(const Poset& p, Element x, Element y) {
  check_id(p.size(), x);
  check_id(p.size(), y);
  if (!p.less(x, y)) {
    throw Error(ErrorCode::NotARelation, pair_str(x, y) + " is not x < y",
                {x, y});
  }
  const std::size_t between =
      detail::first_common(p.above_row(x), p.below_row(y));
  if (between != detail::npos) {
    throw Error(ErrorCode::NotACover,
                pair_str(x, y) + " has " + std::to_string(between) +
                    " in between",
                {x, y, static_cast<Element>(between)});
  }
  BitMatrix above = p.above_matrix();
  above.reset(x, y);
  return Poset::from_matrix(std::move(above));
}

std::uint64_t e_count(const Poset& p, std::span<const Element> xs,
                      std::span<const Element> ys) {
  const auto in_x = membership(p.size(), xs);
  const auto in_y = membership(p.size(), ys);
  std::uint64_t total = 0;
  detail::for_each_bit(in_x, [&](std::size_t x) {
    total += detail::popcount_and(p.above_row(static_cast<Element>(x)), in_y);
  });
  return total;
}

std::size_t up_degree(const Poset& p, Element v) {
  check_id(p.size(), v);
  return p.above(v).size();
}

std::size_t down_degree(const Poset& p, Element v) {
  check_id(p.size(), v);
  return detail::popcount(p.below_row(v));
}

std::vector<Element> linear_extension(const Poset& p) {
  // x < y implies down(x) < down(y), so sorting by down-degree is a linear
  // extension. Counting sort keeps it O(n).
  const std::size_t n = p.size();
  std::vector<std::size_t> down(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y : p.above(x)) ++down[y];
  }
  std::vector<std::size_t> start(n + 1, 0);
  for (std::size_t d : down) ++start[d + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<Element> order(n);
  for (Element v = 0; v < n; ++v) order[start[down[v]]++] = v;
  return order;
}

Chain longest_chain(const Poset& p) {
  if (p.size() == 0) {
    throw Error(ErrorCode::EmptyPoset, "longest chain of an empty poset");
  }
  const auto order = linear_extension(p);
  return Chain{detail::longest_chain_top_down(
      order, [&](std::size_t x) { return p.above_row(static_cast<Element>(x)); },
      [&](std::size_t x) { return p.below_row(static_cast<Element>(x)); })};
}

bool is_downward_closed(const Poset& p, std::span<const Element> s) {
  const auto in_s = membership(p.size(), s);
  for (Element v : s) {
    if (detail::first_outside(p.below_row(v), in_s) != detail::npos) {
      return false;
    }
  }
  return true;
}

bool is_upward_closed(const Poset& p, std::span<const Element> s) {
  const auto in_s = membership(p.size(), s);
  for (Element v : s) {
    if (detail::first_outside(p.above_row(v), in_s) != detail::npos) {
      return false;
    }
  }
  return true;
}

}  // namespace posetcut
