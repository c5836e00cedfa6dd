#include "posetcut/maxcut.hpp"

#include <bit>
#include <random>
#include <string>

namespace posetcut {

using detail::Word;

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Deficit: return "deficit";
    case Category::Surplus: return "surplus";
    case Category::Balanced: return "balanced";
  }
  return "unknown";
}

Classification classify(const Poset& p) {
  const std::size_t n = p.size();
  Classification cls;
  cls.up.assign(n, 0);
  cls.down.assign(n, 0);
  if (p.prefers_row_scan()) {
    for (Element v = 0; v < n; ++v) {
      cls.up[v] = detail::popcount(p.above_row(v));
      cls.down[v] = detail::popcount(p.below_row(v));
    }
  } else {
    for (Element x = 0; x < n; ++x) {
      const auto above = p.above(x);
      cls.up[x] = above.size();
      for (Element y : above) ++cls.down[y];
    }
  }
  cls.category.resize(n);
  std::size_t counts[3] = {0, 0, 0};
  for (Element v = 0; v < n; ++v) {
    const Category c = categorize(cls.up[v], cls.down[v]);
    cls.category[v] = c;
    ++counts[static_cast<std::size_t>(c)];
  }
  cls.deficit.reserve(counts[0]);
  cls.surplus.reserve(counts[1]);
  cls.balanced.reserve(counts[2]);
  for (Element v = 0; v < n; ++v) {
    switch (cls.category[v]) {
      case Category::Deficit: cls.deficit.push_back(v); break;
      case Category::Surplus: cls.surplus.push_back(v); break;
      case Category::Balanced: cls.balanced.push_back(v); break;
    }
  }
  return cls;
}

Cut make_cut(const Poset& p, std::span<const Side> sides) {
  Cut c;
  const bool rows = p.prefers_row_scan();
  std::vector<Word> top;
  if (rows) {
    top.assign(detail::words_for(p.size()), 0);
    for (Element v = 0; v < p.size(); ++v) {
      if (sides[v] == Side::Top) {
        top[v / detail::kWordBits] |= Word{1} << (v % detail::kWordBits);
      }
    }
  }
  for (Element v = 0; v < p.size(); ++v) {
    if (sides[v] == Side::Bottom) {
      c.bottom.push_back(v);
      if (rows) {
        c.size += detail::popcount_and(p.above_row(v), top);
      } else {
        for (Element y : p.above(v)) c.size += sides[y] == Side::Top;
      }
    } else {
      c.top.push_back(v);
    }
  }
  return c;
}

std::vector<Side> sides_of(const Poset& p, const Cut& c) {
  const std::size_t n = p.size();
  if (c.bottom.size() + c.top.size() != n) {
    throw Error(ErrorCode::NotAPartition,
                "parts hold " + std::to_string(c.bottom.size() + c.top.size()) +
                    " elements, poset has " + std::to_string(n));
  }
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Side> sides(n, Side::Bottom);
  auto mark = [&](Element v, Side s) {
    if (v >= n) {
      throw Error(ErrorCode::NotAPartition,
                  "element " + std::to_string(v) + " out of range", {v});
    }
    if (seen[v]++) {
      throw Error(ErrorCode::NotAPartition,
                  "element " + std::to_string(v) + " listed twice", {v});
    }
    sides[v] = s;
  };
  for (Element v : c.bottom) mark(v, Side::Bottom);
  for (Element v : c.top) mark(v, Side::Top);
  return sides;
}

std::uint64_t cut_size(const Poset& p, const Cut& c) {
  const auto sides = sides_of(p, c);
  return make_cut(p, sides).size;
}

Cut max_dicut(const Poset& p, const Classification& cls) {
  std::vector<Side> sides(p.size(), Side::Bottom);
  for (Element v : cls.surplus) sides[v] = Side::Top;
  return make_cut(p, sides);
}

Cut max_dicut(const Poset& p) { return max_dicut(p, classify(p)); }

Cut brute_force_max_cut(const Poset& p) {
  const std::size_t n = p.size();
  if (n > kOracleMaxElements) {
    throw Error(ErrorCode::TooLargeForOracle,
                std::to_string(n) + " elements; the oracle enumerates 2^n "
                "partitions and accepts at most " +
                    std::to_string(kOracleMaxElements));
  }
  std::vector<std::uint32_t> above(n, 0), below(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y : p.above(x)) {
      above[x] |= 1U << y;
      below[y] |= 1U << x;
    }
  }
  // Gray-code walk: consecutive masks differ in one element, whose move
  // changes the size by (above it in U) - (below it in B) when it joins B.
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1U;
  std::uint32_t mask = 0;
  std::int64_t size = 0;
  std::int64_t best = 0;
  std::uint32_t best_mask = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto v = static_cast<std::uint32_t>(std::countr_zero(i));
    const std::uint32_t bit = 1U << v;
    const std::uint32_t top = full & ~mask;
    if (mask & bit) {
      mask &= ~bit;
      size -= std::popcount(above[v] & top);
      size += std::popcount(below[v] & mask);
    } else {
      size += std::popcount(above[v] & top & ~bit);
      size -= std::popcount(below[v] & mask);
      mask |= bit;
    }
    if (size > best || (size == best && mask < best_mask)) {
      best = size;
      best_mask = mask;
    }
  }
  std::vector<Side> sides(n, Side::Top);
  for (Element v = 0; v < n; ++v) {
    if (best_mask & (1U << v)) sides[v] = Side::Bottom;
  }
  return make_cut(p, sides);
}

Cut random_cut(const Poset& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Side> sides(p.size());
  for (auto& s : sides) s = (rng() >> 63) ? Side::Bottom : Side::Top;
  return make_cut(p, sides);
}

namespace {

class LocalSearch {
 public:
  LocalSearch(const Poset& p, std::vector<Side> sides)
      : p_(p), sides_(std::move(sides)), bottom_(detail::words_for(p.size())) {
    for (Element v = 0; v < p.size(); ++v) {
      if (sides_[v] == Side::Bottom) set_bottom(v, true);
    }
    size_ = static_cast<std::int64_t>(make_cut(p_, sides_).size);
  }

  void run() {
    while (try_swap() || try_single_move()) {
    }
  }

  const std::vector<Side>& sides() const { return sides_; }

 private:
  void set_bottom(Element v, bool on) {
    const Word bit = Word{1} << (v % detail::kWordBits);
    if (on) {
      bottom_[v / detail::kWordBits] |= bit;
    } else {
      bottom_[v / detail::kWordBits] &= ~bit;
    }
  }

  std::int64_t above_in_top(Element v) const {
    std::int64_t count = 0;
    for (Element y : p_.above(v)) count += sides_[y] == Side::Top;
    return count;
  }
  std::int64_t below_in_bottom(Element v) const {
    return static_cast<std::int64_t>(
        detail::popcount_and(p_.below_row(v), bottom_));
  }

  // Size change if v switches side.
  std::int64_t gain(Element v) const {
    if (sides_[v] == Side::Top) return above_in_top(v) - below_in_bottom(v);
    return below_in_bottom(v) - above_in_top(v);
  }

  void flip(Element v) {
    size_ += gain(v);
    const bool to_bottom = sides_[v] == Side::Top;
    sides_[v] = to_bottom ? Side::Bottom : Side::Top;
    set_bottom(v, to_bottom);
  }

  bool try_swap() {
    for (Element x = 0; x < p_.size(); ++x) {
      if (sides_[x] != Side::Top) continue;
      for (Element y : p_.above(x)) {
        if (sides_[y] != Side::Bottom) continue;
        const std::int64_t before = size_;
        flip(x);
        flip(y);
        if (size_ <= before) {
          throw Error(ErrorCode::InternalAssertion,
                      "swap of " + std::to_string(x) + " and " +
                          std::to_string(y) + " did not improve the cut");
        }
        return true;
      }
    }
    return false;
  }

  bool try_single_move() {
    for (Element u = 0; u < p_.size(); ++u) {
      if (sides_[u] != Side::Top) continue;
      const bool minimal_in_top =
          detail::popcount(p_.below_row(u)) == static_cast<std::size_t>(
                                                   below_in_bottom(u));
      if (minimal_in_top && gain(u) > 0) {
        flip(u);
        return true;
      }
    }
    for (Element b = 0; b < p_.size(); ++b) {
      if (sides_[b] != Side::Bottom) continue;
      const bool maximal_in_bottom =
          above_in_top(b) == static_cast<std::int64_t>(p_.above(b).size());
      if (maximal_in_bottom && gain(b) > 0) {
        flip(b);
        return true;
      }
    }
    return false;
  }

  const Poset& p_;
  std::vector<Side> sides_;
  std::vector<Word> bottom_;
  std::int64_t size_ = 0;
};

}  // namespace

Cut local_search(const Poset& p, const Cut& start) {
  LocalSearch search(p, sides_of(p, start));
  search.run();
  return make_cut(p, search.sides());
}

bool verify_half_bound(const Poset& p, const Cut& c) {
  return 2 * cut_size(p, c) >= p.relation_count();
}

}  // namespace posetcut
