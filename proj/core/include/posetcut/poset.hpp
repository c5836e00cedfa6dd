#ifndef POSETCUT_POSET_HPP
#define POSETCUT_POSET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "posetcut/detail/bit_matrix.hpp"
#include "posetcut/error.hpp"

namespace posetcut {

/// An ordered pair `lower < upper`.
struct Relation {
  Element lower = 0;
  Element upper = 0;

  friend auto operator<=>(const Relation&, const Relation&) = default;
};

/// The cover pairs of a poset (its Hasse diagram), sorted by (lower, upper).
using CoverSet = std::vector<Relation>;

/// A chain listed top-down: elements[0] > elements[1] > ... .
struct Chain {
  std::vector<Element> elements;

  std::size_t length() const { return elements.size(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Finite strict partial order over the dense element IDs 0..n-1.
///
/// The relation is held twice as an n x n bit matrix (row x lists what lies
/// above x, row y of the transpose lists what lies below y) and once as
/// sorted successor lists, so that membership tests are O(1) and full scans
/// over the relation cost O(n + m). Instances are immutable and always
/// satisfy the partial-order axioms.
class Poset {
 public:
  /// The empty poset (n = 0).
  Poset() = default;

  /// Validates and builds from an explicit relation list. Duplicate pairs
  /// are collapsed.
  static Poset from_relations(std::size_t n, std::span<const Relation> pairs);
  /// Builds the transitive closure of an acyclic pair list.
  static Poset from_covers(std::size_t n, std::span<const Relation> pairs);
  /// Validates a full relation matrix (row x has bit y set iff x < y).
  static Poset from_matrix(detail::BitMatrix above);
  /// Skips validation. For constructions that are partial orders by design.
  static Poset from_matrix_unchecked(detail::BitMatrix above) {
    return Poset(std::move(above));
  }

  std::size_t size() const { return n_; }
  /// m = e(P, P), the number of pairs x < y.
  std::uint64_t relation_count() const { return m_; }

  bool contains(Element v) const { return v < n_; }
  /// x < y. Both IDs must be in range.
  bool less(Element x, Element y) const { return above_.test(x, y); }

  /// Elements strictly above x, ascending.
  std::span<const Element> above(Element x) const {
    return {successors_.data() + offsets_[x],
            successors_.data() + offsets_[x + 1]};
  }
  std::span<const detail::Word> above_row(Element x) const {
    return above_.row(x);
  }
  std::span<const detail::Word> below_row(Element y) const {
    return below_.row(y);
  }
  const detail::BitMatrix& above_matrix() const { return above_; }

  /// True when scanning the bit rows (n * ceil(n/64) words) costs no more
  /// than walking the m successor entries. Full scans pick the cheaper of the
  /// two, which keeps them O(n + m) and compact in memory for dense orders.
  bool prefers_row_scan() const {
    return n_ * above_.words_per_row() <= m_;
  }

  /// All pairs, sorted by (lower, upper).
  std::vector<Relation> relations() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.above_ == b.above_;
  }

 private:
  // Caller guarantees the axioms hold.
  explicit Poset(detail::BitMatrix above);

  std::size_t n_ = 0;
  std::uint64_t m_ = 0;
  detail::BitMatrix above_;
  detail::BitMatrix below_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Element> successors_;
};

Poset poset_from_relations(std::size_t n, std::span<const Relation> pairs);
Poset poset_from_covers(std::size_t n, std::span<const Relation> pairs);

/// Exactly the cover pairs x < y with nothing strictly between.
CoverSet transitive_reduction(const Poset& p);

/// True iff x < y with no z between. Throws IdOutOfRange.
bool is_cover(const Poset& p, Element x, Element y);

/// p without the single pair x < y. Throws NotARelation when x < y does not
/// hold and NotACover when some z lies between them, since removing a
/// non-cover pair breaks transitivity.
Poset remove_relation(const Poset& p, Element x, Element y);

/// e(X, Y) = |{(x, y) in X x Y : x < y}|. X and Y are sets: duplicates are
/// ignored and they may overlap.
std::uint64_t e_count(const Poset& p, std::span<const Element> xs,
                      std::span<const Element> ys);

/// e({v}, P): elements above v.
std::size_t up_degree(const Poset& p, Element v);
/// e(P, {v}): elements below v.
std::size_t down_degree(const Poset& p, Element v);

/// A maximum-length chain, top-down. The top is the smallest ID among the
/// elements that start a longest chain and each next element is the smallest
/// ID that keeps the chain longest, so consecutive elements are covers.
/// Throws EmptyPoset for n = 0.
Chain longest_chain(const Poset& p);

/// Closed under going down: s in S and t < s imply t in S.
bool is_downward_closed(const Poset& p, std::span<const Element> s);
/// Closed under going up: s in S and t > s imply t in S.
bool is_upward_closed(const Poset& p, std::span<const Element> s);

/// Element IDs sorted so that x < y implies x comes first. Ties by ID.
std::vector<Element> linear_extension(const Poset& p);

}  // namespace posetcut

#endif  // POSETCUT_POSET_HPP
