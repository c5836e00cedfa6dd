#ifndef POSETCUT_GENERATORS_HPP
#define POSETCUT_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetcut/poset.hpp"

namespace posetcut {

enum class Family : std::uint8_t {
  Chain,
  Antichain,
  BooleanLattice,
  Grid,
  Divisor,
  RandomDag,
};

/// A poset family instance. `params` holds n (chain, antichain, random_dag),
/// k (boolean_lattice), a and b (grid) or N (divisor).
struct FamilySpec {
  Family family = Family::Chain;
  std::vector<std::uint64_t> params;
  std::optional<std::uint64_t> seed;  // random_dag; unset means 0
  double edge_prob = 0.0;             // random_dag

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Largest element count any family may produce.
inline constexpr std::size_t kMaxGeneratedElements = 10000;

/// Text form used by the CLI:
///   chain:<n>  antichain:<n>  boolean:<k>  grid:<a>x<b>  divisor:<N>
///   random:<n>:<p>[:seed=<s>]
/// Throws InvalidSpec.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Throws InvalidSpec when parameters are zero, edge_prob is outside [0, 1]
/// or the family would exceed kMaxGeneratedElements.
void validate(const FamilySpec& spec);

/// Deterministic in the spec.
Poset generate(const FamilySpec& spec);

/// 0 < 1 < ... < n-1.
Poset chain(std::size_t n);
Poset antichain(std::size_t n);
/// Subsets of a k-set by strict inclusion; element ID = subset bit mask.
Poset boolean_lattice(std::size_t k);
/// Product order on [a] x [b]; element (i, j) has ID i * b + j.
Poset grid(std::size_t a, std::size_t b);
/// Divisors of N by divisibility; IDs follow ascending divisor value.
Poset divisor_lattice(std::uint64_t value);
std::vector<std::uint64_t> divisors(std::uint64_t value);
/// Each pair i < j gets an edge with probability p, then the edge set is
/// closed transitively. Uses mt19937_64 seeded with `seed`.
Poset random_dag(std::size_t n, double edge_prob, std::uint64_t seed);

inline constexpr std::size_t kMaxEnumerated = 5;

/// Calls visit once for every labeled poset on n <= 5 elements.
/// Throws TooLarge for n > 5.
void for_each_small_poset(std::size_t n,
                          const std::function<void(const Poset&)>& visit);
std::vector<Poset> enumerate_small_posets(std::size_t n);

}  // namespace posetcut

#endif  // POSETCUT_GENERATORS_HPP
