#ifndef POSETCUT_POSET_IO_HPP
#define POSETCUT_POSET_IO_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "posetcut/maxcut.hpp"
#include "posetcut/poset.hpp"

namespace posetcut {

// Poset text format, ASCII and newline-delimited:
//
//   # comment lines start with '#'; blank lines are ignored
//   poset <n> <m> <mode>        mode is `relations` or `covers`
//   <x> <y>                     exactly m lines, meaning x < y (relations)
//   ...                         or x covered by y (covers)
//
// In `relations` mode the pair list must already be a partial order; in
// `covers` mode it may be any acyclic pair list and is closed transitively.

enum class FileMode : std::uint8_t { Relations, Covers };

std::string_view to_string(FileMode mode);

struct PosetFile {
  std::size_t n = 0;
  FileMode mode = FileMode::Relations;
  std::vector<Relation> pairs;
};

/// Throws ParseError (with a line number) on any deviation from the grammar,
/// including IDs outside 0..n-1 and a body whose length differs from m.
PosetFile parse_poset_file(std::istream& in);
PosetFile parse_poset_file(std::string_view text);

/// Validates and builds according to the mode. Throws the axiom errors.
Poset to_poset(const PosetFile& file);

/// Relations mode writes every pair; covers mode writes the Hasse diagram.
/// Pairs appear sorted by (lower, upper).
void write_poset_file(std::ostream& os, const Poset& p, FileMode mode);
std::string format_poset_file(const Poset& p, FileMode mode);

/// Hasse diagram in Graphviz DOT, bottom to top. With a cut, B nodes are
/// filled light blue, U nodes light salmon, and cover edges from B to U are
/// drawn bold red. Nodes and edges are emitted in ascending ID order.
void write_dot(std::ostream& os, const Poset& p,
               const std::optional<Cut>& cut = std::nullopt);

}  // namespace posetcut

#endif  // POSETCUT_POSET_IO_HPP
