#ifndef POSETCUT_BENCH_HPP
#define POSETCUT_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posetcut/generators.hpp"
#include "posetcut/poset.hpp"

namespace posetcut::bench {

enum class Algorithm : std::uint8_t { Theorem, Local, Random };

std::string_view to_string(Algorithm a);

struct Row {
  std::string family;
  std::size_t n = 0;
  std::uint64_t m = 0;
  Algorithm algorithm = Algorithm::Theorem;
  std::uint64_t size = 0;
  double ratio = 0.0;  // size / m; 0 when m = 0
  double wall_seconds = 0.0;
};

struct Report {
  std::vector<Row> rows;

  /// Header `family,n,m,algorithm,size,ratio,wall_seconds`, then one line
  /// per row.
  void write_csv(std::ostream& os) const;
};

/// Per spec: one `theorem` row, then `trials` rows each of `random`
/// (random_cut with seed + trial) and `local` (local_search started from that
/// random cut). Rows follow the order of `specs`.
Report run(std::span<const FamilySpec> specs, std::size_t trials,
           std::uint64_t seed);

/// Wall time in seconds of one classify + max_dicut on p. A warm-up run is
/// discarded; the result is the fastest per-call time over several batches,
/// each batch repeating the call until it spans at least `min_batch_seconds`.
double time_theorem(const Poset& p, double min_batch_seconds = 0.02,
                    std::size_t batches = 7);

struct ScalingRow {
  std::size_t n = 0;
  std::uint64_t m = 0;
  double seconds = 0.0;
  double ns_per_relation = 0.0;
  double ratio_to_previous = 0.0;  // 0 for the first row
};

/// Times the theorem algorithm on chain:n for each n in `sizes`.
std::vector<ScalingRow> chain_scaling(std::span<const std::size_t> sizes);

/// Header `n,m,seconds,ns_per_relation,ratio_to_previous`.
void write_scaling_csv(std::ostream& os, std::span<const ScalingRow> rows);

}  // namespace posetcut::bench

#endif  // POSETCUT_BENCH_HPP
