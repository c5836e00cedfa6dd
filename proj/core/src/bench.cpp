#include "posetcut/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>

#include "posetcut/maxcut.hpp"

namespace posetcut::bench {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Theorem: return "theorem";
    case Algorithm::Local: return "local";
    case Algorithm::Random: return "random";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Row make_row(const std::string& family, const Poset& p, Algorithm a,
             std::uint64_t size, double seconds) {
  const std::uint64_t m = p.relation_count();
  return Row{family,
             p.size(),
             m,
             a,
             size,
             m == 0 ? 0.0 : static_cast<double>(size) / static_cast<double>(m),
             seconds};
}

}  // namespace

void Report::write_csv(std::ostream& os) const {
  os << "family,n,m,algorithm,size,ratio,wall_seconds\n";
  const auto flags = os.flags();
  for (const Row& r : rows) {
    os << r.family << ',' << r.n << ',' << r.m << ',' << to_string(r.algorithm)
       << ',' << r.size << ',' << std::setprecision(6) << std::fixed << r.ratio
       << ',' << std::scientific << std::setprecision(3) << r.wall_seconds
       << '\n';
    os.flags(flags);
  }
}

Report run(std::span<const FamilySpec> specs, std::size_t trials,
           std::uint64_t seed) {
  Report report;
  for (const FamilySpec& spec : specs) {
    const std::string name = to_string(spec);
    const Poset p = generate(spec);

    auto start = Clock::now();
    const Cut best = max_dicut(p);
    report.rows.push_back(
        make_row(name, p, Algorithm::Theorem, best.size, seconds_since(start)));

    std::vector<Cut> starts;
    for (std::size_t t = 0; t < trials; ++t) {
      start = Clock::now();
      starts.push_back(random_cut(p, seed + t));
      report.rows.push_back(make_row(name, p, Algorithm::Random,
                                     starts.back().size, seconds_since(start)));
    }
    for (std::size_t t = 0; t < trials; ++t) {
      start = Clock::now();
      const Cut local = local_search(p, starts[t]);
      report.rows.push_back(make_row(name, p, Algorithm::Local, local.size,
                                     seconds_since(start)));
    }
  }
  return report;
}

double time_theorem(const Poset& p, double min_batch_seconds,
                    std::size_t batches) {
  volatile std::uint64_t sink = 0;
  auto once = [&] {
    const Classification cls = classify(p);
    sink = sink + max_dicut(p, cls).size;
  };
  once();  // warm-up

  std::size_t reps = 1;
  while (true) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < reps; ++i) once();
    if (seconds_since(start) >= min_batch_seconds) break;
    reps *= 2;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < batches; ++b) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < reps; ++i) once();
    best = std::min(best, seconds_since(start) / static_cast<double>(reps));
  }
  return best;
}

std::vector<ScalingRow> chain_scaling(std::span<const std::size_t> sizes) {
  std::vector<ScalingRow> rows;
  for (std::size_t n : sizes) {
    const Poset p = chain(n);
    ScalingRow row;
    row.n = n;
    row.m = p.relation_count();
    row.seconds = time_theorem(p);
    row.ns_per_relation =
        row.m == 0 ? 0.0 : row.seconds * 1e9 / static_cast<double>(row.m);
    if (!rows.empty() && rows.back().seconds > 0) {
      row.ratio_to_previous = row.seconds / rows.back().seconds;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_scaling_csv(std::ostream& os, std::span<const ScalingRow> rows) {
  os << "n,m,seconds,ns_per_relation,ratio_to_previous\n";
  const auto flags = os.flags();
  for (const ScalingRow& r : rows) {
    os << r.n << ',' << r.m << ',' << std::scientific << std::setprecision(4)
       << r.seconds << ',' << std::fixed << std::setprecision(4)
       << r.ns_per_relation << ',' << r.ratio_to_previous << '\n';
    os.flags(flags);
  }
}

}  // namespace posetcut::bench
