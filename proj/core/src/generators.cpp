#include "posetcut/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

namespace posetcut {

using detail::BitMatrix;

namespace {

[[noreturn]] void invalid(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::InvalidSpec,
              "'" + std::string(text) + "': " + why);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::uint64_t parse_uint(std::string_view spec, std::string_view field) {
  std::uint64_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    invalid(spec, "expected a non-negative integer, got '" +
                      std::string(field) + "'");
  }
  return value;
}

double parse_probability(std::string_view spec, std::string_view field) {
  // from_chars for double is missing from older libstdc++.
  std::istringstream in{std::string(field)};
  double value = 0;
  in >> value;
  if (field.empty() || in.fail() || !in.eof()) {
    invalid(spec, "expected a probability, got '" + std::string(field) + "'");
  }
  return value;
}

Poset from_matrix(BitMatrix m) {
  return Poset::from_matrix_unchecked(std::move(m));
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string_view name = parts[0];
  FamilySpec spec;
  auto expect_fields = [&](std::size_t count) {
    if (parts.size() != count + 1) {
      invalid(text, "expected " + std::to_string(count) + " field(s) after '" +
                        std::string(name) + "'");
    }
  };
  if (name == "chain" || name == "antichain" || name == "boolean" ||
      name == "divisor") {
    expect_fields(1);
    spec.family = name == "chain"       ? Family::Chain
                  : name == "antichain" ? Family::Antichain
                  : name == "boolean"   ? Family::BooleanLattice
                                        : Family::Divisor;
    spec.params = {parse_uint(text, parts[1])};
  } else if (name == "grid") {
    expect_fields(1);
    const auto dims = split(parts[1], 'x');
    if (dims.size() != 2) invalid(text, "grid expects <a>x<b>");
    spec.family = Family::Grid;
    spec.params = {parse_uint(text, dims[0]), parse_uint(text, dims[1])};
  } else if (name == "random") {
    if (parts.size() != 3 && parts.size() != 4) {
      invalid(text, "random expects <n>:<p>[:seed=<s>]");
    }
    spec.family = Family::RandomDag;
    spec.params = {parse_uint(text, parts[1])};
    spec.edge_prob = parse_probability(text, parts[2]);
    if (parts.size() == 4) {
      constexpr std::string_view kSeed = "seed=";
      if (!parts[3].starts_with(kSeed)) invalid(text, "expected seed=<s>");
      spec.seed = parse_uint(text, parts[3].substr(kSeed.size()));
    }
  } else {
    invalid(text, "unknown family '" + std::string(name) + "'");
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream os;
  switch (spec.family) {
    case Family::Chain: os << "chain:" << spec.params.at(0); break;
    case Family::Antichain: os << "antichain:" << spec.params.at(0); break;
    case Family::BooleanLattice: os << "boolean:" << spec.params.at(0); break;
    case Family::Divisor: os << "divisor:" << spec.params.at(0); break;
    case Family::Grid:
      os << "grid:" << spec.params.at(0) << 'x' << spec.params.at(1);
      break;
    case Family::RandomDag:
      os << "random:" << spec.params.at(0) << ':' << spec.edge_prob;
      if (spec.seed) os << ":seed=" << *spec.seed;
      break;
  }
  return os.str();
}

void validate(const FamilySpec& spec) {
  const std::string name = "family spec";
  const std::size_t want = spec.family == Family::Grid ? 2 : 1;
  if (spec.params.size() != want) {
    invalid(name, "expected " + std::to_string(want) + " parameter(s)");
  }
  for (std::uint64_t v : spec.params) {
    if (v == 0) invalid(name, "parameters must be positive");
  }
  std::uint64_t elements = 0;
  switch (spec.family) {
    case Family::Chain:
    case Family::Antichain:
    case Family::RandomDag:
      elements = spec.params[0];
      break;
    case Family::BooleanLattice:
      if (spec.params[0] > 13) invalid(name, "boolean lattice rank above 13");
      elements = std::uint64_t{1} << spec.params[0];
      break;
    case Family::Grid:
      if (spec.params[0] > kMaxGeneratedElements ||
          spec.params[1] > kMaxGeneratedElements) {
        invalid(name, "grid side too large");
      }
      elements = spec.params[0] * spec.params[1];
      break;
    case Family::Divisor:
      if (spec.params[0] > 1'000'000'000'000ULL) {
        invalid(name, "divisor argument above 10^12");
      }
      elements = 1;  // at most 6720 divisors below 10^12
      break;
  }
  if (elements > kMaxGeneratedElements) {
    invalid(name, std::to_string(elements) + " elements exceed the limit of " +
                      std::to_string(kMaxGeneratedElements));
  }
  if (spec.family == Family::RandomDag &&
      !(spec.edge_prob >= 0.0 && spec.edge_prob <= 1.0)) {
    invalid(name, "edge probability outside [0, 1]");
  }
}

Poset generate(const FamilySpec& spec) {
  validate(spec);
  const auto n = static_cast<std::size_t>(spec.params[0]);
  switch (spec.family) {
    case Family::Chain: return chain(n);
    case Family::Antichain: return antichain(n);
    case Family::BooleanLattice: return boolean_lattice(n);
    case Family::Grid:
      return grid(n, static_cast<std::size_t>(spec.params[1]));
    case Family::Divisor: return divisor_lattice(spec.params[0]);
    case Family::RandomDag:
      return random_dag(n, spec.edge_prob, spec.seed.value_or(0));
  }
  invalid("family spec", "unknown family");
}

Poset chain(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) m.set(x, y);
  }
  return from_matrix(std::move(m));
}

Poset antichain(std::size_t n) { return from_matrix(BitMatrix(n)); }

Poset boolean_lattice(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  BitMatrix m(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s != t && (s & t) == s) m.set(s, t);
    }
  }
  return from_matrix(std::move(m));
}

Poset grid(std::size_t a, std::size_t b) {
  BitMatrix m(a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      for (std::size_t k = i; k < a; ++k) {
        for (std::size_t l = j; l < b; ++l) {
          if (k != i || l != j) m.set(i * b + j, k * b + l);
        }
      }
    }
  }
  return from_matrix(std::move(m));
}

std::vector<std::uint64_t> divisors(std::uint64_t value) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      low.push_back(d);
      if (d != value / d) high.push_back(value / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Poset divisor_lattice(std::uint64_t value) {
  const auto ds = divisors(value);
  const std::size_t n = ds.size();
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ds[j] % ds[i] == 0) m.set(i, j);
    }
  }
  return from_matrix(std::move(m));
}

Poset random_dag(std::size_t n, double edge_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Top 53 bits as a uniform double in [0, 1); fixed across standard
  // libraries, unlike uniform_real_distribution.
  auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<Relation> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (uniform() < edge_prob) {
        edges.push_back({static_cast<Element>(i), static_cast<Element>(j)});
      }
    }
  }
  return Poset::from_covers(n, edges);
}

void for_each_small_poset(std::size_t n,
                          const std::function<void(const Poset&)>& visit) {
  if (n > kMaxEnumerated) {
    throw Error(ErrorCode::TooLarge,
                "enumeration is limited to " + std::to_string(kMaxEnumerated) +
                    " elements");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  // Each unordered pair is incomparable, i < j or j < i: 3^(n choose 2)
  // antisymmetric irreflexive relations, filtered for transitivity.
  std::vector<std::uint8_t> state(pairs.size(), 0);
  while (true) {
    BitMatrix m(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (state[k] == 1) m.set(pairs[k].first, pairs[k].second);
      if (state[k] == 2) m.set(pairs[k].second, pairs[k].first);
    }
    bool transitive = true;
    for (std::size_t x = 0; x < n && transitive; ++x) {
      detail::for_each_bit(m.row(x), [&](std::size_t y) {
        if (detail::first_outside(m.row(y), m.row(x)) != detail::npos) {
          transitive = false;
        }
      });
    }
    if (transitive) visit(Poset::from_matrix_unchecked(std::move(m)));
    std::size_t k = 0;
    while (k < state.size() && state[k] == 2) state[k++] = 0;
    if (k == state.size()) break;
    ++state[k];
  }
}

std::vector<Poset> enumerate_small_posets(std::size_t n) {
  std::vector<Poset> out;
  for_each_small_poset(n, [&](const Poset& p) { out.push_back(p); });
  return out;
}

}  // namespace posetcut
