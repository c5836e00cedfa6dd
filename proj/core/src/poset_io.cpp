#include "posetcut/poset_io.hpp"

#include <charconv>
#include <sstream>

namespace posetcut {

std::string_view to_string(FileMode mode) {
  return mode == FileMode::Relations ? "relations" : "covers";
}

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t number(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    parse_error(line, "expected a non-negative integer, got '" +
                          std::string(tok) + "'");
  }
  return v;
}

}  // namespace

PosetFile parse_poset_file(std::istream& in) {
  PosetFile file;
  bool have_header = false;
  std::uint64_t declared = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto tok = tokens(raw);
    if (tok.empty() || tok[0].starts_with('#')) continue;
    if (!have_header) {
      if (tok.size() != 4 || tok[0] != "poset") {
        parse_error(line_no, "expected header 'poset <n> <m> <mode>'");
      }
      const std::uint64_t n = number(tok[1], line_no);
      if (n > std::uint64_t{1} << 31) parse_error(line_no, "n too large");
      file.n = static_cast<std::size_t>(n);
      declared = number(tok[2], line_no);
      if (tok[3] == "relations") {
        file.mode = FileMode::Relations;
      } else if (tok[3] == "covers") {
        file.mode = FileMode::Covers;
      } else {
        parse_error(line_no, "unknown mode '" + std::string(tok[3]) + "'");
      }
      have_header = true;
      continue;
    }
    if (tok.size() != 2) parse_error(line_no, "expected '<x> <y>'");
    if (file.pairs.size() == declared) {
      parse_error(line_no, "more than the declared " +
                               std::to_string(declared) + " pairs");
    }
    const std::uint64_t x = number(tok[0], line_no);
    const std::uint64_t y = number(tok[1], line_no);
    if (x >= file.n || y >= file.n) {
      parse_error(line_no, "element ID out of range 0.." +
                               std::to_string(file.n) + "-1");
    }
    file.pairs.push_back({static_cast<Element>(x), static_cast<Element>(y)});
  }
  if (!have_header) parse_error(line_no, "missing header");
  if (file.pairs.size() != declared) {
    parse_error(line_no, "declared " + std::to_string(declared) +
                             " pairs, found " +
                             std::to_string(file.pairs.size()));
  }
  return file;
}

PosetFile parse_poset_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_poset_file(in);
}

Poset to_poset(const PosetFile& file) {
  return file.mode == FileMode::Relations
             ? Poset::from_relations(file.n, file.pairs)
             : Poset::from_covers(file.n, file.pairs);
}

void write_poset_file(std::ostream& os, const Poset& p, FileMode mode) {
  const auto pairs =
      mode == FileMode::Relations ? p.relations() : transitive_reduction(p);
  os << "poset " << p.size() << ' ' << pairs.size() << ' ' << to_string(mode)
     << '\n';
  for (const Relation& r : pairs) os << r.lower << ' ' << r.upper << '\n';
}

std::string format_poset_file(const Poset& p, FileMode mode) {
  std::ostringstream os;
  write_poset_file(os, p, mode);
  return os.str();
}

void write_dot(std::ostream& os, const Poset& p, const std::optional<Cut>& cut) {
  std::vector<Side> sides;
  if (cut) sides = sides_of(p, *cut);
  os << "digraph poset {\n"
     << "  rankdir=BT;\n"
     << "  node [shape=circle];\n";
  for (Element v = 0; v < p.size(); ++v) {
    os << "  " << v;
    if (cut) {
      os << (sides[v] == Side::Bottom
                 ? " [style=filled, fillcolor=lightblue, group=B]"
                 : " [style=filled, fillcolor=lightsalmon, group=U]");
    }
    os << ";\n";
  }
  for (const Relation& r : transitive_reduction(p)) {
    os << "  " << r.lower << " -> " << r.upper;
    if (cut && sides[r.lower] == Side::Bottom && sides[r.upper] == Side::Top) {
      os << " [color=red, penwidth=2]";
    }
    os << ";\n";
  }
  os << "}\n";
}

}  // namespace posetcut
