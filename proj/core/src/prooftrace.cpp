#include "posetcut/prooftrace.hpp"

#include <sstream>

#include "posetcut/detail/longest_chain.hpp"

namespace posetcut {

using detail::BitMatrix;
using detail::Word;

std::string_view to_string(ProofCase c) {
  return c == ProofCase::I ? "I" : "II";
}

std::size_t ProofTrace::case_count(ProofCase kind) const {
  std::size_t count = 0;
  for (const auto& s : steps) count += s.kind == kind;
  return count;
}

namespace {

[[noreturn]] void profile_violation(const std::string& what) {
  throw Error(ErrorCode::ProfileViolation, what);
}

// Profile of a top-down chain given a category lookup. Does not check
// cover/longest facts.
template <typename CategoryOf>
CaseDescriptor profile(std::span<const Element> chain, CategoryOf category_of) {
  const std::size_t t = chain.size();
  if (t < 2) {
    throw Error(ErrorCode::ChainTooShort,
                "chain of length " + std::to_string(t));
  }
  if (category_of(chain.front()) != Category::Surplus) {
    profile_violation("top of chain " + std::to_string(chain.front()) +
                      " is not surplus");
  }
  if (category_of(chain.back()) != Category::Deficit) {
    profile_violation("bottom of chain " + std::to_string(chain.back()) +
                      " is not deficit");
  }
  std::size_t i = 0;  // 0-based index of u_beta
  while (category_of(chain[i]) == Category::Surplus) ++i;
  CaseDescriptor d;
  d.beta = i + 1;
  if (category_of(chain[i]) == Category::Balanced) {
    d.kind = ProofCase::I;
    ++i;
  } else {
    d.kind = ProofCase::II;
  }
  for (; i < t; ++i) {
    if (category_of(chain[i]) != Category::Deficit) {
      profile_violation("u_" + std::to_string(i + 1) + " = " +
                        std::to_string(chain[i]) + " is " +
                        std::string(to_string(category_of(chain[i]))) +
                        " below the switch point");
    }
  }
  return d;
}

// Subcase from the categories of b and w after the removal.
int subcase_of(ProofCase kind, Category b, Category w) {
  const bool b_deficit = b == Category::Deficit;
  const bool w_surplus = w == Category::Surplus;
  const bool b_balanced = b == Category::Balanced;
  const bool w_balanced = w == Category::Balanced;
  if (b_deficit && w_surplus) return 1;
  if (b_deficit && w_balanced) return 2;
  if (b_balanced && w_surplus) return 3;
  if (kind == ProofCase::II && b_balanced && w_balanced) return 4;
  profile_violation("b became " + std::string(to_string(b)) + " and w became " +
                    std::string(to_string(w)) + " in case " +
                    std::string(to_string(kind)));
}

void set_lifts(TraceStep& step) {
  step.lift_w_to_top = step.subcase == 2 || step.subcase == 4;
  step.lift_b_to_bottom = step.subcase == 3 || step.subcase == 4;
}

// Mutable working copy for run_induction. Relations only disappear, so the
// linear extension computed once stays valid and degrees update in O(1).
class InductionState {
 public:
  explicit InductionState(const Poset& p)
      : n_(p.size()),
        m_(p.relation_count()),
        above_(p.above_matrix()),
        below_(p.size()),
        up_(p.size(), 0),
        down_(p.size(), 0),
        order_(linear_extension(p)) {
    for (Element x = 0; x < n_; ++x) {
      up_[x] = p.above(x).size();
      for (Element y : p.above(x)) {
        below_.set(y, x);
        ++down_[y];
      }
    }
  }

  std::uint64_t relation_count() const { return m_; }
  std::size_t size() const { return n_; }
  Category category(Element v) const { return categorize(up_[v], down_[v]); }
  bool less(Element x, Element y) const { return above_.test(x, y); }
  std::span<const Word> above_row(Element v) const { return above_.row(v); }
  std::span<const Word> below_row(Element v) const { return below_.row(v); }

  TraceStep step() {
    TraceStep s;
    s.m_before = m_;
    s.chain.elements = detail::longest_chain_top_down(
        order_, [&](std::size_t x) { return above_.row(x); },
        [&](std::size_t x) { return below_.row(x); });
    const auto& u = s.chain.elements;
    for (std::size_t j = 0; j + 1 < u.size(); ++j) {
      if (!is_cover(u[j + 1], u[j])) {
        profile_violation("chain link " + std::to_string(u[j + 1]) + " < " +
                          std::to_string(u[j]) + " is not a cover");
      }
    }
    const CaseDescriptor d =
        profile(u, [&](Element v) { return category(v); });
    s.kind = d.kind;
    s.beta = d.beta;
    if (d.kind == ProofCase::I) {
      s.b = u[d.beta];
      s.a = u[d.beta - 1];
      s.w = u[d.beta - 2];
      s.removed = {{s.b, *s.a}, {*s.a, s.w}};
    } else {
      s.b = u[d.beta - 1];
      s.w = u[d.beta - 2];
      s.removed = {{s.b, s.w}};
    }
    for (const Relation& r : s.removed) remove_cover(r);
    s.m_after = m_;
    if (s.a && category(*s.a) != Category::Balanced) {
      profile_violation("a = " + std::to_string(*s.a) +
                        " is not balanced after the removal");
    }
    s.subcase = subcase_of(s.kind, category(s.b), category(s.w));
    set_lifts(s);
    return s;
  }

  // Puts a removed pair back (used while lifting).
  void restore(const Relation& r) {
    above_.set(r.lower, r.upper);
    below_.set(r.upper, r.lower);
    ++up_[r.lower];
    ++down_[r.upper];
    ++m_;
  }

 private:
  bool is_cover(Element x, Element y) const {
    return above_.test(x, y) &&
           !detail::intersects(above_.row(x), below_.row(y));
  }

  void remove_cover(const Relation& r) {
    if (!is_cover(r.lower, r.upper)) {
      throw Error(ErrorCode::InternalAssertion,
                  "pair " + std::to_string(r.lower) + " < " +
                      std::to_string(r.upper) + " is not a cover");
    }
    above_.reset(r.lower, r.upper);
    below_.reset(r.upper, r.lower);
    --up_[r.lower];
    --down_[r.upper];
    --m_;
  }

  std::size_t n_;
  std::uint64_t m_;
  BitMatrix above_;
  BitMatrix below_;
  std::vector<std::size_t> up_;
  std::vector<std::size_t> down_;
  std::vector<Element> order_;
};

// Cut being lifted alongside an InductionState.
class LiftedCut {
 public:
  // Base case: an antichain, every element in B.
  explicit LiftedCut(std::size_t n)
      : sides_(n, Side::Bottom), bottom_(detail::words_for(n), ~Word{0}) {
    if (n % detail::kWordBits != 0) {
      bottom_.back() = (Word{1} << (n % detail::kWordBits)) - 1;
    }
  }

  std::uint64_t size() const { return size_; }
  Side side(Element v) const { return sides_[v]; }
  const std::vector<Side>& sides() const { return sides_; }

  void add_relation(const Relation& r) {
    size_ += sides_[r.lower] == Side::Bottom && sides_[r.upper] == Side::Top;
  }

  void move(const InductionState& s, Element v, Side to) {
    if (sides_[v] == to) return;
    const auto in_bottom = static_cast<std::int64_t>(
        detail::popcount_and(s.below_row(v), bottom_));
    std::int64_t above_in_top = 0;
    detail::for_each_bit(s.above_row(v), [&](std::size_t y) {
      above_in_top += sides_[y] == Side::Top;
    });
    const std::int64_t delta =
        to == Side::Bottom ? above_in_top - in_bottom : in_bottom - above_in_top;
    size_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(size_) + delta);
    sides_[v] = to;
    const Word bit = Word{1} << (v % detail::kWordBits);
    if (to == Side::Bottom) {
      bottom_[v / detail::kWordBits] |= bit;
    } else {
      bottom_[v / detail::kWordBits] &= ~bit;
    }
  }

 private:
  std::vector<Side> sides_;
  std::vector<Word> bottom_;
  std::uint64_t size_ = 0;
};

[[noreturn]] void lift_failure(std::size_t step, const std::string& what) {
  throw Error(ErrorCode::InternalAssertion,
              "lift of step " + std::to_string(step) + ": " + what);
}

}  // namespace

CaseDescriptor chain_profile(const Poset& p, const Chain& c) {
  const auto& u = c.elements;
  if (u.size() < 2) {
    throw Error(ErrorCode::ChainTooShort,
                "chain of length " + std::to_string(u.size()));
  }
  for (Element v : u) {
    if (!p.contains(v)) profile_violation("element out of range");
  }
  for (std::size_t j = 0; j + 1 < u.size(); ++j) {
    if (!is_cover(p, u[j + 1], u[j])) {
      profile_violation("chain link " + std::to_string(u[j + 1]) + " < " +
                        std::to_string(u[j]) + " is not a cover");
    }
  }
  if (u.size() != longest_chain(p).length()) {
    profile_violation("chain of length " + std::to_string(u.size()) +
                      " is not a longest chain");
  }
  const Classification cls = classify(p);
  return profile(u, [&](Element v) { return cls.category[v]; });
}

std::pair<Poset, TraceStep> inductive_step(const Poset& p) {
  if (p.relation_count() == 0) {
    throw Error(ErrorCode::AlreadyAntichain, "no relation left to remove");
  }
  TraceStep s;
  s.m_before = p.relation_count();
  s.chain = longest_chain(p);
  const CaseDescriptor d = chain_profile(p, s.chain);
  const auto& u = s.chain.elements;
  s.kind = d.kind;
  s.beta = d.beta;
  Poset q;
  if (d.kind == ProofCase::I) {
    s.b = u[d.beta];
    s.a = u[d.beta - 1];
    s.w = u[d.beta - 2];
    s.removed = {{s.b, *s.a}, {*s.a, s.w}};
    q = remove_relation(remove_relation(p, s.b, *s.a), *s.a, s.w);
  } else {
    s.b = u[d.beta - 1];
    s.w = u[d.beta - 2];
    s.removed = {{s.b, s.w}};
    q = remove_relation(p, s.b, s.w);
  }
  s.m_after = q.relation_count();
  const Classification cq = classify(q);
  if (s.a && cq.category[*s.a] != Category::Balanced) {
    profile_violation("a = " + std::to_string(*s.a) +
                      " is not balanced after the removal");
  }
  s.subcase = subcase_of(s.kind, cq.category[s.b], cq.category[s.w]);
  set_lifts(s);
  return {std::move(q), std::move(s)};
}

ProofTrace run_induction(const Poset& p) {
  ProofTrace trace;
  InductionState state(p);
  while (state.relation_count() > 0) trace.steps.push_back(state.step());
  trace.base_n = state.size();

  LiftedCut cut(state.size());
  for (std::size_t k = trace.steps.size(); k-- > 0;) {
    const TraceStep& s = trace.steps[k];
    const std::uint64_t before = cut.size();
    for (const Relation& r : s.removed) {
      state.restore(r);
      cut.add_relation(r);
    }
    if (s.lift_w_to_top) cut.move(state, s.w, Side::Top);
    if (s.lift_b_to_bottom) cut.move(state, s.b, Side::Bottom);
    if (cut.size() != before + 1) {
      lift_failure(k + 1, "size went from " + std::to_string(before) + " to " +
                              std::to_string(cut.size()));
    }
    for (Element v = 0; v < state.size(); ++v) {
      const Category c = state.category(v);
      if (c == Category::Deficit && cut.side(v) != Side::Bottom) {
        lift_failure(k + 1, "deficit element " + std::to_string(v) +
                                " is not in B");
      }
      if (c == Category::Surplus && cut.side(v) != Side::Top) {
        lift_failure(k + 1, "surplus element " + std::to_string(v) +
                                " is not in U");
      }
    }
  }
  trace.final_cut = make_cut(p, cut.sides());
  if (trace.final_cut.size != cut.size()) {
    throw Error(ErrorCode::InternalAssertion,
                "incremental size " + std::to_string(cut.size()) +
                    " disagrees with recomputed size " +
                    std::to_string(trace.final_cut.size));
  }
  const std::size_t case_i = trace.case_count(ProofCase::I);
  const std::size_t case_ii = trace.case_count(ProofCase::II);
  if (p.relation_count() != 2 * case_i + case_ii ||
      trace.final_cut.size != case_i + case_ii) {
    throw Error(ErrorCode::InternalAssertion, "step counts do not add up");
  }
  return trace;
}

std::string format_step(const TraceStep& s, std::size_t index) {
  std::ostringstream os;
  os << "step " << index << " case=" << to_string(s.kind)
     << " subcase=" << s.subcase << " beta=" << s.beta << " b=" << s.b;
  if (s.a) os << " a=" << *s.a;
  os << " w=" << s.w << " removed=";
  for (std::size_t i = 0; i < s.removed.size(); ++i) {
    if (i) os << ',';
    os << s.removed[i].lower << '<' << s.removed[i].upper;
  }
  os << " m=" << s.m_before << "->" << s.m_after << " lift=";
  if (!s.lift_w_to_top && !s.lift_b_to_bottom) {
    os << "none";
  } else {
    if (s.lift_w_to_top) os << "w:top";
    if (s.lift_w_to_top && s.lift_b_to_bottom) os << ',';
    if (s.lift_b_to_bottom) os << "b:bottom";
  }
  return os.str();
}

void write_trace(std::ostream& os, const ProofTrace& trace) {
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    os << format_step(trace.steps[k], k + 1) << '\n';
  }
  auto list = [&](const std::vector<Element>& v) {
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
  };
  os << "final size=" << trace.final_cut.size << " case_I="
     << trace.case_count(ProofCase::I)
     << " case_II=" << trace.case_count(ProofCase::II) << " bottom=";
  list(trace.final_cut.bottom);
  os << " top=";
  list(trace.final_cut.top);
  os << '\n';
}

}  // namespace posetcut
