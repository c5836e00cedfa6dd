#ifndef POSETCUT_PROOFTRACE_HPP
#define POSETCUT_PROOFTRACE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetcut/maxcut.hpp"
#include "posetcut/poset.hpp"

namespace posetcut {

// Executable form of the half-bound induction on m. Every step takes a
// longest chain u_1 > ... > u_t, reads the surplus/balanced/deficit profile
// along it, and removes one or two cover pairs at the profile's switch point:
//
//   Case I : u_beta balanced; remove b < a and a < w where
//            b = u_{beta+1}, a = u_beta, w = u_{beta-1}. m drops by 2.
//   Case II: u_beta the first deficit; remove b < w where b = u_beta,
//            w = u_{beta-1}. m drops by 1.
//
// Lifting a cut (V, W) of the smaller poset back gains exactly one crossing
// pair, after moving w to the top when it became balanced and b to the bottom
// when it became balanced.

enum class ProofCase : std::uint8_t { I, II };

std::string_view to_string(ProofCase c);

struct CaseDescriptor {
  ProofCase kind = ProofCase::II;
  std::size_t beta = 0;  // 1-based position on the chain

  friend bool operator==(const CaseDescriptor&, const CaseDescriptor&) =
      default;
};

/// Checks the facts every longest chain satisfies and locates the case split.
/// Throws ChainTooShort for t < 2 and ProfileViolation when the chain is not
/// a longest chain of consecutive covers or its profile is not surplus*,
/// optionally one balanced, then deficit+.
CaseDescriptor chain_profile(const Poset& p, const Chain& c);

struct TraceStep {
  ProofCase kind = ProofCase::II;
  int subcase = 0;  // I: 1..3, II: 1..4
  Chain chain;
  std::size_t beta = 0;
  Element b = 0;
  std::optional<Element> a;  // Case I only
  Element w = 0;
  std::vector<Relation> removed;
  std::uint64_t m_before = 0;
  std::uint64_t m_after = 0;
  // Lifting moves prescribed by the subcase.
  bool lift_w_to_top = false;
  bool lift_b_to_bottom = false;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ProofTrace {
  std::vector<TraceStep> steps;
  std::size_t base_n = 0;
  Cut final_cut;

  std::size_t case_count(ProofCase kind) const;
};

/// One induction step. Throws AlreadyAntichain when m = 0.
std::pair<Poset, TraceStep> inductive_step(const Poset& p);

/// Runs the induction down to an antichain, then rebuilds the cut step by
/// step. Every lift is checked: the size grows by exactly one, deficit
/// elements sit in B and surplus elements in U. A failed check throws
/// InternalAssertion naming the step.
ProofTrace run_induction(const Poset& p);

/// One line per step:
///   step <k> case=<I|II> subcase=<s> beta=<β> b=<b> [a=<a> ]w=<w>
///        removed=<x<y>[,<x<y>] m=<before>-><after> lift=<...>
std::string format_step(const TraceStep& step, std::size_t index);
void write_trace(std::ostream& os, const ProofTrace& trace);

}  // namespace posetcut

#endif  // POSETCUT_PROOFTRACE_HPP
