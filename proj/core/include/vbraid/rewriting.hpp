#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "vbraid/diagram.hpp"
#include "vbraid/types.hpp"

namespace vbraid {

// Oriented rewrite rules: the defining relations of the three presentations
// closed under both orientations and formal inverses of both sides, plus the
// mixed-exponent far-commutativity consequences used to accelerate search.
// Enumerator order is alphabetical; neighbor enumeration sorts by it.
enum class RuleKind {
  far_comm,     // a_{ij}^e a_{kl}^f <-> a_{kl}^f a_{ij}^e, {i,j} and {k,l} disjoint
  free_insert,  // 1 -> a_{ij}^e a_{ij}^{-e} at a gap
  free_reduce,  // a_{ij}^e a_{ij}^{-e} -> 1
  involutive,   // a_{ij}^e -> a_{ij}^{-e}; valid since a_{ij}^2 = 1 (gn2 only)
  r3,           // a_{ij}a_{ik}a_{jk} <-> a_{jk}a_{ik}a_{ij}, uniform exponents
  virtualize,   // a_{ij}^e -> a_{ji}^e (tilde only)
};

std::string_view rule_name(RuleKind k);

// One rule application. pos is the 0-based index of the leftmost rewritten
// letter, or the 0-based gap index for free_insert; letter is the inserted
// letter for free_insert and unset otherwise.
struct RewriteStep {
  RuleKind rule = RuleKind::free_reduce;
  int pos = 0;
  std::optional<GeneratorLetter> letter;

  bool operator==(const RewriteStep&) const = default;
};

struct Neighbor {
  BraidWord word;
  RewriteStep step;
};

// Every word one oriented rule application away, in (rule, pos, letter)
// order. free_insert neighbors appear only when allow_growth is set;
// virtualize only in tilde mode; involutive only in gn2 mode.
std::vector<Neighbor> neighbors(const BraidWord& w, GroupMode mode, bool allow_growth);

// Applies one step after validating that its pattern matches; throws
// PreconditionError otherwise. Replaying a trace uses exactly this.
BraidWord apply_step(const BraidWord& w, const RewriteStep& step);

// The step that undoes `step` when `step` was applied to `before`.
RewriteStep invert_step(const BraidWord& before, const RewriteStep& step);

// Exponent sums per unordered strand pair, zero entries included. Invariant
// under every tilde-mode rule; the involutive rule moves entries by +-2, so
// the mod-2 image is the gn2 invariant.
std::map<std::pair<int, int>, int> pair_exponent_sums(const BraidWord& w);

struct SearchBounds {
  std::size_t max_len = 0;
  std::size_t max_states = 1000000;
};

// max_len = max(|w1|, |w2|) + 4, max_states = 10^6.
SearchBounds default_bounds(const BraidWord& w1, const BraidWord& w2);

enum class Verdict { equal, unknown };

struct SearchStats {
  std::uint64_t states_explored = 0;
  std::uint64_t frontier_peak = 0;
  // Set when the pair-sum invariant already distinguishes the inputs; the
  // verdict is then "unknown" in status but the words are certainly distinct.
  bool separated_by_invariant = false;
};

struct EquivalenceVerdict {
  Verdict status = Verdict::unknown;
  std::vector<RewriteStep> trace;  // only for equal: replays w1 into w2
  SearchStats stats;
};

// Bounded bidirectional breadth-first search over `neighbors` with the word
// length capped at bounds.max_len and each search side capped at
// bounds.max_states / 2 visited words. Deterministic for fixed inputs and
// bounds; never returns a false "equal".
EquivalenceVerdict equivalent(const BraidWord& w1, const BraidWord& w2,
                              GroupMode mode, const SearchBounds& bounds);
EquivalenceVerdict equivalent(const BraidWord& w1, const BraidWord& w2, GroupMode mode);

// The same bounded search over classical (virtual-free) diagram words under
// the classical moves: free reduction/insertion of s_p^e s_p^{-e}, far
// commutativity of crossings at distance >= 2, and the braid relation
// s_p s_{p+1} s_p <-> s_{p+1} s_p s_{p+1} with uniform exponents.
struct SigmaVerdict {
  Verdict status = Verdict::unknown;
  SearchStats stats;
};
SigmaVerdict sigma_equivalent(const DiagramWord& a, const DiagramWord& b,
                              const SearchBounds& bounds);

}  // namespace vbraid
