#pragma once

#include <optional>
#include <vector>

#include "vbraid/types.hpp"

namespace vbraid {

// A placement of the strands on the real line. order[p-1] is the strand at
// position p counted from the left; rank[i-1] is the position of strand i.
// The two arrays are mutually inverse permutations of 1..n.
struct Realization {
  std::vector<int> order;
  std::vector<int> rank;

  bool operator==(const Realization&) const = default;
};

// Right action of one letter: negates s(i,j) and s(j,i), leaves every other
// sign alone. The exponent of the letter is irrelevant (negation is an
// involution, so the action factors through the involutive quotient).
SignSet apply_letter(const SignSet& s, const GeneratorLetter& g);

// Left-to-right fold of apply_letter over the word. Requires w.n = s.n.
SignSet act(const BraidWord& w, const SignSet& s);

// All intermediate states: element k is the state after the first k letters,
// so the result has |w|+1 elements and element 0 is s0.
std::vector<SignSet> prefix_states(const BraidWord& w, const SignSet& s0);

// A sign set is realizable iff "i left of j <=> s(i,j) = +1" is a strict
// total order, i.e. iff the induced tournament is transitive (an O(n^3)
// check). The unique order is then recovered by counting outgoing +1 signs:
// the leftmost strand beats all n-1 others.
std::optional<Realization> is_realizable(const SignSet& s);

// True iff s(i,k) = s(j,k) for every k outside {i,j}. Symmetric in i and j.
// In a realizable set this says exactly that i and j sit at consecutive
// positions of the realization.
bool adjacent(const SignSet& s, int i, int j);

}  // namespace vbraid
