#pragma once

#include <cstddef>
#include <vector>

#include "vbraid/types.hpp"

namespace vbraid {

// A geometric letter on n strands: a classical crossing at position p with a
// writhe of +1 or -1, or a virtual crossing (exponent 0).
struct DiagramLetter {
  int pos = 1;
  int exponent = +1;

  bool is_virtual() const { return exponent == 0; }

  bool operator==(const DiagramLetter&) const = default;
};

// A braid diagram read as a word: crossings listed top to bottom, each acting
// on the strands at positions pos, pos+1.
struct DiagramWord {
  int n = 2;
  std::vector<DiagramLetter> letters;

  std::size_t size() const { return letters.size(); }
  std::size_t sigma_count() const;
  bool has_virtual() const;
  void validate() const;

  bool operator==(const DiagramWord&) const = default;
};

// Composes the position swaps of all letters (classical and virtual alike).
// Entry p-1 is the strand arriving at position p at the bottom.
std::vector<int> end_permutation(const DiagramWord& dw);

// True iff the end permutation is the identity.
bool is_pure(const DiagramWord& dw);

// Reads classical crossings top to bottom, tracking which strand occupies
// each position; strands carry the global enumeration by endpoints. At
// s<p>^{+1} the strand at position p passes over the one at p+1 and the
// under strand enters from the top-right, giving the letter a_{over,under};
// at s<p>^{-1} the roles mirror and the exponent is -1. Virtual crossings
// emit nothing and only swap occupants. Requires a pure diagram.
BraidWord o_map(const DiagramWord& dw);

}  // namespace vbraid
