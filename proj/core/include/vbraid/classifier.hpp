#pragma once

#include <vector>

#include "vbraid/sign_action.hpp"

namespace vbraid {

// A word with one good/bad flag per letter (good = true) and the surrounding
// sign-set states: states[k] is the state letter k acts on, so
// |states| = |letters| + 1 and flags[k] = adjacent(states[k], over_k, under_k).
struct AnnotatedWord {
  BraidWord word;
  std::vector<bool> flags;
  std::vector<SignSet> states;
};

// Flags every letter by adjacency of its strand pair in the state preceding
// it, starting from the canonical sign set. Deterministic.
AnnotatedWord classify(const BraidWord& w);

// Same, from an arbitrary initial state. The flag laws are local in the
// initial state, so verification campaigns set it directly.
AnnotatedWord classify_from(const BraidWord& w, const SignSet& s0);

}  // namespace vbraid
