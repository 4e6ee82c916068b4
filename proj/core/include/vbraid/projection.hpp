#pragma once

#include <vector>

#include "vbraid/classifier.hpp"
#include "vbraid/diagram.hpp"

namespace vbraid {

// The subsequence of letters flagged good by classify(w).
BraidWord delete_bad(const BraidWord& w);

// Iterates delete_bad to a literal word fixpoint. The length strictly
// decreases until the fixpoint, so this terminates; at the fixpoint every
// remaining letter is good. A single pass is not idempotent in general.
BraidWord d_stab(const BraidWord& w);

// How one input letter was realized geometrically: the appended crossing at
// position `position` reads back (top to bottom) as `emitted`, which is the
// input letter itself or its virtualization.
struct CrossingWitness {
  GeneratorLetter input;
  GeneratorLetter emitted;
  int position = 1;
  bool virtualized = false;

  bool operator==(const CrossingWitness&) const = default;
};

struct ClassicalReconstruction {
  DiagramWord sigma_word;                // classical letters only
  std::vector<CrossingWitness> witness;  // one record per input letter
};

// Rebuilds a classical diagram word from an all-good word acting trivially on
// the canonical sign set. Goodness keeps every prefix state realizable (this
// is re-checked at every step and surfaced as InvariantViolation if it ever
// fails); the letter's strands then sit at consecutive positions p, p+1 of
// the realization, and the crossing s<p> with the letter's exponent is
// appended. Whether the crossing reads back as a_{ij} or a_{ji} is recorded
// in the witness rather than forced. Rejects words with a bad letter and
// words acting nontrivially.
ClassicalReconstruction reconstruct_classical(const BraidWord& w);

}  // namespace vbraid
