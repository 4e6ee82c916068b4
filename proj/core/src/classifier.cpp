#include "vbraid/classifier.hpp"

namespace vbraid {

AnnotatedWord classify_from(const BraidWord& w, const SignSet& s0) {
  AnnotatedWord out;
  out.word = w;
  out.states = prefix_states(w, s0);
  out.flags.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const GeneratorLetter& g = w.letters[k];
    out.flags.push_back(adjacent(out.states[k], g.over, g.under));
  }
  return out;
}

AnnotatedWord classify(const BraidWord& w) {
  w.validate();
  return classify_from(w, canonical_sign_set(w.n));
}

}  // namespace vbraid
