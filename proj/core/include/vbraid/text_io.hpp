#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vbraid/diagram.hpp"
#include "vbraid/rewriting.hpp"
#include "vbraid/types.hpp"

namespace vbraid {

// Canonical text formats, all 1-based and whitespace-separated with a
// leading `n=<int>` header token:
//   words      a[i,j] and a[i,j]^-1
//   diagrams   s<p>, s<p>^-1, v<p>
//   sign sets  one single +/- token, row-major upper triangle
// An absent letter list denotes the empty word. render and parse are mutual
// inverses on canonical text and on values.

std::string render_letter(const GeneratorLetter& g);
std::string render_word(const BraidWord& w);
BraidWord parse_word(std::string_view text);

std::string render_diagram_letter(const DiagramLetter& l);
std::string render_diagram(const DiagramWord& dw);
DiagramWord parse_diagram(std::string_view text);

std::string render_sign_set(const SignSet& s);
SignSet parse_sign_set(std::string_view text);

// e.g. free_reduce@3 (positions 1-based), free_insert@2:a[1,3]
std::string render_step(const RewriteStep& step);
std::string render_trace(const std::vector<RewriteStep>& trace);

std::string_view mode_name(GroupMode mode);
GroupMode mode_from_name(std::string_view name);  // pbn | tilde | gn2

}  // namespace vbraid
