#pragma once

#include <string>
#include <string_view>

#include "quiverlab/presentation.hpp"

namespace quiverlab {

// Line-oriented quiver file:
//   vertices: v1 v2 ...
//   arrow: name source target
//   relation: [c*]a b + [c*]d e - ...
// '#' starts a comment. Throws ParseError (syntax) or Error (semantic issues
// such as unknown arrows, non-parallel or inhomogeneous relations).
Presentation parse_presentation(std::string_view text);

// Canonical text form; parse_presentation(serialize(p)) == p.
std::string serialize(const Presentation& pres);

Presentation read_presentation_file(const std::string& path);

}  // namespace quiverlab
