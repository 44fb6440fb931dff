#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverlab/presentation.hpp"
#include "quiverlab/representation.hpp"

namespace quiverlab::families {

// 1 -> 2 -> ... -> n with arrows named a, b, c, ... (n <= 27).
Presentation linear_a(int n);
// Linear A_n modulo all paths of length `length`.
Presentation linear_a_truncated(int n, int length);
// 1 -a1-> 3, 2 -a2-> 3, k -ak-> k+1 for 3 <= k < n, modulo a2 a3 (n >= 4).
Presentation type_d(int n);
// Triangle 1 -a-> 2 -b-> 3 with c: 1 -> 3, modulo a b.
Presentation triangle();
// The nine-vertex bound quiver with twelve arrows a1..a4, b1..b4, c1..c4
// and its three commutativity plus four zero relations.
Presentation triangle_auslander_reference();
// Star-shaped quiver X with two commutative squares meeting at vertex 3.
Presentation star_x();
// The one-parameter representation of star_x(); indecomposable for lambda != 0.
Representation star_module(const Rational& lambda);
// Two parallel arrows a, b: 1 -> 2, no relations.
Presentation kronecker();

// Looks up "a<n>", "d<n>", "triangle", "triangle-aus", "star", "kronecker".
std::optional<Presentation> builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace quiverlab::families
