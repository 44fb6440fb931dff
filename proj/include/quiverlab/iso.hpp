#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverlab/algebra.hpp"

namespace quiverlab {

inline constexpr long kDefaultIsoBudget = 1000000;

// Vertex v of A goes to vertices[v] of B, arrow a to scalars[a] * arrows[a].
struct IsoWitness {
    std::vector<int> vertices;
    std::vector<int> arrows;
    std::vector<Rational> scalars;
};

enum class IsoStatus { Found, None, Inconclusive };

struct IsoResult {
    IsoStatus status = IsoStatus::None;
    std::optional<IsoWitness> witness;
    std::string reason;  // why None or Inconclusive
};

// Arrow images are restricted to nonzero multiples of single arrows and the
// scalars to +-1 (all ones tried first). Inconclusive is returned when the
// search budget (vertex assignments tried) runs out, or when a candidate
// was skipped because of these restrictions and no witness turned up.
// Throws InfiniteDimensional unless both algebras are finite.
IsoResult find_iso(const Algebra& a, const Algebra& b, long budget = kDefaultIsoBudget);
IsoResult find_iso(const Presentation& a, const Presentation& b, long budget = kDefaultIsoBudget);

// Independent re-check: bijections, endpoints, nonzero scalars, equal
// graded dimensions, and every relation of A mapped into the ideal of B.
bool verify_iso(const Algebra& a, const Algebra& b, const IsoWitness& w);
bool verify_iso(const Presentation& a, const Presentation& b, const IsoWitness& w);

// Two-column "A -> B" table, vertices first, then arrows with scalars.
std::string to_string(const Quiver& a, const Quiver& b, const IsoWitness& w);

}  // namespace quiverlab
