#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverlab/representation.hpp"

namespace quiverlab {

inline constexpr int kDefaultCutoff = 500;

// Translation quiver of a list of indecomposables in canonical order.
struct ARQuiver {
    std::vector<Representation> modules;
    std::vector<std::vector<int>> irr;  // irr[i][j]: irreducible maps i -> j
    std::vector<std::optional<int>> tau;
    std::vector<bool> projective;
    std::vector<bool> injective;
    std::vector<std::vector<int>> hom_dims;  // dim Hom(i, j)
    bool directed = true;                    // no oriented cycle of irreducible maps

    int size() const { return static_cast<int>(modules.size()); }
};

struct Mesh {
    int end = 0;    // non-projective N
    int start = 0;  // tau N
    std::vector<std::pair<int, int>> middles;  // (E, irr(E, N))
};

enum class ClosureStatus { Complete, RepInfiniteSuspected };

struct Classification {
    ClosureStatus status = ClosureStatus::Complete;
    std::vector<Representation> modules;  // canonical order when complete
    std::optional<ARQuiver> ar;           // present when complete
};

// Closure of the projectives (and any extra indecomposable seeds) under
// tau^-1. The closure is abandoned as RepInfiniteSuspected once it exceeds
// `cutoff` modules or a module exceeds max(64, 4 dim A) in total
// dimension. Otherwise the AR quiver is built and
// certified complete with completeness_defect. Without seeds a failed
// certificate or an oriented cycle raises DirectednessViolated.
Classification classify(const ModuleCategory& cat, int cutoff = kDefaultCutoff,
                        const std::vector<Representation>& seeds = {});

// classify, falling back to string modules as seeds for string algebras
// whose AR quiver is not directed.

Classification all_indecomposables(const Presentation& pres, int cutoff = kDefaultCutoff);
std::optional<int> count_indecomposables(const Presentation& pres, int cutoff = kDefaultCutoff);

// Builds irr, tau and the flags for a complete list of pairwise
// non-isomorphic indecomposables; the list is sorted canonically first.
// Throws IncompleteList when completeness_defect finds a gap.
ARQuiver ar_quiver(const ModuleCategory& cat, std::vector<Representation> indec);

// Returns a description of the first gap, or nothing when the list is
// closed under predecessors and successors in the AR quiver and meets every
// block of the algebra in one component. A closed list of a connected
// algebra is all of ind A.
std::optional<std::string> completeness_defect(const ModuleCategory& cat, const ARQuiver& ar);

std::vector<Mesh> meshes(const ARQuiver& ar);

// (k Gamma / mesh ideal)^op on vertices M1..Mn; the arrow "f<i>_<j>" runs
// from M<j> to M<i> for each irreducible map M<i> -> M<j> of Gamma.
// Throws MultiplicityUnsupported if some irr >= 2.
Presentation auslander_presentation(const ARQuiver& ar);

// Sum of dim Hom(M, N) over the list.
long total_hom_dimension(const ARQuiver& ar);

// DOT: solid edges for irreducible maps, dashed for tau.
std::string to_dot(const ARQuiver& ar);

}  // namespace quiverlab
