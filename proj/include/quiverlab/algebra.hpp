#pragma once

#include <map>
#include <utility>
#include <vector>

#include "quiverlab/linalg.hpp"
#include "quiverlab/presentation.hpp"

namespace quiverlab {

inline constexpr int kDefaultMaxDegree = 64;

// Per-degree path representatives of a basis of kQ/I.
struct BasisReport {
    std::vector<std::vector<Path>> by_degree;
    int dimension = 0;     // number of listed basis paths
    bool truncated = false;  // degree `degree_limit` still had basis elements
    int degree_limit = 0;    // max_degree used for the computation
};

// Sparse vector in the path basis of an Algebra: (basis index, coefficient),
// sorted by index, no zero coefficients.
using Element = std::vector<std::pair<int, Rational>>;

Element add_scaled(const Element& a, const Element& b, const Rational& c);

// The graded algebra kQ/I with a basis of paths. A path is a basis element
// when it is not a pivot of the RREF of the degree-d ideal block it lives
// in; every path reduces to a combination of basis paths of the same degree,
// source and target.
class Algebra {
public:
    explicit Algebra(Presentation pres, int max_degree = kDefaultMaxDegree);

    const Presentation& presentation() const { return pres_; }
    const Quiver& quiver() const { return pres_.quiver(); }
    const BasisReport& report() const { return report_; }
    bool is_finite() const { return !report_.truncated; }
    // Throws InfiniteDimensional for truncated algebras.
    int dimension() const;
    void require_finite() const;

    const std::vector<Path>& basis() const { return basis_; }
    const Path& basis_path(int i) const { return basis_[static_cast<size_t>(i)]; }
    // Basis indices of e_x A e_y in basis order.
    const std::vector<int>& basis_between(int x, int y) const;
    // Basis indices of e_x A (all paths starting at x).
    const std::vector<int>& basis_from(int x) const { return from_[static_cast<size_t>(x)]; }
    // Basis indices of A e_y (all paths ending at y).
    const std::vector<int>& basis_to(int y) const { return to_[static_cast<size_t>(y)]; }
    int trivial_index(int vertex) const { return trivial_[static_cast<size_t>(vertex)]; }

    Element reduce(const Path& p) const;
    Element reduce(const Relation& r) const;
    bool in_ideal(const Relation& r) const { return reduce(r).empty(); }

    Element multiply(int i, int j) const;
    Element multiply(const Element& a, const Element& b) const;
    // basis_path(i) followed by the arrow, reduced (zero when not composable).
    const Element& times_arrow(int i, int arrow) const;
    // The arrow followed by basis_path(i), reduced.
    const Element& arrow_times(int arrow, int i) const;

private:
    struct Block {
        std::vector<Path> paths;  // all paths of this degree from source to target
        linalg::Subspace<Rational> ideal;
    };
    struct Slot {
        int degree;
        int coordinate;
    };

    void compute(int max_degree);
    Element normal_form(const Block& block, int coordinate) const;

    Presentation pres_;
    BasisReport report_;
    // blocks_[d][(x,y)]
    std::vector<std::map<std::pair<int, int>, Block>> blocks_;
    std::map<Path, Slot> slots_;
    std::map<Path, int> basis_index_;
    std::vector<Path> basis_;
    std::vector<int> trivial_;
    std::map<std::pair<int, int>, std::vector<int>> between_;
    std::vector<std::vector<int>> from_;
    std::vector<std::vector<int>> to_;
    std::vector<std::vector<Element>> right_;  // right_[i][arrow]
    std::vector<std::vector<Element>> left_;   // left_[i][arrow]
};

BasisReport path_basis(const Presentation& pres, int max_degree = kDefaultMaxDegree);
bool is_admissible(const Presentation& pres, int max_degree = kDefaultMaxDegree);

}  // namespace quiverlab
