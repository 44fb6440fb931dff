#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quiverlab/algebra.hpp"

namespace quiverlab {

// Right module as a quiver representation: a vector space k^dims[v] per vertex
// and, for an arrow a: x -> y, a (dims[y] x dims[x]) matrix. The path a1...ak
// acts by M(ak)...M(a1).
class Representation {
public:
    Representation() = default;
    Representation(std::vector<int> dims, std::vector<Matrix> maps);
    static Representation zero(const Quiver& q);

    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[static_cast<size_t>(v)]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const std::vector<Matrix>& maps() const { return maps_; }
    const Matrix& map(int arrow) const { return maps_[static_cast<size_t>(arrow)]; }

    friend bool operator==(const Representation& a, const Representation& b);

private:
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

// Throws ShapeMismatch unless every matrix matches its arrow's endpoints.
void check_shape(const Quiver& q, const Representation& m);
Matrix path_action(const Quiver& q, const Representation& m, const Path& p);
bool validate_module(const Presentation& pres, const Representation& m);

// Same spaces, arrows reversed: a representation of the opposite quiver.
Representation dual(const Representation& m);
Representation direct_sum(const Representation& a, const Representation& b);

// Compares by total dimension, then dimension vector, then matrix entries.
int canonical_compare(const Representation& a, const Representation& b);

// A module map as one matrix per vertex, (dim N_v) x (dim M_v).
using Morphism = std::vector<Matrix>;

struct HomBasis {
    std::vector<Morphism> maps;
    int dim() const { return static_cast<int>(maps.size()); }
};

bool is_intertwiner(const Quiver& q, const Representation& m, const Representation& n, const Morphism& f);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
bool is_invertible(const Morphism& f);

// P1 -> P0 -> M -> 0 with P0 = sum of P(top[g]) and P1 = sum of
// P(relation_vertices[k]). Generator g is the vector generators[g] of
// M at top[g]; relation k is sum_g relations[k][g], with
// relations[k][g] in e_{top[g]} A e_{relation_vertices[k]}.
struct ProjectivePresentation {
    std::vector<int> top;
    std::vector<Vector> generators;
    std::vector<int> relation_vertices;
    std::vector<std::vector<Element>> relations;
};

// Module over a fixed algebra with the data needed for Hom computations
// cached: its minimal projective presentation and the action of every
// basis path.
class PreparedModule {
public:
    PreparedModule(const Algebra& algebra, Representation rep);

    const Representation& rep() const { return rep_; }
    const ProjectivePresentation& presentation() const { return pres_; }
    // Action of basis path i of the algebra (zero-size when it leaves M's support).
    const Matrix& basis_action(int i) const { return actions_[static_cast<size_t>(i)]; }
    // The module map sending generator g to values[g].
    Morphism extend(const PreparedModule& target, const Vector& values) const;
    // Offsets of each generator inside a stacked value vector for `target`.
    std::vector<int> value_offsets(const PreparedModule& target) const;

private:
    friend class ModuleCategory;
    Representation rep_;
    ProjectivePresentation pres_;
    std::vector<Matrix> actions_;
    // Per vertex y: the selected spanning columns (generator, basis index)
    // and the inverse of the matrix they form.
    std::vector<std::vector<std::pair<int, int>>> columns_;
    std::vector<Matrix> column_inverse_;
};

// Modules over a finite-dimensional bound quiver algebra A; keeps A and
// A^op together so that both translates are available.
class ModuleCategory {
public:
    explicit ModuleCategory(const Presentation& pres, int max_degree = kDefaultMaxDegree);

    const Presentation& presentation() const { return algebra_->presentation(); }
    const Quiver& quiver() const { return algebra_->quiver(); }
    const Algebra& algebra() const { return *algebra_; }
    const Algebra& opposite_algebra() const { return *opposite_; }

    PreparedModule prepare(Representation rep) const { return PreparedModule(*algebra_, std::move(rep)); }

    Representation projective(int v) const;
    Representation injective(int v) const;
    Representation simple(int v) const;

    bool validate(const Representation& m) const { return validate_module(presentation(), m); }

    // Hom as the solution space in stacked generator values of m.
    linalg::MatrixX<Rational> hom_values(const PreparedModule& m, const PreparedModule& n) const;
    int hom_dim(const PreparedModule& m, const PreparedModule& n) const;
    HomBasis hom_basis(const PreparedModule& m, const PreparedModule& n) const;
    HomBasis hom_basis(const Representation& m, const Representation& n) const;

    // rank(trace form) on End(m) == 1.
    bool end_is_local(const PreparedModule& m) const;
    bool end_is_local(const Representation& m) const;
    // rad End(m) as a subspace of End(m) in hom_values coordinates.
    linalg::MatrixX<Rational> end_radical(const PreparedModule& m) const;

    // `known_indecomposable` lets the test use the local endomorphism ring
    // criterion instead of the coefficient grid.
    bool is_isomorphic(const PreparedModule& m, const PreparedModule& n,
                       bool known_indecomposable = false) const;
    bool is_isomorphic(const Representation& m, const Representation& n) const;

    ProjectivePresentation minimal_presentation(const Representation& m) const;
    Representation tau(const Representation& m) const;
    Representation tau_inv(const Representation& m) const;

private:
    std::shared_ptr<const Algebra> algebra_;
    std::shared_ptr<const Algebra> opposite_;
};

// Minimal projective presentation of a representation of A's quiver.
ProjectivePresentation minimal_presentation(const Algebra& a, const Representation& m);
// Tr M for the minimal presentation: a representation of the opposite quiver.
Representation transpose(const Algebra& a, const Representation& m);
Representation projective(const Algebra& a, int v);

// Convenience forms of the module operations.
HomBasis hom_basis(const Presentation& pres, const Representation& m, const Representation& n);
bool is_isomorphic(const Presentation& pres, const Representation& m, const Representation& n);
bool end_is_local(const Presentation& pres, const Representation& m);
Representation tau(const Presentation& pres, const Representation& m);
Representation tau_inv(const Presentation& pres, const Representation& m);

// {"dims":[...],"maps":{"a":[["p/q",...],...],...}}
std::string to_json(const Quiver& q, const Representation& m);

}  // namespace quiverlab
