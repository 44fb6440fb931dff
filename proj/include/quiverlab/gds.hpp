#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quiverlab/algebra.hpp"
#include "quiverlab/presentation.hpp"

namespace quiverlab {

// m x n commutative grid on vertices "(i,j)", 1 <= i <= m, 1 <= j <= n, with
// arrows h_i_j: (i,j) -> (i,j+1) and v_i_j: (i,j) -> (i+1,j) and one
// commutativity relation per unit square.
Presentation grid_presentation(int m, int n);

// A (x) B on vertices "(x,y)", arrows "(alpha,y)" and "(x,beta)"; relations:
// those of A at every y, those of B at every x, then the squares.
Presentation tensor(const Presentation& a, const Presentation& b);
Presentation enveloping(const Presentation& a);
// enveloping(A_n) with the first coordinate relabelled i -> n + 1 - i, so
// that both coordinates decrease along arrows. This is the frame in which
// auslander_deletion_set is stated; grid_presentation(n, n) is the same
// algebra read with both coordinates reversed.
Presentation standard_enveloping(int n);

// Identifies w with v for each pair; v's name survives. Adds a zero relation
// g d for every arrow pair with g ending and d starting in a glued class
// that was not composable before.
Presentation glue(const Presentation& pres, const std::vector<std::pair<std::string, std::string>>& pairs);

struct PathPair {
    Path first;
    Path second;
};
// Pairs (p1, p2) of paths that are nonzero in kQ/I with p1 ending and p2
// starting at v, not both trivial and of lengths <= max_length; ordered by
// total length, then p1, then p2.
std::vector<PathPair> crossing_set(const Presentation& pres, const std::string& v, int max_length);

struct GluingSpec {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::set<std::string> deletions;
    std::set<std::string> supplement;
};

// glue, then delete, then drop every zero relation whose path passes
// through a supplement vertex. Multi-term relations are kept.
Presentation gluing_algebra(const Presentation& pres, const GluingSpec& spec);

struct GridEmbedding {
    int rows = 0;
    int cols = 0;
    std::map<std::string, std::pair<int, int>> coords;  // 1-based (i, j)
};

// Smallest-area grid realising the quiver as an induced subquiver of
// grid_presentation(rows, cols). Throws NotPDS when there is none.
GridEmbedding embed_into_grid(const Presentation& pres);

// Every pair u -> a -> w, u -> b -> w with four distinct vertices is
// identified modulo I.
bool check_diamonds_commutative(const Presentation& pres);

enum class DeletionFamily { A, D };
// The vertex set removed from the n x n grid in the Auslander algebra
// descriptions of linear A_n (n >= 1) and D_n (n >= 4).
std::set<std::string> auslander_deletion_set(DeletionFamily family, int n);

std::string grid_vertex(int i, int j);

}  // namespace quiverlab
