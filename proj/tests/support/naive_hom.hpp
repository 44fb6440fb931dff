#pragma once

// Direct intertwiner solver used as an oracle against the presentation
// based Hom computation of the library.

#include <vector>

#include "quiverlab/representation.hpp"

namespace quiverlab::testing {

// Basis of the solutions of f_t M(a) = N(a) f_s, one unknown per entry.
inline std::vector<Morphism> naive_hom_basis(const Quiver& q, const Representation& m, const Representation& n) {
    std::vector<int> offset;
    int unknowns = 0;
    for (int v = 0; v < q.vertex_count(); ++v) {
        offset.push_back(unknowns);
        unknowns += m.dim(v) * n.dim(v);
    }
    std::vector<Vector> rows;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const int s = q.arrow(a).source, t = q.arrow(a).target;
        // entry (i, j) of f_t M(a) - N(a) f_s, with f_v(r, c) at offset[v] + r * m.dim(v) + c
        for (int i = 0; i < n.dim(t); ++i) {
            for (int j = 0; j < m.dim(s); ++j) {
                Vector row = Vector::Zero(unknowns);
                for (int k = 0; k < m.dim(t); ++k) row(offset[t] + i * m.dim(t) + k) += m.map(a)(k, j);
                for (int k = 0; k < n.dim(s); ++k) row(offset[s] + k * m.dim(s) + j) -= n.map(a)(i, k);
                rows.push_back(row);
            }
        }
    }
    Matrix e(static_cast<Eigen::Index>(rows.size()), unknowns);
    for (size_t r = 0; r < rows.size(); ++r) e.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
    Matrix ker = rows.empty() ? Matrix(Matrix::Identity(unknowns, unknowns)) : linalg::kernel(e);
    std::vector<Morphism> out;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        Morphism f;
        for (int v = 0; v < q.vertex_count(); ++v) {
            Matrix fv(n.dim(v), m.dim(v));
            for (int r = 0; r < n.dim(v); ++r) {
                for (int k = 0; k < m.dim(v); ++k) fv(r, k) = ker(offset[v] + r * m.dim(v) + k, c);
            }
            f.push_back(fv);
        }
        out.push_back(f);
    }
    return out;
}

inline Vector flatten(const Morphism& f) {
    Eigen::Index size = 0;
    for (const auto& m : f) size += m.size();
    Vector v(size);
    Eigen::Index at = 0;
    for (const auto& m : f) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) v(at++) = m(r, c);
        }
    }
    return v;
}

// dim rad(X, Y) / rad^2(X, Y) over a list of bricks (End = k for every
// entry, so rad(X, X) = 0 and rad(X, Y) = Hom(X, Y) otherwise).
inline std::vector<std::vector<int>> naive_irreducible_counts(const Quiver& q, const std::vector<Representation>& list) {
    const size_t n = list.size();
    std::vector<std::vector<std::vector<Morphism>>> rad(n, std::vector<std::vector<Morphism>>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i != j) rad[i][j] = naive_hom_basis(q, list[i], list[j]);
        }
    }
    std::vector<std::vector<int>> irr(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (rad[i][j].empty()) continue;
            std::vector<Vector> composites;
            for (size_t k = 0; k < n; ++k) {
                for (const auto& f : rad[i][k]) {
                    for (const auto& g : rad[k][j]) composites.push_back(flatten(compose(g, f)));
                }
            }
            Eigen::Index r2 = 0;
            if (!composites.empty()) {
                Matrix m(static_cast<Eigen::Index>(composites.size()), composites.front().size());
                for (size_t c = 0; c < composites.size(); ++c) m.row(static_cast<Eigen::Index>(c)) = composites[c].transpose();
                r2 = linalg::rank(m);
            }
            irr[i][j] = static_cast<int>(rad[i][j].size()) - static_cast<int>(r2);
        }
    }
    return irr;
}

}  // namespace quiverlab::testing
