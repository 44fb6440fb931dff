#pragma once

// Seeded generators and independent oracles shared by the unit tests and
// the acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "quiverlab/algebra.hpp"
#include "quiverlab/gds.hpp"
#include "quiverlab/linalg.hpp"

namespace quiverlab::testing {

// Acyclic quiver on 3..5 vertices with arrows i -> j (i < j) and a mix of
// monomial and two-term length-2 relations plus the occasional length-3
// zero relation. Always finite-dimensional.
inline Presentation random_presentation(std::mt19937& rng) {
    std::uniform_int_distribution<int> vcount(3, 5);
    std::bernoulli_distribution coin(0.5);
    const int n = vcount(rng);
    std::vector<std::string> names;
    for (int v = 1; v <= n; ++v) names.push_back(std::to_string(v));
    std::vector<Arrow> arrows;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j == i + 1 || coin(rng)) {
                arrows.push_back({"x" + std::to_string(arrows.size()), i, j});
            }
        }
    }
    Quiver q(names, arrows);

    std::vector<Path> len2;
    for (int a = 0; a < q.arrow_count(); ++a) {
        for (int b : q.arrows_from(q.arrow(a).target)) len2.push_back(Path::from_arrows(q, {a, b}));
    }
    std::vector<Relation> rels;
    std::vector<bool> used(len2.size(), false);
    std::uniform_int_distribution<int> coeff(1, 3);
    for (size_t i = 0; i < len2.size(); ++i) {
        if (used[i] || !coin(rng)) continue;
        size_t partner = len2.size();
        for (size_t j = i + 1; j < len2.size(); ++j) {
            if (!used[j] && len2[j].source() == len2[i].source() && len2[j].target() == len2[i].target()) {
                partner = j;
                break;
            }
        }
        used[i] = true;
        if (partner < len2.size() && coin(rng)) {
            used[partner] = true;
            rels.emplace_back(std::vector<Term>{{Rational(1), len2[i]},
                                                {Rational(-coeff(rng)), len2[partner]}});
        } else {
            rels.push_back(Relation::monomial(len2[i]));
        }
    }
    for (const Path& p : len2) {
        for (int c : q.arrows_from(p.target())) {
            if (coin(rng) && coin(rng)) {
                auto arr = p.arrows();
                arr.push_back(c);
                rels.push_back(Relation::monomial(Path::from_arrows(q, arr)));
            }
        }
    }
    return Presentation(q, rels);
}

// Up to `count` random zero relations of length 2 or 3, avoiding every
// vertex in `avoid`.
inline std::vector<Relation> random_monomials(std::mt19937& rng, const Quiver& q, int count,
                                              const std::vector<int>& avoid = {}) {
    std::vector<Path> pool;
    auto ok = [&](const Path& p) {
        for (int v : avoid) {
            if (p.touches(q, v)) return false;
        }
        return true;
    };
    for (int a = 0; a < q.arrow_count(); ++a) {
        for (int b : q.arrows_from(q.arrow(a).target)) {
            Path p = Path::from_arrows(q, {a, b});
            if (ok(p)) pool.push_back(p);
            for (int c : q.arrows_from(p.target())) {
                Path r = Path::from_arrows(q, {a, b, c});
                if (ok(r)) pool.push_back(r);
            }
        }
    }
    std::vector<Relation> out;
    if (pool.empty()) return out;
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < count; ++i) out.push_back(Relation::monomial(pool[pick(rng)]));
    return out;
}

inline linalg::VectorX<Rational> dense(const Element& e, int dim) {
    linalg::VectorX<Rational> v = linalg::VectorX<Rational>::Zero(dim);
    for (const auto& [i, c] : e) v(i) = c;
    return v;
}

// The two-sided ideal of A generated by `extra`, spanned by x r y over
// basis elements x, y; computed entirely inside A.
inline linalg::Subspace<Rational> generated_ideal(const Algebra& a, const std::vector<Relation>& extra) {
    const int dim = a.dimension();
    linalg::Subspace<Rational> ideal(dim);
    for (const Relation& r : extra) {
        const Element red = a.reduce(r);
        for (int x = 0; x < dim; ++x) {
            const Element left = a.multiply(Element{{x, Rational(1)}}, red);
            if (left.empty()) continue;
            for (int y = 0; y < dim; ++y) {
                const Element e = a.multiply(left, Element{{y, Rational(1)}});
                if (!e.empty()) ideal.add(dense(e, dim));
            }
        }
    }
    return ideal;
}

// Per-degree dimensions of (kQ/I)/<J> computed inside kQ/I.
inline std::vector<int> iterated_quotient_dims(const Algebra& a, const linalg::Subspace<Rational>& ideal) {
    std::vector<int> dims;
    for (const auto& layer : a.report().by_degree) dims.push_back(static_cast<int>(layer.size()));
    for (size_t r = 0; r < ideal.rows().size(); ++r) {
        const int d = a.basis_path(static_cast<int>(ideal.pivots()[r])).length();
        --dims[static_cast<size_t>(d)];
    }
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return dims;
}

inline std::vector<int> degree_dims(const BasisReport& rep) {
    std::vector<int> dims;
    for (const auto& layer : rep.by_degree) dims.push_back(static_cast<int>(layer.size()));
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return dims;
}

// Checks that the basis paths of B = kQ/<I,J>, read in A = kQ/I modulo
// `ideal`, multiply exactly as B's own reduced multiplication table says.
inline bool multiplication_tables_agree(const Algebra& a, const linalg::Subspace<Rational>& ideal,
                                        const Algebra& b) {
    const int dim = a.dimension();
    auto in_a = [&](int bi) { return a.reduce(b.basis_path(bi)); };
    for (int i = 0; i < b.dimension(); ++i) {
        for (int j = 0; j < b.dimension(); ++j) {
            const Element prod_b = b.multiply(i, j);
            Element lhs = a.multiply(in_a(i), in_a(j));
            for (const auto& [k, c] : prod_b) lhs = add_scaled(lhs, in_a(k), -c);
            if (!ideal.contains(dense(lhs, dim))) return false;
        }
    }
    return true;
}

}  // namespace quiverlab::testing
