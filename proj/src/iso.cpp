#include "quiverlab/iso.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace quiverlab {
namespace {

// dims[x][y][d] = dim of the degree-d part of e_x A e_y.
using PairDims = std::vector<std::vector<std::vector<int>>>;

PairDims pair_dims(const Algebra& alg, int degrees) {
    const int n = alg.quiver().vertex_count();
    PairDims out(static_cast<size_t>(n), std::vector<std::vector<int>>(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(degrees), 0)));
    for (const Path& p : alg.basis()) ++out[static_cast<size_t>(p.source())][static_cast<size_t>(p.target())][static_cast<size_t>(p.length())];
    return out;
}

std::vector<int> graded_dims(const Algebra& alg) {
    std::vector<int> out;
    for (const auto& d : alg.report().by_degree) out.push_back(static_cast<int>(d.size()));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Vertex invariant: arrow degrees and graded dims of e_v A and A e_v.
std::vector<int> fingerprint(const Algebra& alg, const PairDims& dims, int v) {
    const Quiver& q = alg.quiver();
    const size_t n = static_cast<size_t>(q.vertex_count());
    std::vector<int> fp{static_cast<int>(q.arrows_from(v).size()), static_cast<int>(q.arrows_into(v).size())};
    const size_t degrees = n ? dims[0][0].size() : 0;
    for (size_t d = 0; d < degrees; ++d) {
        int out = 0, in = 0;
        for (size_t y = 0; y < n; ++y) {
            out += dims[static_cast<size_t>(v)][y][d];
            in += dims[y][static_cast<size_t>(v)][d];
        }
        fp.push_back(out);
        fp.push_back(in);
    }
    return fp;
}

Element image_of(const Algebra& b, const IsoWitness& w, const Relation& r) {
    Element acc;
    for (const Term& t : r.terms()) {
        Rational c = t.coefficient;
        std::vector<int> arrows;
        for (int x : t.path.arrows()) {
            arrows.push_back(w.arrows[static_cast<size_t>(x)]);
            c *= w.scalars[static_cast<size_t>(x)];
        }
        const Path p = arrows.empty() ? Path::trivial(w.vertices[static_cast<size_t>(t.path.source())])
                                      : Path::from_arrows(b.quiver(), arrows);
        acc = add_scaled(acc, b.reduce(p), c);
    }
    return acc;
}

bool relations_map_into_ideal(const Algebra& a, const Algebra& b, const IsoWitness& w) {
    for (const Relation& r : a.presentation().relations()) {
        if (!image_of(b, w, r).empty()) return false;
    }
    return true;
}

// Solve for signs s_x in GF(2) (scalar (-1)^s_x) so that every relation of
// A maps into the ideal of B. Each relation contributes the sign patterns
// of its terms that kill the image; a relation is usable only when those
// patterns form one class up to a global sign.
enum class SignOutcome { Solved, Impossible, Undecided };

SignOutcome solve_signs(const Algebra& a, const Algebra& b, IsoWitness& w) {
    const int arrows = a.quiver().arrow_count();
    std::vector<std::vector<char>> rows;  // arrows + 1 columns, last is the constant
    for (const Relation& r : a.presentation().relations()) {
        const auto& terms = r.terms();
        const size_t t = terms.size();
        std::vector<Element> images;
        for (const Term& term : terms) {
            std::vector<int> mapped;
            for (int x : term.path.arrows()) mapped.push_back(w.arrows[static_cast<size_t>(x)]);
            images.push_back(b.reduce(Path::from_arrows(b.quiver(), mapped)));
        }
        if (t > 12) return SignOutcome::Undecided;
        std::vector<unsigned> good;
        for (unsigned mask = 0; mask < (1u << (t - 1)); ++mask) {
            Element acc;
            for (size_t k = 0; k < t; ++k) {
                const bool flip = k > 0 && ((mask >> (k - 1)) & 1u);
                acc = add_scaled(acc, images[k], flip ? -terms[k].coefficient : terms[k].coefficient);
            }
            if (acc.empty()) good.push_back(mask);
        }
        if (good.empty()) return SignOutcome::Impossible;
        if (good.size() > 1) return SignOutcome::Undecided;
        // Term k must carry sign (-1)^{bit k} relative to term 0.
        for (size_t k = 1; k < t; ++k) {
            std::vector<char> row(static_cast<size_t>(arrows) + 1, 0);
            for (int x : terms[0].path.arrows()) row[static_cast<size_t>(x)] ^= 1;
            for (int x : terms[k].path.arrows()) row[static_cast<size_t>(x)] ^= 1;
            row.back() = static_cast<char>((good[0] >> (k - 1)) & 1u);
            rows.push_back(std::move(row));
        }
    }
    // Gaussian elimination over GF(2); free variables stay +1.
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int c = 0; c < arrows && rank < rows.size(); ++c) {
        size_t p = rank;
        while (p < rows.size() && !rows[p][static_cast<size_t>(c)]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][static_cast<size_t>(c)]) {
                for (size_t k = 0; k < rows[r].size(); ++k) rows[r][k] ^= rows[rank][k];
            }
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r) {
        if (rows[r].back()) return SignOutcome::Impossible;
    }
    for (auto& s : w.scalars) s = Rational(1);
    for (size_t r = 0; r < rank; ++r) {
        if (rows[r].back()) w.scalars[static_cast<size_t>(pivot_col[r])] = Rational(-1);
    }
    return relations_map_into_ideal(a, b, w) ? SignOutcome::Solved : SignOutcome::Undecided;
}

int degrees(const Algebra& a, const Algebra& b) {
    return static_cast<int>(std::max(a.report().by_degree.size(), b.report().by_degree.size()));
}

class Search {
public:
    Search(const Algebra& a, const Algebra& b, long budget)
        : a_(a), b_(b), qa_(a.quiver()), qb_(b.quiver()), budget_(budget), da_(pair_dims(a, degrees(a, b))), db_(pair_dims(b, degrees(a, b))) {
        const int n = qa_.vertex_count();
        for (int v = 0; v < n; ++v) {
            fa_.push_back(fingerprint(a, da_, v));
            fb_.push_back(fingerprint(b, db_, v));
        }
        // Most constrained vertices first; ties by index.
        order_.resize(static_cast<size_t>(n));
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<int> options(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
            for (int u = 0; u < n; ++u) options[static_cast<size_t>(v)] += fa_[static_cast<size_t>(v)] == fb_[static_cast<size_t>(u)];
        }
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) { return options[static_cast<size_t>(x)] < options[static_cast<size_t>(y)]; });
        map_.assign(static_cast<size_t>(n), -1);
        used_.assign(static_cast<size_t>(n), false);
    }

    IsoResult run() {
        IsoResult out;
        if (assign(0)) {
            out.status = IsoStatus::Found;
            out.witness = found_;
        } else if (exhausted_) {
            out.status = IsoStatus::Inconclusive;
            out.reason = "search budget exceeded";
        } else if (!skipped_.empty()) {
            out.status = IsoStatus::Inconclusive;
            out.reason = skipped_;
        } else {
            out.reason = "no vertex bijection extends to an isomorphism";
        }
        return out;
    }

private:
    int arrows_between(const Quiver& q, int x, int y) const {
        int c = 0;
        for (int a : q.arrows_from(x)) c += q.arrow(a).target == y;
        return c;
    }

    bool compatible(int v, int u) const {
        if (fa_[static_cast<size_t>(v)] != fb_[static_cast<size_t>(u)]) return false;
        for (int w = 0; w < qa_.vertex_count(); ++w) {
            const int mw = w == v ? u : map_[static_cast<size_t>(w)];
            if (mw < 0) continue;
            if (da_[static_cast<size_t>(v)][static_cast<size_t>(w)] != db_[static_cast<size_t>(u)][static_cast<size_t>(mw)]) return false;
            if (da_[static_cast<size_t>(w)][static_cast<size_t>(v)] != db_[static_cast<size_t>(mw)][static_cast<size_t>(u)]) return false;
            if (arrows_between(qa_, v, w) != arrows_between(qb_, u, mw)) return false;
            if (arrows_between(qa_, w, v) != arrows_between(qb_, mw, u)) return false;
        }
        return true;
    }

    bool assign(size_t depth) {
        if (depth == order_.size()) return match_arrows();
        const int v = order_[depth];
        for (int u = 0; u < qb_.vertex_count(); ++u) {
            if (used_[static_cast<size_t>(u)] || !compatible(v, u)) continue;
            if (++tried_ > budget_) {
                exhausted_ = true;
                return false;
            }
            map_[static_cast<size_t>(v)] = u;
            used_[static_cast<size_t>(u)] = true;
            if (assign(depth + 1)) return true;
            map_[static_cast<size_t>(v)] = -1;
            used_[static_cast<size_t>(u)] = false;
            if (exhausted_) return false;
        }
        return false;
    }

    // Arrows of A in index order go to the B arrows between the image
    // vertices in index order. Parallel arrows would need a choice of
    // matching (or linear combinations), which this search does not make.
    bool match_arrows() {
        IsoWitness w;
        w.vertices = map_;
        std::vector<bool> taken(static_cast<size_t>(qb_.arrow_count()), false);
        bool parallel = false;
        for (int x = 0; x < qa_.arrow_count(); ++x) {
            const Arrow& arr = qa_.arrow(x);
            const int s = map_[static_cast<size_t>(arr.source)], t = map_[static_cast<size_t>(arr.target)];
            if (arrows_between(qa_, arr.source, arr.target) > 1) parallel = true;
            int image = -1;
            for (int y : qb_.arrows_from(s)) {
                if (qb_.arrow(y).target == t && !taken[static_cast<size_t>(y)]) {
                    image = y;
                    break;
                }
            }
            taken[static_cast<size_t>(image)] = true;
            w.arrows.push_back(image);
        }
        w.scalars.assign(static_cast<size_t>(qa_.arrow_count()), Rational(1));
        if (relations_map_into_ideal(a_, b_, w)) {
            found_ = std::move(w);
            return true;
        }
        const SignOutcome signs = solve_signs(a_, b_, w);
        if (signs == SignOutcome::Solved) {
            found_ = std::move(w);
            return true;
        }
        if (parallel && skipped_.empty()) skipped_ = "parallel arrows: only one arrow matching was tried";
        if (signs == SignOutcome::Undecided && skipped_.empty())
            skipped_ = "scalars other than +-1 or ambiguous sign patterns would be needed";
        return false;
    }

    const Algebra& a_;
    const Algebra& b_;
    const Quiver& qa_;
    const Quiver& qb_;
    long budget_;
    long tried_ = 0;
    bool exhausted_ = false;
    std::string skipped_;
    PairDims da_, db_;
    std::vector<std::vector<int>> fa_, fb_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<bool> used_;
    IsoWitness found_;
};

}  // namespace

IsoResult find_iso(const Algebra& a, const Algebra& b, long budget) {
    a.require_finite();
    b.require_finite();
    IsoResult out;
    const Quiver& qa = a.quiver();
    const Quiver& qb = b.quiver();
    if (qa.vertex_count() != qb.vertex_count() || qa.arrow_count() != qb.arrow_count()) {
        out.reason = "quiver sizes differ";
        return out;
    }
    if (graded_dims(a) != graded_dims(b)) {
        out.reason = "graded dimensions differ (" + std::to_string(a.dimension()) + " vs " + std::to_string(b.dimension()) + ")";
        return out;
    }
    return Search(a, b, budget).run();
}

IsoResult find_iso(const Presentation& a, const Presentation& b, long budget) {
    return find_iso(Algebra(a), Algebra(b), budget);
}

bool verify_iso(const Algebra& a, const Algebra& b, const IsoWitness& w) {
    const Quiver& qa = a.quiver();
    const Quiver& qb = b.quiver();
    const int n = qa.vertex_count(), m = qa.arrow_count();
    if (n != qb.vertex_count() || m != qb.arrow_count()) return false;
    if (static_cast<int>(w.vertices.size()) != n || static_cast<int>(w.arrows.size()) != m ||
        static_cast<int>(w.scalars.size()) != m)
        return false;
    auto bijective = [](const std::vector<int>& f, int size) {
        std::vector<bool> hit(static_cast<size_t>(size), false);
        for (int x : f) {
            if (x < 0 || x >= size || hit[static_cast<size_t>(x)]) return false;
            hit[static_cast<size_t>(x)] = true;
        }
        return true;
    };
    if (!bijective(w.vertices, n) || !bijective(w.arrows, m)) return false;
    for (int x = 0; x < m; ++x) {
        const Arrow& src = qa.arrow(x);
        const Arrow& dst = qb.arrow(w.arrows[static_cast<size_t>(x)]);
        if (dst.source != w.vertices[static_cast<size_t>(src.source)] || dst.target != w.vertices[static_cast<size_t>(src.target)]) return false;
        if (w.scalars[static_cast<size_t>(x)] == Rational(0)) return false;
    }
    if (!a.is_finite() || !b.is_finite() || graded_dims(a) != graded_dims(b)) return false;
    return relations_map_into_ideal(a, b, w);
}

bool verify_iso(const Presentation& a, const Presentation& b, const IsoWitness& w) {
    return verify_iso(Algebra(a), Algebra(b), w);
}

std::string to_string(const Quiver& a, const Quiver& b, const IsoWitness& w) {
    std::ostringstream out;
    for (int v = 0; v < a.vertex_count(); ++v) out << a.vertex(v) << " -> " << b.vertex(w.vertices[static_cast<size_t>(v)]) << '\n';
    for (int x = 0; x < a.arrow_count(); ++x) {
        out << a.arrow(x).name << " -> ";
        const Rational& s = w.scalars[static_cast<size_t>(x)];
        if (s != Rational(1)) out << s.to_string() << '*';
        out << b.arrow(w.arrows[static_cast<size_t>(x)]).name << '\n';
    }
    return out.str();
}

}  // namespace quiverlab
