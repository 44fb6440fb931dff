#include "quiverlab/gds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace quiverlab {

std::string grid_vertex(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Presentation grid_presentation(int m, int n) {
    if (m < 1 || n < 1) throw Error(Errc::OutOfRange, "grid needs m, n >= 1");
    std::vector<std::string> vertices;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) vertices.push_back(grid_vertex(i, j));
    }
    auto h = [](int i, int j) { return "h_" + std::to_string(i) + "_" + std::to_string(j); };
    auto v = [](int i, int j) { return "v_" + std::to_string(i) + "_" + std::to_string(j); };
    std::vector<std::array<std::string, 3>> arrows;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j < n) arrows.push_back({h(i, j), grid_vertex(i, j), grid_vertex(i, j + 1)});
            if (i < m) arrows.push_back({v(i, j), grid_vertex(i, j), grid_vertex(i + 1, j)});
        }
    }
    Quiver q = Quiver::from_names(std::move(vertices), arrows);
    std::vector<Relation> rels;
    for (int i = 1; i < m; ++i) {
        for (int j = 1; j < n; ++j)
            rels.push_back(Relation::from_words(q, {{1, h(i, j) + " " + v(i, j + 1)}, {-1, v(i, j) + " " + h(i + 1, j)}}));
    }
    return Presentation(std::move(q), std::move(rels));
}

Presentation tensor(const Presentation& a, const Presentation& b) {
    const Quiver& qa = a.quiver();
    const Quiver& qb = b.quiver();
    auto vname = [&](int x, int y) { return "(" + qa.vertex(x) + "," + qb.vertex(y) + ")"; };
    std::vector<std::string> vertices;
    for (int x = 0; x < qa.vertex_count(); ++x) {
        for (int y = 0; y < qb.vertex_count(); ++y) vertices.push_back(vname(x, y));
    }
    auto left = [&](int alpha, int y) { return "(" + qa.arrow(alpha).name + "," + qb.vertex(y) + ")"; };
    auto right = [&](int x, int beta) { return "(" + qa.vertex(x) + "," + qb.arrow(beta).name + ")"; };
    std::vector<std::array<std::string, 3>> arrows;
    for (int alpha = 0; alpha < qa.arrow_count(); ++alpha) {
        for (int y = 0; y < qb.vertex_count(); ++y)
            arrows.push_back({left(alpha, y), vname(qa.arrow(alpha).source, y), vname(qa.arrow(alpha).target, y)});
    }
    for (int x = 0; x < qa.vertex_count(); ++x) {
        for (int beta = 0; beta < qb.arrow_count(); ++beta)
            arrows.push_back({right(x, beta), vname(x, qb.arrow(beta).source), vname(x, qb.arrow(beta).target)});
    }
    Quiver q = Quiver::from_names(std::move(vertices), arrows);

    std::vector<Relation> rels;
    for (const Relation& r : a.relations()) {
        for (int y = 0; y < qb.vertex_count(); ++y) {
            std::vector<Term> terms;
            for (const Term& t : r.terms()) {
                std::vector<int> ids;
                for (int alpha : t.path.arrows()) ids.push_back(q.arrow_index(left(alpha, y)));
                terms.push_back({t.coefficient, Path::from_arrows(q, std::move(ids))});
            }
            rels.emplace_back(std::move(terms));
        }
    }
    for (int x = 0; x < qa.vertex_count(); ++x) {
        for (const Relation& r : b.relations()) {
            std::vector<Term> terms;
            for (const Term& t : r.terms()) {
                std::vector<int> ids;
                for (int beta : t.path.arrows()) ids.push_back(q.arrow_index(right(x, beta)));
                terms.push_back({t.coefficient, Path::from_arrows(q, std::move(ids))});
            }
            rels.emplace_back(std::move(terms));
        }
    }
    for (int alpha = 0; alpha < qa.arrow_count(); ++alpha) {
        for (int beta = 0; beta < qb.arrow_count(); ++beta) {
            const int x = qa.arrow(alpha).source, x2 = qa.arrow(alpha).target;
            const int y = qb.arrow(beta).source, y2 = qb.arrow(beta).target;
            const Path p = Path::from_arrows(q, {q.arrow_index(right(x, beta)), q.arrow_index(left(alpha, y2))});
            const Path s = Path::from_arrows(q, {q.arrow_index(left(alpha, y)), q.arrow_index(right(x2, beta))});
            rels.emplace_back(std::vector<Term>{{Rational(1), p}, {Rational(-1), s}});
        }
    }
    return Presentation(std::move(q), std::move(rels));
}

Presentation enveloping(const Presentation& a) { return tensor(a, opposite(a)); }

Presentation standard_enveloping(int n) {
    std::vector<std::array<std::string, 3>> arrows;
    std::vector<std::string> vertices;
    for (int k = 1; k <= n; ++k) vertices.push_back(std::to_string(k));
    for (int k = 1; k < n; ++k) arrows.push_back({std::string(1, static_cast<char>('a' + k - 1)), std::to_string(k), std::to_string(k + 1)});
    const Presentation an(Quiver::from_names(vertices, arrows), {});
    std::map<std::string, std::string> renaming;
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) renaming[grid_vertex(x, y)] = grid_vertex(n + 1 - x, y);
    }
    return relabel_vertices(enveloping(an), renaming);
}

Presentation glue(const Presentation& pres, const std::vector<std::pair<std::string, std::string>>& pairs) {
    const Quiver& q = pres.quiver();
    const int n = q.vertex_count();
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]);
    };
    std::set<int> kept, merged;
    for (const auto& [vn, wn] : pairs) {
        const int v = q.vertex_index(vn), w = q.vertex_index(wn);
        if (v == w) throw Error(Errc::InvalidSpec, "cannot glue " + vn + " to itself");
        kept.insert(v);
        merged.insert(w);
    }
    for (int v : kept) {
        if (merged.count(v)) throw Error(Errc::InvalidSpec, "vertex " + q.vertex(v) + " is both kept and merged");
    }
    for (const auto& [vn, wn] : pairs) {
        const int v = find(q.vertex_index(vn)), w = find(q.vertex_index(wn));
        if (v != w) parent[static_cast<size_t>(w)] = v;
    }

    std::vector<std::string> vertices;
    std::vector<int> index(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        if (find(v) != v) continue;
        index[static_cast<size_t>(v)] = static_cast<int>(vertices.size());
        vertices.push_back(q.vertex(v));
    }
    auto image = [&](int v) { return index[static_cast<size_t>(find(v))]; };
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows()) arrows.push_back({a.name, image(a.source), image(a.target)});
    Quiver glued(std::move(vertices), std::move(arrows));

    std::vector<Relation> rels;
    for (const Relation& r : pres.relations()) rels.push_back(transport(r, q, glued));
    for (int g = 0; g < q.arrow_count(); ++g) {
        const int t = q.arrow(g).target;
        if (!kept.count(find(t)) && !merged.count(t)) continue;
        for (int d = 0; d < q.arrow_count(); ++d) {
            const int s = q.arrow(d).source;
            if (find(s) != find(t) || s == t) continue;
            rels.push_back(Relation::monomial(Path::from_arrows(glued, {g, d})));
        }
    }
    return Presentation(std::move(glued), std::move(rels));
}

std::vector<PathPair> crossing_set(const Presentation& pres, const std::string& vname, int max_length) {
    const Quiver& q = pres.quiver();
    const int v = q.vertex_index(vname);
    const Algebra alg(pres, std::max(max_length, 0));
    auto nonzero = [&](const Path& p) { return p.length() <= max_length && !alg.reduce(p).empty(); };

    // Paths ending at v (extend backwards) and starting at v (forwards).
    std::vector<Path> into{Path::trivial(v)}, out{Path::trivial(v)};
    for (size_t i = 0; i < into.size(); ++i) {
        if (into[i].length() >= max_length) continue;
        for (int a : q.arrows_into(into[i].source())) {
            Path p = compose(q, Path::from_arrows(q, {a}), into[i]);
            if (nonzero(p)) into.push_back(std::move(p));
        }
    }
    for (size_t i = 0; i < out.size(); ++i) {
        if (out[i].length() >= max_length) continue;
        for (int a : q.arrows_from(out[i].target())) {
            Path p = compose(q, out[i], Path::from_arrows(q, {a}));
            if (nonzero(p)) out.push_back(std::move(p));
        }
    }
    std::vector<PathPair> pairs;
    for (const Path& p1 : into) {
        for (const Path& p2 : out) {
            if (p1.is_trivial() && p2.is_trivial()) continue;
            pairs.push_back({p1, p2});
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const PathPair& a, const PathPair& b) {
        const int la = a.first.length() + a.second.length(), lb = b.first.length() + b.second.length();
        if (la != lb) return la < lb;
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return pairs;
}

Presentation gluing_algebra(const Presentation& pres, const GluingSpec& spec) {
    for (const auto& [v, w] : spec.pairs) {
        if (spec.deletions.count(v) || spec.deletions.count(w))
            throw Error(Errc::InvalidSpec, "glued vertices may not be deleted");
    }
    const Presentation glued = delete_vertices(glue(pres, spec.pairs), spec.deletions);
    const Quiver& q = glued.quiver();
    std::set<int> supplement;
    for (const auto& s : spec.supplement) {
        const auto v = q.find_vertex(s);
        if (!v) throw Error(Errc::UnknownVertex, "supplement vertex '" + s + "' is not in the glued quiver");
        supplement.insert(*v);
    }
    std::vector<Relation> rels;
    for (const Relation& r : glued.relations()) {
        if (r.is_monomial()) {
            const auto vs = r.terms().front().path.vertices(q);
            if (std::any_of(vs.begin(), vs.end(), [&](int v) { return supplement.count(v) > 0; })) continue;
        }
        rels.push_back(r);
    }
    return Presentation(q, std::move(rels));
}

// ---------------------------------------------------------------- embedding

namespace {

struct EmbedSearch {
    const Quiver& q;
    int rows, cols;
    std::vector<int> order;           // placement order
    std::vector<std::pair<int, int>> at;  // coordinate per vertex, (-1,-1) unplaced
    std::map<std::pair<int, int>, int> occupant;
    std::vector<std::vector<int>> adjacency;  // arrow count between vertex pairs, directed
    int placed = 0;

    bool consistent(int v, std::pair<int, int> c) const {
        if (c.first < 1 || c.first > rows || c.second < 1 || c.second > cols) return false;
        if (occupant.count(c)) return false;
        // Every grid neighbour that is occupied must be joined by exactly the
        // matching arrow, and no other placed vertex may be joined to v.
        for (int u = 0; u < q.vertex_count(); ++u) {
            const auto cu = at[static_cast<size_t>(u)];
            if (cu.first < 0 || u == v) continue;
            const int out = adjacency[static_cast<size_t>(v)][static_cast<size_t>(u)];
            const int in = adjacency[static_cast<size_t>(u)][static_cast<size_t>(v)];
            const int di = cu.first - c.first, dj = cu.second - c.second;
            const bool forward = (di == 1 && dj == 0) || (di == 0 && dj == 1);
            const bool backward = (di == -1 && dj == 0) || (di == 0 && dj == -1);
            if (out != (forward ? 1 : 0)) return false;
            if (in != (backward ? 1 : 0)) return false;
        }
        return true;
    }

    std::vector<std::pair<int, int>> candidates(int v) const {
        for (int u = 0; u < q.vertex_count(); ++u) {
            const auto cu = at[static_cast<size_t>(u)];
            if (cu.first < 0) continue;
            if (adjacency[static_cast<size_t>(u)][static_cast<size_t>(v)])
                return {{cu.first + 1, cu.second}, {cu.first, cu.second + 1}};
            if (adjacency[static_cast<size_t>(v)][static_cast<size_t>(u)])
                return {{cu.first - 1, cu.second}, {cu.first, cu.second - 1}};
        }
        std::vector<std::pair<int, int>> all;
        for (int i = 1; i <= rows; ++i) {
            for (int j = 1; j <= cols; ++j) all.emplace_back(i, j);
        }
        return all;
    }

    bool run(size_t k) {
        if (k == order.size()) return true;
        const int v = order[k];
        for (const auto& c : candidates(v)) {
            if (!consistent(v, c)) continue;
            at[static_cast<size_t>(v)] = c;
            occupant[c] = v;
            if (run(k + 1)) return true;
            occupant.erase(c);
            at[static_cast<size_t>(v)] = {-1, -1};
        }
        return false;
    }
};

}  // namespace

GridEmbedding embed_into_grid(const Presentation& pres) {
    const Quiver& q = pres.quiver();
    const int n = q.vertex_count();
    std::vector<std::vector<int>> adjacency(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (const Arrow& a : q.arrows()) {
        if (a.source == a.target) throw Error(Errc::NotPDS, "loop at " + q.vertex(a.source));
        if (++adjacency[static_cast<size_t>(a.source)][static_cast<size_t>(a.target)] > 1 ||
            adjacency[static_cast<size_t>(a.target)][static_cast<size_t>(a.source)] > 0)
            throw Error(Errc::NotPDS, "more than one arrow between " + q.vertex(a.source) + " and " + q.vertex(a.target));
    }
    // Breadth-first placement order over the underlying graph.
    std::vector<int> order;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<size_t>(root)]) continue;
        seen[static_cast<size_t>(root)] = 1;
        order.push_back(root);
        for (size_t i = order.size() - 1; i < order.size(); ++i) {
            const int u = order[i];
            std::vector<int> nbrs;
            for (int a : q.arrows_from(u)) nbrs.push_back(q.arrow(a).target);
            for (int a : q.arrows_into(u)) nbrs.push_back(q.arrow(a).source);
            for (int w : nbrs) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    order.push_back(w);
                }
            }
        }
    }
    std::vector<std::pair<int, int>> boxes;
    for (int r = 1; r <= std::max(n, 1); ++r) {
        for (int c = 1; c <= std::max(n, 1); ++c) {
            if (r * c >= n) boxes.emplace_back(r, c);
        }
    }
    std::stable_sort(boxes.begin(), boxes.end(), [](const auto& a, const auto& b) {
        if (a.first * a.second != b.first * b.second) return a.first * a.second < b.first * b.second;
        return a.first < b.first;
    });
    for (const auto& [r, c] : boxes) {
        EmbedSearch s{q, r, c, order, std::vector<std::pair<int, int>>(static_cast<size_t>(n), {-1, -1}), {}, adjacency};
        if (!s.run(0)) continue;
        GridEmbedding e;
        e.rows = r;
        e.cols = c;
        for (int v = 0; v < n; ++v) e.coords[q.vertex(v)] = s.at[static_cast<size_t>(v)];
        return e;
    }
    throw Error(Errc::NotPDS, "no grid embedding exists");
}

bool check_diamonds_commutative(const Presentation& pres) {
    const Quiver& q = pres.quiver();
    const Algebra alg(pres, 2);
    for (int u = 0; u < q.vertex_count(); ++u) {
        std::vector<Path> twos;
        for (int a : q.arrows_from(u)) {
            for (int b : q.arrows_from(q.arrow(a).target)) twos.push_back(Path::from_arrows(q, {a, b}));
        }
        for (size_t i = 0; i < twos.size(); ++i) {
            for (size_t j = i + 1; j < twos.size(); ++j) {
                const auto vi = twos[i].vertices(q), vj = twos[j].vertices(q);
                if (vi[2] != vj[2] || vi[1] == vj[1] || vi[2] == u || vi[1] == vi[2] || vj[1] == vj[2]) continue;
                if (vi[1] == u || vj[1] == u) continue;
                const Element diff = add_scaled(alg.reduce(twos[i]), alg.reduce(twos[j]), Rational(-1));
                if (!diff.empty()) return false;
            }
        }
    }
    return true;
}

std::set<std::string> auslander_deletion_set(DeletionFamily family, int n) {
    std::set<std::string> out;
    if (family == DeletionFamily::A) {
        if (n < 1) throw Error(Errc::OutOfRange, "family A needs n >= 1");
        for (int j = 1; j <= n - 1; ++j) {
            for (int k = j + 1; k <= n; ++k) out.insert(grid_vertex(j, k));
        }
        return out;
    }
    if (n < 4) throw Error(Errc::OutOfRange, "family D needs n >= 4");
    for (int k = 1; k <= n - 2; ++k) {
        for (int j = k + 1; j <= n; ++j) out.insert(grid_vertex(k, j));
    }
    out.erase(grid_vertex(n - 2, n - 1));
    for (int j = 1; j <= n; ++j) {
        if (j != n - 1) out.insert(grid_vertex(n, j));
    }
    return out;
}

}  // namespace quiverlab
