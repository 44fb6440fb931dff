#include "quiverlab/ar.hpp"

#include "quiverlab/strings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace quiverlab {
namespace {

std::string dims_label(const Representation& m) {
    std::string out;
    for (size_t i = 0; i < m.dims().size(); ++i) out += (i ? " " : "") + std::to_string(m.dims()[i]);
    return out;
}

// Rank of the arrow maps at v placed side by side (incoming, giving
// dim rad_v) or stacked (outgoing, giving dim of the top part at v).
int image_rank(const Representation& m, const std::vector<int>& arrows, int v, bool incoming) {
    const Eigen::Index d = m.dim(v);
    Eigen::Index other = 0;
    for (int a : arrows) other += incoming ? m.map(a).cols() : m.map(a).rows();
    Matrix big = incoming ? Matrix(d, other) : Matrix(other, d);
    Eigen::Index at = 0;
    for (int a : arrows) {
        const Matrix& x = m.map(a);
        if (incoming) {
            big.middleCols(at, x.cols()) = x;
            at += x.cols();
        } else {
            big.middleRows(at, x.rows()) = x;
            at += x.rows();
        }
    }
    return static_cast<int>(linalg::rank(big));
}

bool acyclic(const std::vector<std::vector<int>>& irr) {
    const size_t n = irr.size();
    std::vector<int> indeg(n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) indeg[j] += irr[i][j] > 0 ? 1 : 0;
    }
    std::vector<size_t> stack;
    for (size_t i = 0; i < n; ++i) {
        if (indeg[i] == 0) stack.push_back(i);
    }
    size_t seen = 0;
    while (!stack.empty()) {
        const size_t i = stack.back();
        stack.pop_back();
        ++seen;
        for (size_t j = 0; j < n; ++j) {
            if (irr[i][j] > 0 && --indeg[j] == 0) stack.push_back(j);
        }
    }
    return seen == n;
}

}  // namespace

Classification classify(const ModuleCategory& cat, int cutoff, const std::vector<Representation>& seeds) {
    const int n = cat.quiver().vertex_count();
    std::vector<PreparedModule> found;
    auto known = [&](const PreparedModule& m) {
        for (const auto& f : found) {
            if (f.rep().dims() == m.rep().dims() && cat.is_isomorphic(f, m, true)) return true;
        }
        return false;
    };
    Classification out;
    auto admit = [&](Representation m) {
        if (m.is_zero()) return;
        PreparedModule p = cat.prepare(std::move(m));
        if (!known(p)) found.push_back(std::move(p));
    };
    for (int v = 0; v < n; ++v) admit(cat.projective(v));
    for (const auto& s : seeds) {
        if (!cat.end_is_local(s)) throw Error(Errc::Decomposable, "seed module is not indecomposable");
        admit(s);
    }
    // A tau^-1 orbit whose dimensions keep growing (as for the Kronecker
    // quiver) would take very long to reach the count cutoff.
    const int dim_cap = std::max(64, 4 * cat.algebra().dimension());
    for (size_t i = 0; i < found.size(); ++i) {
        admit(cat.tau_inv(found[i].rep()));
        if (static_cast<int>(found.size()) > cutoff || found.back().rep().total_dim() > dim_cap) {
            out.status = ClosureStatus::RepInfiniteSuspected;
            for (auto& f : found) out.modules.push_back(f.rep());
            return out;
        }
    }
    std::vector<Representation> modules;
    for (auto& f : found) modules.push_back(f.rep());
    try {
        out.ar = ar_quiver(cat, std::move(modules));
    } catch (const Error& e) {
        if (e.code() != Errc::IncompleteList || !seeds.empty()) throw;
        throw Error(Errc::DirectednessViolated,
                    std::string("the tau^-1 closure of the projectives is not a full AR component: ") + e.what());
    }
    if (seeds.empty() && !out.ar->directed)
        throw Error(Errc::DirectednessViolated, "the AR quiver has an oriented cycle");
    out.modules = out.ar->modules;
    return out;
}

Classification all_indecomposables(const Presentation& pres, int cutoff) {
    const ModuleCategory cat(pres);
    try {
        return classify(cat, cutoff);
    } catch (const Error& e) {
        if (e.code() != Errc::DirectednessViolated || !check_string_pair(pres).ok) throw;
        const StringList strings = enumerate_strings(pres);
        if (strings.truncated) throw;
        std::vector<Representation> seeds;
        for (const auto& w : strings.words) seeds.push_back(string_module(pres, w));
        return classify(cat, cutoff, seeds);
    }
}


std::optional<int> count_indecomposables(const Presentation& pres, int cutoff) {
    const auto c = all_indecomposables(pres, cutoff);
    if (c.status != ClosureStatus::Complete) return std::nullopt;
    return static_cast<int>(c.modules.size());
}

ARQuiver ar_quiver(const ModuleCategory& cat, std::vector<Representation> indec) {
    std::stable_sort(indec.begin(), indec.end(),
                     [](const Representation& a, const Representation& b) { return canonical_compare(a, b) < 0; });
    const int n = static_cast<int>(indec.size());
    std::vector<PreparedModule> mods;
    mods.reserve(indec.size());
    for (const auto& m : indec) mods.push_back(cat.prepare(m));

    ARQuiver ar;
    ar.modules = indec;
    ar.irr.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    ar.hom_dims.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));

    // rad(i, j) in generator-value coordinates of M_i, plus extended maps.
    std::vector<std::vector<linalg::MatrixX<Rational>>> rad(static_cast<size_t>(n));
    std::vector<std::vector<std::vector<Morphism>>> rad_maps(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        rad[static_cast<size_t>(i)].resize(static_cast<size_t>(n));
        rad_maps[static_cast<size_t>(i)].resize(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            auto h = cat.hom_values(mods[static_cast<size_t>(i)], mods[static_cast<size_t>(j)]);
            ar.hom_dims[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(h.cols());
            if (i == j) h = cat.end_radical(mods[static_cast<size_t>(i)]);
            for (Eigen::Index c = 0; c < h.cols(); ++c)
                rad_maps[static_cast<size_t>(i)][static_cast<size_t>(j)].push_back(
                    mods[static_cast<size_t>(i)].extend(mods[static_cast<size_t>(j)], h.col(c)));
            rad[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(h);
        }
    }
    for (int i = 0; i < n; ++i) {
        const PreparedModule& m = mods[static_cast<size_t>(i)];
        const auto& top = m.presentation().top;
        for (int j = 0; j < n; ++j) {
            const auto& rij = rad[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (rij.cols() == 0) continue;
            const auto off_out = m.value_offsets(mods[static_cast<size_t>(j)]);
            linalg::Subspace<Rational> square(off_out.back());
            for (int l = 0; l < n && square.dim() < rij.cols(); ++l) {
                const auto& ril = rad[static_cast<size_t>(i)][static_cast<size_t>(l)];
                const auto& glj = rad_maps[static_cast<size_t>(l)][static_cast<size_t>(j)];
                if (ril.cols() == 0 || glj.empty()) continue;
                const auto off_in = m.value_offsets(mods[static_cast<size_t>(l)]);
                for (Eigen::Index c = 0; c < ril.cols(); ++c) {
                    for (const Morphism& g : glj) {
                        Vector v(off_out.back());
                        for (size_t t = 0; t < top.size(); ++t) {
                            const Matrix& gx = g[static_cast<size_t>(top[t])];
                            v.segment(off_out[t], gx.rows()) = gx * ril.col(c).segment(off_in[t], gx.cols());
                        }
                        square.add(v);
                    }
                }
            }
            ar.irr[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(rij.cols() - square.dim());
        }
    }

    ar.tau.assign(static_cast<size_t>(n), std::nullopt);
    ar.projective.assign(static_cast<size_t>(n), false);
    ar.injective.assign(static_cast<size_t>(n), false);
    for (int j = 0; j < n; ++j) {
        const Representation t = cat.tau(indec[static_cast<size_t>(j)]);
        if (t.is_zero()) {
            ar.projective[static_cast<size_t>(j)] = true;
        } else {
            const PreparedModule pt = cat.prepare(t);
            for (int i = 0; i < n && !ar.tau[static_cast<size_t>(j)]; ++i) {
                if (indec[static_cast<size_t>(i)].dims() == t.dims() && cat.is_isomorphic(mods[static_cast<size_t>(i)], pt, true))
                    ar.tau[static_cast<size_t>(j)] = i;
            }
            if (!ar.tau[static_cast<size_t>(j)])
                throw Error(Errc::IncompleteList, "tau of module " + std::to_string(j + 1) + " is not in the list");
        }
        ar.injective[static_cast<size_t>(j)] = cat.tau_inv(indec[static_cast<size_t>(j)]).is_zero();
    }

    ar.directed = acyclic(ar.irr);
    if (auto defect = completeness_defect(cat, ar)) throw Error(Errc::IncompleteList, *defect);
    return ar;
}

std::optional<std::string> completeness_defect(const ModuleCategory& cat, const ARQuiver& ar) {
    const Quiver& q = cat.quiver();
    const int n = ar.size();
    const int vertices = q.vertex_count();
    auto module = [&](int i) -> const Representation& { return ar.modules[static_cast<size_t>(i)]; };
    auto irr = [&](int i, int j) { return ar.irr[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
    auto label = [&](int i) { return "module " + std::to_string(i + 1) + " (" + dims_label(module(i)) + ")"; };

    // Incoming side: the AR sequence ending at N, or rad P for projective P,
    // must be a sum of listed modules.
    for (int j = 0; j < n; ++j) {
        for (int v = 0; v < vertices; ++v) {
            int middle = 0;
            for (int e = 0; e < n; ++e) middle += irr(e, j) * module(e).dim(v);
            int expected = 0;
            if (ar.tau[static_cast<size_t>(j)]) {
                expected = module(*ar.tau[static_cast<size_t>(j)]).dim(v) + module(j).dim(v);
            } else {
                expected = image_rank(module(j), q.arrows_into(v), v, true);
            }
            if (middle != expected) return "predecessors of " + label(j) + " do not add up at vertex " + q.vertex(v);
        }
    }
    // Outgoing side: a non-injective M needs tau^-1 M in the list; for an
    // injective I the quotient I / soc I must be a sum of listed modules.
    for (int i = 0; i < n; ++i) {
        if (!ar.injective[static_cast<size_t>(i)]) {
            bool found = false;
            for (int j = 0; j < n && !found; ++j) found = ar.tau[static_cast<size_t>(j)] == i;
            if (!found) return "tau^-1 of " + label(i) + " is not in the list";
            continue;
        }
        for (int v = 0; v < vertices; ++v) {
            int middle = 0;
            for (int e = 0; e < n; ++e) middle += irr(i, e) * module(e).dim(v);
            const int expected = image_rank(module(i), q.arrows_from(v), v, false);
            if (middle != expected) return "successors of " + label(i) + " do not add up at vertex " + q.vertex(v);
        }
    }
    // A closed family is a union of AR components; each block of the algebra
    // has a single component when it is representation-finite.
    std::vector<int> block(static_cast<size_t>(vertices));
    std::iota(block.begin(), block.end(), 0);
    std::function<int(int)> root = [&](int v) {
        return block[static_cast<size_t>(v)] == v ? v : block[static_cast<size_t>(v)] = root(block[static_cast<size_t>(v)]);
    };
    for (const Arrow& a : q.arrows()) block[static_cast<size_t>(root(a.source))] = root(a.target);
    std::vector<int> comp(static_cast<size_t>(n));
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> croot = [&](int v) {
        return comp[static_cast<size_t>(v)] == v ? v : comp[static_cast<size_t>(v)] = croot(comp[static_cast<size_t>(v)]);
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (irr(i, j) > 0) comp[static_cast<size_t>(croot(i))] = croot(j);
        }
    }
    std::map<int, int> component_of_block;
    for (int i = 0; i < n; ++i) {
        int v = 0;
        while (module(i).dim(v) == 0) ++v;
        const int b = root(v), c = croot(i);
        auto [it, inserted] = component_of_block.emplace(b, c);
        if (!inserted && it->second != c) return "block of vertex " + q.vertex(v) + " meets two AR components";
    }
    for (int v = 0; v < vertices; ++v) {
        if (!component_of_block.count(root(v))) return "no listed module is supported on the block of vertex " + q.vertex(v);
    }
    return std::nullopt;
}

std::vector<Mesh> meshes(const ARQuiver& ar) {
    std::vector<Mesh> out;
    for (int j = 0; j < ar.size(); ++j) {
        if (!ar.tau[static_cast<size_t>(j)]) continue;
        Mesh m;
        m.end = j;
        m.start = *ar.tau[static_cast<size_t>(j)];
        for (int e = 0; e < ar.size(); ++e) {
            if (const int k = ar.irr[static_cast<size_t>(e)][static_cast<size_t>(j)]; k > 0) m.middles.emplace_back(e, k);
        }
        out.push_back(std::move(m));
    }
    return out;
}

Presentation auslander_presentation(const ARQuiver& ar) {
    const int n = ar.size();
    auto vname = [](int i) { return "M" + std::to_string(i + 1); };
    auto aname = [](int i, int j) { return "f" + std::to_string(i + 1) + "_" + std::to_string(j + 1); };
    std::vector<std::string> vertices;
    for (int i = 0; i < n; ++i) vertices.push_back(vname(i));
    std::vector<std::array<std::string, 3>> arrows;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int k = ar.irr[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (k >= 2)
                throw Error(Errc::MultiplicityUnsupported, vname(i) + " -> " + vname(j) + " has multiplicity " + std::to_string(k));
            if (k == 1) arrows.push_back({aname(i, j), vname(j), vname(i)});
        }
    }
    Quiver q = Quiver::from_names(std::move(vertices), arrows);
    std::vector<Relation> rels;
    for (const Mesh& m : meshes(ar)) {
        std::vector<Term> terms;
        for (size_t t = 0; t < m.middles.size(); ++t) {
            const int e = m.middles[t].first;
            const Path p = Path::from_arrows(q, {q.arrow_index(aname(e, m.end)), q.arrow_index(aname(m.start, e))});
            terms.push_back({Rational(m.middles.size() == 2 && t == 1 ? -1 : 1), p});
        }
        rels.emplace_back(std::move(terms));
    }
    return Presentation(std::move(q), std::move(rels));
}

long total_hom_dimension(const ARQuiver& ar) {
    long s = 0;
    for (const auto& row : ar.hom_dims) s += std::accumulate(row.begin(), row.end(), 0L);
    return s;
}

std::string to_dot(const ARQuiver& ar) {
    std::ostringstream out;
    out << "digraph AR {\n  rankdir=LR;\n";
    for (int i = 0; i < ar.size(); ++i) {
        out << "  M" << i + 1 << " [label=\"" << dims_label(ar.modules[static_cast<size_t>(i)]) << "\"";
        if (ar.projective[static_cast<size_t>(i)]) out << ", shape=box";
        out << "];\n";
    }
    for (int i = 0; i < ar.size(); ++i) {
        for (int j = 0; j < ar.size(); ++j) {
            for (int k = 0; k < ar.irr[static_cast<size_t>(i)][static_cast<size_t>(j)]; ++k)
                out << "  M" << i + 1 << " -> M" << j + 1 << ";\n";
        }
    }
    for (int j = 0; j < ar.size(); ++j) {
        if (ar.tau[static_cast<size_t>(j)])
            out << "  M" << j + 1 << " -> M" << *ar.tau[static_cast<size_t>(j)] + 1 << " [style=dashed];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace quiverlab
