#include "quiverlab/algebra.hpp"

#include <algorithm>

namespace quiverlab {
namespace {

// Beyond this many paths in one degree the basis computation gives up and
// reports truncation; no finite-dimensional example comes close.
constexpr size_t kPathLimit = 400000;
// Bound on the dense ideal entries kept across all degrees (about 20M
// rationals). Quivers whose path counts grow exponentially, such as
// commutative squares on an oriented cycle, stop here and report truncation.
constexpr size_t kEntryLimit = 20000000;

const std::vector<int> kNoIndices;

}  // namespace

Element add_scaled(const Element& a, const Element& b, const Rational& c) {
    Element out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rational v = b[j].second * c;
            if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Rational v = a[i].second + b[j].second * c;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

Algebra::Algebra(Presentation pres, int max_degree) : pres_(std::move(pres)) { compute(max_degree); }

void Algebra::compute(int max_degree) {
    const Quiver& q = quiver();
    const int n = q.vertex_count();
    report_ = BasisReport{};
    report_.degree_limit = max_degree;

    std::map<int, std::vector<const Relation*>> relations_by_length;
    for (const Relation& r : pres_.relations()) relations_by_length[r.length()].push_back(&r);

    auto register_block = [&](int d, std::map<std::pair<int, int>, Block>& blocks) {
        for (auto& [key, block] : blocks) {
            std::sort(block.paths.begin(), block.paths.end());
            for (size_t c = 0; c < block.paths.size(); ++c)
                slots_[block.paths[c]] = Slot{d, static_cast<int>(c)};
        }
    };

    // Degree 0.
    blocks_.emplace_back();
    for (int v = 0; v < n; ++v) {
        Block b;
        b.paths.push_back(Path::trivial(v));
        b.ideal = linalg::Subspace<Rational>(1);
        blocks_[0].emplace(std::make_pair(v, v), std::move(b));
    }
    register_block(0, blocks_[0]);

    auto collect_basis = [&](int d) {
        std::vector<Path> out;
        for (const auto& [key, block] : blocks_[static_cast<size_t>(d)]) {
            for (auto c : block.ideal.complement()) out.push_back(block.paths[static_cast<size_t>(c)]);
        }
        return out;
    };
    report_.by_degree.push_back(collect_basis(0));

    bool truncated = true;
    size_t stored_entries = 0;
    for (int d = 1; d <= max_degree; ++d) {
        const auto& prev = blocks_[static_cast<size_t>(d - 1)];
        std::map<std::pair<int, int>, Block> cur;
        size_t count = 0;
        for (const auto& [key, block] : prev) {
            for (const Path& p : block.paths) {
                for (int a : q.arrows_from(p.target())) {
                    Path ext = p.is_trivial() ? Path::from_arrows(q, {a}) : compose(q, p, Path::from_arrows(q, {a}));
                    cur[{ext.source(), ext.target()}].paths.push_back(std::move(ext));
                    ++count;
                }
            }
        }
        size_t entries = 0;
        for (const auto& [key, block] : cur) entries += block.paths.size() * block.paths.size();
        if (count > kPathLimit || stored_entries + entries > kEntryLimit) {
            report_.degree_limit = d - 1;
            break;
        }
        stored_entries += entries;
        blocks_.push_back(std::move(cur));
        auto& blocks = blocks_.back();
        register_block(d, blocks);
        const auto& before = blocks_[static_cast<size_t>(d - 1)];

        for (auto& [key, block] : blocks) {
            const auto [x, y] = key;
            const Eigen::Index size = static_cast<Eigen::Index>(block.paths.size());
            block.ideal = linalg::Subspace<Rational>(size);
            auto coordinate = [&](const Path& p) { return slots_.at(p).coordinate; };

            if (auto it = relations_by_length.find(d); it != relations_by_length.end()) {
                for (const Relation* r : it->second) {
                    if (r->source() != x || r->target() != y) continue;
                    Vector v = Vector::Zero(size);
                    for (const Term& t : r->terms()) v(coordinate(t.path)) += t.coefficient;
                    block.ideal.add(v);
                }
            }
            if (d >= 3) {
                // Left multiples alpha * I(x', y) and right multiples I(x, y') * beta.
                for (int a : q.arrows_from(x)) {
                    auto it = before.find({q.arrow(a).target, y});
                    if (it == before.end()) continue;
                    const Block& src = it->second;
                    const Path arrow = Path::from_arrows(q, {a});
                    std::vector<Eigen::Index> image;
                    for (const Path& p : src.paths) image.push_back(coordinate(compose(q, arrow, p)));
                    for (const auto& row : src.ideal.rows()) {
                        Vector v = Vector::Zero(size);
                        for (Eigen::Index j = 0; j < row.size(); ++j) {
                            if (!row(j).is_zero()) v(image[static_cast<size_t>(j)]) = row(j);
                        }
                        block.ideal.add(v);
                    }
                }
                for (int b : q.arrows_into(y)) {
                    auto it = before.find({x, q.arrow(b).source});
                    if (it == before.end()) continue;
                    const Block& src = it->second;
                    const Path arrow = Path::from_arrows(q, {b});
                    std::vector<Eigen::Index> image;
                    for (const Path& p : src.paths) image.push_back(coordinate(compose(q, p, arrow)));
                    for (const auto& row : src.ideal.rows()) {
                        Vector v = Vector::Zero(size);
                        for (Eigen::Index j = 0; j < row.size(); ++j) {
                            if (!row(j).is_zero()) v(image[static_cast<size_t>(j)]) = row(j);
                        }
                        block.ideal.add(v);
                    }
                }
            }
        }
        auto degree_basis = collect_basis(d);
        if (degree_basis.empty()) {
            truncated = false;
            break;
        }
        report_.by_degree.push_back(std::move(degree_basis));
        if (d == max_degree) break;
    }
    if (max_degree == 0 && report_.by_degree[0].empty()) truncated = false;
    report_.truncated = truncated;

    for (const auto& level : report_.by_degree) {
        for (const Path& p : level) {
            basis_index_[p] = static_cast<int>(basis_.size());
            basis_.push_back(p);
        }
    }
    report_.dimension = static_cast<int>(basis_.size());

    trivial_.assign(static_cast<size_t>(n), -1);
    from_.assign(static_cast<size_t>(n), {});
    to_.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
        const Path& p = basis_[static_cast<size_t>(i)];
        if (p.is_trivial()) trivial_[static_cast<size_t>(p.source())] = i;
        between_[{p.source(), p.target()}].push_back(i);
        from_[static_cast<size_t>(p.source())].push_back(i);
        to_[static_cast<size_t>(p.target())].push_back(i);
    }

    if (truncated) return;
    right_.assign(basis_.size(), std::vector<Element>(static_cast<size_t>(q.arrow_count())));
    left_.assign(basis_.size(), std::vector<Element>(static_cast<size_t>(q.arrow_count())));
    for (size_t i = 0; i < basis_.size(); ++i) {
        const Path& p = basis_[i];
        for (int a = 0; a < q.arrow_count(); ++a) {
            const Path arrow = Path::from_arrows(q, {a});
            if (q.arrow(a).source == p.target()) right_[i][static_cast<size_t>(a)] = reduce(compose(q, p, arrow));
            if (q.arrow(a).target == p.source()) left_[i][static_cast<size_t>(a)] = reduce(compose(q, arrow, p));
        }
    }
}

int Algebra::dimension() const {
    require_finite();
    return report_.dimension;
}

void Algebra::require_finite() const {
    if (report_.truncated)
        throw Error(Errc::InfiniteDimensional,
                    "path basis still nonzero at degree " + std::to_string(report_.degree_limit));
}

const std::vector<int>& Algebra::basis_between(int x, int y) const {
    auto it = between_.find({x, y});
    return it == between_.end() ? kNoIndices : it->second;
}

Element Algebra::normal_form(const Block& block, int coordinate) const {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(block.paths.size()));
    v(coordinate) = Rational(1);
    const Vector red = block.ideal.reduce(v);
    Element out;
    for (Eigen::Index j = 0; j < red.size(); ++j) {
        if (red(j).is_zero()) continue;
        out.emplace_back(basis_index_.at(block.paths[static_cast<size_t>(j)]), red(j));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Element Algebra::reduce(const Path& p) const {
    const int computed = static_cast<int>(blocks_.size()) - 1;
    if (p.length() > computed) {
        if (report_.truncated)
            throw Error(Errc::InfiniteDimensional, "path longer than the computed degree range");
        return {};
    }
    const Slot& s = slots_.at(p);
    const Block& block = blocks_[static_cast<size_t>(s.degree)].at({p.source(), p.target()});
    return normal_form(block, s.coordinate);
}

Element Algebra::reduce(const Relation& r) const {
    Element out;
    for (const Term& t : r.terms()) out = add_scaled(out, reduce(t.path), t.coefficient);
    return out;
}

Element Algebra::multiply(int i, int j) const {
    const Path& a = basis_path(i);
    const Path& b = basis_path(j);
    if (a.target() != b.source()) return {};
    return reduce(compose(quiver(), a, b));
}

Element Algebra::multiply(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [i, ci] : a) {
        for (const auto& [j, cj] : b) out = add_scaled(out, multiply(i, j), ci * cj);
    }
    return out;
}

const Element& Algebra::times_arrow(int i, int arrow) const {
    require_finite();
    return right_[static_cast<size_t>(i)][static_cast<size_t>(arrow)];
}

const Element& Algebra::arrow_times(int arrow, int i) const {
    require_finite();
    return left_[static_cast<size_t>(i)][static_cast<size_t>(arrow)];
}

BasisReport path_basis(const Presentation& pres, int max_degree) { return Algebra(pres, max_degree).report(); }

bool is_admissible(const Presentation& pres, int max_degree) {
    for (const Relation& r : pres.relations()) {
        if (r.length() < 2) return false;
    }
    return Algebra(pres, max_degree).is_finite();
}

}  // namespace quiverlab
