#include "quiverlab/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace quiverlab {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::Syntax: return "SyntaxError";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::UnknownArrow: return "UnknownArrow";
        case Errc::DuplicateName: return "DuplicateName";
        case Errc::NotComposable: return "NotComposable";
        case Errc::NonParallel: return "NonParallel";
        case Errc::Inhomogeneous: return "Inhomogeneous";
        case Errc::InvalidRelation: return "InvalidRelation";
        case Errc::EmptyAlgebra: return "EmptyAlgebra";
        case Errc::InfiniteDimensional: return "InfiniteDimensional";
        case Errc::NotMonomial: return "NotMonomial";
        case Errc::InvalidWord: return "InvalidWord";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::Decomposable: return "Decomposable";
        case Errc::IncompleteList: return "IncompleteList";
        case Errc::DirectednessViolated: return "DirectednessViolated";
        case Errc::MultiplicityUnsupported: return "MultiplicityUnsupported";
        case Errc::NotPDS: return "NotPDS";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::InvalidSpec: return "InvalidSpec";
        case Errc::Indeterminate: return "Indeterminate";
    }
    return "Error";
}

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].empty()) throw Error(Errc::InvalidSpec, "empty vertex name");
        if (!vertex_index_.emplace(vertices_[i], static_cast<int>(i)).second)
            throw Error(Errc::DuplicateName, "vertex '" + vertices_[i] + "' declared twice");
    }
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (a.name.empty()) throw Error(Errc::InvalidSpec, "empty arrow name");
        if (a.source < 0 || a.source >= vertex_count() || a.target < 0 || a.target >= vertex_count())
            throw Error(Errc::UnknownVertex, "arrow '" + a.name + "' has an undeclared endpoint");
        if (!arrow_index_.emplace(a.name, static_cast<int>(i)).second)
            throw Error(Errc::DuplicateName, "arrow '" + a.name + "' declared twice");
        out_[static_cast<size_t>(a.source)].push_back(static_cast<int>(i));
        in_[static_cast<size_t>(a.target)].push_back(static_cast<int>(i));
    }
}

Quiver Quiver::from_names(std::vector<std::string> vertices,
                          const std::vector<std::array<std::string, 3>>& arrows) {
    std::map<std::string, int, std::less<>> index;
    for (size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], static_cast<int>(i));
    auto lookup = [&](const std::string& v) {
        auto it = index.find(v);
        if (it == index.end()) throw Error(Errc::UnknownVertex, "vertex '" + v + "'");
        return it->second;
    };
    std::vector<Arrow> list;
    list.reserve(arrows.size());
    for (const auto& [name, s, t] : arrows) list.push_back({name, lookup(s), lookup(t)});
    return Quiver(std::move(vertices), std::move(list));
}

std::optional<int> Quiver::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::find_arrow(std::string_view name) const {
    auto it = arrow_index_.find(name);
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
}

int Quiver::vertex_index(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw Error(Errc::UnknownVertex, "vertex '" + std::string(name) + "'");
}

int Quiver::arrow_index(std::string_view name) const {
    if (auto a = find_arrow(name)) return *a;
    throw Error(Errc::UnknownArrow, "arrow '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- Path

Path Path::trivial(int vertex) {
    Path p;
    p.source_ = p.target_ = vertex;
    return p;
}

Path Path::from_arrows(const Quiver& q, std::vector<int> arrows) {
    if (arrows.empty()) throw Error(Errc::InvalidWord, "nontrivial path needs at least one arrow");
    for (size_t i = 0; i + 1 < arrows.size(); ++i) {
        if (q.arrow(arrows[i]).target != q.arrow(arrows[i + 1]).source)
            throw Error(Errc::NotComposable, q.arrow(arrows[i]).name + " then " + q.arrow(arrows[i + 1]).name);
    }
    Path p;
    p.source_ = q.arrow(arrows.front()).source;
    p.target_ = q.arrow(arrows.back()).target;
    p.arrows_ = std::move(arrows);
    return p;
}

Path Path::from_names(const Quiver& q, const std::vector<std::string>& names) {
    std::vector<int> ids;
    ids.reserve(names.size());
    for (const auto& n : names) ids.push_back(q.arrow_index(n));
    return from_arrows(q, std::move(ids));
}

Path Path::parse(const Quiver& q, std::string_view word) {
    std::vector<std::string> names;
    std::istringstream in{std::string(word)};
    for (std::string tok; in >> tok;) names.push_back(tok);
    return from_names(q, names);
}

std::vector<int> Path::vertices(const Quiver& q) const {
    std::vector<int> out{source_};
    for (int a : arrows_) out.push_back(q.arrow(a).target);
    return out;
}

bool Path::touches(const Quiver& q, int vertex) const {
    if (source_ == vertex) return true;
    return std::any_of(arrows_.begin(), arrows_.end(), [&](int a) { return q.arrow(a).target == vertex; });
}

std::string Path::to_string(const Quiver& q) const {
    if (arrows_.empty()) return "e_" + q.vertex(source_);
    std::string out;
    for (size_t i = 0; i < arrows_.size(); ++i) {
        if (i) out += ' ';
        out += q.arrow(arrows_[i]).name;
    }
    return out;
}

Path compose(const Quiver& quiver, const Path& p, const Path& q) {
    if (p.target() != q.source())
        throw Error(Errc::NotComposable, p.to_string(quiver) + " ends at " + quiver.vertex(p.target()) +
                                             ", " + q.to_string(quiver) + " starts at " +
                                             quiver.vertex(q.source()));
    if (p.is_trivial()) return q;
    if (q.is_trivial()) return p;
    std::vector<int> arrows = p.arrows();
    arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
    return Path::from_arrows(quiver, std::move(arrows));
}

// ---------------------------------------------------------------- Relation

Relation::Relation(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw Error(Errc::InvalidRelation, "relation without terms");
    const Path& first = terms_.front().path;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        if (t.coefficient.is_zero()) throw Error(Errc::InvalidRelation, "zero coefficient");
        if (t.path.source() != first.source() || t.path.target() != first.target())
            throw Error(Errc::NonParallel, "relation terms have different endpoints");
        if (t.path.length() != first.length())
            throw Error(Errc::Inhomogeneous, "relation terms have different lengths");
        for (size_t j = 0; j < i; ++j) {
            if (terms_[j].path == t.path) throw Error(Errc::InvalidRelation, "repeated path in relation");
        }
    }
}

Relation Relation::monomial(Path path) { return Relation({Term{Rational(1), std::move(path)}}); }

Relation Relation::from_words(const Quiver& q, const std::vector<std::pair<Rational, std::string>>& terms) {
    std::vector<Term> list;
    for (const auto& [c, w] : terms) list.push_back({c, Path::parse(q, w)});
    return Relation(std::move(list));
}

std::string Relation::to_string(const Quiver& q) const {
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Rational& c = terms_[i].coefficient;
        const bool neg = c.sign() < 0;
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = abs(c);
        if (!mag.is_one()) out += mag.to_string() + "*";
        out += terms_[i].path.to_string(q);
    }
    return out;
}

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(Quiver quiver, std::vector<Relation> relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations)) {
    for (const Relation& r : relations_) {
        for (const Term& t : r.terms()) {
            const Path& p = t.path;
            if (p.length() < 2) throw Error(Errc::InvalidRelation, "relation paths must have length >= 2");
            for (int a : p.arrows()) {
                if (a < 0 || a >= quiver_.arrow_count())
                    throw Error(Errc::UnknownArrow, "relation uses an arrow outside the quiver");
            }
            // Re-validate composability against this quiver.
            (void)Path::from_arrows(quiver_, p.arrows());
        }
    }
}

bool Presentation::is_monomial() const {
    return std::all_of(relations_.begin(), relations_.end(), [](const Relation& r) { return r.is_monomial(); });
}

Relation transport(const Relation& r, const Quiver& from, const Quiver& to) {
    std::vector<Term> terms;
    for (const Term& t : r.terms()) {
        std::vector<int> ids;
        for (int a : t.path.arrows()) ids.push_back(to.arrow_index(from.arrow(a).name));
        terms.push_back({t.coefficient, Path::from_arrows(to, std::move(ids))});
    }
    return Relation(std::move(terms));
}

Presentation opposite(const Presentation& pres) {
    const Quiver& q = pres.quiver();
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows()) arrows.push_back({a.name, a.target, a.source});
    Quiver op(q.vertices(), std::move(arrows));
    std::vector<Relation> rels;
    for (const Relation& r : pres.relations()) {
        std::vector<Term> terms;
        for (const Term& t : r.terms()) {
            std::vector<int> ids(t.path.arrows().rbegin(), t.path.arrows().rend());
            terms.push_back({t.coefficient, Path::from_arrows(op, std::move(ids))});
        }
        rels.emplace_back(std::move(terms));
    }
    return Presentation(std::move(op), std::move(rels));
}

Presentation quotient(const Presentation& pres, const std::vector<Relation>& extra) {
    std::vector<Relation> rels = pres.relations();
    rels.insert(rels.end(), extra.begin(), extra.end());
    return Presentation(pres.quiver(), std::move(rels));
}

Presentation delete_vertices(const Presentation& pres, const std::set<std::string>& removed) {
    const Quiver& q = pres.quiver();
    std::vector<char> gone(static_cast<size_t>(q.vertex_count()), 0);
    for (const auto& name : removed) gone[static_cast<size_t>(q.vertex_index(name))] = 1;
    if (!removed.empty() && static_cast<int>(removed.size()) == q.vertex_count())
        throw Error(Errc::EmptyAlgebra, "every vertex deleted");

    std::vector<std::string> vertices;
    std::vector<int> new_index(static_cast<size_t>(q.vertex_count()), -1);
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (gone[static_cast<size_t>(v)]) continue;
        new_index[static_cast<size_t>(v)] = static_cast<int>(vertices.size());
        vertices.push_back(q.vertex(v));
    }
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows()) {
        if (gone[static_cast<size_t>(a.source)] || gone[static_cast<size_t>(a.target)]) continue;
        arrows.push_back({a.name, new_index[static_cast<size_t>(a.source)], new_index[static_cast<size_t>(a.target)]});
    }
    Quiver sub(std::move(vertices), std::move(arrows));

    std::vector<Relation> rels;
    for (const Relation& r : pres.relations()) {
        std::vector<Term> kept;
        for (const Term& t : r.terms()) {
            const auto vs = t.path.vertices(q);
            if (std::any_of(vs.begin(), vs.end(), [&](int v) { return gone[static_cast<size_t>(v)]; })) continue;
            kept.push_back(t);
        }
        if (kept.empty()) continue;
        Relation moved = transport(Relation(std::move(kept)), q, sub);
        if (std::find(rels.begin(), rels.end(), moved) == rels.end()) rels.push_back(std::move(moved));
    }
    return Presentation(std::move(sub), std::move(rels));
}

Presentation relabel_vertices(const Presentation& pres, const std::map<std::string, std::string>& renaming) {
    const Quiver& q = pres.quiver();
    std::vector<std::string> vertices;
    for (const auto& v : q.vertices()) {
        auto it = renaming.find(v);
        vertices.push_back(it == renaming.end() ? v : it->second);
    }
    Quiver renamed(std::move(vertices), q.arrows());
    return Presentation(std::move(renamed), pres.relations());
}

}  // namespace quiverlab
