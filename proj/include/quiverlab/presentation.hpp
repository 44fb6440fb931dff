#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/error.hpp"
#include "quiverlab/rational.hpp"

namespace quiverlab {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Finite quiver with named vertices and arrows. Loops and parallel arrows are
// allowed; names are unique within vertices and within arrows.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    // Arrows given as (name, source name, target name).
    static Quiver from_names(std::vector<std::string> vertices,
                             const std::vector<std::array<std::string, 3>>& arrows);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& vertex(int v) const { return vertices_.at(static_cast<size_t>(v)); }
    const Arrow& arrow(int a) const { return arrows_.at(static_cast<size_t>(a)); }

    std::optional<int> find_vertex(std::string_view name) const;
    std::optional<int> find_arrow(std::string_view name) const;
    int vertex_index(std::string_view name) const;
    int arrow_index(std::string_view name) const;

    const std::vector<int>& arrows_from(int v) const { return out_.at(static_cast<size_t>(v)); }
    const std::vector<int>& arrows_into(int v) const { return in_.at(static_cast<size_t>(v)); }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int, std::less<>> vertex_index_;
    std::map<std::string, int, std::less<>> arrow_index_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// A path of a quiver: either the trivial path at a vertex or a composable
// arrow sequence, first-traversed arrow leftmost ("ab" is a then b).
class Path {
public:
    Path() = default;
    static Path trivial(int vertex);
    // Throws NotComposable when consecutive arrows do not meet.
    static Path from_arrows(const Quiver& q, std::vector<int> arrows);
    static Path from_names(const Quiver& q, const std::vector<std::string>& names);
    // Space separated arrow names; "e_v" or a bare vertex name is not accepted.
    static Path parse(const Quiver& q, std::string_view word);

    int source() const { return source_; }
    int target() const { return target_; }
    int length() const { return static_cast<int>(arrows_.size()); }
    bool is_trivial() const { return arrows_.empty(); }
    const std::vector<int>& arrows() const { return arrows_; }
    // Vertices visited, source first; length() + 1 entries.
    std::vector<int> vertices(const Quiver& q) const;
    bool touches(const Quiver& q, int vertex) const;

    std::string to_string(const Quiver& q) const;

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path& a, const Path& b) {
        if (auto c = a.source_ <=> b.source_; c != 0) return c;
        if (auto c = a.target_ <=> b.target_; c != 0) return c;
        return a.arrows_ <=> b.arrows_;
    }

private:
    int source_ = 0;
    int target_ = 0;
    std::vector<int> arrows_;
};

// Concatenation p then q.
Path compose(const Quiver& quiver, const Path& p, const Path& q);

struct Term {
    Rational coefficient;
    Path path;

    friend bool operator==(const Term&, const Term&) = default;
};

// Linear combination of parallel paths of equal length.
class Relation {
public:
    Relation() = default;
    // Validates: nonempty, nonzero coefficients, distinct parallel paths of a
    // common length.
    explicit Relation(std::vector<Term> terms);
    static Relation monomial(Path path);
    // Terms given as (coefficient, space separated arrow word).
    static Relation from_words(const Quiver& q,
                               const std::vector<std::pair<Rational, std::string>>& terms);

    const std::vector<Term>& terms() const { return terms_; }
    int source() const { return terms_.front().path.source(); }
    int target() const { return terms_.front().path.target(); }
    int length() const { return terms_.front().path.length(); }
    bool is_monomial() const { return terms_.size() == 1; }

    std::string to_string(const Quiver& q) const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::vector<Term> terms_;
};

// Bound quiver (Q, I) over the rationals, I generated by the listed relations.
class Presentation {
public:
    Presentation() = default;
    // Validates that every relation is a relation of `quiver` of length >= 2.
    Presentation(Quiver quiver, std::vector<Relation> relations);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    bool is_monomial() const;

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    Quiver quiver_;
    std::vector<Relation> relations_;
};

// Reverses every arrow and every relation path; names are kept.
Presentation opposite(const Presentation& pres);

// kQ / <I, J>: the relation list of `pres` followed by `extra`.
Presentation quotient(const Presentation& pres, const std::vector<Relation>& extra);

// A / AeA for e the sum of the idempotents of `removed`, realised by deleting
// the vertices and restricting every relation to its surviving terms.
Presentation delete_vertices(const Presentation& pres, const std::set<std::string>& removed);

// Renames vertices; names absent from `renaming` are kept.
Presentation relabel_vertices(const Presentation& pres,
                              const std::map<std::string, std::string>& renaming);

// Moves each relation onto another quiver with the same arrow names.
Relation transport(const Relation& r, const Quiver& from, const Quiver& to);

}  // namespace quiverlab
