#include "quiverlab/families.hpp"

#include <charconv>

namespace quiverlab::families {
namespace {

std::string letter(int k) { return std::string(1, static_cast<char>('a' + k)); }

std::vector<std::string> numbered(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

Matrix mat(int rows, int cols, std::initializer_list<Rational> entries) {
    Matrix m(rows, cols);
    auto it = entries.begin();
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m(r, c) = *it++;
    }
    return m;
}

}  // namespace

Presentation linear_a(int n) {
    if (n < 1 || n > 27) throw Error(Errc::OutOfRange, "linear_a supports 1 <= n <= 27");
    std::vector<std::array<std::string, 3>> arrows;
    for (int k = 1; k < n; ++k) arrows.push_back({letter(k - 1), std::to_string(k), std::to_string(k + 1)});
    return Presentation(Quiver::from_names(numbered(n), arrows), {});
}

Presentation linear_a_truncated(int n, int length) {
    Presentation base = linear_a(n);
    const Quiver& q = base.quiver();
    std::vector<Relation> rels;
    for (int start = 0; start + length <= q.arrow_count(); ++start) {
        std::vector<int> ids;
        for (int k = 0; k < length; ++k) ids.push_back(start + k);
        rels.push_back(Relation::monomial(Path::from_arrows(q, ids)));
    }
    return Presentation(q, std::move(rels));
}

Presentation type_d(int n) {
    if (n < 4) throw Error(Errc::OutOfRange, "type_d needs n >= 4");
    std::vector<std::array<std::string, 3>> arrows{{"a1", "1", "3"}, {"a2", "2", "3"}};
    for (int k = 3; k < n; ++k) arrows.push_back({"a" + std::to_string(k), std::to_string(k), std::to_string(k + 1)});
    Quiver q = Quiver::from_names(numbered(n), arrows);
    std::vector<Relation> rels{Relation::from_words(q, {{1, "a2 a3"}})};
    return Presentation(std::move(q), std::move(rels));
}

Presentation triangle() {
    Quiver q = Quiver::from_names({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}});
    std::vector<Relation> rels{Relation::from_words(q, {{1, "a b"}})};
    return Presentation(std::move(q), std::move(rels));
}

Presentation triangle_auslander_reference() {
    Quiver q = Quiver::from_names({"(2,1)", "(2,2)", "(2,3)", "(3,1)", "(3,2)", "(3,3)", "(4,2)", "(4,3)", "x"},
                                  {{"a1", "(2,1)", "(3,1)"},
                                   {"a2", "(3,1)", "(3,2)"},
                                   {"a3", "(3,2)", "(3,3)"},
                                   {"a4", "(3,3)", "x"},
                                   {"b1", "x", "(2,2)"},
                                   {"b2", "(2,2)", "(3,2)"},
                                   {"b3", "(3,2)", "(4,2)"},
                                   {"b4", "(4,2)", "(4,3)"},
                                   {"c1", "(2,1)", "(2,2)"},
                                   {"c2", "(2,2)", "(2,3)"},
                                   {"c3", "(2,3)", "(3,3)"},
                                   {"c4", "(3,3)", "(4,3)"}});
    std::vector<Relation> rels{
        Relation::from_words(q, {{1, "a1 a2"}, {-1, "c1 b2"}}),
        Relation::from_words(q, {{1, "b2 a3"}, {-1, "c2 c3"}}),
        Relation::from_words(q, {{1, "b3 b4"}, {-1, "a3 c4"}}),
        Relation::from_words(q, {{1, "a2 b3"}}),
        Relation::from_words(q, {{1, "b1 c2"}}),
        Relation::from_words(q, {{1, "c3 a4"}}),
        Relation::from_words(q, {{1, "a4 b1"}}),
    };
    return Presentation(std::move(q), std::move(rels));
}

Presentation star_x() {
    Quiver q = Quiver::from_names({"1", "2", "3", "3'", "3''", "4", "5"},
                                  {{"a1", "1", "3'"},
                                   {"a2", "1", "3"},
                                   {"b1", "3'", "4"},
                                   {"b2", "3", "4"},
                                   {"c1", "2", "3"},
                                   {"c2", "2", "3''"},
                                   {"d1", "3", "5"},
                                   {"d2", "3''", "5"}});
    std::vector<Relation> rels{
        Relation::from_words(q, {{1, "a1 b1"}, {-1, "a2 b2"}}),
        Relation::from_words(q, {{1, "c1 d1"}, {-1, "c2 d2"}}),
    };
    return Presentation(std::move(q), std::move(rels));
}

Representation star_module(const Rational& lambda) {
    // dims at 1, 2, 3, 3', 3'', 4, 5
    std::vector<int> dims{1, 1, 2, 1, 1, 1, 1};
    std::vector<Matrix> maps{
        mat(1, 1, {1}),          // a1
        mat(2, 1, {1, 0}),       // a2
        mat(1, 1, {1}),          // b1
        mat(1, 2, {1, 1}),       // b2
        mat(2, 1, {0, 1}),       // c1
        mat(1, 1, {1}),          // c2
        mat(1, 2, {1, lambda}),  // d1
        mat(1, 1, {lambda}),     // d2
    };
    return Representation(std::move(dims), std::move(maps));
}

Presentation kronecker() {
    return Presentation(Quiver::from_names({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}), {});
}

std::optional<Presentation> builtin(const std::string& name) {
    auto number = [&](size_t from) -> std::optional<int> {
        int n = 0;
        const char* first = name.data() + from;
        const char* last = name.data() + name.size();
        auto [ptr, ec] = std::from_chars(first, last, n);
        if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
        return n;
    };
    if (name == "triangle") return triangle();
    if (name == "triangle-aus") return triangle_auslander_reference();
    if (name == "star") return star_x();
    if (name == "kronecker") return kronecker();
    if (name.size() > 1 && name[0] == 'a') {
        if (auto n = number(1)) return linear_a(*n);
    }
    if (name.size() > 1 && name[0] == 'd') {
        if (auto n = number(1)) return type_d(*n);
    }
    return std::nullopt;
}

std::vector<std::string> builtin_names() { return {"a<n>", "d<n>", "triangle", "triangle-aus", "star", "kronecker"}; }

}  // namespace quiverlab::families
