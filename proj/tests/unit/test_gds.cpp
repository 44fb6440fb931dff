#include "doctest.h"

#include <algorithm>
#include <set>

#include "quiverlab/ar.hpp"
#include "quiverlab/families.hpp"
#include "quiverlab/gds.hpp"
#include "quiverlab/iso.hpp"
#include "quiverlab/quiver_io.hpp"

using namespace quiverlab;
using families::linear_a;

namespace {

int dim_of(const Presentation& p) { return Algebra(p).dimension(); }

std::set<std::string> relation_strings(const Presentation& p) {
    std::set<std::string> out;
    for (const auto& r : p.relations()) out.insert(r.to_string(p.quiver()));
    return out;
}

// The embedding realises the quiver as an induced subquiver of the grid:
// arrows between embedded vertices are exactly the grid arrows.
bool is_induced_embedding(const Presentation& p, const GridEmbedding& e) {
    const Quiver& q = p.quiver();
    const Quiver g = grid_presentation(e.rows, e.cols).quiver();
    std::set<std::pair<int, int>> used;
    for (const auto& [name, ij] : e.coords) {
        if (ij.first < 1 || ij.first > e.rows || ij.second < 1 || ij.second > e.cols) return false;
        if (!used.insert(ij).second) return false;
    }
    if (static_cast<int>(e.coords.size()) != q.vertex_count()) return false;
    auto gv = [&](int v) {
        const auto& [i, j] = e.coords.at(q.vertex(v));
        return g.vertex_index(grid_vertex(i, j));
    };
    for (int u = 0; u < q.vertex_count(); ++u) {
        for (int v = 0; v < q.vertex_count(); ++v) {
            int in_q = 0, in_g = 0;
            for (int a : q.arrows_from(u)) in_q += q.arrow(a).target == v;
            for (int a : g.arrows_from(gv(u))) in_g += g.arrow(a).target == gv(v);
            if (in_q != in_g) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("grid presentations") {
    const auto g22 = grid_presentation(2, 2);
    CHECK(g22.quiver().vertex_count() == 4);
    CHECK(g22.quiver().arrow_count() == 4);
    CHECK(g22.relations().size() == 1);
    CHECK(dim_of(g22) == 9);
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) CHECK(dim_of(grid_presentation(m, n)) == m * (m + 1) / 2 * n * (n + 1) / 2);
    }
    const auto line = grid_presentation(1, 4);
    CHECK(line.relations().empty());
    CHECK(find_iso(line, linear_a(4)).status == IsoStatus::Found);
    CHECK_THROWS_AS(grid_presentation(0, 3), Error);
}

TEST_CASE("tensor products multiply dimensions") {
    CHECK(dim_of(tensor(families::linear_a_truncated(3, 2), linear_a(2))) == 15);
    CHECK(dim_of(tensor(linear_a(2), opposite(linear_a(2)))) == 9);
    CHECK(find_iso(tensor(families::triangle(), linear_a(1)), families::triangle()).status == IsoStatus::Found);
    for (int n = 1; n <= 4; ++n) CHECK(dim_of(enveloping(linear_a(n))) == (n * (n + 1) / 2) * (n * (n + 1) / 2));
    CHECK(dim_of(tensor(families::type_d(4), families::linear_a_truncated(3, 2))) == dim_of(families::type_d(4)) * 5);
}

TEST_CASE("the 4x4 grid is the enveloping algebra of A4") {
    const auto r = find_iso(grid_presentation(4, 4), enveloping(linear_a(4)));
    REQUIRE(r.status == IsoStatus::Found);
    CHECK(verify_iso(grid_presentation(4, 4), enveloping(linear_a(4)), *r.witness));
    CHECK(find_iso(standard_enveloping(4), grid_presentation(4, 4)).status == IsoStatus::Found);
}

TEST_CASE("gluing a vertex of A4 modulo ab") {
    const auto a4 = quotient(linear_a(4), {Relation::from_words(linear_a(4).quiver(), {{1, "a b"}})});
    const auto g = glue(a4, {{"2", "4"}});
    CHECK(g.quiver().vertices() == std::vector<std::string>{"1", "2", "3"});
    const Arrow& c = g.quiver().arrow(g.quiver().arrow_index("c"));
    CHECK(g.quiver().vertex(c.source) == "3");
    CHECK(g.quiver().vertex(c.target) == "2");
    CHECK(relation_strings(g) == std::set<std::string>{"a b", "c b"});

    const auto sup = gluing_algebra(a4, {{{"2", "4"}}, {}, {"2"}});
    CHECK(sup.relations().empty());
    const auto rep = path_basis(sup, 3);
    CHECK(rep.truncated);
    std::set<std::string> basis;
    for (const auto& layer : rep.by_degree) {
        for (const auto& p : layer) basis.insert(p.to_string(sup.quiver()));
    }
    for (const char* w : {"a b", "b c", "c b", "a b c", "b c b", "c b c"}) CHECK(basis.count(w) == 1);
    CHECK_FALSE(is_admissible(sup));
}

TEST_CASE("glue corner cases") {
    const auto a4 = linear_a(4);
    CHECK(glue(a4, {}) == a4);
    const auto sinks = parse_presentation("vertices: 1 x y\narrow: a 1 x\narrow: b 1 y\n");
    const auto g = glue(sinks, {{"x", "y"}});
    CHECK(g.quiver().vertex_count() == 2);
    CHECK(g.relations().empty());
    CHECK(gluing_algebra(a4, {}) == a4);
    CHECK(gluing_algebra(a4, {{}, {"4"}, {}}) == delete_vertices(a4, {"4"}));
    CHECK_THROWS_AS(gluing_algebra(a4, {{}, {}, {"zz"}}), Error);
}

TEST_CASE("crossing sets") {
    const auto a4 = quotient(linear_a(4), {Relation::from_words(linear_a(4).quiver(), {{1, "a b"}})});
    const auto sup = gluing_algebra(a4, {{{"2", "4"}}, {}, {"2"}});
    const Quiver& q = sup.quiver();
    std::set<std::string> composites;
    for (const auto& pp : crossing_set(sup, "2", 2)) composites.insert(compose(q, pp.first, pp.second).to_string(q));
    for (const char* w : {"a", "b", "c", "a b", "b c", "c b", "a b c"}) CHECK(composites.count(w) == 1);

    // A source only admits trivial first halves.
    for (const auto& pp : crossing_set(linear_a(4), "1", 4)) CHECK(pp.first.is_trivial());
    // Interior vertex of A4: subintervals through 2, excluding the trivial pair.
    const auto at2 = crossing_set(linear_a(4), "2", 4);
    CHECK(at2.size() == 2 * 3 - 1);
}

TEST_CASE("grid embeddings") {
    const auto diamond = embed_into_grid(grid_presentation(2, 2));
    CHECK(diamond.rows == 2);
    CHECK(diamond.cols == 2);

    const auto a4aus = auslander_presentation(*all_indecomposables(linear_a(4)).ar);
    const auto e = embed_into_grid(a4aus);
    CHECK(e.rows * e.cols <= 16);
    CHECK(is_induced_embedding(a4aus, e));

    const auto star = embed_into_grid(families::star_x());
    CHECK(star.rows * star.cols == 9);
    CHECK(is_induced_embedding(families::star_x(), star));

    try {
        embed_into_grid(families::triangle());
        FAIL("expected NotPDS");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::NotPDS);
    }
}

TEST_CASE("diamond commutativity") {
    for (int n = 1; n <= 4; ++n) CHECK(check_diamonds_commutative(enveloping(linear_a(n))));
    const auto bare = grid_presentation(2, 2);
    CHECK_FALSE(check_diamonds_commutative(Presentation(bare.quiver(), {})));
    const auto anti = Presentation(bare.quiver(),
                                   {Relation::from_words(bare.quiver(), {{1, "h_1_1 v_1_2"}, {-2, "v_1_1 h_2_1"}})});
    CHECK_FALSE(check_diamonds_commutative(anti));
}

TEST_CASE("deletion sets") {
    CHECK(auslander_deletion_set(DeletionFamily::A, 3) ==
          std::set<std::string>{grid_vertex(1, 2), grid_vertex(1, 3), grid_vertex(2, 3)});
    for (int n = 1; n <= 6; ++n) CHECK(n * n - static_cast<int>(auslander_deletion_set(DeletionFamily::A, n).size()) == n * (n + 1) / 2);
    CHECK(25 - auslander_deletion_set(DeletionFamily::D, 5).size() == 13);
    CHECK_THROWS_AS(auslander_deletion_set(DeletionFamily::D, 3), Error);

    const auto a3 = delete_vertices(standard_enveloping(3), auslander_deletion_set(DeletionFamily::A, 3));
    CHECK(a3.quiver().vertex_count() == 6);
    CHECK(dim_of(delete_vertices(linear_a(3), {"3"})) == 3);
    CHECK(delete_vertices(linear_a(3), {}) == linear_a(3));
}
