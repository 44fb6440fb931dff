#include "doctest.h"

#include "quiverlab/ar.hpp"
#include "quiverlab/families.hpp"
#include "quiverlab/gds.hpp"
#include "quiverlab/iso.hpp"
#include "quiverlab/quiver_io.hpp"

using namespace quiverlab;
using families::linear_a;

TEST_CASE("a relabelled copy is found with the relabelling") {
    const auto a = families::type_d(5);
    // Renamed vertices, listed in a different order.
    const auto shuffled = parse_presentation(
        "vertices: t s r q p\narrow: a1 p r\narrow: a2 q r\narrow: a3 r s\narrow: a4 s t\nrelation: a2 a3\n");
    const auto r = find_iso(a, shuffled);
    REQUIRE(r.status == IsoStatus::Found);
    const auto& w = *r.witness;
    const Quiver& qa = a.quiver();
    const Quiver& qb = shuffled.quiver();
    CHECK(qb.vertex(w.vertices[static_cast<size_t>(qa.vertex_index("1"))]) == "p");
    CHECK(qb.vertex(w.vertices[static_cast<size_t>(qa.vertex_index("5"))]) == "t");
    CHECK(verify_iso(a, shuffled, w));
}

TEST_CASE("non-isomorphic algebras") {
    const auto r = find_iso(linear_a(3), families::linear_a_truncated(3, 2));
    CHECK(r.status == IsoStatus::None);
    CHECK(find_iso(families::type_d(4), linear_a(4)).status == IsoStatus::None);
    CHECK(find_iso(linear_a(3), opposite(linear_a(3))).status == IsoStatus::Found);
}

TEST_CASE("every corpus algebra is isomorphic to itself") {
    for (const auto& p : {linear_a(4), families::type_d(6), families::triangle(), families::star_x(),
                          grid_presentation(3, 3), families::triangle_auslander_reference()}) {
        const auto r = find_iso(p, p);
        REQUIRE(r.status == IsoStatus::Found);
        CHECK(verify_iso(p, p, *r.witness));
    }
}

TEST_CASE("verify_iso rejects broken witnesses") {
    const auto aus = auslander_presentation(*all_indecomposables(linear_a(3)).ar);
    const auto env = delete_vertices(standard_enveloping(3), auslander_deletion_set(DeletionFamily::A, 3));
    const auto r = find_iso(aus, env);
    REQUIRE(r.status == IsoStatus::Found);
    CHECK(verify_iso(aus, env, *r.witness));

    auto zero = *r.witness;
    zero.scalars[0] = Rational(0);
    CHECK_FALSE(verify_iso(aus, env, zero));

    auto swapped = *r.witness;
    std::swap(swapped.vertices[0], swapped.vertices[1]);
    CHECK_FALSE(verify_iso(aus, env, swapped));
}

TEST_CASE("sign changes are solved for") {
    const auto grid = grid_presentation(2, 2);
    const auto anti = Presentation(
        grid.quiver(), {Relation::from_words(grid.quiver(), {{1, "h_1_1 v_1_2"}, {1, "v_1_1 h_2_1"}})});
    const auto r = find_iso(grid, anti);
    REQUIRE(r.status == IsoStatus::Found);
    bool negative = false;
    for (const auto& s : r.witness->scalars) negative = negative || s == Rational(-1);
    CHECK(negative);
    CHECK(verify_iso(grid, anti, *r.witness));
}

TEST_CASE("budget and infinite inputs") {
    const auto g = grid_presentation(3, 3);
    CHECK(find_iso(g, g, 0).status == IsoStatus::Inconclusive);
    const auto loop = parse_presentation("vertices: 1\narrow: x 1 1\n");
    try {
        find_iso(loop, loop);
        FAIL("expected InfiniteDimensional");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InfiniteDimensional);
    }
}
