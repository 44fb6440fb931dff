#include "doctest.h"

#include <algorithm>
#include <functional>

#include "naive_hom.hpp"
#include "quiverlab/ar.hpp"
#include "quiverlab/families.hpp"
#include "quiverlab/gds.hpp"
#include "quiverlab/iso.hpp"
#include "quiverlab/strings.hpp"

using namespace quiverlab;
using families::linear_a;

namespace {

ARQuiver ar_of(const Presentation& p) {
    auto c = all_indecomposables(p);
    REQUIRE(c.status == ClosureStatus::Complete);
    return *c.ar;
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::Syntax;
}

void check_mesh_additivity(const ARQuiver& ar) {
    for (const Mesh& m : meshes(ar)) {
        const auto& end = ar.modules[static_cast<size_t>(m.end)].dims();
        const auto& start = ar.modules[static_cast<size_t>(m.start)].dims();
        std::vector<int> sum(end.size(), 0);
        for (const auto& [e, mult] : m.middles) {
            for (size_t v = 0; v < sum.size(); ++v) sum[v] += mult * ar.modules[static_cast<size_t>(e)].dim(static_cast<int>(v));
        }
        for (size_t v = 0; v < sum.size(); ++v) CHECK(sum[v] == end[v] + start[v]);
    }
}

}  // namespace

TEST_CASE("AR quiver of A2") {
    const auto ar = ar_of(linear_a(2));
    REQUIRE(ar.size() == 3);
    // Canonical order: S1 and S2 (dim 1) before P1 (dim 2).
    const auto ms = meshes(ar);
    REQUIRE(ms.size() == 1);
    const auto& s1 = ar.modules[static_cast<size_t>(ms[0].end)];
    const auto& s2 = ar.modules[static_cast<size_t>(ms[0].start)];
    CHECK(s1.dims() == std::vector<int>{1, 0});
    CHECK(s2.dims() == std::vector<int>{0, 1});
    REQUIRE(ms[0].middles.size() == 1);
    CHECK(ar.modules[static_cast<size_t>(ms[0].middles[0].first)].dims() == std::vector<int>{1, 1});
    CHECK(ar.directed);
}

TEST_CASE("AR quiver of A3 against a naive rad/rad^2 oracle") {
    const auto p = linear_a(3);
    const auto ar = ar_of(p);
    CHECK(ar.size() == 6);
    CHECK(meshes(ar).size() == 3);
    CHECK(ar.irr == testing::naive_irreducible_counts(p.quiver(), ar.modules));
    // Two boundary meshes with one middle term, one interior mesh with two.
    std::vector<size_t> middles;
    for (const Mesh& m : meshes(ar)) middles.push_back(m.middles.size());
    std::sort(middles.begin(), middles.end());
    CHECK(middles == std::vector<size_t>{1, 1, 2});
    check_mesh_additivity(ar);
}

TEST_CASE("irreducible maps match the oracle on D4 and the triangle") {
    for (const auto& p : {families::type_d(4), families::triangle()}) {
        const auto ar = ar_of(p);
        CHECK(ar.irr == testing::naive_irreducible_counts(p.quiver(), ar.modules));
        check_mesh_additivity(ar);
    }
}

TEST_CASE("projective and injective flags follow tau") {
    for (const auto& p : {linear_a(4), families::type_d(5), families::triangle()}) {
        const ModuleCategory cat(p);
        const auto ar = ar_of(p);
        std::vector<bool> in_image(static_cast<size_t>(ar.size()), false);
        for (const auto& t : ar.tau) {
            if (t) in_image[static_cast<size_t>(*t)] = true;
        }
        for (int i = 0; i < ar.size(); ++i) {
            CHECK(ar.projective[static_cast<size_t>(i)] == !ar.tau[static_cast<size_t>(i)].has_value());
            CHECK(ar.injective[static_cast<size_t>(i)] == !in_image[static_cast<size_t>(i)]);
            const auto& m = ar.modules[static_cast<size_t>(i)];
            if (!ar.projective[static_cast<size_t>(i)]) CHECK(cat.is_isomorphic(cat.tau_inv(cat.tau(m)), m));
            if (!ar.injective[static_cast<size_t>(i)]) CHECK(cat.is_isomorphic(cat.tau(cat.tau_inv(m)), m));
        }
    }
}

TEST_CASE("Auslander presentations") {
    const auto a2 = auslander_presentation(ar_of(linear_a(2)));
    CHECK(a2.quiver().vertex_count() == 3);
    CHECK(a2.relations().size() == 1);
    CHECK(find_iso(a2, families::linear_a_truncated(3, 2)).status == IsoStatus::Found);

    for (const auto& p : {linear_a(3), families::type_d(4), families::triangle()}) {
        const auto ar = ar_of(p);
        const auto aus = auslander_presentation(ar);
        CHECK(Algebra(aus).dimension() == total_hom_dimension(ar));
        long naive = 0;
        for (const auto& m : ar.modules) {
            for (const auto& n : ar.modules) naive += static_cast<long>(testing::naive_hom_basis(p.quiver(), m, n).size());
        }
        CHECK(naive == total_hom_dimension(ar));
        CHECK(check_diamonds_commutative(aus));
        CHECK(is_admissible(aus));
    }

    const auto a3 = auslander_presentation(ar_of(linear_a(3)));
    const auto env = delete_vertices(standard_enveloping(3), auslander_deletion_set(DeletionFamily::A, 3));
    const auto r = find_iso(a3, env);
    REQUIRE(r.status == IsoStatus::Found);
    CHECK(verify_iso(a3, env, *r.witness));
}

TEST_CASE("indecomposable counts") {
    CHECK(count_indecomposables(linear_a(2)) == 3);
    CHECK(count_indecomposables(auslander_presentation(ar_of(linear_a(2)))) == 5);
    CHECK(count_indecomposables(auslander_presentation(ar_of(linear_a(3)))) == 17);
    CHECK_FALSE(count_indecomposables(families::kronecker()).has_value());
}

TEST_CASE("non-directed string algebras") {
    const auto tri = families::triangle();
    CHECK(code_of([&] { classify(ModuleCategory(tri)); }) == Errc::DirectednessViolated);
    const auto ar = ar_of(tri);
    CHECK(ar.size() == 9);
    CHECK_FALSE(ar.directed);
    CHECK(static_cast<size_t>(ar.size()) == enumerate_strings(tri).words.size());
    for (const Mesh& m : meshes(ar)) {
        CHECK(m.middles.size() >= 1);
        CHECK(m.middles.size() <= 2);
    }
}

TEST_CASE("incomplete lists and unsupported multiplicities") {
    const auto p = linear_a(3);
    const ModuleCategory cat(p);
    auto mods = ar_of(p).modules;
    mods.pop_back();
    CHECK(code_of([&] { ar_quiver(cat, mods); }) == Errc::IncompleteList);

    ARQuiver k;
    k.modules = {Representation({1, 0}, {Matrix::Zero(0, 1), Matrix::Zero(0, 1)}),
                 Representation({0, 1}, {Matrix::Zero(1, 0), Matrix::Zero(1, 0)})};
    k.irr = {{0, 0}, {2, 0}};
    k.tau = {std::nullopt, std::nullopt};
    k.projective = {true, true};
    k.injective = {true, true};
    CHECK(code_of([&] { auslander_presentation(k); }) == Errc::MultiplicityUnsupported);
}
