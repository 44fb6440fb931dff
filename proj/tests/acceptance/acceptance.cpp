// Acceptance runner: one PASS/FAIL line per criterion. With a criterion
// number as argument only that criterion runs. The CLI executable path is
// the second argument (needed by the determinism criterion).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quiverlab/ar.hpp"
#include "quiverlab/families.hpp"
#include "quiverlab/gds.hpp"
#include "quiverlab/iso.hpp"
#include "quiverlab/strings.hpp"
#include "random_presentations.hpp"

using namespace quiverlab;
using families::linear_a;
using families::type_d;

namespace {

std::string g_cli;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void expect(bool ok, const std::string& what) {
        if (!ok) pass = false;
        details.push_back(std::string(ok ? "ok   " : "MISS ") + what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;  // 0 means no time budget
    std::function<void(Outcome&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ARQuiver ar_of(const Presentation& p) {
    auto c = all_indecomposables(p);
    if (c.status != ClosureStatus::Complete) throw Error(Errc::OutOfRange, "closure did not terminate");
    return *c.ar;
}

Presentation auslander_of(const Presentation& p) { return auslander_presentation(ar_of(p)); }

std::string count_text(const Presentation& p) {
    const auto c = count_indecomposables(p);
    return c ? std::to_string(*c) : "RepInfiniteSuspected";
}

bool verified_iso(const Presentation& a, const Presentation& b, std::string* reason = nullptr) {
    const Algebra aa(a), bb(b);
    const auto r = find_iso(aa, bb);
    if (reason) reason->assign(r.reason);
    return r.status == IsoStatus::Found && verify_iso(aa, bb, *r.witness);
}

// Criterion 1.
void indecomposable_counts(Outcome& out) {
    const std::vector<std::pair<std::string, Presentation>> bases{
        {"A2", linear_a(2)}, {"A3", linear_a(3)}, {"A4", linear_a(4)}, {"D4", type_d(4)}, {"D5", type_d(5)}};
    const std::vector<std::string> expected{"5", "17", "56", "40", "109"};
    for (size_t i = 0; i < bases.size(); ++i) {
        const std::string got = count_text(auslander_of(bases[i].second));
        out.expect(got == expected[i], "#ind " + bases[i].first + "^Aus = " + got + " (expected " + expected[i] + ")");
    }
}

// Criterion 2.
void infinite_boundaries(Outcome& out) {
    for (const auto& [name, base] : std::vector<std::pair<std::string, Presentation>>{{"A5", linear_a(5)},
                                                                                      {"D6", type_d(6)}}) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::string got = count_text(auslander_of(base));
        const double s = seconds_since(t0);
        out.expect(got == "RepInfiniteSuspected" && s <= 120.0,
                   name + "^Aus: " + got + " in " + std::to_string(s) + " s (limit 120 s)");
    }
    const auto star = families::star_x();
    const ModuleCategory cat(star);
    const auto m2 = families::star_module(Rational(2));
    const auto m3 = families::star_module(Rational(3));
    out.expect(cat.validate(m2) && cat.validate(m3), "M(2), M(3) satisfy the relations");
    out.expect(cat.end_is_local(m2) && cat.end_is_local(m3), "M(2), M(3) are indecomposable");
    out.expect(!cat.is_isomorphic(m2, m3), "M(2) and M(3) are not isomorphic");
}

// Criterion 3.
void structural_isomorphisms(Outcome& out) {
    for (int n = 2; n <= 4; ++n) {
        const auto target = delete_vertices(standard_enveloping(n), auslander_deletion_set(DeletionFamily::A, n));
        out.expect(verified_iso(auslander_of(linear_a(n)), target), "A" + std::to_string(n) + "^Aus ~ grid quotient");
    }
    for (int n = 4; n <= 5; ++n) {
        const auto target = delete_vertices(standard_enveloping(n), auslander_deletion_set(DeletionFamily::D, n));
        out.expect(verified_iso(auslander_of(type_d(n)), target), "D" + std::to_string(n) + "^Aus ~ grid quotient");
    }
}

// Criterion 4.
void triangle_example(Outcome& out) {
    const auto ar = ar_of(families::triangle());
    const auto aus = auslander_presentation(ar);
    out.expect(aus.quiver().vertex_count() == 9, "Auslander quiver has " + std::to_string(aus.quiver().vertex_count()) + " vertices");
    const auto reference = families::triangle_auslander_reference();
    std::string reason;
    const bool iso = verified_iso(aus, reference, &reason);
    out.expect(iso, "isomorphic to the seven-relation reference presentation" + (iso ? "" : " (" + reason + ")"));
    out.details.push_back("info dim computed = " + std::to_string(Algebra(aus).dimension()) +
                          ", sum dim Hom = " + std::to_string(total_hom_dimension(ar)) +
                          ", dim reference = " + std::to_string(Algebra(reference).dimension()));
    auto six = reference.relations();
    six.pop_back();  // drops a4 b1
    const bool six_iso = verified_iso(aus, Presentation(reference.quiver(), six));
    out.details.push_back(std::string("info without the relation a4 b1: ") +
                          (six_iso ? "isomorphic (verified witness)" : "not isomorphic"));
}

// Criterion 5.
void gluing_example(Outcome& out) {
    const auto a4 = quotient(linear_a(4), {Relation::from_words(linear_a(4).quiver(), {{1, "a b"}})});
    const auto g = glue(a4, {{"2", "4"}});
    std::set<std::string> rels;
    for (const auto& r : g.relations()) rels.insert(r.to_string(g.quiver()));
    out.expect(rels == std::set<std::string>{"a b", "c b"}, "glue(2,4) relations are {a b, c b}");
    const auto sup = gluing_algebra(a4, {{{"2", "4"}}, {}, {"2"}});
    out.expect(sup.relations().empty(), "with supplement {2} the relation set is empty");
    std::set<std::string> basis;
    for (const auto& layer : path_basis(sup, 3).by_degree) {
        for (const auto& p : layer) basis.insert(p.to_string(sup.quiver()));
    }
    for (const char* w : {"a b", "b c", "c b", "a b c", "b c b", "c b c"}) {
        out.expect(basis.count(w) == 1, std::string("degree <= 3 basis contains ") + w);
    }
}

// Criterion 6.
void property_suites(Outcome& out) {
    const std::vector<std::pair<std::string, Presentation>> corpus{
        {"A2", linear_a(2)}, {"A3", linear_a(3)}, {"A4", linear_a(4)}, {"A5", linear_a(5)},
        {"A4/rad2", families::linear_a_truncated(4, 2)}, {"A5/rad3", families::linear_a_truncated(5, 3)},
        {"D4", type_d(4)}, {"D5", type_d(5)}, {"D6", type_d(6)}, {"triangle", families::triangle()}};

    std::vector<std::pair<std::string, ARQuiver>> quivers;
    bool shape = true, cross = true, law = true, diamonds = true;
    for (const auto& [name, p] : corpus) {
        const auto ar = ar_of(p);
        for (const Mesh& m : meshes(ar)) shape = shape && !m.middles.empty() && m.middles.size() <= 2;
        cross = cross && enumerate_strings(p).words.size() == static_cast<size_t>(ar.size());
        const auto aus = auslander_presentation(ar);
        law = law && Algebra(aus).dimension() == total_hom_dimension(ar);
        diamonds = diamonds && check_diamonds_commutative(aus);
        quivers.emplace_back(name, ar);
        if (name == "A2" || name == "A3" || name == "A4" || name == "D4") quivers.emplace_back(name + "^Aus", ar_of(aus));
    }
    out.expect(shape, "every mesh of every corpus string algebra has 1 or 2 middle terms");
    out.expect(cross, "#strings = #indecomposables for A2..A5, D4..D6, A_n truncations, triangle (9 = 9)");
    out.expect(law, "dim of each Auslander presentation = sum of dim Hom(M, N)");
    out.expect(diamonds, "every Auslander presentation has commutative diamonds");

    bool additive = true;
    for (const auto& [name, ar] : quivers) {
        for (const Mesh& m : meshes(ar)) {
            const auto& end = ar.modules[static_cast<size_t>(m.end)];
            const auto& start = ar.modules[static_cast<size_t>(m.start)];
            for (size_t v = 0; v < end.dims().size(); ++v) {
                int sum = 0;
                for (const auto& [e, mult] : m.middles) sum += mult * ar.modules[static_cast<size_t>(e)].dims()[v];
                additive = additive && sum == end.dims()[v] + start.dims()[v];
            }
        }
    }
    out.expect(additive, "mesh dimension additivity on " + std::to_string(quivers.size()) + " AR quivers");

    std::mt19937 rng(20240611);
    bool lemma = true;
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = testing::random_presentation(rng);
        const auto extra = testing::random_monomials(rng, p.quiver(), 2);
        const Algebra a(p);
        const auto ideal = testing::generated_ideal(a, extra);
        const Algebra joint(quotient(p, extra));
        lemma = lemma && testing::iterated_quotient_dims(a, ideal) == testing::degree_dims(joint.report()) &&
                testing::multiplication_tables_agree(a, ideal, joint);
    }
    out.expect(lemma, "iterated quotient = joint quotient on 100 random presentations");

    std::mt19937 rng2(777);
    int exercised = 0;
    bool commute = true;
    for (int trial = 0; trial < 5000 && exercised < 100; ++trial) {
        const auto p = testing::random_presentation(rng2);
        const Quiver& q = p.quiver();
        const int n = q.vertex_count();
        const int v = static_cast<int>(rng2() % static_cast<unsigned>(n));
        const int w = (v + 1 + static_cast<int>(rng2() % static_cast<unsigned>(n - 1))) % n;
        const auto extra = testing::random_monomials(rng2, q, 2, {v, w});
        if (extra.empty()) continue;
        ++exercised;
        const GluingSpec spec{{{q.vertex(v), q.vertex(w)}}, {}, {q.vertex(v)}};
        const auto glued = gluing_algebra(p, spec);
        std::vector<Relation> moved;
        for (const auto& r : extra) moved.push_back(transport(r, q, glued.quiver()));
        commute = commute && path_basis(quotient(glued, moved), 6).by_degree ==
                                 path_basis(gluing_algebra(quotient(p, extra), spec), 6).by_degree;
    }
    out.expect(commute && exercised == 100, "supplement/quotient commutation on " + std::to_string(exercised) +
                                                " random presentations");

    bool counts = true;
    for (int n = 1; n <= 6; ++n) counts = counts && enumerate_strings(linear_a(n)).words.size() == static_cast<size_t>(n * (n + 1) / 2);
    out.expect(counts, "A_n has n(n+1)/2 strings for n <= 6");
}

std::string run_capture(const std::string& command) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run " + command);
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
    pclose(pipe);
    return output;
}

// Criterion 7.
void determinism(Outcome& out) {
    if (g_cli.empty()) {
        out.expect(false, "CLI path not given");
        return;
    }
    std::vector<std::string> runs;
    for (int n = 1; n <= 5; ++n) runs.push_back("a_n --n " + std::to_string(n));
    for (int n = 4; n <= 6; ++n) runs.push_back("d_n --n " + std::to_string(n));
    runs.push_back("sec5-1");
    runs.push_back("fig5-family");
    for (const auto& args : runs) {
        const std::string cmd = "'" + g_cli + "' check-paper " + args + " --json 2>/dev/null";
        const std::string first = run_capture(cmd);
        const std::string second = run_capture(cmd);
        out.expect(!first.empty() && first == second, "check-paper " + args + ": " + std::to_string(first.size()) +
                                                          " bytes, identical on rerun");
    }
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, "indecomposable counts of Auslander algebras", 60.0, indecomposable_counts},
        {2, "representation-infinite boundaries and the M(lambda) family", 240.0, infinite_boundaries},
        {3, "Auslander algebras as grid quotients", 60.0, structural_isomorphisms},
        {4, "Auslander algebra of the triangle algebra", 0.0, triangle_example},
        {5, "gluing example", 0.0, gluing_example},
        {6, "property suites", 120.0, property_suites},
        {7, "check-paper output determinism", 0.0, determinism},
    };
    return list;
}

}  // namespace

int main(int argc, char** argv) {
    std::cout << std::unitbuf;
    int only = 0;
    if (argc > 1) only = std::stoi(argv[1]);
    if (argc > 2) g_cli = argv[2];
    bool all = true;
    for (const Criterion& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        Outcome out;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.expect(false, std::string("error: ") + e.what());
        }
        const double s = seconds_since(t0);
        if (c.budget_seconds > 0) {
            std::ostringstream budget;
            budget << std::fixed << std::setprecision(1) << "time " << s << " s within " << c.budget_seconds << " s";
            out.expect(s <= c.budget_seconds, budget.str());
        }
        for (const auto& d : out.details) std::cout << "    " << d << '\n';
        std::cout << "criterion " << c.id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << c.title << " ("
                  << std::fixed << std::setprecision(1) << s << " s)\n";
        all = all && out.pass;
    }
    return all ? 0 : 1;
}
