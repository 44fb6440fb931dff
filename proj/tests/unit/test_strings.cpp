#include "doctest.h"

#include <functional>
#include <set>

#include "quiverlab/families.hpp"
#include "quiverlab/gds.hpp"
#include "quiverlab/quiver_io.hpp"
#include "quiverlab/strings.hpp"

using namespace quiverlab;
using families::linear_a;

namespace {

// Brute-force oracle: every letter sequence of length <= max_len that is a
// walk, reduced, and avoids zero relations read in either direction. A
// nontrivial string and its inverse are distinct sequences, so the number
// of strings is #vertices + #(nontrivial walks) / 2.
long oracle_string_count(const Presentation& pres, int max_len) {
    const Quiver& q = pres.quiver();
    std::vector<std::vector<int>> zero;
    for (const Relation& r : pres.relations()) zero.push_back(r.terms().front().path.arrows());
    long walks = 0;
    std::vector<std::pair<int, bool>> word;  // (arrow, inverse)
    auto bad_suffix = [&]() {
        for (const auto& rel : zero) {
            const size_t k = rel.size();
            if (word.size() < k) continue;
            bool direct = true, inverse = true;
            for (size_t i = 0; i < k; ++i) {
                const auto& l = word[word.size() - k + i];
                direct = direct && !l.second && l.first == rel[i];
                inverse = inverse && l.second && l.first == rel[k - 1 - i];
            }
            if (direct || inverse) return true;
        }
        return false;
    };
    std::function<void(int)> extend = [&](int at) {
        if (static_cast<int>(word.size()) == max_len) return;
        for (int a = 0; a < q.arrow_count(); ++a) {
            for (bool inv : {false, true}) {
                const Arrow& ar = q.arrow(a);
                if ((inv ? ar.target : ar.source) != at) continue;
                if (!word.empty() && word.back().first == a && word.back().second != inv) continue;
                word.emplace_back(a, inv);
                if (!bad_suffix()) {
                    ++walks;
                    extend(inv ? ar.source : ar.target);
                }
                word.pop_back();
            }
        }
    };
    for (int v = 0; v < q.vertex_count(); ++v) extend(v);
    return q.vertex_count() + walks / 2;
}

std::vector<std::string> words(const Presentation& p, int max_length = kDefaultMaxLength) {
    std::vector<std::string> out;
    for (const auto& w : enumerate_strings(p, max_length).words) out.push_back(to_string(p.quiver(), w));
    return out;
}

}  // namespace

TEST_CASE("string pair conditions") {
    CHECK(check_string_pair(linear_a(5)).ok);
    CHECK(check_string_pair(families::linear_a_truncated(5, 2)).ok);
    for (int n = 4; n <= 6; ++n) CHECK(check_string_pair(families::type_d(n)).ok);
    CHECK(check_string_pair(families::triangle()).ok);

    auto env = check_string_pair(enveloping(linear_a(2)));
    CHECK_FALSE(env.ok);
    CHECK(env.condition == "NotMonomial");

    // Three arrows out of one vertex.
    auto s1 = check_string_pair(parse_presentation(
        "vertices: 1 2 3 4\narrow: a 1 2\narrow: b 1 3\narrow: c 1 4\n"));
    CHECK_FALSE(s1.ok);
    CHECK(s1.condition == "S1");

    // a followed by either b or c with no zero relation.
    auto s2 = check_string_pair(parse_presentation(
        "vertices: 1 2 3 4\narrow: a 1 2\narrow: b 2 3\narrow: c 2 4\n"));
    CHECK_FALSE(s2.ok);
    CHECK(s2.condition == "S2_R");
    auto fixed = check_string_pair(parse_presentation(
        "vertices: 1 2 3 4\narrow: a 1 2\narrow: b 2 3\narrow: c 2 4\nrelation: a b\n"));
    CHECK(fixed.ok);

    auto s2l = check_string_pair(parse_presentation(
        "vertices: 1 2 3 4\narrow: a 1 3\narrow: b 2 3\narrow: c 3 4\n"));
    CHECK_FALSE(s2l.ok);
    CHECK(s2l.condition == "S2_L");
}

TEST_CASE("strings of A3 and its radical-square quotient") {
    CHECK(words(linear_a(3)) == std::vector<std::string>{"e_1", "e_2", "e_3", "a", "b", "a b"});
    CHECK(words(families::linear_a_truncated(3, 2)).size() == 5);
    CHECK_FALSE(enumerate_strings(linear_a(3)).truncated);
}

TEST_CASE("strings of the triangle algebra") {
    const auto w = words(families::triangle());
    const std::set<std::string> got(w.begin(), w.end());
    const std::set<std::string> expected{"e_1", "e_2",   "e_3",     "a",           "b",
                                         "c",   "a^-1 c", "b c^-1", "a^-1 c b^-1"};
    CHECK(w.size() == 9);
    CHECK(got == expected);
}

TEST_CASE("string counts agree with a brute-force walk oracle") {
    std::vector<Presentation> corpus{linear_a(4),
                                     families::linear_a_truncated(5, 3),
                                     families::type_d(4),
                                     families::type_d(6),
                                     families::triangle()};
    for (const auto& p : corpus) {
        const auto list = enumerate_strings(p, 12);
        CHECK_FALSE(list.truncated);
        CHECK(static_cast<long>(list.words.size()) == oracle_string_count(p, 12));
    }
    // The Kronecker quiver has infinitely many strings; compare a prefix.
    const auto k = enumerate_strings(families::kronecker(), 5);
    CHECK(k.truncated);
    CHECK(static_cast<long>(k.words.size()) == oracle_string_count(families::kronecker(), 5));
}

TEST_CASE("linear A_n has n(n+1)/2 strings") {
    for (int n = 1; n <= 6; ++n) CHECK(enumerate_strings(linear_a(n)).words.size() == static_cast<size_t>(n * (n + 1) / 2));
}

TEST_CASE("band detection") {
    const auto k = detect_bands(families::kronecker(), 8);
    REQUIRE(k.bands.size() == 1);
    CHECK(to_string(families::kronecker().quiver(), k.bands[0]) == "a b^-1");
    for (int n = 1; n <= 5; ++n) CHECK(detect_bands(linear_a(n), 12).bands.empty());
    for (int n = 4; n <= 6; ++n) CHECK(detect_bands(families::type_d(n), 12).bands.empty());
    CHECK(detect_bands(families::triangle(), 12).bands.empty());
}

TEST_CASE("representation finiteness via strings") {
    CHECK(is_rep_finite_string(linear_a(4)));
    CHECK(is_rep_finite_string(families::type_d(5)));
    CHECK_FALSE(is_rep_finite_string(families::kronecker(), 8));
    try {
        is_rep_finite_string(linear_a(10), 3);
        FAIL("expected Indeterminate");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Indeterminate);
    }
}

TEST_CASE("string modules") {
    const auto a3 = linear_a(3);
    const Quiver& q3 = a3.quiver();

    const auto s1 = string_module(a3, parse_word(q3, "e_1"));
    CHECK(s1.dims() == std::vector<int>{1, 0, 0});

    const auto p1 = string_module(a3, parse_word(q3, "a b"));
    CHECK(p1.dims() == std::vector<int>{1, 1, 1});
    CHECK(p1.map(0) == Matrix::Identity(1, 1));
    CHECK(p1.map(1) == Matrix::Identity(1, 1));
    CHECK(is_isomorphic(a3, p1, ModuleCategory(a3).projective(0)));

    const auto tri = families::triangle();
    const Quiver& qt = tri.quiver();
    const auto m = string_module(tri, parse_word(qt, "a^-1 c"));
    CHECK(m.dims() == std::vector<int>{1, 1, 1});
    CHECK(m.map(qt.arrow_index("a")) == Matrix::Identity(1, 1));
    CHECK(m.map(qt.arrow_index("c")) == Matrix::Identity(1, 1));
    CHECK(m.map(qt.arrow_index("b")) == Matrix::Zero(1, 1));

    CHECK_THROWS_AS(string_module(tri, parse_word(qt, "a b")), Error);
    CHECK_THROWS_AS(parse_word(qt, "b a"), Error);
}

TEST_CASE("string modules are indecomposable and invariant under inversion") {
    for (const auto& p : {families::triangle(), families::type_d(5), families::linear_a_truncated(4, 2)}) {
        const Quiver& q = p.quiver();
        for (const auto& w : enumerate_strings(p).words) {
            const auto m = string_module(p, w);
            CHECK(m.total_dim() == w.length() + 1);
            CHECK(validate_module(p, m));
            CHECK(end_is_local(p, m));
            CHECK(is_isomorphic(p, m, string_module(p, inverse(q, w))));
        }
    }
}
