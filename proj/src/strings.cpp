#include "quiverlab/strings.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace quiverlab {
namespace {

// Enumeration gives up past this many walks and reports truncation.
constexpr size_t kWalkLimit = 2000000;

int compare_letters(const Quiver& q, const Letter& a, const Letter& b) {
    if (a.arrow != b.arrow) {
        const int c = q.arrow(a.arrow).name.compare(q.arrow(b.arrow).name);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (a.inverse != b.inverse) return a.inverse ? 1 : -1;
    return 0;
}

void require_monomial(const Presentation& pres) {
    if (!pres.is_monomial()) throw Error(Errc::NotMonomial, "string combinatorics needs zero relations only");
}

// Validity of appending `next` to a valid word ending in `word`.
class WalkRules {
public:
    explicit WalkRules(const Presentation& pres) : q_(pres.quiver()) {
        for (const Relation& r : pres.relations()) {
            zero_.push_back(r.terms().front().path.arrows());
            longest_ = std::max(longest_, r.length());
        }
    }

    bool extends(const std::vector<Letter>& word, int end_vertex, const Letter& next) const {
        if (letter_source(q_, next) != end_vertex) return false;
        if (!word.empty() && word.back().arrow == next.arrow && word.back().inverse != next.inverse) return false;
        // Only subwords ending at `next` can be new relation occurrences.
        for (const auto& rel : zero_) {
            const size_t k = rel.size();
            if (word.size() + 1 < k) continue;
            bool direct = !next.inverse, inverse = next.inverse;
            for (size_t t = 0; t < k && (direct || inverse); ++t) {
                const Letter& l = t == 0 ? next : word[word.size() - t];
                if (direct && (l.inverse || l.arrow != rel[k - 1 - t])) direct = false;
                if (inverse && (!l.inverse || l.arrow != rel[t])) inverse = false;
            }
            if (direct || inverse) return false;
        }
        return true;
    }

    int longest_relation() const { return longest_; }

private:
    const Quiver& q_;
    std::vector<std::vector<int>> zero_;
    int longest_ = 0;
};

std::vector<Letter> letters_from(const Quiver& q, int v) {
    std::vector<Letter> out;
    for (int a : q.arrows_from(v)) out.push_back({a, false});
    for (int a : q.arrows_into(v)) out.push_back({a, true});
    std::sort(out.begin(), out.end(), [&](const Letter& x, const Letter& y) { return compare_letters(q, x, y) < 0; });
    return out;
}

}  // namespace

int letter_source(const Quiver& q, const Letter& l) {
    return l.inverse ? q.arrow(l.arrow).target : q.arrow(l.arrow).source;
}

int letter_target(const Quiver& q, const Letter& l) {
    return l.inverse ? q.arrow(l.arrow).source : q.arrow(l.arrow).target;
}

StringWord inverse(const Quiver& q, const StringWord& w) {
    if (w.letters.empty()) return w;
    StringWord out;
    out.vertex = letter_target(q, w.letters.back());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back({it->arrow, !it->inverse});
    return out;
}

int compare_words(const Quiver& q, const StringWord& a, const StringWord& b) {
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    if (a.letters.empty()) return a.vertex == b.vertex ? 0 : (a.vertex < b.vertex ? -1 : 1);
    for (size_t i = 0; i < a.letters.size(); ++i) {
        if (int c = compare_letters(q, a.letters[i], b.letters[i]); c != 0) return c;
    }
    return 0;
}

StringWord canonical(const Quiver& q, const StringWord& w) {
    StringWord inv = inverse(q, w);
    return compare_words(q, inv, w) < 0 ? inv : w;
}

std::string to_string(const Quiver& q, const StringWord& w) {
    if (w.letters.empty()) return "e_" + q.vertex(w.vertex);
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += q.arrow(w.letters[i].arrow).name;
        if (w.letters[i].inverse) out += "^-1";
    }
    return out;
}

StringWord parse_word(const Quiver& q, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.size() == 1 && tokens[0].rfind("e_", 0) == 0) {
        if (auto v = q.find_vertex(tokens[0].substr(2))) return StringWord{*v, {}};
    }
    if (tokens.empty()) throw Error(Errc::InvalidWord, "empty word");
    StringWord w;
    for (const auto& t : tokens) {
        Letter l;
        std::string name = t;
        if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
            l.inverse = true;
            name.resize(name.size() - 3);
        }
        const auto a = q.find_arrow(name);
        if (!a) throw Error(Errc::InvalidWord, "unknown arrow '" + name + "'");
        l.arrow = *a;
        if (!w.letters.empty() && letter_target(q, w.letters.back()) != letter_source(q, l))
            throw Error(Errc::InvalidWord, "letters do not form a walk at '" + t + "'");
        w.letters.push_back(l);
    }
    w.vertex = letter_source(q, w.letters.front());
    return w;
}

bool is_string(const Presentation& pres, const StringWord& w) {
    require_monomial(pres);
    const Quiver& q = pres.quiver();
    if (w.letters.empty()) return w.vertex >= 0 && w.vertex < q.vertex_count();
    if (letter_source(q, w.letters.front()) != w.vertex) return false;
    const WalkRules rules(pres);
    std::vector<Letter> prefix;
    int end = w.vertex;
    for (const Letter& l : w.letters) {
        if (!rules.extends(prefix, end, l)) return false;
        prefix.push_back(l);
        end = letter_target(q, l);
    }
    return true;
}

StringPairReport check_string_pair(const Presentation& pres) {
    const Quiver& q = pres.quiver();
    StringPairReport rep;
    if (!pres.is_monomial()) {
        rep.ok = false;
        rep.condition = "NotMonomial";
        for (const Relation& r : pres.relations()) {
            if (!r.is_monomial()) {
                rep.witness = r.to_string(q);
                break;
            }
        }
        return rep;
    }
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (q.arrows_from(v).size() > 2 || q.arrows_into(v).size() > 2) {
            rep.ok = false;
            rep.condition = "S1";
            rep.witness = q.vertex(v);
            return rep;
        }
    }
    auto zero = [&](int a, int b) {
        for (const Relation& r : pres.relations()) {
            if (r.terms().front().path.arrows() == std::vector<int>{a, b}) return true;
        }
        return false;
    };
    for (int a = 0; a < q.arrow_count(); ++a) {
        std::vector<int> live;
        for (int b : q.arrows_from(q.arrow(a).target)) {
            if (!zero(a, b)) live.push_back(b);
        }
        if (live.size() > 1) {
            rep.ok = false;
            rep.condition = "S2_R";
            rep.witness = q.arrow(a).name + " " + q.arrow(live[0]).name + ", " + q.arrow(a).name + " " + q.arrow(live[1]).name;
            return rep;
        }
    }
    for (int b = 0; b < q.arrow_count(); ++b) {
        std::vector<int> live;
        for (int a : q.arrows_into(q.arrow(b).source)) {
            if (!zero(a, b)) live.push_back(a);
        }
        if (live.size() > 1) {
            rep.ok = false;
            rep.condition = "S2_L";
            rep.witness = q.arrow(live[0]).name + " " + q.arrow(b).name + ", " + q.arrow(live[1]).name + " " + q.arrow(b).name;
            return rep;
        }
    }
    return rep;
}

StringList enumerate_strings(const Presentation& pres, int max_length) {
    require_monomial(pres);
    const Quiver& q = pres.quiver();
    const WalkRules rules(pres);
    StringList out;
    std::vector<StringWord> found;
    size_t walks = 0;
    bool aborted = false;
    std::vector<Letter> word;
    // Depth-first over all walks starting at v; keep the canonical ones.
    std::function<void(int, int)> grow = [&](int start, int end) {
        if (aborted) return;
        if (++walks > kWalkLimit) {
            aborted = out.truncated = true;
            return;
        }
        if (!word.empty()) {
            StringWord w{start, word};
            if (compare_words(q, w, inverse(q, w)) <= 0) found.push_back(std::move(w));
        }
        // Strings of the maximal probed length may have longer extensions.
        if (static_cast<int>(word.size()) == max_length) {
            out.truncated = out.truncated || max_length > 0;
            return;
        }
        for (const Letter& l : letters_from(q, end)) {
            if (!rules.extends(word, end, l)) continue;
            word.push_back(l);
            grow(start, letter_target(q, l));
            word.pop_back();
        }
    };
    for (int v = 0; v < q.vertex_count(); ++v) {
        found.push_back(StringWord{v, {}});
        grow(v, v);
    }
    std::stable_sort(found.begin(), found.end(),
                     [&](const StringWord& a, const StringWord& b) { return compare_words(q, a, b) < 0; });
    out.words = std::move(found);
    return out;
}

BandList detect_bands(const Presentation& pres, int max_length) {
    require_monomial(pres);
    const Quiver& q = pres.quiver();
    const WalkRules rules(pres);
    BandList out;
    std::vector<StringWord> found;
    size_t walks = 0;
    std::vector<Letter> word;

    auto rotations_min = [&](const StringWord& w) {
        StringWord best = w;
        for (const StringWord& base : {w, inverse(q, w)}) {
            for (size_t r = 0; r < base.letters.size(); ++r) {
                StringWord rot;
                rot.letters.assign(base.letters.begin() + static_cast<long>(r), base.letters.end());
                rot.letters.insert(rot.letters.end(), base.letters.begin(), base.letters.begin() + static_cast<long>(r));
                rot.vertex = letter_source(q, rot.letters.front());
                if (compare_words(q, rot, best) < 0) best = rot;
            }
        }
        return best;
    };
    auto proper_power = [](const std::vector<Letter>& w) {
        const size_t n = w.size();
        for (size_t d = 1; d < n; ++d) {
            if (n % d) continue;
            bool periodic = true;
            for (size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
            if (periodic) return true;
        }
        return false;
    };
    auto all_powers_strings = [&](const StringWord& w) {
        // Relations are at most `longest` letters, so checking enough copies
        // to cover every junction window decides all powers.
        const int copies = 2 + rules.longest_relation() / std::max(1, w.length());
        std::vector<Letter> prefix;
        int end = w.vertex;
        for (int c = 0; c < copies; ++c) {
            for (const Letter& l : w.letters) {
                if (!rules.extends(prefix, end, l)) return false;
                prefix.push_back(l);
                end = letter_target(q, l);
            }
        }
        return true;
    };

    std::function<void(int, int)> grow = [&](int start, int end) {
        if (out.truncated) return;
        if (++walks > kWalkLimit) {
            out.truncated = true;
            return;
        }
        if (!word.empty() && end == start) {
            StringWord w{start, word};
            if (!proper_power(word) && all_powers_strings(w)) {
                StringWord rep = rotations_min(w);
                if (std::find(found.begin(), found.end(), rep) == found.end()) found.push_back(std::move(rep));
            }
        }
        if (static_cast<int>(word.size()) == max_length) return;
        for (const Letter& l : letters_from(q, end)) {
            if (!rules.extends(word, end, l)) continue;
            word.push_back(l);
            grow(start, letter_target(q, l));
            word.pop_back();
        }
    };
    for (int v = 0; v < q.vertex_count(); ++v) grow(v, v);
    std::stable_sort(found.begin(), found.end(),
                     [&](const StringWord& a, const StringWord& b) { return compare_words(q, a, b) < 0; });
    out.bands = std::move(found);
    return out;
}

Representation string_module(const Presentation& pres, const StringWord& w) {
    const Quiver& q = pres.quiver();
    if (!is_string(pres, w)) throw Error(Errc::InvalidWord, to_string(q, w) + " is not a string");
    std::vector<int> walk{w.vertex};
    for (const Letter& l : w.letters) walk.push_back(letter_target(q, l));
    std::vector<int> dims(static_cast<size_t>(q.vertex_count()), 0);
    std::vector<int> slot;  // position of walk vertex k inside its vertex space
    for (int v : walk) slot.push_back(dims[static_cast<size_t>(v)]++);
    std::vector<Matrix> maps;
    for (const Arrow& a : q.arrows())
        maps.push_back(Matrix::Zero(dims[static_cast<size_t>(a.target)], dims[static_cast<size_t>(a.source)]));
    for (size_t i = 0; i < w.letters.size(); ++i) {
        const Letter& l = w.letters[i];
        // Direct: basis vector i maps to i+1; inverse: i+1 maps to i.
        const size_t from = l.inverse ? i + 1 : i;
        const size_t to = l.inverse ? i : i + 1;
        maps[static_cast<size_t>(l.arrow)](slot[to], slot[from]) = Rational(1);
    }
    return Representation(std::move(dims), std::move(maps));
}

bool is_rep_finite_string(const Presentation& pres, int max_length) {
    const auto strings = enumerate_strings(pres, max_length);
    if (!strings.truncated) return true;
    if (!detect_bands(pres, max_length).bands.empty()) return false;
    throw Error(Errc::Indeterminate, "strings truncated at length " + std::to_string(max_length) + " and no band found");
}

}  // namespace quiverlab
