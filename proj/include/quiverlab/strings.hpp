#pragma once

#include <string>
#include <vector>

#include "quiverlab/presentation.hpp"
#include "quiverlab/representation.hpp"

namespace quiverlab {

inline constexpr int kDefaultMaxLength = 100;

struct Letter {
    int arrow = 0;
    bool inverse = false;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// A walk in the quiver: trivial at `vertex` when `letters` is empty.
struct StringWord {
    int vertex = 0;  // start vertex of the walk
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    friend bool operator==(const StringWord&, const StringWord&) = default;
};

// Start and end vertex of a letter as traversed.
int letter_source(const Quiver& q, const Letter& l);
int letter_target(const Quiver& q, const Letter& l);

StringWord inverse(const Quiver& q, const StringWord& w);
// Letters ordered by (arrow name, direct before inverse); trivial words by
// vertex index. Returns <0, 0, >0.
int compare_words(const Quiver& q, const StringWord& a, const StringWord& b);
StringWord canonical(const Quiver& q, const StringWord& w);
std::string to_string(const Quiver& q, const StringWord& w);
// "a b^-1 c" or "e_v"; throws InvalidWord when not a walk.
StringWord parse_word(const Quiver& q, const std::string& text);

// Composable, reduced, and free of zero-relation subwords in either reading.
bool is_string(const Presentation& pres, const StringWord& w);

struct StringPairReport {
    bool ok = true;
    std::string condition;  // "NotMonomial", "S1", "S2_R", "S2_L"
    std::string witness;
};
StringPairReport check_string_pair(const Presentation& pres);

struct StringList {
    std::vector<StringWord> words;  // canonical, ordered by length then letters
    bool truncated = false;         // a string of length max_length exists
};
StringList enumerate_strings(const Presentation& pres, int max_length = kDefaultMaxLength);

struct BandList {
    std::vector<StringWord> bands;  // minimal representative up to rotation and inversion
    bool truncated = false;         // the walk search hit its size limit
};
BandList detect_bands(const Presentation& pres, int max_length = kDefaultMaxLength);

Representation string_module(const Presentation& pres, const StringWord& w);

// True iff the string list is complete and no band exists. Throws
// Indeterminate when the strings are truncated and no band was found.
bool is_rep_finite_string(const Presentation& pres, int max_length = kDefaultMaxLength);

}  // namespace quiverlab
