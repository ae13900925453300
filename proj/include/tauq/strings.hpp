#pragma once

#include "tauq/rep.hpp"

// Walk combinatorics for special biserial algebras: string words, their
// canonical forms, the string-module construction, and exhaustive enumeration
// of all strings (= all indecomposables when no bands exist).

namespace tauq {

struct BandDetectedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Letter {
    int arrow = 0;
    bool inverse = false;
    friend bool operator==(const Letter& a, const Letter& b) {
        return a.arrow == b.arrow && a.inverse == b.inverse;
    }
    friend auto operator<=>(const Letter& a, const Letter& b) {
        if (a.arrow != b.arrow) return a.arrow <=> b.arrow;
        return (int)a.inverse <=> (int)b.inverse;
    }
};

struct StringWord {
    int base_vertex = 0;          // anchor for the empty word, else source of letters[0]
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    friend bool operator==(const StringWord& a, const StringWord& b) {
        return a.base_vertex == b.base_vertex && a.letters == b.letters;
    }
    friend auto operator<=>(const StringWord& a, const StringWord& b) {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() <=> b.letters.size();
        if (a.letters.empty()) return a.base_vertex <=> b.base_vertex;
        return a.letters <=> b.letters;
    }
};

int letter_source(const Quiver& q, const Letter& l);
int letter_target(const Quiver& q, const Letter& l);
int word_source(const Quiver& q, const StringWord& w);
int word_target(const Quiver& q, const StringWord& w);

StringWord inverse_word(const Quiver& q, const StringWord& w);

// min(w, w^-1) in the ordering above; a string and its inverse present the
// same module.
StringWord canonical_word(const Quiver& q, const StringWord& w);

// Valid string: composable walk, no letter followed by its own inverse, no
// relation inside a maximal direct run (nor inside a reversed inverse run).
bool is_valid_string(const MonomialAlgebra& A, const StringWord& w);

// e.g. "a b- c"; the empty word at vertex v prints "@v".
std::string word_to_string(const Quiver& q, const StringWord& w);

struct StringCaps {
    int max_length = 64;
    int max_modules = 512;
};

// All canonical strings: trivial words first (by vertex), then by (length,
// letter sequence). Throws BandDetectedError if some cyclic word closes up
// validly (module category has 1-parameter families), CapExceededError if a
// cap is hit.
std::vector<StringWord> enumerate_strings(const MonomialAlgebra& A, const StringCaps& caps = {});

// The string module: one basis vector per walk vertex, arrows act along the
// letters. Pre: valid string.
Representation string_module(const MonomialAlgebra& A, const StringWord& w);

} // namespace tauq
