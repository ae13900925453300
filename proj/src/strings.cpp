#include "tauq/strings.hpp"

#include <algorithm>
#include <set>

namespace tauq {

int letter_source(const Quiver& q, const Letter& l) {
    return l.inverse ? q.arrows[l.arrow].tgt : q.arrows[l.arrow].src;
}

int letter_target(const Quiver& q, const Letter& l) {
    return l.inverse ? q.arrows[l.arrow].src : q.arrows[l.arrow].tgt;
}

int word_source(const Quiver& q, const StringWord& w) {
    return w.letters.empty() ? w.base_vertex : letter_source(q, w.letters.front());
}

int word_target(const Quiver& q, const StringWord& w) {
    return w.letters.empty() ? w.base_vertex : letter_target(q, w.letters.back());
}

StringWord inverse_word(const Quiver& q, const StringWord& w) {
    StringWord r;
    r.base_vertex = word_target(q, w);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(Letter{it->arrow, !it->inverse});
    return r;
}

StringWord canonical_word(const Quiver& q, const StringWord& w) {
    StringWord inv = inverse_word(q, w);
    return std::min(w, inv);
}

namespace {

// relation check over maximal same-direction runs
bool runs_relation_free(const MonomialAlgebra& A, const std::vector<Letter>& ls) {
    size_t i = 0;
    while (i < ls.size()) {
        size_t j = i;
        while (j < ls.size() && ls[j].inverse == ls[i].inverse) ++j;
        std::vector<int> run;
        for (size_t k = i; k < j; ++k) run.push_back(ls[k].arrow);
        if (ls[i].inverse) std::reverse(run.begin(), run.end());
        if (A.hits_relation(run)) return false;
        i = j;
    }
    return true;
}

} // namespace

bool is_valid_string(const MonomialAlgebra& A, const StringWord& w) {
    const Quiver& q = A.quiver;
    if (w.letters.empty()) return w.base_vertex >= 0 && w.base_vertex < q.n();
    for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
        if (letter_target(q, w.letters[i]) != letter_source(q, w.letters[i + 1])) return false;
        if (w.letters[i].arrow == w.letters[i + 1].arrow &&
            w.letters[i].inverse != w.letters[i + 1].inverse)
            return false;
    }
    return runs_relation_free(A, w.letters);
}

std::string word_to_string(const Quiver& q, const StringWord& w) {
    if (w.letters.empty()) return "@" + q.vertices[w.base_vertex];
    std::string out;
    for (const Letter& l : w.letters) {
        if (!out.empty()) out += " ";
        out += q.arrows[l.arrow].name;
        if (l.inverse) out += "-";
    }
    return out;
}

namespace {

// A band exists when some closed word stays valid under self-composition:
// then string modules sit in 1-parameter families and the finite catalog is
// meaningless. Checking w·w and the seam letters suffices.
bool closes_as_band(const MonomialAlgebra& A, const StringWord& w) {
    const Quiver& q = A.quiver;
    if (w.letters.empty()) return false;
    if (word_source(q, w) != word_target(q, w)) return false;
    StringWord sq = w;
    sq.letters.insert(sq.letters.end(), w.letters.begin(), w.letters.end());
    if (!is_valid_string(A, sq)) return false;
    // must genuinely mix directions, otherwise a power would hit a relation
    // eventually (admissible ideal) and w^k dies for some k <= basis length
    bool has_dir = false, has_inv = false;
    for (const Letter& l : w.letters) (l.inverse ? has_inv : has_dir) = true;
    if (has_dir && has_inv) return true;
    // pure direct (or pure inverse) cycle: valid square already implies the
    // cycle parade continues; check powers up to the path-length cap
    StringWord pw = sq;
    for (int k = 2; k <= 64; ++k) {
        pw.letters.insert(pw.letters.end(), w.letters.begin(), w.letters.end());
        if (!is_valid_string(A, pw)) return false;
    }
    return true;
}

} // namespace

std::vector<StringWord> enumerate_strings(const MonomialAlgebra& A, const StringCaps& caps) {
    const Quiver& q = A.quiver;
    int m = static_cast<int>(q.arrows.size());

    std::set<StringWord> canon;
    for (int v = 0; v < q.n(); ++v) canon.insert(StringWord{v, {}});

    // frontier of all valid words (not only canonical); right extension from
    // single letters reaches every word through its prefixes
    std::vector<StringWord> frontier;
    for (int a = 0; a < m; ++a)
        for (int inv = 0; inv < 2; ++inv) {
            StringWord w;
            w.letters.push_back(Letter{a, inv == 1});
            w.base_vertex = word_source(q, w);
            if (is_valid_string(A, w)) frontier.push_back(w);
        }

    int len = 1;
    while (!frontier.empty()) {
        if (len > caps.max_length)
            throw CapExceededError("string length cap " + std::to_string(caps.max_length) +
                                   " exceeded");
        for (const StringWord& w : frontier) {
            if (closes_as_band(A, w))
                throw BandDetectedError("band detected: " + word_to_string(q, w) +
                                        " closes up validly; catalog would be infinite");
            canon.insert(canonical_word(q, w));
            if (static_cast<int>(canon.size()) > caps.max_modules)
                throw CapExceededError("catalog cap " + std::to_string(caps.max_modules) +
                                       " exceeded");
        }
        std::vector<StringWord> next;
        for (const StringWord& w : frontier) {
            int end = word_target(q, w);
            for (int a = 0; a < m; ++a)
                for (int inv = 0; inv < 2; ++inv) {
                    Letter l{a, inv == 1};
                    if (letter_source(q, l) != end) continue;
                    const Letter& last = w.letters.back();
                    if (last.arrow == a && last.inverse != l.inverse) continue;
                    StringWord ext = w;
                    ext.letters.push_back(l);
                    if (is_valid_string(A, ext)) next.push_back(std::move(ext));
                }
        }
        frontier = std::move(next);
        ++len;
    }

    return {canon.begin(), canon.end()};
}

Representation string_module(const MonomialAlgebra& A, const StringWord& w) {
    const Quiver& q = A.quiver;
    if (!is_valid_string(A, w)) throw std::logic_error("invalid string word");

    int k = w.length() + 1; // walk vertices
    std::vector<int> walk(k);
    walk[0] = word_source(q, w);
    for (int i = 0; i < w.length(); ++i) walk[i + 1] = letter_target(q, w.letters[i]);

    Representation M;
    M.dims.assign(A.n(), 0);
    std::vector<int> local(k); // position of walk vertex i inside M_{walk[i]}
    for (int i = 0; i < k; ++i) local[i] = M.dims[walk[i]]++;

    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& ar = q.arrows[ai];
        Matrix mat(M.dims[ar.tgt], M.dims[ar.src]);
        for (int i = 0; i < w.length(); ++i) {
            const Letter& l = w.letters[i];
            if (l.arrow != static_cast<int>(ai)) continue;
            // direct letter: walk[i] -> walk[i+1]; inverse: walk[i+1] -> walk[i]
            int from = l.inverse ? i + 1 : i;
            int to = l.inverse ? i : i + 1;
            mat.at(local[to], local[from]) = fp_one();
        }
        M.act.push_back(std::move(mat));
    }
    check_representation(A, M);
    return M;
}

} // namespace tauq
