#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Bound quiver algebras KQ/I with monomial relations. Paths are stored in
// traversal order: the sequence {a, b} means "follow a, then b", i.e. the
// composite b∘a when maps are written on the left.

namespace tauq {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error("line " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
          line(l), col(c) {}
};

struct NotAdmissibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string name;
    int src = 0, tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int n() const { return static_cast<int>(vertices.size()); }
    int vertex_index(const std::string& name) const; // -1 if absent
    int arrow_index(const std::string& name) const;  // -1 if absent
};

// A path: trivial (length 0, anchored at a vertex) or a composable arrow
// sequence in traversal order.
struct Path {
    int at = 0;                 // source vertex; for trivial paths the anchor
    std::vector<int> arrows;    // arrow indices, composable left to right

    int length() const { return static_cast<int>(arrows.size()); }
};

struct MonomialAlgebra {
    std::string name;
    Quiver quiver;
    std::vector<std::vector<int>> relations; // arrow index sequences, length >= 2
    std::map<std::string, long> params;      // resolved parameter values (e.g. n)

    // Relation-free paths, ordered: trivial paths by vertex, then by
    // (length, lexicographic arrow sequence). Computed by finalize().
    std::vector<Path> basis;

    int n() const { return quiver.n(); }
    int dim() const { return static_cast<int>(basis.size()); }

    int path_source(const Path& p) const;
    int path_target(const Path& p) const;

    // Basis index of the given arrow sequence, -1 if it hits a relation.
    int basis_index(const std::vector<int>& arrows, int src_if_trivial) const;

    // True if some relation occurs as a contiguous subsequence.
    bool hits_relation(const std::vector<int>& arrows) const;

    std::map<std::vector<int>, int> nontrivial_index; // arrow seq -> basis idx
};

struct ParseOptions {
    std::map<std::string, long> param_overrides;
    int max_path_length = 64;
};

// Parse the fixture DSL:
//   algebra <name>
//   vertices v1 v2 ...
//   arrow <name> <src> <tgt>
//   rel <arrow> <arrow> ...        (traversal order; exponents like b^3, b^n)
//   param <name> = <int>
// '#' starts a comment. Throws ParseError on malformed input and
// NotAdmissibleError if relation-free paths exceed max_path_length.
MonomialAlgebra parse_algebra(const std::string& text, const ParseOptions& opt = {});
MonomialAlgebra parse_algebra_file(const std::string& path, const ParseOptions& opt = {});

// Recompute the path basis (used after manual construction in tests).
void finalize_algebra(MonomialAlgebra& alg, int max_path_length = 64);

// Opposite algebra: arrows reversed, relations reversed, same names.
MonomialAlgebra opposite(const MonomialAlgebra& alg);

// Special biserial: <= 2 arrows in/out per vertex, and for each arrow b at
// most one arrow c with bc relation-free and at most one a with ab
// relation-free.
bool is_special_biserial(const MonomialAlgebra& alg);

// Presentation isomorphism: some vertex/arrow renaming carrying relations
// onto relations, both directions. Brute force, intended for small quivers.
bool presentations_isomorphic(const MonomialAlgebra& a, const MonomialAlgebra& b);

} // namespace tauq
