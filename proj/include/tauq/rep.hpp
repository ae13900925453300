#pragma once

#include "tauq/algebra.hpp"
#include "tauq/matrix.hpp"

// Finite-dimensional left modules as representations: a dimension per vertex
// and, for each arrow a: x -> y, a matrix M_x -> M_y. Every public builder
// checks that all relation matrices vanish.

namespace tauq {

struct Representation {
    std::vector<int> dims;    // per vertex
    std::vector<Matrix> act;  // per arrow: dims[tgt] x dims[src]

    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
    bool is_zero_module() const { return total_dim() == 0; }
};

// Throws std::logic_error if shapes are wrong or a relation acts nonzero.
void check_representation(const MonomialAlgebra& A, const Representation& M);

Representation zero_rep(const MonomialAlgebra& A);
Representation simple_rep(const MonomialAlgebra& A, int vertex);

// P_v: basis = relation-free paths with source v, grouped by target vertex
// in algebra-basis order. Arrows act by path extension.
Representation projective_rep(const MonomialAlgebra& A, int vertex);

// I_v = D(e_v A): basis dual to paths with target v; an arrow a strips itself
// off the front of a path that starts with it.
Representation injective_rep(const MonomialAlgebra& A, int vertex);

Representation direct_sum(const MonomialAlgebra& A, const std::vector<const Representation*>& parts);

// Matrix of the action of a path (product of arrow matrices along it).
Matrix path_action(const MonomialAlgebra& A, const Representation& M, const Path& p);
Matrix path_action(const MonomialAlgebra& A, const Representation& M, const std::vector<int>& arrows,
                   int src_if_trivial);

std::vector<int> dim_vector(const Representation& M);

// Dimensions of the radical (sum of arrow images) per vertex.
std::vector<int> radical_dims(const MonomialAlgebra& A, const Representation& M);

// Loewy label: radical layers top to bottom, vertices sorted within a layer,
// e.g. "1/23/3"; the zero module prints "0". Display only.
std::string loewy_label(const MonomialAlgebra& A, const Representation& M);

bool is_sincere(const Representation& M);

// dim of Ann(M) = {a in A : a M = 0}, a two-sided ideal spanned by the path
// basis kernel of the action map A -> End(M).
int annihilator_dim(const MonomialAlgebra& A, const Representation& M);

// Basis-path coefficients of Ann(M) (columns = kernel vectors over A-basis).
Matrix annihilator_basis(const MonomialAlgebra& A, const Representation& M);

bool is_faithful(const MonomialAlgebra& A, const Representation& M);

} // namespace tauq
