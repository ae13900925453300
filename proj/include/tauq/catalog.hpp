#pragma once

#include "tauq/homology.hpp"
#include "tauq/strings.hpp"

// The indecomposable catalog of a string algebra: every string module once,
// in canonical order, with precomputed Hom/Ext/tau/pd tables. All later
// tau-tilting and bijection work runs off these tables.

namespace tauq {

struct CatalogOptions {
    StringCaps caps;
    int pd_cutoff = 20;
};

struct Catalog {
    const MonomialAlgebra* A = nullptr;
    CatalogOptions opts;
    uint64_t prime = 0;

    std::vector<StringWord> words;
    std::vector<Representation> modules;
    std::vector<std::string> labels; // Loewy labels, display only
    std::vector<std::vector<int>> dimvec;
    std::vector<int> dim;

    std::vector<int> tau_of;             // catalog index of tau(M), -1 when projective
    std::vector<Representation> tau_mod; // tau as a representation (zero for projectives)
    std::vector<std::vector<int>> hom;   // dim Hom(M_i, M_j)
    std::vector<std::vector<int>> ext;   // dim Ext^1(M_i, M_j)
    std::vector<PdResult> pd;

    std::vector<bool> projective, injective, simple, sincere;
    std::vector<int> proj_of_vertex, inj_of_vertex; // catalog index of P_v / I_v

    int size() const { return static_cast<int>(modules.size()); }

    int hom_tau(int i, int j) const { return tau_of[j] < 0 ? 0 : hom[i][tau_of[j]]; }
    bool tau_rigid(int i) const { return hom_tau(i, i) == 0; }
    bool tau_compatible(int i, int j) const {
        return tau_rigid(i) && tau_rigid(j) && hom_tau(i, j) == 0 && hom_tau(j, i) == 0;
    }

    int index_of_word(const std::string& serialized) const; // -1 if absent
    int index_of_label(const std::string& label) const;     // -1 absent, throws if ambiguous
    int find_module(const Representation& R) const;         // by isomorphism, -1 if absent
};

Catalog build_catalog(const MonomialAlgebra& A, const CatalogOptions& opts = {});

// Multiplicities of irreducible maps M_i -> M_j: dim rad(M_i,M_j)/rad^2.
// Together with tau this is the AR quiver.
std::vector<std::vector<int>> irreducible_dims(const Catalog& C);

} // namespace tauq
