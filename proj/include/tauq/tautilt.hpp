#pragma once

#include "tauq/catalog.hpp"

// tau-rigid and tau-tilting combinatorics on top of the catalog tables.
// Compatibility (Hom both ways into tau vanishes) turns tau-tilting
// enumeration into an n-clique search.

namespace tauq {

struct SearchTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TauRigidCatalog {
    std::vector<int> members;      // catalog indices, ascending
    std::vector<uint64_t> compat;  // bitmask per member position

    int size() const { return static_cast<int>(members.size()); }
    bool compatible(int i, int j) const { return (compat[i] >> j) & 1; }
    int position_of(int catalog_index) const; // -1 if absent
};

TauRigidCatalog tau_rigid_catalog(const Catalog& C);

// All n-element pairwise-compatible summand sets (catalog indices, sorted),
// in lexicographic order.
std::vector<std::vector<int>> tau_tilting_sets(const Catalog& C, const TauRigidCatalog& R);

struct PdSummary {
    PdResult worst;           // max over summands; infinite/at-least dominate
};

struct TauTiltingModule {
    std::vector<int> summands; // catalog indices, sorted
    int dim = 0;
    bool faithful = false;
    bool sincere = false;
    bool tilting = false;      // pd <= 1 on every summand and Ext^1(T,T) = 0
    PdResult pd;
};

std::vector<TauTiltingModule> tau_tilting_modules(const Catalog& C, const TauRigidCatalog& R);

// No tau-rigid S outside T keeps T + S tau-rigid (returns indices of violations).
std::vector<std::pair<int, int>> air_maximality_violations(const TauRigidCatalog& R,
                                                           const std::vector<std::vector<int>>& tilts);

struct SupportPair {
    std::vector<int> m_summands; // catalog indices
    std::vector<int> p_vertices; // vertex indices of the projective part
};

// All pairs (M, P) with M tau-rigid, Hom(P, M) = 0, |M| + |P| = n.
std::vector<SupportPair> support_pairs(const Catalog& C, const TauRigidCatalog& R);

struct SupportPairCheck {
    int pair_count = 0;
    int almost_count = 0;
    bool two_completions_ok = false; // every almost-complete pair: exactly 2
    bool mutation_connected = false; // exchange graph reached from (A, 0)
};
SupportPairCheck check_support_pairs(const Catalog& C, const TauRigidCatalog& R);

// Catalog members N with evaluation Hom(T,N) (x) T -> N surjective.
std::vector<int> generated_indecs(const Catalog& C, const std::vector<int>& T);

} // namespace tauq
