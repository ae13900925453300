#pragma once

#include "tauq/tautilt.hpp"

#include <optional>

// Summand bijections between tau-tilting modules: perfect matchings where a
// pair is admissible when the summands are isomorphic or linked by a nonzero
// Ext^1 (either direction) / nonzero Hom into tau (either direction); global
// permutations of the tau-rigid catalog restricting to every difference-set
// bijection at once; and conjugacy of those permutations across two algebras.

namespace tauq {

enum class MatchMode { Ext, TauHom };

struct MatchedPair {
    int x = 0, y = 0; // catalog indices
    enum Why { Iso, ExtNonzero, TauHomNonzero } why = Iso;
};

struct Matching {
    std::vector<MatchedPair> pairs;
};

// strict_iso: isomorphic summands are paired with each other first and the
// rest must be matched by the mode condition alone; relaxed mode allows
// either condition everywhere. Lexicographically first matching.
std::optional<Matching> theorem5_matching(const Catalog& C, const std::vector<int>& X,
                                          const std::vector<int>& Y, MatchMode mode,
                                          bool strict_iso = true);

// Recompute every pair's justification from scratch (fresh tau / Ext / hom
// computations, no table lookups).
bool verify_matching(const Catalog& C, const Matching& m, MatchMode mode);

struct PairCheck {
    int ti = 0, tj = 0;
    bool ext_strict = false, ext_relaxed = false;
    bool tau_strict = false, tau_relaxed = false;
};

struct Theorem5Result {
    std::vector<PairCheck> pairs;         // unordered tilting pairs, i < j
    bool faithful_pairs_have_ext = true;  // strict Ext matching on faithful pairs
    bool all_pairs_have_tau = true;       // strict tau-Hom matching on all pairs
};
// Matchings are found from the catalog tables; each one is additionally
// re-verified from scratch while the pair count stays within deep_verify_cap.
Theorem5Result verify_theorem5(const Catalog& C, const std::vector<TauTiltingModule>& tilts,
                               int deep_verify_cap = 200);

struct GlobalPermResult {
    bool too_large = false;
    // each witness maps tau-rigid member position -> member position
    std::vector<std::vector<int>> witnesses;
};

// Permutations t of the tau-rigid catalog with t(U \ W) = W \ U for every
// ordered pair of tau-tilting summand sets. Skipped (too_large) when the
// tilting catalog exceeds the cap.
GlobalPermResult global_permutation(const TauRigidCatalog& R,
                                    const std::vector<std::vector<int>>& tilt_sets,
                                    int tilt_cap = 10, int witness_cap = 1000);

struct ConjugacyResult {
    bool found = false;
    std::vector<int> s;     // A member position -> B member position
    std::vector<int> alpha; // the A-side witness used
    std::vector<int> beta;  // the B-side witness used
    bool proj_flip = false;         // projective <-> non-projective
    bool simple_preserved = false;
    bool sincere_preserved = false;
    bool dim_growth_ok = false;     // 0 <= dim s(V) - dim V <= 2
    bool structural() const {
        return proj_flip && simple_preserved && sincere_preserved && dim_growth_ok;
    }
};

// Bijections s with beta = s alpha s^-1 for some global-permutation
// witnesses alpha (on A) and beta (on B); alpha-orbits must land on
// beta-orbits of equal size. Prefers (and flags) witnesses satisfying the
// structural side conditions.
ConjugacyResult conjugacy_search(const Catalog& CA, const TauRigidCatalog& RA,
                                 const std::vector<std::vector<int>>& tiltsA,
                                 const Catalog& CB, const TauRigidCatalog& RB,
                                 const std::vector<std::vector<int>>& tiltsB);

} // namespace tauq
