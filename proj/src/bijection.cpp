#include "tauq/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace tauq {

namespace {

bool mode_edge(const Catalog& C, MatchMode mode, int x, int y) {
    if (mode == MatchMode::Ext) return C.ext[x][y] + C.ext[y][x] > 0;
    return C.hom_tau(x, y) + C.hom_tau(y, x) > 0;
}

// lexicographically first perfect matching by backtracking
std::optional<std::vector<int>> first_matching(const std::vector<std::vector<bool>>& adm) {
    int n = static_cast<int>(adm.size());
    std::vector<int> match(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || !adm[i][j]) continue;
            used[j] = true; match[i] = j;
            if (rec(i + 1)) return true;
            used[j] = false; match[i] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return match;
}

} // namespace

std::optional<Matching> theorem5_matching(const Catalog& C, const std::vector<int>& X,
                                          const std::vector<int>& Y, MatchMode mode,
                                          bool strict_iso) {
    int n = static_cast<int>(X.size());
    assert(static_cast<int>(Y.size()) == n);
    std::vector<std::vector<bool>> adm(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool iso = X[i] == Y[j];
            if (strict_iso) {
                // isomorphic summands pair with each other; a summand of X
                // appearing in Y may not pair by the mode condition
                bool xi_shared = std::find(Y.begin(), Y.end(), X[i]) != Y.end();
                bool yj_shared = std::find(X.begin(), X.end(), Y[j]) != X.end();
                adm[i][j] = iso || (!xi_shared && !yj_shared && mode_edge(C, mode, X[i], Y[j]));
            } else {
                adm[i][j] = iso || mode_edge(C, mode, X[i], Y[j]);
            }
        }
    auto m = first_matching(adm);
    if (!m) return std::nullopt;
    Matching out;
    for (int i = 0; i < n; ++i) {
        MatchedPair p;
        p.x = X[i];
        p.y = Y[(*m)[i]];
        p.why = p.x == p.y ? MatchedPair::Iso
                           : (mode == MatchMode::Ext ? MatchedPair::ExtNonzero
                                                     : MatchedPair::TauHomNonzero);
        out.pairs.push_back(p);
    }
    return out;
}

bool verify_matching(const Catalog& C, const Matching& m, MatchMode mode) {
    const MonomialAlgebra& A = *C.A;
    for (const MatchedPair& p : m.pairs) {
        const Representation& X = C.modules[p.x];
        const Representation& Y = C.modules[p.y];
        if (p.why == MatchedPair::ExtNonzero && mode != MatchMode::Ext) return false;
        if (p.why == MatchedPair::TauHomNonzero && mode != MatchMode::TauHom) return false;
        switch (p.why) {
            case MatchedPair::Iso:
                if (iso_test(A, X, Y) != IsoResult::Yes) return false;
                break;
            case MatchedPair::ExtNonzero:
                if (ext1_dim(A, X, Y) + ext1_dim(A, Y, X) == 0) return false;
                break;
            case MatchedPair::TauHomNonzero: {
                Representation tx = tau_rep(A, X), ty = tau_rep(A, Y);
                if (hom_dim(A, X, ty) + hom_dim(A, Y, tx) == 0) return false;
                break;
            }
        }
    }
    return true;
}

Theorem5Result verify_theorem5(const Catalog& C, const std::vector<TauTiltingModule>& tilts,
                               int deep_verify_cap) {
    Theorem5Result res;
    size_t npairs = tilts.size() * (tilts.size() - 1) / 2;
    bool deep = npairs <= static_cast<size_t>(deep_verify_cap);
    for (size_t i = 0; i < tilts.size(); ++i)
        for (size_t j = i + 1; j < tilts.size(); ++j) {
            PairCheck pc;
            pc.ti = static_cast<int>(i);
            pc.tj = static_cast<int>(j);
            const auto& X = tilts[i].summands;
            const auto& Y = tilts[j].summands;
            auto check = [&](MatchMode mode, bool strict) {
                auto m = theorem5_matching(C, X, Y, mode, strict);
                return m.has_value() && (!deep || verify_matching(C, *m, mode));
            };
            pc.ext_strict = check(MatchMode::Ext, true);
            pc.ext_relaxed = check(MatchMode::Ext, false);
            pc.tau_strict = check(MatchMode::TauHom, true);
            pc.tau_relaxed = check(MatchMode::TauHom, false);
            if (tilts[i].faithful && tilts[j].faithful && !pc.ext_strict)
                res.faithful_pairs_have_ext = false;
            if (!pc.tau_strict) res.all_pairs_have_tau = false;
            res.pairs.push_back(pc);
        }
    return res;
}

GlobalPermResult global_permutation(const TauRigidCatalog& R,
                                    const std::vector<std::vector<int>>& tilt_sets,
                                    int tilt_cap, int witness_cap) {
    GlobalPermResult res;
    if (static_cast<int>(tilt_sets.size()) > tilt_cap) {
        res.too_large = true;
        return res;
    }
    int m = R.size();
    std::vector<uint64_t> tilt_masks;
    for (const auto& set : tilt_sets) {
        uint64_t mask = 0;
        for (int s : set) {
            int p = R.position_of(s);
            assert(p >= 0);
            mask |= 1ull << p;
        }
        tilt_masks.push_back(mask);
    }

    uint64_t all = m == 64 ? ~0ull : ((1ull << m) - 1);
    std::vector<uint64_t> allowed(m, all);
    for (uint64_t mu : tilt_masks)
        for (uint64_t mw : tilt_masks) {
            if (mu == mw) continue;
            uint64_t du = mu & ~mw, dw = mw & ~mu;
            for (int x = 0; x < m; ++x)
                if ((du >> x) & 1) allowed[x] &= dw;
        }

    std::vector<int> t(m, -1);
    uint64_t used = 0;
    std::function<void(int)> rec = [&](int x) {
        if (static_cast<int>(res.witnesses.size()) > witness_cap) return;
        if (x == m) {
            res.witnesses.push_back(t);
            return;
        }
        for (int y = 0; y < m; ++y) {
            if ((used >> y) & 1) continue;
            if (!((allowed[x] >> y) & 1)) continue;
            used |= 1ull << y; t[x] = y;
            rec(x + 1);
            used &= ~(1ull << y); t[x] = -1;
        }
    };
    rec(0);
    if (static_cast<int>(res.witnesses.size()) > witness_cap)
        throw SearchTooLargeError("global permutation witness cap exceeded");
    return res;
}

namespace {

std::vector<int> orbit_sizes(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<int> sz(n, 0);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) { seen[j] = true; j = perm[j]; ++len; }
        j = i;
        for (int k = 0; k < len; ++k) { sz[j] = len; j = perm[j]; }
    }
    return sz;
}

} // namespace

ConjugacyResult conjugacy_search(const Catalog& CA, const TauRigidCatalog& RA,
                                 const std::vector<std::vector<int>>& tiltsA,
                                 const Catalog& CB, const TauRigidCatalog& RB,
                                 const std::vector<std::vector<int>>& tiltsB) {
    ConjugacyResult best;
    if (RA.size() != RB.size()) return best;
    int m = RA.size();

    auto alphas = global_permutation(RA, tiltsA);
    auto betas = global_permutation(RB, tiltsB);
    if (alphas.too_large || betas.too_large) return best;

    auto eval = [&](const std::vector<int>& s, ConjugacyResult& r) {
        r.proj_flip = r.simple_preserved = r.sincere_preserved = r.dim_growth_ok = true;
        for (int x = 0; x < m; ++x) {
            int a = RA.members[x], b = RB.members[s[x]];
            if (CB.projective[b] != !CA.projective[a]) r.proj_flip = false;
            if (CB.simple[b] != CA.simple[a]) r.simple_preserved = false;
            if (CB.sincere[b] != CA.sincere[a]) r.sincere_preserved = false;
            int growth = CB.dim[b] - CA.dim[a];
            if (growth < 0 || growth > 2) r.dim_growth_ok = false;
        }
    };

    for (const auto& alpha : alphas.witnesses)
        for (const auto& beta : betas.witnesses) {
            auto asz = orbit_sizes(alpha);
            auto bsz = orbit_sizes(beta);
            {
                // conjugate permutations need matching cycle types
                auto a = asz, b = bsz;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b) continue;
            }
            std::vector<int> s(m, -1);
            std::vector<bool> used(m, false);
            std::function<bool(int)> rec = [&](int x) -> bool {
                if (x == m) {
                    ConjugacyResult r;
                    r.found = true;
                    r.s = s;
                    r.alpha = alpha;
                    r.beta = beta;
                    eval(s, r);
                    if (!best.found || (r.structural() && !best.structural())) best = r;
                    return best.structural(); // stop early only on a structural hit
                }
                if (s[x] >= 0) return rec(x + 1);
                for (int y = 0; y < m; ++y) {
                    if (used[y] || asz[x] != bsz[y]) continue;
                    // propagate along the alpha-orbit of x
                    std::vector<std::pair<int, int>> placed;
                    bool ok = true;
                    int u = x, v = y;
                    do {
                        if (s[u] >= 0 ? s[u] != v : used[v]) { ok = false; break; }
                        if (s[u] < 0) { s[u] = v; used[v] = true; placed.push_back({u, v}); }
                        u = alpha[u]; v = beta[v];
                    } while (u != x);
                    if (ok && v != y) ok = false;
                    if (ok && rec(x + 1)) return true;
                    for (auto [pu, pv] : placed) { s[pu] = -1; used[pv] = false; }
                }
                return false;
            };
            rec(0);
            if (best.found && best.structural()) return best;
        }
    return best;
}

} // namespace tauq
