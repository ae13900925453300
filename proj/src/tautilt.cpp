#include "tauq/tautilt.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace tauq {

int TauRigidCatalog::position_of(int catalog_index) const {
    auto it = std::lower_bound(members.begin(), members.end(), catalog_index);
    if (it == members.end() || *it != catalog_index) return -1;
    return static_cast<int>(it - members.begin());
}

TauRigidCatalog tau_rigid_catalog(const Catalog& C) {
    TauRigidCatalog R;
    for (int i = 0; i < C.size(); ++i)
        if (C.tau_rigid(i)) R.members.push_back(i);
    if (R.size() > 64) throw SearchTooLargeError("more than 64 tau-rigid modules");
    R.compat.assign(R.size(), 0);
    for (int i = 0; i < R.size(); ++i)
        for (int j = 0; j < R.size(); ++j)
            if (i != j && C.tau_compatible(R.members[i], R.members[j]))
                R.compat[i] |= 1ull << j;
    return R;
}

std::vector<std::vector<int>> tau_tilting_sets(const Catalog& C, const TauRigidCatalog& R) {
    int n = C.A->n();
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lexicographic backtracking over member positions, candidates narrowed
    // by the compatibility masks
    std::function<void(int, uint64_t)> rec = [&](int start, uint64_t allowed) {
        if (static_cast<int>(cur.size()) == n) {
            std::vector<int> set;
            for (int p : cur) set.push_back(R.members[p]);
            out.push_back(std::move(set));
            return;
        }
        for (int p = start; p < R.size(); ++p) {
            if (!((allowed >> p) & 1)) continue;
            cur.push_back(p);
            rec(p + 1, allowed & R.compat[p]);
            cur.pop_back();
        }
    };
    uint64_t all = R.size() == 64 ? ~0ull : ((1ull << R.size()) - 1);
    rec(0, all);
    return out;
}

namespace {

PdResult worst_pd(const Catalog& C, const std::vector<int>& summands) {
    PdResult w{PdResult::Finite, 0};
    for (int s : summands) {
        const PdResult& p = C.pd[s];
        if (p.kind == PdResult::InfinitePeriodic) return p;
        if (p.kind == PdResult::AtLeast) w = p;
        else if (w.kind == PdResult::Finite) w.value = std::max(w.value, p.value);
    }
    return w;
}

} // namespace

std::vector<TauTiltingModule> tau_tilting_modules(const Catalog& C, const TauRigidCatalog& R) {
    std::vector<TauTiltingModule> out;
    for (auto& set : tau_tilting_sets(C, R)) {
        TauTiltingModule t;
        t.summands = set;
        std::vector<const Representation*> parts;
        for (int s : set) parts.push_back(&C.modules[s]);
        Representation sum = direct_sum(*C.A, parts);
        t.dim = sum.total_dim();
        t.sincere = is_sincere(sum);
        t.faithful = is_faithful(*C.A, sum);
        t.pd = worst_pd(C, set);
        bool tilt = t.pd.kind == PdResult::Finite && t.pd.value <= 1;
        if (tilt)
            for (int a : set)
                for (int b : set)
                    if (C.ext[a][b] != 0) tilt = false;
        t.tilting = tilt;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::pair<int, int>> air_maximality_violations(const TauRigidCatalog& R,
                                                           const std::vector<std::vector<int>>& tilts) {
    std::vector<std::pair<int, int>> bad;
    for (size_t t = 0; t < tilts.size(); ++t) {
        for (int p = 0; p < R.size(); ++p) {
            int s = R.members[p];
            if (std::find(tilts[t].begin(), tilts[t].end(), s) != tilts[t].end()) continue;
            bool extends = true;
            for (int u : tilts[t]) {
                int up = R.position_of(u);
                assert(up >= 0);
                if (!R.compatible(up, p)) { extends = false; break; }
            }
            if (extends) bad.push_back({static_cast<int>(t), s});
        }
    }
    return bad;
}

namespace {

// all cliques (any size) of the compatibility graph, lexicographic
std::vector<std::vector<int>> all_cliques(const TauRigidCatalog& R) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, uint64_t)> rec = [&](int start, uint64_t allowed) {
        out.push_back(cur);
        for (int p = start; p < R.size(); ++p) {
            if (!((allowed >> p) & 1)) continue;
            cur.push_back(p);
            rec(p + 1, allowed & R.compat[p]);
            cur.pop_back();
        }
    };
    uint64_t all = R.size() == 64 ? ~0ull : ((1ull << R.size()) - 1);
    rec(0, all);
    return out;
}

std::vector<int> allowed_vertices(const Catalog& C, const std::vector<int>& clique_members) {
    std::vector<int> verts;
    for (int v = 0; v < C.A->n(); ++v) {
        bool ok = true;
        for (int m : clique_members)
            if (C.hom[C.proj_of_vertex[v]][m] != 0) { ok = false; break; }
        if (ok) verts.push_back(v);
    }
    return verts;
}

void subsets_of_size(const std::vector<int>& pool, int k, std::vector<int>& cur, size_t start,
                     const std::function<void(const std::vector<int>&)>& emit) {
    if (k == 0) { emit(cur); return; }
    for (size_t i = start; i + k <= pool.size() + 0u; ++i) {
        cur.push_back(pool[i]);
        subsets_of_size(pool, k - 1, cur, i + 1, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<SupportPair> support_pairs(const Catalog& C, const TauRigidCatalog& R) {
    int n = C.A->n();
    std::vector<SupportPair> out;
    for (const auto& clique : all_cliques(R)) {
        if (static_cast<int>(clique.size()) > n) continue;
        std::vector<int> summands;
        for (int p : clique) summands.push_back(R.members[p]);
        auto verts = allowed_vertices(C, summands);
        int need = n - static_cast<int>(clique.size());
        if (static_cast<int>(verts.size()) < need) continue;
        std::vector<int> cur;
        subsets_of_size(verts, need, cur, 0, [&](const std::vector<int>& ps) {
            out.push_back(SupportPair{summands, ps});
        });
    }
    return out;
}

SupportPairCheck check_support_pairs(const Catalog& C, const TauRigidCatalog& R) {
    int n = C.A->n();
    SupportPairCheck res;
    auto pairs = support_pairs(C, R);
    res.pair_count = static_cast<int>(pairs.size());

    // key a pair by its two sorted component lists
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    std::set<Key> pair_set;
    for (const auto& sp : pairs) pair_set.insert({sp.m_summands, sp.p_vertices});

    // almost-complete pairs: drop one element from a complete pair; the AIR
    // completion theorem says each extends to exactly two complete pairs
    std::map<Key, int> completions;
    for (const auto& sp : pairs) {
        for (size_t i = 0; i < sp.m_summands.size(); ++i) {
            Key k{sp.m_summands, sp.p_vertices};
            k.first.erase(k.first.begin() + i);
            ++completions[k];
        }
        for (size_t i = 0; i < sp.p_vertices.size(); ++i) {
            Key k{sp.m_summands, sp.p_vertices};
            k.second.erase(k.second.begin() + i);
            ++completions[k];
        }
    }
    res.almost_count = static_cast<int>(completions.size());
    res.two_completions_ok = true;
    for (const auto& [k, c] : completions)
        if (c != 2) res.two_completions_ok = false;

    // mutation graph: complete pairs sharing an almost-complete pair are
    // neighbors; walk from (A, 0)
    std::map<Key, std::vector<size_t>> by_almost;
    for (size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto& sp = pairs[idx];
        for (size_t i = 0; i < sp.m_summands.size(); ++i) {
            Key k{sp.m_summands, sp.p_vertices};
            k.first.erase(k.first.begin() + i);
            by_almost[k].push_back(idx);
        }
        for (size_t i = 0; i < sp.p_vertices.size(); ++i) {
            Key k{sp.m_summands, sp.p_vertices};
            k.second.erase(k.second.begin() + i);
            by_almost[k].push_back(idx);
        }
    }
    std::vector<int> start_summands;
    for (int v = 0; v < n; ++v) start_summands.push_back(C.proj_of_vertex[v]);
    std::sort(start_summands.begin(), start_summands.end());
    start_summands.erase(std::unique(start_summands.begin(), start_summands.end()),
                         start_summands.end());
    size_t start = pairs.size();
    for (size_t idx = 0; idx < pairs.size(); ++idx)
        if (pairs[idx].m_summands == start_summands && pairs[idx].p_vertices.empty()) start = idx;
    std::vector<bool> seen(pairs.size(), false);
    if (start < pairs.size()) {
        std::queue<size_t> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            size_t cur = q.front(); q.pop();
            const auto& sp = pairs[cur];
            auto visit = [&](const Key& k) {
                for (size_t nb : by_almost[k])
                    if (!seen[nb]) { seen[nb] = true; q.push(nb); }
            };
            for (size_t i = 0; i < sp.m_summands.size(); ++i) {
                Key k{sp.m_summands, sp.p_vertices};
                k.first.erase(k.first.begin() + i);
                visit(k);
            }
            for (size_t i = 0; i < sp.p_vertices.size(); ++i) {
                Key k{sp.m_summands, sp.p_vertices};
                k.second.erase(k.second.begin() + i);
                visit(k);
            }
        }
    }
    res.mutation_connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }) &&
                             start < pairs.size();
    return res;
}

std::vector<int> generated_indecs(const Catalog& C, const std::vector<int>& T) {
    const MonomialAlgebra& A = *C.A;
    std::vector<int> out;
    for (int nidx = 0; nidx < C.size(); ++nidx) {
        const Representation& N = C.modules[nidx];
        bool ok = true;
        for (int v = 0; v < A.n() && ok; ++v) {
            if (N.dims[v] == 0) continue;
            // columns of every f_v over all hom basis elements from all summands
            std::vector<Matrix> images;
            for (int t : T) {
                HomBasis b = hom_basis(A, C.modules[t], N);
                for (const auto& f : b.elems) images.push_back(f[v]);
            }
            std::vector<const Matrix*> ptrs;
            for (const Matrix& m : images) ptrs.push_back(&m);
            if (column_space_rank(ptrs) != N.dims[v]) ok = false;
        }
        if (ok) out.push_back(nidx);
    }
    return out;
}

} // namespace tauq
