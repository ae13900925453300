#include "tauq/homology.hpp"

#include <algorithm>
#include <cassert>

namespace tauq {

namespace {

struct HomSystem {
    std::vector<int> off; // unknown offsets per vertex
    int unknowns = 0;
    Matrix sys;
};

HomSystem hom_system(const MonomialAlgebra& A, const Representation& M, const Representation& N) {
    HomSystem h;
    h.off.resize(A.n());
    for (int v = 0; v < A.n(); ++v) {
        h.off[v] = h.unknowns;
        h.unknowns += N.dims[v] * M.dims[v];
    }
    int rows = 0;
    for (size_t ai = 0; ai < A.quiver.arrows.size(); ++ai) {
        const Arrow& ar = A.quiver.arrows[ai];
        rows += N.dims[ar.tgt] * M.dims[ar.src];
    }
    h.sys = Matrix(rows, h.unknowns);
    int r = 0;
    for (size_t ai = 0; ai < A.quiver.arrows.size(); ++ai) {
        const Arrow& ar = A.quiver.arrows[ai];
        int x = ar.src, y = ar.tgt;
        const Matrix& Ma = M.act[ai];
        const Matrix& Na = N.act[ai];
        // f_y M_a - N_a f_x = 0, one equation per (i < N_y, k < M_x)
        for (int i = 0; i < N.dims[y]; ++i)
            for (int k = 0; k < M.dims[x]; ++k) {
                for (int j = 0; j < M.dims[y]; ++j)
                    h.sys.at(r, h.off[y] + i * M.dims[y] + j) += Ma.at(j, k);
                for (int j = 0; j < N.dims[x]; ++j)
                    h.sys.at(r, h.off[x] + j * M.dims[x] + k) -= Na.at(i, j);
                ++r;
            }
    }
    return h;
}

} // namespace

int hom_dim(const MonomialAlgebra& A, const Representation& M, const Representation& N) {
    HomSystem h = hom_system(A, M, N);
    return h.unknowns - rank(h.sys);
}

HomBasis hom_basis(const MonomialAlgebra& A, const Representation& M, const Representation& N) {
    HomSystem h = hom_system(A, M, N);
    Matrix k = kernel_matrix(h.sys);
    HomBasis b;
    for (int c = 0; c < k.cols; ++c) {
        std::vector<Matrix> f;
        for (int v = 0; v < A.n(); ++v) {
            Matrix fv(N.dims[v], M.dims[v]);
            for (int i = 0; i < N.dims[v]; ++i)
                for (int j = 0; j < M.dims[v]; ++j)
                    fv.at(i, j) = k.at(h.off[v] + i * M.dims[v] + j, c);
            f.push_back(std::move(fv));
        }
        b.elems.push_back(std::move(f));
    }
    return b;
}

std::vector<Fp> flatten_hom(const std::vector<Matrix>& f) {
    std::vector<Fp> out;
    for (const Matrix& m : f) out.insert(out.end(), m.a.begin(), m.a.end());
    return out;
}

ProjSum projective_sum(const MonomialAlgebra& A, const std::vector<int>& vertices) {
    ProjSum s;
    s.summand_vertex = vertices;
    s.labels.resize(A.n());
    for (size_t i = 0; i < vertices.size(); ++i)
        for (int bi = 0; bi < A.dim(); ++bi) {
            const Path& p = A.basis[bi];
            if (A.path_source(p) != vertices[i]) continue;
            s.labels[A.path_target(p)].push_back({static_cast<int>(i), bi});
        }
    s.rep.dims.resize(A.n());
    for (int v = 0; v < A.n(); ++v) s.rep.dims[v] = static_cast<int>(s.labels[v].size());

    auto pos = [&](int v, int summand, int bi) {
        for (size_t t = 0; t < s.labels[v].size(); ++t)
            if (s.labels[v][t] == std::make_pair(summand, bi)) return static_cast<int>(t);
        return -1;
    };

    for (size_t ai = 0; ai < A.quiver.arrows.size(); ++ai) {
        const Arrow& ar = A.quiver.arrows[ai];
        Matrix m(s.rep.dims[ar.tgt], s.rep.dims[ar.src]);
        for (size_t j = 0; j < s.labels[ar.src].size(); ++j) {
            auto [summand, bi] = s.labels[ar.src][j];
            std::vector<int> ext = A.basis[bi].arrows;
            ext.push_back(static_cast<int>(ai));
            int ei = A.basis_index(ext, -1);
            if (ei < 0) continue;
            int i = pos(ar.tgt, summand, ei);
            assert(i >= 0);
            m.at(i, static_cast<int>(j)) = fp_one();
        }
        s.rep.act.push_back(std::move(m));
    }
    check_representation(A, s.rep);
    return s;
}

InjSum injective_sum(const MonomialAlgebra& A, const std::vector<int>& vertices) {
    InjSum s;
    s.summand_vertex = vertices;
    s.labels.resize(A.n());
    for (size_t i = 0; i < vertices.size(); ++i)
        for (int bi = 0; bi < A.dim(); ++bi) {
            const Path& p = A.basis[bi];
            if (A.path_target(p) != vertices[i]) continue;
            s.labels[A.path_source(p)].push_back({static_cast<int>(i), bi});
        }
    s.rep.dims.resize(A.n());
    for (int v = 0; v < A.n(); ++v) s.rep.dims[v] = static_cast<int>(s.labels[v].size());

    auto pos = [&](int v, int summand, int bi) {
        for (size_t t = 0; t < s.labels[v].size(); ++t)
            if (s.labels[v][t] == std::make_pair(summand, bi)) return static_cast<int>(t);
        return -1;
    };

    for (size_t ai = 0; ai < A.quiver.arrows.size(); ++ai) {
        const Arrow& ar = A.quiver.arrows[ai];
        Matrix m(s.rep.dims[ar.tgt], s.rep.dims[ar.src]);
        for (size_t j = 0; j < s.labels[ar.src].size(); ++j) {
            auto [summand, bi] = s.labels[ar.src][j];
            const Path& p = A.basis[bi];
            if (p.arrows.empty() || p.arrows.front() != static_cast<int>(ai)) continue;
            std::vector<int> stripped(p.arrows.begin() + 1, p.arrows.end());
            int si = A.basis_index(stripped, ar.tgt);
            assert(si >= 0);
            int i = pos(ar.tgt, summand, si);
            assert(i >= 0);
            m.at(i, static_cast<int>(j)) = fp_one();
        }
        s.rep.act.push_back(std::move(m));
    }
    check_representation(A, s.rep);
    return s;
}

SubRep kernel_subrep(const MonomialAlgebra& A, const Representation& big,
                     const std::vector<Matrix>& to) {
    SubRep k;
    k.embed.resize(A.n());
    k.rep.dims.resize(A.n());
    for (int v = 0; v < A.n(); ++v) {
        k.embed[v] = kernel_matrix(to[v]);
        k.rep.dims[v] = k.embed[v].cols;
    }
    for (size_t ai = 0; ai < A.quiver.arrows.size(); ++ai) {
        const Arrow& ar = A.quiver.arrows[ai];
        Matrix m(k.rep.dims[ar.tgt], k.rep.dims[ar.src]);
        Matrix img = mat_mul(big.act[ai], k.embed[ar.src]);
        for (int c = 0; c < img.cols; ++c) {
            std::vector<Fp> col(img.rows);
            for (int i = 0; i < img.rows; ++i) col[i] = img.at(i, c);
            auto sol = solve(k.embed[ar.tgt], col);
            assert(sol); // kernel is a subrepresentation
            for (int i = 0; i < m.rows; ++i) m.at(i, c) = (*sol)[i];
        }
        k.rep.act.push_back(std::move(m));
    }
    check_representation(A, k.rep);
    return k;
}

namespace {

// coordinates of a complement of the radical, per vertex: standard basis
// vectors at the non-pivot positions of the radical span
std::vector<std::vector<int>> top_coords(const MonomialAlgebra& A, const Representation& M) {
    std::vector<std::vector<int>> out(A.n());
    for (int v = 0; v < A.n(); ++v) {
        Matrix rad(M.dims[v], 0);
        for (size_t ai = 0; ai < A.quiver.arrows.size(); ++ai)
            if (A.quiver.arrows[ai].tgt == v) rad = hstack(rad, M.act[ai]);
        std::vector<int> piv;
        rref(transpose(rad), &piv);
        std::vector<bool> is_piv(M.dims[v], false);
        for (int c : piv) is_piv[c] = true;
        for (int c = 0; c < M.dims[v]; ++c)
            if (!is_piv[c]) out[v].push_back(c);
    }
    return out;
}

} // namespace

ProjPresentation min_presentation(const MonomialAlgebra& A, const Representation& M) {
    ProjPresentation pres;

    // projective cover of M from a basis of the top
    auto tops = top_coords(A, M);
    std::vector<std::pair<int, int>> gens; // (vertex, coordinate)
    for (int v = 0; v < A.n(); ++v)
        for (int c : tops[v]) gens.push_back({v, c});
    for (auto& [v, c] : gens) pres.p0_vertices.push_back(v);
    pres.p0 = projective_sum(A, pres.p0_vertices);

    pres.cover.resize(A.n());
    for (int w = 0; w < A.n(); ++w) {
        Matrix cm(M.dims[w], pres.p0.rep.dims[w]);
        for (size_t t = 0; t < pres.p0.labels[w].size(); ++t) {
            auto [i, bi] = pres.p0.labels[w][t];
            Matrix act = path_action(A, M, A.basis[bi]);
            for (int r = 0; r < M.dims[w]; ++r)
                cm.at(r, static_cast<int>(t)) = act.at(r, gens[i].second);
        }
        pres.cover[w] = std::move(cm);
    }

    pres.omega = kernel_subrep(A, pres.p0.rep, pres.cover);

    // generators of the syzygy give P1 and the presentation entries
    auto omega_tops = top_coords(A, pres.omega.rep);
    std::vector<std::pair<int, int>> ogens;
    for (int v = 0; v < A.n(); ++v)
        for (int c : omega_tops[v]) ogens.push_back({v, c});
    for (auto& [v, c] : ogens) pres.p1_vertices.push_back(v);

    pres.entry.assign(pres.p0_vertices.size(),
                      std::vector<PathComb>(pres.p1_vertices.size()));
    for (size_t j = 0; j < ogens.size(); ++j) {
        auto [u, c] = ogens[j];
        // the generator as an element of P0 at vertex u
        const Matrix& emb = pres.omega.embed[u];
        for (int t = 0; t < emb.rows; ++t) {
            Fp coeff = emb.at(t, c);
            if (coeff.is_zero()) continue;
            auto [i, bi] = pres.p0.labels[u][t];
            pres.entry[i][j].terms.push_back({bi, coeff});
        }
    }
    return pres;
}

NakayamaMap nakayama(const MonomialAlgebra& A, const ProjPresentation& pres) {
    NakayamaMap nu;
    nu.nu_p1 = injective_sum(A, pres.p1_vertices);
    nu.nu_p0 = injective_sum(A, pres.p0_vertices);
    nu.map.resize(A.n());
    for (int z = 0; z < A.n(); ++z) {
        Matrix m(nu.nu_p0.rep.dims[z], nu.nu_p1.rep.dims[z]);
        auto pos0 = [&](int summand, int bi) {
            for (size_t t = 0; t < nu.nu_p0.labels[z].size(); ++t)
                if (nu.nu_p0.labels[z][t] == std::make_pair(summand, bi)) return static_cast<int>(t);
            return -1;
        };
        for (size_t cidx = 0; cidx < nu.nu_p1.labels[z].size(); ++cidx) {
            auto [j, qbi] = nu.nu_p1.labels[z][cidx];
            const std::vector<int>& q = A.basis[qbi].arrows;
            for (size_t i = 0; i < pres.p0_vertices.size(); ++i)
                for (const auto& [pbi, coeff] : pres.entry[i][j]. terms) {
                    const std::vector<int>& p = A.basis[pbi].arrows;
                    if (p.size() > q.size()) continue;
                    if (!std::equal(p.begin(), p.end(), q.end() - p.size())) continue;
                    std::vector<int> prefix(q.begin(), q.end() - p.size());
                    int rbi = A.basis_index(prefix, z);
                    assert(rbi >= 0); // prefix of a basis path is a basis path
                    int r = pos0(static_cast<int>(i), rbi);
                    assert(r >= 0);
                    m.at(r, static_cast<int>(cidx)) += coeff;
                }
        }
        nu.map[z] = std::move(m);
    }
    return nu;
}

Representation tau_rep(const MonomialAlgebra& A, const Representation& M) {
    if (M.is_zero_module()) return zero_rep(A);
    ProjPresentation pres = min_presentation(A, M);
    if (pres.p1_vertices.empty()) return zero_rep(A); // projective
    NakayamaMap nu = nakayama(A, pres);
    return kernel_subrep(A, nu.nu_p1.rep, nu.map).rep;
}

int ext1_dim(const MonomialAlgebra& A, const ProjPresentation& presM, const Representation& N) {
    if (presM.p1_vertices.empty()) return 0;
    int h = hom_dim(A, presM.omega.rep, N);
    if (h == 0) return 0;

    // restrictions to Omega of the standard basis of Hom(P0, N)
    std::vector<std::vector<Fp>> restricted;
    for (size_t i = 0; i < presM.p0_vertices.size(); ++i) {
        int v = presM.p0_vertices[i];
        for (int b = 0; b < N.dims[v]; ++b) {
            std::vector<Matrix> f(A.n());
            for (int w = 0; w < A.n(); ++w) {
                Matrix fw(N.dims[w], presM.p0.rep.dims[w]);
                for (size_t t = 0; t < presM.p0.labels[w].size(); ++t) {
                    auto [si, bi] = presM.p0.labels[w][t];
                    if (si != static_cast<int>(i)) continue;
                    Matrix act = path_action(A, N, A.basis[bi]);
                    for (int r = 0; r < N.dims[w]; ++r)
                        fw.at(r, static_cast<int>(t)) = act.at(r, b);
                }
                f[w] = mat_mul(fw, presM.omega.embed[w]);
            }
            restricted.push_back(flatten_hom(f));
        }
    }
    if (restricted.empty()) return h;
    Matrix span(static_cast<int>(restricted.size()), static_cast<int>(restricted[0].size()));
    for (size_t r = 0; r < restricted.size(); ++r)
        for (size_t c = 0; c < restricted[r].size(); ++c)
            span.at(static_cast<int>(r), static_cast<int>(c)) = restricted[r][c];
    return h - rank(span);
}

int ext1_dim(const MonomialAlgebra& A, const Representation& M, const Representation& N) {
    if (M.is_zero_module() || N.is_zero_module()) return 0;
    return ext1_dim(A, min_presentation(A, M), N);
}

namespace {

bool invertible_hom(const std::vector<Matrix>& f) {
    for (const Matrix& m : f)
        if (!is_invertible(m)) return false;
    return true;
}

std::vector<Matrix> combine(const HomBasis& b, const std::vector<Fp>& coeff, int nverts) {
    std::vector<Matrix> f;
    for (int v = 0; v < nverts; ++v) {
        Matrix m = b.elems[0][v]; // shape template
        for (Fp& x : m.a) x = Fp();
        f.push_back(std::move(m));
    }
    for (size_t e = 0; e < b.elems.size(); ++e) {
        if (coeff[e].is_zero()) continue;
        for (int v = 0; v < nverts; ++v)
            for (size_t t = 0; t < f[v].a.size(); ++t)
                f[v].a[t] += coeff[e] * b.elems[e][v].a[t];
    }
    return f;
}

uint64_t splitmix64(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

IsoResult iso_test(const MonomialAlgebra& A, const Representation& M, const Representation& N) {
    if (M.dims != N.dims) return IsoResult::No;
    if (M.is_zero_module()) return IsoResult::Yes;
    HomBasis b = hom_basis(A, M, N);
    if (b.dim() == 0) return IsoResult::No;

    for (const auto& f : b.elems)
        if (invertible_hom(f)) return IsoResult::Yes;
    for (int i = 0; i < b.dim(); ++i)
        for (int j = i + 1; j < b.dim(); ++j) {
            std::vector<Fp> c(b.dim());
            c[i] = fp_one(); c[j] = fp_one();
            if (invertible_hom(combine(b, c, A.n()))) return IsoResult::Yes;
        }

    uint64_t seed = 0x5eed;
    for (int d : M.dims) seed = seed * 1315423911u + d;
    seed += field_prime() * 2654435761u + b.dim();
    for (int trial = 0; trial < 64; ++trial) {
        std::vector<Fp> c(b.dim());
        for (int e = 0; e < b.dim(); ++e) c[e] = Fp(splitmix64(seed));
        if (invertible_hom(combine(b, c, A.n()))) return IsoResult::Yes;
    }

    // exhaustive when the coefficient space is small: definitive answer
    double total = 1;
    for (int e = 0; e < b.dim(); ++e) {
        total *= static_cast<double>(field_prime());
        if (total > (1 << 20)) return IsoResult::Unknown;
    }
    uint64_t count = static_cast<uint64_t>(total);
    uint64_t p = field_prime();
    for (uint64_t idx = 1; idx < count; ++idx) {
        std::vector<Fp> c(b.dim());
        uint64_t x = idx;
        for (int e = 0; e < b.dim(); ++e) { c[e] = Fp(x % p); x /= p; }
        if (invertible_hom(combine(b, c, A.n()))) return IsoResult::Yes;
    }
    return IsoResult::No;
}

bool is_isomorphic(const MonomialAlgebra& A, const Representation& M, const Representation& N) {
    IsoResult r = iso_test(A, M, N);
    if (r == IsoResult::Unknown)
        throw UnknownIsoError("isomorphism test inconclusive (randomized search failed)");
    return r == IsoResult::Yes;
}

std::string pd_to_string(const PdResult& pd) {
    switch (pd.kind) {
        case PdResult::Finite: return std::to_string(pd.value);
        case PdResult::InfinitePeriodic: return "infinite_periodic";
        case PdResult::AtLeast: return ">=" + std::to_string(pd.value);
    }
    return "?";
}

PdResult proj_dimension(const MonomialAlgebra& A, const Representation& M, int cutoff) {
    if (M.is_zero_module()) return PdResult{PdResult::Finite, 0};
    std::vector<Representation> seen; // M, Omega M, Omega^2 M, ...
    Representation cur = M;
    for (int k = 0; k <= cutoff; ++k) {
        ProjPresentation pres = min_presentation(A, cur);
        if (pres.p1_vertices.empty()) return PdResult{PdResult::Finite, k};
        seen.push_back(cur);
        Representation next = pres.omega.rep;
        for (const Representation& old : seen)
            if (iso_test(A, next, old) == IsoResult::Yes)
                return PdResult{PdResult::InfinitePeriodic, k + 1};
        cur = std::move(next);
    }
    return PdResult{PdResult::AtLeast, cutoff};
}

} // namespace tauq
