#include "tauq/catalog.hpp"

#include <algorithm>
#include <cassert>

namespace tauq {

int Catalog::index_of_word(const std::string& serialized) const {
    for (int i = 0; i < size(); ++i)
        if (word_to_string(A->quiver, words[i]) == serialized) return i;
    return -1;
}

int Catalog::index_of_label(const std::string& label) const {
    int found = -1;
    for (int i = 0; i < size(); ++i)
        if (labels[i] == label) {
            if (found >= 0) throw std::logic_error("ambiguous Loewy label: " + label);
            found = i;
        }
    return found;
}

int Catalog::find_module(const Representation& R) const {
    for (int i = 0; i < size(); ++i) {
        if (dimvec[i] != R.dims) continue;
        if (iso_test(*A, modules[i], R) == IsoResult::Yes) return i;
    }
    return -1;
}

Catalog build_catalog(const MonomialAlgebra& A, const CatalogOptions& opts) {
    Catalog C;
    C.A = &A;
    C.opts = opts;
    C.prime = field_prime();

    C.words = enumerate_strings(A, opts.caps);
    for (const StringWord& w : C.words) C.modules.push_back(string_module(A, w));

    int n = C.size();
    for (int i = 0; i < n; ++i) {
        C.labels.push_back(loewy_label(A, C.modules[i]));
        C.dimvec.push_back(C.modules[i].dims);
        C.dim.push_back(C.modules[i].total_dim());
        C.simple.push_back(C.modules[i].total_dim() == 1);
        C.sincere.push_back(is_sincere(C.modules[i]));
    }

    C.proj_of_vertex.resize(A.n());
    C.inj_of_vertex.resize(A.n());
    C.projective.assign(n, false);
    C.injective.assign(n, false);
    for (int v = 0; v < A.n(); ++v) {
        int pi = C.find_module(projective_rep(A, v));
        int ii = C.find_module(injective_rep(A, v));
        if (pi < 0 || ii < 0)
            throw std::logic_error("projective or injective module missing from catalog");
        C.proj_of_vertex[v] = pi;
        C.inj_of_vertex[v] = ii;
        C.projective[pi] = true;
        C.injective[ii] = true;
    }

    for (int i = 0; i < n; ++i) {
        Representation t = tau_rep(A, C.modules[i]);
        if (t.is_zero_module()) {
            C.tau_of.push_back(-1);
        } else {
            int ti = C.find_module(t);
            if (ti < 0) throw std::logic_error("tau of a catalog module left the catalog");
            C.tau_of.push_back(ti);
        }
        C.tau_mod.push_back(std::move(t));
    }

    C.hom.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            C.hom[i][j] = hom_dim(A, C.modules[i], C.modules[j]);

    C.ext.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        ProjPresentation pres = min_presentation(A, C.modules[i]);
        for (int j = 0; j < n; ++j)
            C.ext[i][j] = ext1_dim(A, pres, C.modules[j]);
    }

    for (int i = 0; i < n; ++i)
        C.pd.push_back(proj_dimension(A, C.modules[i], opts.pd_cutoff));

    // tau(M) = 0 exactly for projectives
    for (int i = 0; i < n; ++i)
        if ((C.tau_of[i] < 0) != C.projective[i])
            throw std::logic_error("tau vanishing disagrees with projectivity");

    return C;
}

namespace {

// f - lambda*id with the unique lambda making the shift non-invertible;
// valid for endomorphisms of an indecomposable (local End, residue field K)
std::vector<Matrix> radical_shift(const Catalog& C, int m, const std::vector<Matrix>& f) {
    const Representation& M = C.modules[m];
    int d = M.total_dim();
    auto shifted = [&](Fp lam) {
        std::vector<Matrix> g = f;
        for (int v = 0; v < static_cast<int>(g.size()); ++v)
            for (int i = 0; i < M.dims[v]; ++i) g[v].at(i, i) -= lam;
        return g;
    };
    auto invertible = [&](const std::vector<Matrix>& g) {
        for (const Matrix& gv : g)
            if (!is_invertible(gv)) return false;
        return true;
    };
    if (d % static_cast<int>(field_prime()) != 0) {
        Fp tr;
        for (const Matrix& fv : f)
            for (int i = 0; i < fv.rows; ++i) tr += fv.at(i, i);
        Fp lam = tr * fp_inv(Fp::from_int(d));
        auto g = shifted(lam);
        if (invertible(g)) throw std::logic_error("trace shift failed to reach the radical");
        return g;
    }
    // small p: scan for the unique singular shift
    std::vector<Matrix> out;
    int hits = 0;
    for (uint64_t l = 0; l < field_prime(); ++l) {
        auto g = shifted(Fp(l));
        if (!invertible(g)) { ++hits; out = std::move(g); }
    }
    if (hits != 1) throw std::logic_error("endomorphism ring is not local");
    return out;
}

int rank_of_rows(const std::vector<std::vector<Fp>>& rows) {
    if (rows.empty()) return 0;
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return rank(m);
}

} // namespace

std::vector<std::vector<int>> irreducible_dims(const Catalog& C) {
    const MonomialAlgebra& A = *C.A;
    int n = C.size();

    // radical bases rad(M_i, M_j): full hom space off the diagonal, trace
    // shifts on it
    std::vector<std::vector<std::vector<std::vector<Matrix>>>> rad(n);
    for (int i = 0; i < n; ++i) {
        rad[i].resize(n);
        for (int j = 0; j < n; ++j) {
            HomBasis b = hom_basis(A, C.modules[i], C.modules[j]);
            if (i != j) {
                rad[i][j] = b.elems;
            } else {
                for (const auto& f : b.elems)
                    rad[i][j].push_back(radical_shift(C, i, f));
            }
        }
    }

    auto compose = [&](const std::vector<Matrix>& f, const std::vector<Matrix>& g) {
        // g after f, per vertex
        std::vector<Matrix> h(f.size());
        for (size_t v = 0; v < f.size(); ++v) h[v] = mat_mul(g[v], f[v]);
        return h;
    };

    std::vector<std::vector<int>> irr(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<Fp>> radv;
            for (const auto& f : rad[i][j]) radv.push_back(flatten_hom(f));
            int dim_rad = rank_of_rows(radv);
            if (dim_rad == 0) continue;
            std::vector<std::vector<Fp>> rad2;
            for (int z = 0; z < n; ++z)
                for (const auto& f : rad[i][z])
                    for (const auto& g : rad[z][j])
                        rad2.push_back(flatten_hom(compose(f, g)));
            irr[i][j] = dim_rad - rank_of_rows(rad2);
        }
    return irr;
}

} // namespace tauq
