#include "tauq/rep.hpp"

#include <algorithm>
#include <cassert>

namespace tauq {

void check_representation(const MonomialAlgebra& A, const Representation& M) {
    const Quiver& q = A.quiver;
    if (static_cast<int>(M.dims.size()) != q.n())
        throw std::logic_error("representation has wrong vertex count");
    if (M.act.size() != q.arrows.size())
        throw std::logic_error("representation has wrong arrow count");
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        const Matrix& m = M.act[a];
        if (m.rows != M.dims[q.arrows[a].tgt] || m.cols != M.dims[q.arrows[a].src])
            throw std::logic_error("arrow matrix has wrong shape");
    }
    for (const auto& rel : A.relations) {
        Matrix m = path_action(A, M, rel, q.arrows[rel.front()].src);
        if (!m.is_zero())
            throw std::logic_error("relation acts nonzero on representation");
    }
}

Representation zero_rep(const MonomialAlgebra& A) {
    Representation M;
    M.dims.assign(A.n(), 0);
    for (const Arrow& a : A.quiver.arrows)
        M.act.push_back(Matrix(M.dims[a.tgt], M.dims[a.src]));
    return M;
}

Representation simple_rep(const MonomialAlgebra& A, int vertex) {
    Representation M = zero_rep(A);
    M.dims[vertex] = 1;
    for (size_t a = 0; a < A.quiver.arrows.size(); ++a)
        M.act[a] = Matrix(M.dims[A.quiver.arrows[a].tgt], M.dims[A.quiver.arrows[a].src]);
    return M;
}

namespace {

// local ordered bases: for each vertex, the algebra-basis indices selected by
// pred, in algebra-basis order
std::vector<std::vector<int>> group_paths(const MonomialAlgebra& A, int group_by_source,
                                          int fixed_vertex) {
    std::vector<std::vector<int>> by_vertex(A.n());
    for (int i = 0; i < A.dim(); ++i) {
        const Path& p = A.basis[i];
        if (group_by_source) {
            if (A.path_source(p) != fixed_vertex) continue;
            by_vertex[A.path_target(p)].push_back(i);
        } else {
            if (A.path_target(p) != fixed_vertex) continue;
            by_vertex[A.path_source(p)].push_back(i);
        }
    }
    return by_vertex;
}

int local_pos(const std::vector<int>& list, int global) {
    auto it = std::find(list.begin(), list.end(), global);
    return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

} // namespace

Representation projective_rep(const MonomialAlgebra& A, int vertex) {
    auto by_vertex = group_paths(A, 1, vertex);
    Representation M;
    M.dims.resize(A.n());
    for (int v = 0; v < A.n(); ++v) M.dims[v] = static_cast<int>(by_vertex[v].size());
    for (size_t ai = 0; ai < A.quiver.arrows.size(); ++ai) {
        const Arrow& ar = A.quiver.arrows[ai];
        Matrix m(M.dims[ar.tgt], M.dims[ar.src]);
        for (size_t j = 0; j < by_vertex[ar.src].size(); ++j) {
            const Path& p = A.basis[by_vertex[ar.src][j]];
            std::vector<int> ext = p.arrows;
            ext.push_back(static_cast<int>(ai));
            int bi = A.basis_index(ext, -1);
            if (bi < 0) continue;
            int i = local_pos(by_vertex[ar.tgt], bi);
            assert(i >= 0);
            m.at(i, static_cast<int>(j)) = fp_one();
        }
        M.act.push_back(std::move(m));
    }
    check_representation(A, M);
    return M;
}

Representation injective_rep(const MonomialAlgebra& A, int vertex) {
    auto by_vertex = group_paths(A, 0, vertex);
    Representation M;
    M.dims.resize(A.n());
    for (int v = 0; v < A.n(); ++v) M.dims[v] = static_cast<int>(by_vertex[v].size());
    for (size_t ai = 0; ai < A.quiver.arrows.size(); ++ai) {
        const Arrow& ar = A.quiver.arrows[ai];
        Matrix m(M.dims[ar.tgt], M.dims[ar.src]);
        for (size_t j = 0; j < by_vertex[ar.src].size(); ++j) {
            const Path& p = A.basis[by_vertex[ar.src][j]];
            if (p.arrows.empty() || p.arrows.front() != static_cast<int>(ai)) continue;
            std::vector<int> stripped(p.arrows.begin() + 1, p.arrows.end());
            int bi = A.basis_index(stripped, ar.tgt);
            assert(bi >= 0);
            int i = local_pos(by_vertex[ar.tgt], bi);
            assert(i >= 0);
            m.at(i, static_cast<int>(j)) = fp_one();
        }
        M.act.push_back(std::move(m));
    }
    check_representation(A, M);
    return M;
}

Representation direct_sum(const MonomialAlgebra& A, const std::vector<const Representation*>& parts) {
    Representation M;
    M.dims.assign(A.n(), 0);
    for (const Representation* p : parts)
        for (int v = 0; v < A.n(); ++v) M.dims[v] += p->dims[v];
    for (size_t ai = 0; ai < A.quiver.arrows.size(); ++ai) {
        const Arrow& ar = A.quiver.arrows[ai];
        Matrix m(M.dims[ar.tgt], M.dims[ar.src]);
        int ro = 0, co = 0;
        for (const Representation* p : parts) {
            const Matrix& b = p->act[ai];
            for (int i = 0; i < b.rows; ++i)
                for (int j = 0; j < b.cols; ++j)
                    m.at(ro + i, co + j) = b.at(i, j);
            ro += p->dims[ar.tgt];
            co += p->dims[ar.src];
        }
        M.act.push_back(std::move(m));
    }
    return M;
}

Matrix path_action(const MonomialAlgebra&, const Representation& M, const std::vector<int>& arrows,
                   int src_if_trivial) {
    if (arrows.empty()) return Matrix::identity(M.dims[src_if_trivial]);
    Matrix m = M.act[arrows[0]];
    for (size_t i = 1; i < arrows.size(); ++i) m = mat_mul(M.act[arrows[i]], m);
    return m;
}

Matrix path_action(const MonomialAlgebra& A, const Representation& M, const Path& p) {
    return path_action(A, M, p.arrows, p.at);
}

std::vector<int> dim_vector(const Representation& M) { return M.dims; }

namespace {

// canonical basis matrix of the column span (rref of the transpose, nonzero
// rows transposed back)
Matrix span_basis(const Matrix& cols) {
    std::vector<int> piv;
    Matrix e = rref(transpose(cols), &piv);
    Matrix b(cols.rows, static_cast<int>(piv.size()));
    for (size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < cols.rows; ++j)
            b.at(j, static_cast<int>(r)) = e.at(static_cast<int>(r), j);
    return b;
}

// per-vertex bases of rad(current subspace): images of current under arrows
std::vector<Matrix> radical_of(const MonomialAlgebra& A, const Representation& M,
                               const std::vector<Matrix>& cur) {
    std::vector<Matrix> out;
    for (int v = 0; v < A.n(); ++v) {
        Matrix acc(M.dims[v], 0);
        for (size_t ai = 0; ai < A.quiver.arrows.size(); ++ai) {
            const Arrow& ar = A.quiver.arrows[ai];
            if (ar.tgt != v) continue;
            acc = hstack(acc, mat_mul(M.act[ai], cur[ar.src]));
        }
        out.push_back(span_basis(acc));
    }
    return out;
}

} // namespace

std::vector<int> radical_dims(const MonomialAlgebra& A, const Representation& M) {
    std::vector<Matrix> full;
    for (int v = 0; v < A.n(); ++v) full.push_back(Matrix::identity(M.dims[v]));
    auto rad = radical_of(A, M, full);
    std::vector<int> d(A.n());
    for (int v = 0; v < A.n(); ++v) d[v] = rad[v].cols;
    return d;
}

std::string loewy_label(const MonomialAlgebra& A, const Representation& M) {
    if (M.is_zero_module()) return "0";
    bool multi = false;
    for (const auto& name : A.quiver.vertices)
        if (name.size() > 1) multi = true;

    std::vector<Matrix> cur;
    for (int v = 0; v < A.n(); ++v) cur.push_back(Matrix::identity(M.dims[v]));
    std::string out;
    while (true) {
        int total = 0;
        for (const auto& b : cur) total += b.cols;
        if (total == 0) break;
        auto next = radical_of(A, M, cur);
        std::string layer;
        for (int v = 0; v < A.n(); ++v) {
            int mult = cur[v].cols - next[v].cols;
            for (int k = 0; k < mult; ++k) {
                if (!layer.empty() && multi) layer += ",";
                layer += A.quiver.vertices[v];
            }
        }
        if (!out.empty()) out += "/";
        out += layer;
        cur = std::move(next);
    }
    return out;
}

bool is_sincere(const Representation& M) {
    for (int d : M.dims)
        if (d == 0) return false;
    return true;
}

Matrix annihilator_basis(const MonomialAlgebra& A, const Representation& M) {
    // action map A -> End(M): column per basis path, rows = all entries of
    // the block map M_{src} -> M_{tgt} the path induces
    int total = M.total_dim();
    std::vector<int> offset(A.n(), 0);
    for (int v = 1; v < A.n(); ++v) offset[v] = offset[v - 1] + M.dims[v - 1];
    Matrix sys(total * total, A.dim());
    for (int c = 0; c < A.dim(); ++c) {
        const Path& p = A.basis[c];
        Matrix act = path_action(A, M, p);
        int src = A.path_source(p), tgt = A.path_target(p);
        for (int i = 0; i < act.rows; ++i)
            for (int j = 0; j < act.cols; ++j)
                sys.at((offset[tgt] + i) * total + (offset[src] + j), c) = act.at(i, j);
    }
    return kernel_matrix(sys);
}

int annihilator_dim(const MonomialAlgebra& A, const Representation& M) {
    return annihilator_basis(A, M).cols;
}

bool is_faithful(const MonomialAlgebra& A, const Representation& M) {
    return annihilator_dim(A, M) == 0;
}

} // namespace tauq
