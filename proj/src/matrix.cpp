#include "tauq/matrix.hpp"

#include <atomic>
#include <cassert>

namespace tauq {

namespace {
std::atomic<uint64_t> g_prime{32003};
}

uint64_t field_prime() { return g_prime.load(std::memory_order_relaxed); }

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void set_field_prime(uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field modulus must be prime");
    if (p > (1ull << 31)) throw std::invalid_argument("field modulus too large");
    g_prime.store(p, std::memory_order_relaxed);
}

Fp fp_inv(Fp a) {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    // extended euclid on (v, p)
    int64_t p = static_cast<int64_t>(field_prime());
    int64_t r0 = a.v, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1; r0 = r1; r1 = r2;
        int64_t s2 = s0 - q * s1; s0 = s1; s1 = s2;
    }
    assert(r0 == 1);
    return Fp::from_int(s0);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = fp_one();
    return m;
}

bool Matrix::is_zero() const {
    for (const Fp& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
    assert(x.cols == y.rows);
    Matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            Fp v = x.at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

Matrix mat_add(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

Matrix mat_sub(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Matrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

Matrix mat_scale(const Matrix& x, Fp c) {
    Matrix r = x;
    for (Fp& v : r.a) v *= c;
    return r;
}

Matrix transpose(const Matrix& m) {
    Matrix r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r.at(j, i) = m.at(i, j);
    return r;
}

Matrix hstack(const Matrix& x, const Matrix& y) {
    assert(x.rows == y.rows);
    Matrix r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& x, const Matrix& y) {
    assert(x.cols == y.cols);
    Matrix r(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

Matrix rref(Matrix m, std::vector<int>* pivots) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Fp inv = fp_inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            Fp f = m.at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

int rank(const Matrix& m) {
    std::vector<int> piv;
    rref(m, &piv);
    return static_cast<int>(piv.size());
}

Matrix kernel_matrix(const Matrix& m) {
    std::vector<int> piv;
    Matrix e = rref(m, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix k(m.cols, static_cast<int>(free_cols.size()));
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int f = free_cols[fi];
        k.at(f, static_cast<int>(fi)) = fp_one();
        for (size_t pi = 0; pi < piv.size(); ++pi)
            k.at(piv[pi], static_cast<int>(fi)) = -e.at(static_cast<int>(pi), f);
    }
    return k;
}

std::optional<std::vector<Fp>> solve(const Matrix& m, const std::vector<Fp>& b) {
    assert(static_cast<int>(b.size()) == m.rows);
    Matrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> piv;
    Matrix e = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
    std::vector<Fp> x(m.cols);
    for (size_t pi = 0; pi < piv.size(); ++pi)
        x[piv[pi]] = e.at(static_cast<int>(pi), m.cols);
    return x;
}

std::vector<Fp> mat_apply(const Matrix& m, const std::vector<Fp>& x) {
    assert(static_cast<int>(x.size()) == m.cols);
    std::vector<Fp> y(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Fp s;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

bool is_invertible(const Matrix& m) {
    return m.rows == m.cols && rank(m) == m.rows;
}

int column_space_rank(const std::vector<const Matrix*>& blocks) {
    if (blocks.empty()) return 0;
    int rows = blocks[0]->rows;
    int cols = 0;
    for (const Matrix* b : blocks) { assert(b->rows == rows); cols += b->cols; }
    Matrix all(rows, cols);
    int off = 0;
    for (const Matrix* b : blocks) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < b->cols; ++j)
                all.at(i, off + j) = b->at(i, j);
        off += b->cols;
    }
    return rank(all);
}

} // namespace tauq
