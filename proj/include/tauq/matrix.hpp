#pragma once

#include "tauq/field.hpp"

#include <optional>
#include <vector>

// Dense matrices over F_p with deterministic Gaussian elimination: pivots are
// always the first nonzero entry scanning top-to-bottom, so ranks, kernels and
// solutions are reproducible bit for bit across runs and platforms.

namespace tauq {

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Fp> a; // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Fp& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Fp& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Matrix identity(int n);

    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Matrix mat_mul(const Matrix& x, const Matrix& y);
Matrix mat_add(const Matrix& x, const Matrix& y);
Matrix mat_sub(const Matrix& x, const Matrix& y);
Matrix mat_scale(const Matrix& x, Fp c);
Matrix transpose(const Matrix& m);
Matrix hstack(const Matrix& x, const Matrix& y);
Matrix vstack(const Matrix& x, const Matrix& y);

// Reduced row echelon form; pivot column indices appended to *pivots if given.
Matrix rref(Matrix m, std::vector<int>* pivots = nullptr);

int rank(const Matrix& m);

// Kernel {x : m x = 0} as columns of the result, in reduced echelon order
// (one vector per free column, unit at the free coordinate).
Matrix kernel_matrix(const Matrix& m);

// One solution of m x = b with free variables set to 0; nullopt if inconsistent.
std::optional<std::vector<Fp>> solve(const Matrix& m, const std::vector<Fp>& b);

std::vector<Fp> mat_apply(const Matrix& m, const std::vector<Fp>& x);

bool is_invertible(const Matrix& m);

// Column span helpers: rank of the column space of the concatenation.
int column_space_rank(const std::vector<const Matrix*>& blocks);

} // namespace tauq
