#ifndef GAQUOT_LINALG_HPP
#define GAQUOT_LINALG_HPP

// Exact dense linear algebra over Q.

#include <cstddef>
#include <optional>
#include <vector>

#include "gaquot/poly.hpp"

namespace gaquot {

using Vector = std::vector<Rational>;

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Reduced row echelon form, in place. Returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

// Basis of {x : A x = 0}, one vector per free column, free entry = 1.
std::vector<Vector> nullspace(const Matrix& a);

// Some x with A x = b (free variables set to zero), or nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

std::size_t rank(const Matrix& a);

// Determinant of a square matrix of polynomials (fraction-free Bareiss
// elimination with exact division).
Poly determinant(std::vector<std::vector<Poly>> m, const VarTable& vars);

}  // namespace gaquot

#endif
