// matrix.hpp — dense matrices over Q(i) with exact linear algebra:
// fraction-free echelon reduction, rank, kernel, determinant, solve.
#pragma once

#include "torusbundle/scalar.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace torusbundle {

/** A dense rows x cols matrix of Gaussian rationals.  Indices are 0-based. */
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);
    ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static ExactMatrix identity(int n);
    static ExactMatrix zero(int rows, int cols) { return {rows, cols}; }
    static ExactMatrix column(const std::vector<GaussianRational>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const GaussianRational& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    ExactMatrix transpose() const;
    ExactMatrix conjugate() const;
    /** Conjugate transpose. */
    ExactMatrix adjoint() const { return conjugate().transpose(); }

    ExactMatrix block(int row0, int col0, int nrows, int ncols) const;
    ExactMatrix col(int c) const { return block(0, c, rows_, 1); }
    ExactMatrix row(int r) const { return block(r, 0, 1, cols_); }

    bool is_zero() const;
    bool is_real() const;
    /** True when every entry lies in Z. */
    bool is_integral() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_antisymmetric() const;
    bool is_hermitian() const;

    ExactMatrix operator-() const;
    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    ExactMatrix& operator*=(const GaussianRational& s);

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
    friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GaussianRational> data_;
};

/** Stacks blocks left to right; all blocks must share a row count. */
ExactMatrix hstack(const std::vector<ExactMatrix>& blocks);
/** Stacks blocks top to bottom; all blocks must share a column count. */
ExactMatrix vstack(const std::vector<ExactMatrix>& blocks);

/**
 * Row echelon form computed by one-step fraction-free elimination: each
 * update is (pivot * a_ij - a_ic * a_pj) / previous_pivot, an exact
 * division.  The pivot is always the first nonzero entry scanning the
 * current column top to bottom, columns left to right, so results are
 * deterministic.  Row swaps are tracked for the determinant sign.
 */
struct EchelonForm {
    ExactMatrix reduced;          // echelon matrix (rows reordered in place)
    std::vector<int> pivot_cols;  // column of the pivot in row 0, 1, ...
    int swap_parity = 1;          // +1 or -1
    Rational row_scaling = 1;     // product of denominator-clearing row factors
};

/**
 * Reduces the matrix.  Pivots are restricted to the first `pivot_limit`
 * columns when `pivot_limit >= 0` (used for augmented solves); trailing
 * columns are carried through the row operations but never chosen as pivots.
 */
EchelonForm echelon_form(ExactMatrix m, int pivot_limit = -1);

int rank(const ExactMatrix& m);

/** Columns spanning the right kernel {x : m x = 0}; 0 columns when trivial. */
ExactMatrix kernel_basis(const ExactMatrix& m);

GaussianRational determinant(const ExactMatrix& m);

/** Some X with a X = b (free variables set to zero), or nullopt. */
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

/** Inverse of a square matrix, or nullopt when singular. */
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/** True when the column spans of a and b coincide as subspaces. */
bool same_column_span(const ExactMatrix& a, const ExactMatrix& b);

/** True when every column of v lies in the column span of space. */
bool contains_columns(const ExactMatrix& space, const ExactMatrix& v);

std::string to_string(const ExactMatrix& m);

} // namespace torusbundle
