// period.hpp — period subspaces: complex subspaces of half dimension in a
// complexified lattice that meet their conjugate only at zero, plus the
// frame they induce for projecting vectors onto holomorphic coordinates.
#pragma once

#include "torusbundle/matrix.hpp"

namespace torusbundle {

/**
 * An n-dimensional subspace W of C^{2n}, spanned by the columns of a
 * 2n x n basis matrix, with W and conj(W) spanning the whole space.
 * The orientation scalar is i^n det[basis | conj basis], always real and
 * nonzero for a valid subspace.
 */
class PeriodSubspace {
public:
    int ambient_rank() const { return basis_.rows(); }
    int dim() const { return basis_.cols(); }
    const ExactMatrix& basis() const { return basis_; }
    const Rational& orientation() const { return orientation_; }
    int orientation_sign() const { return sign(orientation_); }

    friend PeriodSubspace validate_subspace(const ExactMatrix& basis);

private:
    PeriodSubspace(ExactMatrix basis, Rational orientation)
        : basis_(std::move(basis)), orientation_(std::move(orientation)) {}

    ExactMatrix basis_;
    Rational orientation_;
};

/**
 * Checks that basis is 2n x n of full column rank (MalformedInputError
 * otherwise) and that [basis | conj basis] is invertible
 * (DegenerateStructureError otherwise).
 */
PeriodSubspace validate_subspace(const ExactMatrix& basis);

/**
 * The invertible frame [B | conj B] of a period subspace and its inverse,
 * splitting any ambient vector x into holomorphic and antiholomorphic
 * coordinates: x = B p(x) + conj(B) q(x).  For real x, q(x) = conj(p(x)).
 */
class SplittingFrame {
public:
    explicit SplittingFrame(const PeriodSubspace& w);

    int dim() const { return n_; }
    const ExactMatrix& frame() const { return frame_; }          // 2n x 2n
    const ExactMatrix& frame_inverse() const { return inverse_; }

    /** Holomorphic coordinates p(x), an n x 1 column; x is 2n x 1. */
    ExactMatrix project(const ExactMatrix& x) const;
    /** Antiholomorphic coordinates q(x), an n x 1 column. */
    ExactMatrix project_conj(const ExactMatrix& x) const;
    /** Reassembles the ambient vector B p + conj(B) q. */
    ExactMatrix assemble(const ExactMatrix& p, const ExactMatrix& q) const;

private:
    int n_;
    ExactMatrix frame_;
    ExactMatrix inverse_;
};

} // namespace torusbundle
