#include "torusbundle/period.hpp"

#include "torusbundle/error.hpp"

namespace torusbundle {

PeriodSubspace validate_subspace(const ExactMatrix& basis) {
    const int n = basis.cols();
    if (n < 1 || basis.rows() != 2 * n)
        throw MalformedInputError("subspace basis must be 2n x n with n >= 1");
    if (rank(basis) < n) throw MalformedInputError("subspace basis columns are linearly dependent");
    const ExactMatrix frame = hstack({basis, basis.conjugate()});
    GaussianRational det = determinant(frame);
    if (det.is_zero())
        throw DegenerateStructureError("subspace meets its conjugate: [basis | conj basis] is singular");
    // i^n det is real for any 2n x n basis; keep it as the orientation scalar.
    GaussianRational in{1};
    for (int k = 0; k < n; ++k) in *= GaussianRational::i();
    GaussianRational oriented = in * det;
    if (!oriented.is_real())
        throw MalformedInputError("orientation scalar unexpectedly non-real");
    return PeriodSubspace(basis, oriented.re());
}

SplittingFrame::SplittingFrame(const PeriodSubspace& w)
    : n_(w.dim()), frame_(hstack({w.basis(), w.basis().conjugate()})) {
    auto inv = inverse(frame_);
    // The frame is invertible for any validated subspace.
    inverse_ = std::move(*inv);
}

ExactMatrix SplittingFrame::project(const ExactMatrix& x) const {
    if (x.rows() != 2 * n_ || x.cols() != 1) throw PreconditionError("projection argument must be a 2n x 1 column");
    return (inverse_ * x).block(0, 0, n_, 1);
}

ExactMatrix SplittingFrame::project_conj(const ExactMatrix& x) const {
    if (x.rows() != 2 * n_ || x.cols() != 1) throw PreconditionError("projection argument must be a 2n x 1 column");
    return (inverse_ * x).block(n_, 0, n_, 1);
}

ExactMatrix SplittingFrame::assemble(const ExactMatrix& p, const ExactMatrix& q) const {
    if (p.rows() != n_ || p.cols() != 1 || q.rows() != n_ || q.cols() != 1)
        throw PreconditionError("assemble arguments must be n x 1 columns");
    return frame_ * vstack({p, q});
}

} // namespace torusbundle
