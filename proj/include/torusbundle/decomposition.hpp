// decomposition.hpp — splitting an alternating lattice form along a pair of
// period subspaces into its holomorphic, mixed, and obstruction pieces, the
// compatibility check those pieces encode, and the attached Hermitian and
// cocycle data.
#pragma once

#include "torusbundle/lattice_form.hpp"
#include "torusbundle/period.hpp"
#include "torusbundle/polynomial.hpp"

#include <vector>

namespace torusbundle {

/**
 * The components of a form A relative to period subspaces V (base side,
 * dimension m) and U (fiber side, dimension d).  For each U-coordinate
 * j < d, write M_j for the matrix of the j-th U-component of A in the frame
 * [V | conj V].  Its blocks are:
 *
 *   b_prime[j]        = M_j on V x V            (m x m, antisymmetric)
 *   b_double_prime[j] = M_j on V x conj V       (m x m)
 *   obstruction[j]    = M_j on conj V x conj V  (m x m, antisymmetric)
 *
 * The compatibility condition A(V, V) in U holds iff every obstruction
 * block vanishes.  Conjugate U-components are determined by these.
 */
struct BilinearDecomposition {
    int m = 0;
    int d = 0;
    std::vector<ExactMatrix> b_prime;
    std::vector<ExactMatrix> b_double_prime;
    std::vector<ExactMatrix> obstruction;
    SplittingFrame base_frame;   // frame of V inside the domain lattice
    SplittingFrame fiber_frame;  // frame of U inside the value lattice

    /** B'(v, w) in U-coordinates; v, w are m x 1 V-coordinate columns. */
    ExactMatrix eval_b_prime(const ExactMatrix& v, const ExactMatrix& w) const;
    /** B''(v, wbar) in U-coordinates; wbar is an m x 1 conj-V-coordinate column. */
    ExactMatrix eval_b_double_prime(const ExactMatrix& v, const ExactMatrix& wbar) const;

    bool b_prime_is_zero() const;
    bool b_double_prime_is_zero() const;
};

/**
 * Splits the form along validated subspaces V (dimension m matching the
 * form's domain) and U (dimension d matching its value lattice).
 */
BilinearDecomposition decompose(const AlternatingLatticeForm& a, const PeriodSubspace& v,
                                const PeriodSubspace& u);

/** True iff every obstruction block of the decomposition vanishes. */
bool check_riemann(const BilinearDecomposition& dec);

/**
 * Independent check of the same condition: evaluates A on all pairs of
 * V-basis columns directly and tests membership of each value in U.
 */
bool bracket_closure_oracle(const AlternatingLatticeForm& a, const PeriodSubspace& v,
                            const PeriodSubspace& u);

/**
 * The Hermitian matrices D_k = i V^T A_k conj(V) for each of the 2d
 * components, where V is the basis matrix of the period subspace.
 */
struct HermitianSystem {
    std::vector<ExactMatrix> d;  // 2d matrices, m x m, Hermitian
    bool is_zero() const;
};

HermitianSystem hermitian_system(const AlternatingLatticeForm& a, const PeriodSubspace& v);

/**
 * det(sum_k lambda_k D_k) as a polynomial in 2d real variables; its
 * coefficients are real.
 */
MultiPoly discriminant_form(const HermitianSystem& h);

/**
 * The fiber-translation cocycle of the decomposition: for a lattice vector
 * gamma (2m x 1, rational) and v in V-coordinates (m x 1),
 *
 *   F_gamma(v) = B'(v, p(gamma)) + 2 B''(v, conj p(gamma))
 *              + B''(p(gamma), conj p(gamma))
 *
 * returned in U-coordinates (d x 1).
 */
ExactMatrix cocycle(const BilinearDecomposition& dec, const ExactMatrix& gamma, const ExactMatrix& v);

/**
 * The action-composition defect
 * F_{gamma+delta}(v) - F_gamma(v + p(delta)) - F_delta(v) lies in the image
 * of the value lattice for all integral gamma, delta; this recovers the
 * lattice vector from U-coordinates and checks integrality.
 */
bool cocycle_defect_is_integral(const BilinearDecomposition& dec, const ExactMatrix& gamma,
                                const ExactMatrix& delta, const ExactMatrix& v);

/**
 * Rebuilds the 2d component matrices of the original form from the
 * decomposition blocks and frames; equals the input form exactly.
 */
std::vector<ExactMatrix> reassemble_components(const BilinearDecomposition& dec);

} // namespace torusbundle
