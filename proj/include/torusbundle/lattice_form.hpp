// lattice_form.hpp — integral alternating bilinear forms with values in a
// second lattice, their kernels, triangular splittings, and the Pfaffian
// pencil attached to the rank-4, rank-2 case.
#pragma once

#include "torusbundle/matrix.hpp"
#include "torusbundle/polynomial.hpp"

#include <string>
#include <vector>

namespace torusbundle {

/**
 * An alternating bilinear form A on a rank-2m lattice with values in a
 * rank-2d lattice, stored as 2d integer alternating component matrices of
 * size 2m x 2m.  Component k computes the k-th coordinate x^T A_k y.
 */
class AlternatingLatticeForm {
public:
    AlternatingLatticeForm(int m, int d, std::vector<ExactMatrix> components);

    int m() const { return m_; }
    int d() const { return d_; }
    int domain_rank() const { return 2 * m_; }
    int value_rank() const { return 2 * d_; }

    const std::vector<ExactMatrix>& components() const { return components_; }
    const ExactMatrix& component(int k) const { return components_[static_cast<std::size_t>(k)]; }

    /** Value A(x, y) as a 2d x 1 column; x and y are 2m x 1 columns. */
    ExactMatrix value(const ExactMatrix& x, const ExactMatrix& y) const;

    bool is_zero() const;

private:
    int m_;
    int d_;
    std::vector<ExactMatrix> components_;
};

/**
 * Builds a form after checking shape, integrality, and antisymmetry of
 * every component.  Throws MalformedInputError on failure.
 */
AlternatingLatticeForm validate_form(int m, int d, std::vector<ExactMatrix> components);

/** Basis (columns) of {x : A(x, y) = 0 for all y}, the common kernel. */
ExactMatrix kernel_of_form(const AlternatingLatticeForm& a);

/** Dimension of the span of all values A(x, y). */
int image_dimension(const AlternatingLatticeForm& a);

/**
 * Integral splitting A = T - T^t with T supported on the strict lower
 * triangle, and the symmetric quarter-integral form S = -(T + T^t)/4,
 * which satisfies T + 2S = A/2 and 2 S(x, x) = -T(x, x).
 * Componentwise: tminus[k](r, c) = a[k](r, c) for r > c, else 0.
 */
struct TriangularSplitting {
    int m = 0;
    int d = 0;
    std::vector<ExactMatrix> tminus;  // integral, strictly lower triangular
    std::vector<ExactMatrix> s;       // symmetric, entries in (1/4)Z

    /** T(x, y) as a 2d x 1 column. */
    ExactMatrix tminus_value(const ExactMatrix& x, const ExactMatrix& y) const;
    /** S(x, y) as a 2d x 1 column. */
    ExactMatrix s_value(const ExactMatrix& x, const ExactMatrix& y) const;
};

TriangularSplitting triangular_splitting(const AlternatingLatticeForm& a);

enum class PencilVerdict {
    RealPoint,                  // the vanishing locus contains a real point
    ComplexConjugatePointsOnly, // it is a pair of conjugate non-real points
    IdenticallyZero,            // the Pfaffian form vanishes identically
    Undecided,                  // outside the decidable shapes
};

std::string to_string(PencilVerdict v);

/** Inverse of to_string; throws MalformedInputError on unknown text. */
PencilVerdict pencil_verdict_from_string(const std::string& text);

/**
 * For m = 2, d = 1: the Pfaffian of mu1 A1 + mu2 A2 as a binary quadratic
 * form, sign-normalized so the first nonzero coefficient in the order
 * mu1^2, mu1*mu2, mu2^2 is positive, together with a verdict on real
 * zeros of the form.
 */
struct PfaffianPencilReport {
    MultiPoly form{2};                    // in the pencil parameters mu1, mu2
    std::vector<Rational> coefficients;   // [mu1^2, mu1*mu2, mu2^2]
    Rational discriminant = 0;            // b^2 - 4ac
    PencilVerdict verdict = PencilVerdict::Undecided;

    bool operator==(const PfaffianPencilReport&) const = default;
};

/** Throws PreconditionError unless m = 2 and d = 1. */
PfaffianPencilReport pfaffian_pencil(const AlternatingLatticeForm& a);

} // namespace torusbundle
