// group_model.hpp — the rational nilpotent group attached to an alternating
// lattice form: elements, the triangular-splitting multiplication, lattice
// translations, holomorphic fiber distributions, and the fiber
// trivialization induced by a decomposition.
#pragma once

#include "torusbundle/decomposition.hpp"
#include "torusbundle/lattice_form.hpp"
#include "torusbundle/period.hpp"

#include <utility>

namespace torusbundle {

/**
 * A point (y, x) of the group carried by a form with parameters (m, d):
 * y is a real rational 2d x 1 column, x a real rational 2m x 1 column.
 */
struct GroupElement {
    GroupElement(ExactMatrix y_in, ExactMatrix x_in);

    ExactMatrix y;
    ExactMatrix x;

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.y == b.y && a.x == b.x; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
};

GroupElement group_identity(int m, int d);

/** (y, x)(y', x') = (y + y' + T(x, x'), x + x') in the splitting's model. */
GroupElement group_multiply(const TriangularSplitting& split, const GroupElement& g, const GroupElement& h);

/** Inverse (-y - 2 S(x, x), -x), which equals (-y + T(x, x), -x). */
GroupElement group_inverse(const TriangularSplitting& split, const GroupElement& g);

/**
 * Right action of an integral lattice vector gamma in normalized
 * coordinates: (y, x) . gamma = (y + A(x, gamma) + 2 S(gamma, gamma),
 * x + gamma).  Throws PreconditionError when gamma is not integral.
 */
GroupElement lattice_action(const AlternatingLatticeForm& a, const TriangularSplitting& split,
                            const GroupElement& g, const ExactMatrix& gamma);

/** Product (y + y' + A(x, x'), x + x') in normalized coordinates. */
GroupElement normalized_multiply(const AlternatingLatticeForm& a, const GroupElement& g,
                                 const GroupElement& h);

/**
 * Basis of the holomorphic fiber {(u + A(v, x_g), v) : u in U, v in V} of
 * the left-invariant complex structure at g, as a (2d + 2m) x (d + m)
 * column matrix.
 */
ExactMatrix t10_fiber(const AlternatingLatticeForm& a, const PeriodSubspace& v, const PeriodSubspace& u,
                      const GroupElement& g);

/**
 * Pushforward of tangent columns (dy; dx) under right translation by h:
 * (dy + A(dx, x_h), dx).  Maps the fiber at g onto the fiber at gh exactly.
 */
ExactMatrix right_translation_pushforward(const AlternatingLatticeForm& a, const GroupElement& h,
                                          const ExactMatrix& tangent);

/**
 * Pushforward of tangent columns under inversion at g:
 * (-dy - 4 S(x_g, dx), -dx), since S is symmetric.
 */
ExactMatrix inversion_pushforward(const TriangularSplitting& split, const GroupElement& g,
                                  const ExactMatrix& tangent);

/**
 * The linear condition under which inversion at g maps the holomorphic
 * fiber to the holomorphic fiber at the inverse: for every basis vector v
 * of V, 2 A(v, x_g) + 4 S(x_g, v) must lie in U.
 */
bool inversion_holomorphic_at(const AlternatingLatticeForm& a, const TriangularSplitting& split,
                              const PeriodSubspace& v, const PeriodSubspace& u, const GroupElement& g);

/**
 * Fiber coordinates of g in the trivialization attached to a decomposition
 * satisfying the compatibility condition: (p_U(y) + B''(x_V, conj x_V), x_V)
 * as a (d x 1, m x 1) pair.
 */
std::pair<ExactMatrix, ExactMatrix> trivialization_psi(const BilinearDecomposition& dec,
                                                       const GroupElement& g);

/** Inverse of trivialization_psi; returns the unique real group element. */
GroupElement trivialization_psi_inverse(const BilinearDecomposition& dec, const ExactMatrix& u,
                                        const ExactMatrix& v);

/**
 * The right translation by g read through the trivialization:
 * psi . R_g . psi^{-1} applied to fiber coordinates (u, v), computed via
 * the actual group product in normalized coordinates.
 */
std::pair<ExactMatrix, ExactMatrix> conjugated_right_action(const BilinearDecomposition& dec,
                                                            const AlternatingLatticeForm& a,
                                                            const GroupElement& g, const ExactMatrix& u,
                                                            const ExactMatrix& v);

/**
 * The same action predicted by the cocycle:
 * (u + p_U(y_g) + F_{x_g}(v), v + p_V(x_g)).
 */
std::pair<ExactMatrix, ExactMatrix> cocycle_right_action(const BilinearDecomposition& dec,
                                                         const GroupElement& g, const ExactMatrix& u,
                                                         const ExactMatrix& v);

} // namespace torusbundle
