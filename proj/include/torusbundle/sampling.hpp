// sampling.hpp — seeded random generation of exact scalars, forms, period
// subspaces, and group elements for property checks, plus the randomized
// search for period data compatible with a given form.
#pragma once

#include "torusbundle/group_model.hpp"
#include "torusbundle/lattice_form.hpp"
#include "torusbundle/period.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

namespace torusbundle {

/**
 * Deterministic source of random exact objects.  All draws reduce engine
 * output modulo small ranges, so a fixed seed gives the same stream on
 * every platform.
 */
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    /** Uniform-ish integer in [lo, hi]. */
    long long integer(long long lo, long long hi);
    /** Numerator in [-num_bound, num_bound], denominator in [1, den_bound]. */
    Rational rational(int num_bound, int den_bound);
    GaussianRational gaussian(int num_bound, int den_bound);

    ExactMatrix real_matrix(int rows, int cols, int num_bound, int den_bound);
    ExactMatrix complex_matrix(int rows, int cols, int num_bound, int den_bound);
    ExactMatrix integral_column(int n, int bound);

    /** Integer alternating components; resamples until nonzero if required. */
    AlternatingLatticeForm form(int m, int d, int bound, bool nonzero);

    /** Valid n-dimensional period subspace of C^{2n} by rejection. */
    PeriodSubspace subspace(int n, int num_bound, int den_bound);

    /** Random rational group point for parameters (m, d). */
    GroupElement element(int m, int d, int num_bound, int den_bound);

    /** Integer matrix of determinant +-1, a product of elementary moves. */
    ExactMatrix unimodular(int n, int moves, int bound);

private:
    std::mt19937_64 eng_;
};

/**
 * Randomized search for period data (V, U) making the form compatible,
 * i.e. A(V, V) lies in U.  Heuristic: samples V, then spans U by the value
 * of A on the V-basis pair (or samples U freely when that value is zero).
 * Supported for m = 2, d = 1 only; throws PreconditionError otherwise.
 */
std::optional<std::pair<PeriodSubspace, PeriodSubspace>> find_structure_witness(
    const AlternatingLatticeForm& a, Sampler& sampler, int attempts);

} // namespace torusbundle
