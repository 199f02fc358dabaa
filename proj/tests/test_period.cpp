#include "torusbundle/period.hpp"

#include "oracles.hpp"
#include "torusbundle/error.hpp"

#include <doctest.h>

using namespace torusbundle;
namespace fixtures = torusbundle::testing;

namespace {
const GaussianRational I = GaussianRational::i();
}

TEST_CASE("orientation of reference subspaces") {
    const PeriodSubspace standard = fixtures::standard_subspace(2);
    CHECK(standard.ambient_rank() == 4);
    CHECK(standard.dim() == 2);
    CHECK(standard.orientation() == Rational(-4));
    CHECK(standard.orientation_sign() == -1);

    ExactMatrix interleaved(4, 2);
    interleaved(0, 0) = 1;
    interleaved(2, 0) = I;
    interleaved(1, 1) = 1;
    interleaved(3, 1) = I;
    const PeriodSubspace plus = validate_subspace(interleaved);
    CHECK(plus.orientation() == Rational(4));
    CHECK(plus.orientation_sign() == 1);

    CHECK(fixtures::fiber_line().orientation() == Rational(2));
    CHECK(fixtures::deformed_base().orientation() == Rational(4));
    CHECK(fixtures::violating_base().orientation() == Rational(16));
}

TEST_CASE("validation failures") {
    CHECK_THROWS_AS(validate_subspace(ExactMatrix(3, 2)), MalformedInputError);  // odd ambient
    CHECK_THROWS_AS(validate_subspace(ExactMatrix(4, 1)), MalformedInputError);  // wrong dim

    ExactMatrix deficient(4, 2);
    deficient(0, 0) = 1;
    deficient(0, 1) = 2;
    CHECK_THROWS_AS(validate_subspace(deficient), MalformedInputError);  // rank 1

    ExactMatrix real_basis(4, 2);
    real_basis(0, 0) = 1;
    real_basis(2, 1) = 1;
    CHECK_THROWS_AS(validate_subspace(real_basis), DegenerateStructureError);  // meets conjugate

    ExactMatrix half_real(4, 2);
    half_real(0, 0) = 1;
    half_real(1, 0) = I;
    half_real(2, 1) = 1;
    CHECK_THROWS_AS(validate_subspace(half_real), DegenerateStructureError);
}

TEST_CASE("splitting frame projects and reassembles") {
    ExactMatrix interleaved(4, 2);
    interleaved(0, 0) = 1;
    interleaved(2, 0) = I;
    interleaved(1, 1) = 1;
    interleaved(3, 1) = I;
    const SplittingFrame frame(validate_subspace(interleaved));
    CHECK(frame.dim() == 2);
    CHECK(frame.frame() * frame.frame_inverse() == ExactMatrix::identity(4));

    const ExactMatrix e1 = ExactMatrix::column({1, 0, 0, 0});
    CHECK(frame.project(e1) == ExactMatrix::column({GaussianRational(Rational(1, 2)), 0}));

    for (const ExactMatrix& x : {ExactMatrix::column({1, 0, 0, 0}), ExactMatrix::column({0, 1, -2, 3}),
                                 ExactMatrix::column({5, -1, 7, 2})}) {
        const ExactMatrix p = frame.project(x);
        const ExactMatrix q = frame.project_conj(x);
        CHECK(q == p.conjugate());  // real vectors split conjugate-symmetrically
        CHECK(frame.assemble(p, q) == x);
    }

    // A genuinely complex vector still reassembles.
    const ExactMatrix z = ExactMatrix::column({I, 1, 2 * I, -1});
    CHECK(frame.assemble(frame.project(z), frame.project_conj(z)) == z);
}
