#include "torusbundle/decomposition.hpp"

#include "oracles.hpp"
#include "torusbundle/error.hpp"

#include <doctest.h>

using namespace torusbundle;
namespace fixtures = torusbundle::testing;

namespace {
const GaussianRational I = GaussianRational::i();

ExactMatrix unit(int n, int index) {
    ExactMatrix e(n, 1);
    e(index, 0) = GaussianRational(1);
    return e;
}
} // namespace

TEST_CASE("flagship decomposition blocks") {
    const AlternatingLatticeForm a = fixtures::iwasawa_form();
    const BilinearDecomposition dec = decompose(a, fixtures::standard_subspace(2), fixtures::fiber_line());
    CHECK(dec.m == 2);
    CHECK(dec.d == 1);
    REQUIRE(dec.b_prime.size() == 1);
    CHECK(dec.b_prime[0] == ExactMatrix{{0, 2}, {-2, 0}});
    CHECK(dec.b_double_prime[0].is_zero());
    CHECK(dec.obstruction[0].is_zero());
    CHECK(dec.b_double_prime_is_zero());
    CHECK_FALSE(dec.b_prime_is_zero());
    CHECK(check_riemann(dec));
    CHECK(bracket_closure_oracle(a, fixtures::standard_subspace(2), fixtures::fiber_line()));

    CHECK(dec.eval_b_prime(unit(2, 0), unit(2, 1)) == ExactMatrix{{2}});
    CHECK(dec.eval_b_prime(unit(2, 1), unit(2, 0)) == ExactMatrix{{-2}});
    CHECK(dec.eval_b_double_prime(unit(2, 0), unit(2, 1)).is_zero());
}

TEST_CASE("deformed base kills the holomorphic block") {
    const AlternatingLatticeForm a = fixtures::iwasawa_form();
    const BilinearDecomposition dec = decompose(a, fixtures::deformed_base(), fixtures::fiber_line());
    CHECK(dec.b_prime[0].is_zero());
    CHECK(dec.b_double_prime[0] == ExactMatrix{{0, 2}, {0, 0}});
    CHECK(check_riemann(dec));
    CHECK(dec.eval_b_double_prime(unit(2, 0), unit(2, 1)) == ExactMatrix{{2}});
}

TEST_CASE("incompatible base is detected by both checks") {
    const AlternatingLatticeForm a = fixtures::iwasawa_form();
    const BilinearDecomposition dec = decompose(a, fixtures::violating_base(), fixtures::fiber_line());
    CHECK_FALSE(check_riemann(dec));
    CHECK_FALSE(bracket_closure_oracle(a, fixtures::violating_base(), fixtures::fiber_line()));
    const GaussianRational minus_three_halves(Rational(-3, 2));
    CHECK(dec.obstruction[0] == ExactMatrix{{0, minus_three_halves}, {-minus_three_halves, 0}});
}

TEST_CASE("split form with structure") {
    const BilinearDecomposition dec =
        decompose(fixtures::split_form(), fixtures::standard_subspace(2), fixtures::fiber_line());
    CHECK(check_riemann(dec));
    CHECK(dec.b_prime[0].is_zero());
    CHECK(dec.b_double_prime[0] == ExactMatrix{{-I, 0}, {0, -1}});
}

TEST_CASE("higher rank fixtures decompose compatibly") {
    CHECK(check_riemann(
        decompose(fixtures::product_m3_form(), fixtures::standard_subspace(3), fixtures::fiber_line())));
    CHECK(check_riemann(decompose(fixtures::double_heisenberg_form(), fixtures::standard_subspace(3),
                                  fixtures::standard_subspace(2))));
    CHECK(check_riemann(
        decompose(fixtures::rank2_d2_form(), fixtures::standard_subspace(2), fixtures::standard_subspace(2))));

    const BilinearDecomposition dec = decompose(fixtures::double_heisenberg_form(),
                                                fixtures::standard_subspace(3), fixtures::standard_subspace(2));
    CHECK(dec.b_prime[0] == ExactMatrix{{0, 2, 0}, {-2, 0, 0}, {0, 0, 0}});
    CHECK(dec.b_prime[1] == ExactMatrix{{0, 0, 2}, {0, 0, 0}, {-2, 0, 0}});
    CHECK(dec.b_double_prime_is_zero());
}

TEST_CASE("reassembly is exact") {
    struct Case {
        AlternatingLatticeForm a;
        PeriodSubspace v;
        PeriodSubspace u;
    };
    const Case cases[] = {
        {fixtures::iwasawa_form(), fixtures::standard_subspace(2), fixtures::fiber_line()},
        {fixtures::iwasawa_form(), fixtures::deformed_base(), fixtures::fiber_line()},
        {fixtures::iwasawa_form(), fixtures::violating_base(), fixtures::fiber_line()},
        {fixtures::split_form(), fixtures::standard_subspace(2), fixtures::fiber_line()},
        {fixtures::double_heisenberg_form(), fixtures::standard_subspace(3), fixtures::standard_subspace(2)},
    };
    for (const Case& c : cases) {
        const std::vector<ExactMatrix> rebuilt = reassemble_components(decompose(c.a, c.v, c.u));
        REQUIRE(rebuilt.size() == c.a.components().size());
        for (std::size_t k = 0; k < rebuilt.size(); ++k) CHECK(rebuilt[k] == c.a.component(static_cast<int>(k)));
    }
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(decompose(fixtures::iwasawa_form(), fixtures::standard_subspace(3), fixtures::fiber_line()),
                    PreconditionError);
    CHECK_THROWS_AS(
        decompose(fixtures::iwasawa_form(), fixtures::standard_subspace(2), fixtures::standard_subspace(2)),
        PreconditionError);
}

TEST_CASE("hermitian system") {
    const HermitianSystem flag = hermitian_system(fixtures::iwasawa_form(), fixtures::standard_subspace(2));
    REQUIRE(flag.d.size() == 2);
    for (const ExactMatrix& dk : flag.d) CHECK(dk.is_hermitian());
    CHECK(flag.is_zero());
    CHECK(discriminant_form(flag).is_zero());

    const HermitianSystem deformed = hermitian_system(fixtures::iwasawa_form(), fixtures::deformed_base());
    CHECK_FALSE(deformed.is_zero());
    for (const ExactMatrix& dk : deformed.d) CHECK(dk.is_hermitian());
    CHECK(deformed.d[0] == ExactMatrix{{0, 2 * I}, {-2 * I, 0}});
    CHECK(deformed.d[1] == ExactMatrix{{0, -2}, {-2, 0}});

    const MultiPoly disc = discriminant_form(deformed);
    CHECK(disc.has_real_coefficients());
    CHECK(disc.coefficient({2, 0}) == GaussianRational(-4));
    CHECK(disc.coefficient({0, 2}) == GaussianRational(-4));
    CHECK(disc.coefficient({1, 1}) == GaussianRational(0));
}

TEST_CASE("cocycle values and integrality of the composition defect") {
    const BilinearDecomposition dec =
        decompose(fixtures::iwasawa_form(), fixtures::deformed_base(), fixtures::fiber_line());

    const ExactMatrix gamma3 = unit(4, 2);  // third lattice direction
    CHECK(cocycle(dec, gamma3, unit(2, 0)) == ExactMatrix{{2}});
    CHECK(cocycle(dec, unit(4, 0), unit(2, 1)).is_zero());

    const ExactMatrix vs[] = {unit(2, 0), unit(2, 1),
                              ExactMatrix::column({GaussianRational(Rational(1, 3)), I})};
    const ExactMatrix gammas[] = {unit(4, 0), unit(4, 2), ExactMatrix::column({1, -2, 3, 5}),
                                  ExactMatrix::column({0, 1, 1, -1})};
    for (const ExactMatrix& v : vs)
        for (const ExactMatrix& g1 : gammas)
            for (const ExactMatrix& g2 : gammas) CHECK(cocycle_defect_is_integral(dec, g1, g2, v));

    const BilinearDecomposition flag =
        decompose(fixtures::iwasawa_form(), fixtures::standard_subspace(2), fixtures::fiber_line());
    for (const ExactMatrix& g1 : gammas)
        for (const ExactMatrix& g2 : gammas) CHECK(cocycle_defect_is_integral(flag, g1, g2, unit(2, 1)));
}
