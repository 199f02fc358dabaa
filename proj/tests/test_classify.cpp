#include "torusbundle/classify.hpp"

#include "oracles.hpp"
#include "torusbundle/error.hpp"
#include "torusbundle/json_io.hpp"
#include "torusbundle/render.hpp"
#include "torusbundle/sampling.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace torusbundle;
namespace fixtures = torusbundle::testing;

namespace {

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

ProblemInstance form_only(AlternatingLatticeForm a) {
    return ProblemInstance{std::move(a), std::nullopt, std::nullopt};
}

} // namespace

TEST_CASE("built-in flagship instance") {
    const ProblemInstance inst = build_iwasawa();
    CHECK(inst.form.m() == 2);
    CHECK(inst.form.d() == 1);
    CHECK(inst.form.components() == fixtures::iwasawa_form().components());
    REQUIRE(inst.v.has_value());
    REQUIRE(inst.u.has_value());
    CHECK(inst.v->basis() == fixtures::standard_subspace(2).basis());
    CHECK(inst.u->basis() == fixtures::fiber_line().basis());
}

TEST_CASE("flagship classification report") {
    const ClassificationReport rep = classify(build_iwasawa());
    CHECK(rep.m == 2);
    CHECK(rep.d == 1);
    CHECK(rep.kernel_dim == 0);
    CHECK(rep.image_dim == 2);
    CHECK(rep.riemann_ok == true);
    REQUIRE(rep.cohomology.has_value());
    CHECK(*rep.cohomology == CohomologyReport{3, 0, 2, 2, 0, 0, 2, true});
    CHECK(rep.deformation.g_rank == 1);
    CHECK(rep.deformation.tangent_dim_complete == 6);
    CHECK(rep.deformation.ks_case == KsCase::II);
    CHECK(rep.deformation.not_kaehler);
    REQUIRE(rep.pencil.has_value());
    CHECK(rep.pencil->form.to_string({"mu1", "mu2"}) == "mu1^2 + mu2^2");
    CHECK(rep.pencil->verdict == PencilVerdict::ComplexConjugatePointsOnly);
    CHECK(rep.main_theorem_verdict == MainVerdict::CriterionFails);
    CHECK(rep.warnings == std::vector<std::string>{"base period orientation is negative"});
}

TEST_CASE("verdicts across form shapes") {
    CHECK(classify(form_only(fixtures::split_form())).main_theorem_verdict == MainVerdict::ConnectedComponent);
    CHECK(classify(form_only(fixtures::block_pencil_form())).main_theorem_verdict ==
          MainVerdict::CriterionFails);
    CHECK(classify(form_only(fixtures::product_m3_form())).main_theorem_verdict ==
          MainVerdict::NotApplicable);
    CHECK(classify(form_only(fixtures::rank2_d2_form())).main_theorem_verdict == MainVerdict::NotApplicable);

    const AlternatingLatticeForm zero = validate_form(2, 1, {ExactMatrix(4, 4), ExactMatrix(4, 4)});
    const ClassificationReport zrep = classify(form_only(zero));
    CHECK(zrep.main_theorem_verdict == MainVerdict::NotApplicable);
    CHECK_FALSE(zrep.deformation.not_kaehler);

    // A nonzero kernel blocks the criterion even with a real pencil point.
    const ClassificationReport degen = classify(form_only(fixtures::degenerate_pencil_form()));
    CHECK(degen.kernel_dim == 1);
    CHECK(degen.main_theorem_verdict == MainVerdict::CriterionFails);

    const ClassificationReport split_rep = classify(form_only(fixtures::split_form()));
    CHECK_FALSE(split_rep.riemann_ok.has_value());
    CHECK_FALSE(split_rep.cohomology.has_value());
    CHECK_FALSE(split_rep.deformation.g_rank.has_value());
    CHECK(split_rep.deformation.not_kaehler);
}

TEST_CASE("incompatible period data is reported, not fatal") {
    ProblemInstance inst{fixtures::iwasawa_form(), fixtures::violating_base(), fixtures::fiber_line()};
    const ClassificationReport rep = classify(inst);
    CHECK(rep.riemann_ok == false);
    CHECK_FALSE(rep.cohomology.has_value());
    CHECK_FALSE(rep.deformation.g_rank.has_value());
    CHECK(rep.main_theorem_verdict == MainVerdict::CriterionFails);
    CHECK(rep.warnings.empty());
}

TEST_CASE("verdict is invariant under unimodular changes") {
    Sampler sampler(41);
    for (const AlternatingLatticeForm& a :
         {fixtures::iwasawa_form(), fixtures::split_form(), fixtures::block_pencil_form(),
          fixtures::degenerate_pencil_form()}) {
        const ClassificationReport base = classify(form_only(a));

        for (int trial = 0; trial < 12; ++trial) {
            // Recombine the two value coordinates unimodularly.
            const ExactMatrix r = sampler.unimodular(2, 6, 2);
            std::vector<ExactMatrix> mixed(2, ExactMatrix(4, 4));
            for (int k = 0; k < 2; ++k)
                for (int j = 0; j < 2; ++j) mixed[static_cast<std::size_t>(k)] += a.component(j) * r(k, j);
            const ClassificationReport mixed_rep =
                classify(form_only(validate_form(2, 1, {mixed[0], mixed[1]})));
            CHECK(mixed_rep.main_theorem_verdict == base.main_theorem_verdict);
            CHECK(mixed_rep.kernel_dim == base.kernel_dim);
            CHECK(mixed_rep.image_dim == base.image_dim);

            // Change the domain basis unimodularly.
            const ExactMatrix s = sampler.unimodular(4, 8, 2);
            const ClassificationReport conj_rep = classify(form_only(validate_form(
                2, 1,
                {s.transpose() * a.component(0) * s, s.transpose() * a.component(1) * s})));
            CHECK(conj_rep.main_theorem_verdict == base.main_theorem_verdict);
            CHECK(conj_rep.kernel_dim == base.kernel_dim);
            CHECK(conj_rep.image_dim == base.image_dim);
        }
    }
}

TEST_CASE("instance json round trip") {
    const ProblemInstance inst = build_iwasawa();
    const std::string text = instance_to_json(inst);
    const ProblemInstance back = parse_instance(text);
    CHECK(back.form.components() == inst.form.components());
    REQUIRE(back.v.has_value());
    REQUIRE(back.u.has_value());
    CHECK(back.v->basis() == inst.v->basis());
    CHECK(back.u->basis() == inst.u->basis());
    CHECK(instance_to_json(back) == text);

    const ProblemInstance bare = parse_instance(instance_to_json(form_only(fixtures::split_form())));
    CHECK_FALSE(bare.v.has_value());
    CHECK_FALSE(bare.u.has_value());
}

TEST_CASE("instance parsing failures") {
    CHECK_THROWS_AS(parse_instance("not json"), MalformedInputError);
    CHECK_THROWS_WITH_AS(parse_instance("{"), doctest::Contains("invalid JSON at byte"),
                         MalformedInputError);
    CHECK_THROWS_AS(parse_instance("[1, 2]"), MalformedInputError);
    CHECK_THROWS_AS(parse_instance("{}"), MalformedInputError);
    CHECK_THROWS_AS(parse_instance(R"({"A": {"m": 2, "d": 1}})"), MalformedInputError);
    CHECK_THROWS_AS(parse_instance(R"({"A": {"m": 0, "d": 1, "components": []}})"), MalformedInputError);
    CHECK_THROWS_AS(parse_instance(R"({"A": {"m": 2, "d": 1, "components": [
        [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]]}})"),
                    MalformedInputError);  // one component instead of two
    CHECK_THROWS_AS(parse_instance(R"({"A": {"m": 1, "d": 1, "components": [
        [[0, 0.5],[-0.5, 0]], [[0,0],[0,0]]]}})"),
                    MalformedInputError);  // fractional entries
    CHECK_THROWS_AS(parse_instance(R"({"A": {"m": 1, "d": 1, "components": [
        [[0,1],[-1,0],[0,0]], [[0,0],[0,0]]]}})"),
                    MalformedInputError);  // ragged rows

    const std::string good = R"({"A": {"m": 1, "d": 1, "components": [[[0,1],[-1,0]], [[0,0],[0,0]]]})";
    CHECK_THROWS_AS(parse_instance(good + R"(, "V": {"basis": [["1"],["i"],["0"]]}})"),
                    MalformedInputError);  // wrong shape
    CHECK_THROWS_AS(parse_instance(good + R"(, "V": {"basis": [["1"],["2"]]}})"),
                    DegenerateStructureError);  // real line
    CHECK_THROWS_AS(parse_instance(good + R"(, "V": {"basis": [["1"],["oops"]]}})"),
                    MalformedInputError);
}

TEST_CASE("report json round trips structurally") {
    const std::vector<ClassificationReport> reports = {
        classify(build_iwasawa()),
        classify(form_only(fixtures::split_form())),
        classify(form_only(fixtures::product_m3_form())),
        classify(ProblemInstance{fixtures::iwasawa_form(), fixtures::violating_base(), fixtures::fiber_line()}),
        classify(ProblemInstance{fixtures::double_heisenberg_form(), fixtures::standard_subspace(3),
                                 fixtures::standard_subspace(2)}),
    };
    for (const ClassificationReport& rep : reports) {
        const std::string text = report_to_json(rep);
        CHECK(report_from_json(text) == rep);
        CHECK(report_to_json(rep) == text);  // deterministic bytes
        CHECK(render_report(rep, RenderFormat::Json) == text);
    }
}

TEST_CASE("text rendering walks the verdict") {
    const ClassificationReport rep = classify(build_iwasawa());
    const std::string text = render_report_text(rep);
    CHECK(render_report(rep, RenderFormat::Text) == text);
    CHECK(render_report_text(rep) == text);  // deterministic

    for (const char* line : {
             "instance: m=2, d=1",
             "warning: base period orientation is negative",
             "kernel of form: dim 0",
             "image of form: dim 2",
             "pfaffian pencil: mu1^2 + mu2^2",
             "pencil coefficients: [1, 0, 1]",
             "pencil discriminant: -4",
             "pencil verdict: complex-conjugate-points-only",
             "riemann relation: holds",
             "parallelizable: true",
             "h^0(Omega^1): 3",
             "h^1(O): 2",
             "h^2(O): 2 (E3 terms 0 + 0 + 2)",
             "G rank: 1",
             "tangent dim (base): 4",
             "tangent dim (complete family): 6",
             "smooth: true",
             "surjectivity case: ii (holding: i ii iii iv)",
             "not kaehler: true",
             "main theorem conditions:",
             "  size (m, d) = (2, 1): yes",
             "  nonzero class: yes",
             "  trivial kernel: yes",
             "  image dimension 2: yes",
             "  pencil meets real points: no",
             "main theorem verdict: criterion-fails",
         })
        CHECK_MESSAGE(contains(text, line), line);

    const std::string split_text = render_report_text(classify(form_only(fixtures::split_form())));
    CHECK(contains(split_text, "riemann relation: not evaluated (no period data)"));
    CHECK(contains(split_text, "pencil verdict: real-point"));
    CHECK(contains(split_text, "  pencil meets real points: yes"));
    CHECK(contains(split_text, "main theorem verdict: connected-component"));

    const std::string m3_text = render_report_text(classify(form_only(fixtures::product_m3_form())));
    CHECK(contains(m3_text, "pfaffian pencil: not available (requires m=2, d=1)"));
    CHECK(contains(m3_text, "  pencil meets real points: unavailable"));
    CHECK(contains(m3_text, "main theorem verdict: not-applicable"));
}

TEST_CASE("render format parsing") {
    CHECK(render_format_from_string("json") == RenderFormat::Json);
    CHECK(render_format_from_string("text") == RenderFormat::Text);
    CHECK_THROWS_AS(render_format_from_string("yaml"), MalformedInputError);
}

TEST_CASE("verdict text round trips") {
    for (MainVerdict v :
         {MainVerdict::ConnectedComponent, MainVerdict::CriterionFails, MainVerdict::NotApplicable})
        CHECK(main_verdict_from_string(to_string(v)) == v);
    CHECK_THROWS_AS(main_verdict_from_string("unknown"), MalformedInputError);
}

TEST_CASE("witness search finds compatible period data") {
    Sampler sampler(43);
    const auto witness = find_structure_witness(fixtures::iwasawa_form(), sampler, 200);
    REQUIRE(witness.has_value());
    const auto& [v, u] = *witness;
    CHECK(bracket_closure_oracle(fixtures::iwasawa_form(), v, u));
    const ClassificationReport rep =
        classify(ProblemInstance{fixtures::iwasawa_form(), witness->first, witness->second});
    CHECK(rep.riemann_ok == true);
    REQUIRE(rep.cohomology.has_value());

    const AlternatingLatticeForm zero = validate_form(2, 1, {ExactMatrix(4, 4), ExactMatrix(4, 4)});
    Sampler sampler2(44);
    CHECK(find_structure_witness(zero, sampler2, 50).has_value());

    Sampler sampler3(45);
    CHECK_THROWS_AS(find_structure_witness(fixtures::product_m3_form(), sampler3, 10), PreconditionError);
}
