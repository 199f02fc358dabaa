#include "torusbundle/classify.hpp"

#include "torusbundle/error.hpp"

namespace torusbundle {

std::string to_string(MainVerdict v) {
    switch (v) {
        case MainVerdict::ConnectedComponent: return "connected-component";
        case MainVerdict::CriterionFails: return "criterion-fails";
        case MainVerdict::NotApplicable: return "not-applicable";
    }
    throw Error("unknown verdict");
}

MainVerdict main_verdict_from_string(const std::string& text) {
    for (MainVerdict v : {MainVerdict::ConnectedComponent, MainVerdict::CriterionFails, MainVerdict::NotApplicable})
        if (to_string(v) == text) return v;
    throw MalformedInputError("unknown verdict: " + text);
}

ClassificationReport classify(const ProblemInstance& inst) {
    const AlternatingLatticeForm& a = inst.form;
    ClassificationReport rep;
    rep.m = a.m();
    rep.d = a.d();
    rep.kernel_dim = kernel_of_form(a).cols();
    rep.image_dim = image_dimension(a);
    rep.deformation.not_kaehler = !a.is_zero();

    if (a.m() == 2 && a.d() == 1) rep.pencil = pfaffian_pencil(a);

    if (inst.v && inst.v->orientation_sign() < 0)
        rep.warnings.push_back("base period orientation is negative");
    if (inst.u && inst.u->orientation_sign() < 0)
        rep.warnings.push_back("fiber period orientation is negative");

    if (inst.v && inst.u) {
        BilinearDecomposition dec = decompose(a, *inst.v, *inst.u);
        rep.riemann_ok = check_riemann(dec);
        if (*rep.riemann_ok) {
            rep.cohomology = cohomology_invariants(dec);
            rep.deformation = deformation_invariants(a, dec);
        }
    }

    if (a.is_zero() || a.m() != 2 || a.d() != 1) {
        rep.main_theorem_verdict = MainVerdict::NotApplicable;
    } else {
        const bool criterion = rep.kernel_dim == 0 && rep.image_dim == 2 && rep.pencil &&
                               rep.pencil->verdict == PencilVerdict::RealPoint;
        rep.main_theorem_verdict =
            criterion ? MainVerdict::ConnectedComponent : MainVerdict::CriterionFails;
    }
    return rep;
}

ProblemInstance build_iwasawa() {
    const GaussianRational one(1);
    const GaussianRational i = GaussianRational::i();

    ExactMatrix a1(4, 4), a2(4, 4);
    a1(0, 2) = one;
    a1(2, 0) = -one;
    a1(1, 3) = -one;
    a1(3, 1) = one;
    a2(0, 3) = one;
    a2(3, 0) = -one;
    a2(1, 2) = one;
    a2(2, 1) = -one;

    ExactMatrix v(4, 2), u(2, 1);
    v(0, 0) = one;
    v(1, 0) = i;
    v(2, 1) = one;
    v(3, 1) = i;
    u(0, 0) = one;
    u(1, 0) = i;

    return ProblemInstance{validate_form(2, 1, {a1, a2}), validate_subspace(v), validate_subspace(u)};
}

} // namespace torusbundle
