// classify.hpp — a problem instance (form plus optional period data), the
// full classification pipeline over it, and the built-in flagship instance.
#pragma once

#include "torusbundle/decomposition.hpp"
#include "torusbundle/invariants.hpp"
#include "torusbundle/lattice_form.hpp"
#include "torusbundle/period.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusbundle {

/** A validated form, optionally with validated base/fiber period data. */
struct ProblemInstance {
    AlternatingLatticeForm form;
    std::optional<PeriodSubspace> v;  // base side, dimension m
    std::optional<PeriodSubspace> u;  // fiber side, dimension d
};

enum class MainVerdict {
    ConnectedComponent,  // the family fills a connected component of moduli
    CriterionFails,      // applicable size, but some condition fails
    NotApplicable,       // zero form or size other than m = 2, d = 1
};

std::string to_string(MainVerdict v);

/** Inverse of to_string; throws MalformedInputError on unknown text. */
MainVerdict main_verdict_from_string(const std::string& text);

struct ClassificationReport {
    int m = 0;
    int d = 0;
    int kernel_dim = 0;  // dimension of the common kernel of the form
    int image_dim = 0;   // dimension of the span of its values
    std::optional<bool> riemann_ok;
    std::optional<CohomologyReport> cohomology;
    DeformationReport deformation;
    std::optional<PfaffianPencilReport> pencil;  // only for m = 2, d = 1
    MainVerdict main_theorem_verdict = MainVerdict::NotApplicable;
    std::vector<std::string> warnings;

    bool operator==(const ClassificationReport&) const = default;
};

/**
 * Runs every analysis the instance supports: form-level kernel/image and
 * (for m = 2, d = 1) the Pfaffian pencil always; decomposition-level
 * cohomology and deformation data when period data is present and the
 * compatibility condition holds.  The final verdict depends on the form
 * alone: for a nonzero form of size m = 2, d = 1 it is
 * "connected-component" exactly when the kernel is trivial, the image has
 * dimension 2, and the pencil has a real zero.
 */
ClassificationReport classify(const ProblemInstance& inst);

/**
 * The Iwasawa manifold as a bundle instance: m = 2, d = 1, the commutator
 * form of the complex Heisenberg lattice in real coordinates, with the
 * standard base and fiber period subspaces.
 */
ProblemInstance build_iwasawa();

} // namespace torusbundle
