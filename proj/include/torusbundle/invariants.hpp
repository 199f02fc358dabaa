// invariants.hpp — cohomological dimensions of the bundle attached to a
// decomposition, the linearized compatibility map G with its rank data,
// and the surjectivity case analysis for the deformation family.
#pragma once

#include "torusbundle/decomposition.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torusbundle {

struct CohomologyReport {
    int h0_omega1 = 0;        // m + cokernel dim of the mixed block
    int h0_closed_coker = 0;  // annihilator dim of the full (B', B'') image
    int h1_o = 0;             // m + dim Ker(conj B' : dual U-bar -> 2-forms)
    int h2_o = 0;             // e3_02 + e3_20 + e3_11
    int e3_02 = 0;
    int e3_20 = 0;
    int e3_11 = 0;
    bool parallelizable = false;  // mixed block vanishes

    bool operator==(const CohomologyReport&) const = default;
};

/** All cohomology dimensions; requires the compatibility condition. */
CohomologyReport cohomology_invariants(const BilinearDecomposition& dec);

/**
 * Matrix of the linearization G of the compatibility condition at the
 * decomposition's structures: Hom(V, conj V) + Hom(U, conj U), dimension
 * m^2 + d^2, mapping to Hom(Lambda^2 V, U), dimension d m(m-1)/2.
 * Rows are indexed by (fiber coordinate j, pair p < q), columns first by
 * the m^2 base directions E_{lk} then the d^2 fiber directions E_{ji}.
 */
ExactMatrix tangent_map_matrix(const BilinearDecomposition& dec);

enum class KsCase { I, II, III, IV, None };

std::string to_string(KsCase c);

/** Inverse of to_string; throws MalformedInputError on unknown text. */
KsCase ks_case_from_string(const std::string& text);

/** Which of the four surjectivity conditions hold, plus the reported one. */
struct KsAnalysis {
    std::array<bool, 4> holds{};  // conditions i..iv
    KsCase reported = KsCase::None;
};

/**
 * Evaluates all four sufficient conditions:
 *   i)  Ker(conj B' : dual U-bar -> 2-forms on conj V) = 0
 *   ii) d = 1 and B' nonzero
 *   iii) d = 1 and no nonzero v in V annihilates the whole form
 *   iv) mixed block zero and B' surjective onto U
 * Reports the first satisfied; for d = 1 conditions i and ii coincide and
 * the d = 1 label ii is used.
 */
KsAnalysis ks_surjectivity(const BilinearDecomposition& dec);

struct DeformationReport {
    std::optional<int> g_rank;
    std::optional<int> tangent_dim_tb;        // m^2 + d^2 - g_rank
    std::optional<int> tangent_dim_complete;  // tangent_dim_tb + m*d
    std::optional<bool> smooth;               // G surjective
    std::optional<KsCase> ks_case;
    std::optional<std::array<bool, 4>> ks_log;
    bool not_kaehler = false;  // form nonzero

    bool operator==(const DeformationReport&) const = default;
};

/** Full deformation data; requires the compatibility condition. */
DeformationReport deformation_invariants(const AlternatingLatticeForm& a, const BilinearDecomposition& dec);

/**
 * A nonzero v in V (coordinates, m x 1) with B(v, .) identically zero on
 * the complexified domain, or nullopt when the pairing is nondegenerate in
 * the first factor.  Requires d = 1.
 */
std::optional<ExactMatrix> degenerate_first_factor(const BilinearDecomposition& dec);

/**
 * The two membership conditions cutting out the kernel of the coboundary
 * pairing, for a direction L : V -> conj V (m x m matrix) and a tensor
 * sum_i v_i (x) dual-u_i with each dual vector (d x 1) annihilating conj B':
 *   1) solvability of B''(conj L) = Mbar . conj B' for some d x d Mbar
 *   2) vanishing of sum_i B''(v_i, .) (x) dual-u_i
 * Throws PreconditionError when a dual vector is not in Ker(conj B').
 */
std::pair<bool, bool> kernel_of_f_conditions(
    const BilinearDecomposition& dec, const ExactMatrix& l_map,
    const std::vector<std::pair<ExactMatrix, ExactMatrix>>& tensor);

} // namespace torusbundle
