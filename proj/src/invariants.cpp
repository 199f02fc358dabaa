#include "torusbundle/invariants.hpp"

#include "torusbundle/error.hpp"

namespace torusbundle {

namespace {

std::vector<std::pair<int, int>> index_pairs(int m) {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < m; ++p)
        for (int q = p + 1; q < m; ++q) out.emplace_back(p, q);
    return out;
}

// Columns indexed by fiber coordinate j, rows by the flattened m x m grid.
ExactMatrix vectorized_blocks(const std::vector<ExactMatrix>& blocks, int m, int d) {
    ExactMatrix out(m * m, d);
    for (int j = 0; j < d; ++j)
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) out(r * m + c, j) = blocks[static_cast<std::size_t>(j)](r, c);
    return out;
}

// Columns indexed by j, rows by pairs p < q; entry is the (p, q) coefficient
// of the conjugated upper block, i.e. the matrix of conj B' contracted
// against the dual fiber basis.
ExactMatrix packed_conjugate_upper(const BilinearDecomposition& dec) {
    auto pairs = index_pairs(dec.m);
    ExactMatrix out(static_cast<int>(pairs.size()), dec.d);
    for (int j = 0; j < dec.d; ++j) {
        ExactMatrix conj = dec.b_prime[static_cast<std::size_t>(j)].conjugate();
        for (std::size_t row = 0; row < pairs.size(); ++row)
            out(static_cast<int>(row), j) = conj(pairs[row].first, pairs[row].second);
    }
    return out;
}

int matrix_rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rank(m);
}

// Kernel of the pairing (v, x) -> B(v, x) in the first factor: stack the
// transposes of every block so a kernel vector annihilates both the
// holomorphic and the mixed pairing against all fiber coordinates.
ExactMatrix first_factor_kernel(const BilinearDecomposition& dec) {
    std::vector<ExactMatrix> stack;
    stack.reserve(static_cast<std::size_t>(2 * dec.d));
    for (const auto& b : dec.b_prime) stack.push_back(b.transpose());
    for (const auto& b : dec.b_double_prime) stack.push_back(b.transpose());
    return kernel_basis(vstack(stack));
}

} // namespace

CohomologyReport cohomology_invariants(const BilinearDecomposition& dec) {
    if (!check_riemann(dec)) throw PreconditionError("cohomology invariants require the compatibility condition");
    const int m = dec.m;
    const int d = dec.d;
    const auto pairs = index_pairs(m);
    const int npairs = static_cast<int>(pairs.size());

    CohomologyReport rep;
    rep.parallelizable = dec.b_double_prime_is_zero();

    const int rank_mixed = matrix_rank(vectorized_blocks(dec.b_double_prime, m, d));
    rep.h0_omega1 = m + (d - rank_mixed);

    ExactMatrix full = vstack({vectorized_blocks(dec.b_prime, m, d), vectorized_blocks(dec.b_double_prime, m, d)});
    rep.h0_closed_coker = d - matrix_rank(full);

    const ExactMatrix anti = packed_conjugate_upper(dec);
    const int rank_anti = matrix_rank(anti);
    rep.h1_o = m + (d - rank_anti);
    rep.e3_20 = npairs - rank_anti;

    // Wedge of dual fiber vectors against the conjugated pairing: column
    // (j < k) has entries delta_{ak} conjB'_j(p,q) - delta_{aj} conjB'_k(p,q)
    // at row (a, p < q).
    {
        std::vector<std::pair<int, int>> fiber_pairs = index_pairs(d);
        ExactMatrix map(d * npairs, static_cast<int>(fiber_pairs.size()));
        for (std::size_t col = 0; col < fiber_pairs.size(); ++col) {
            const int j = fiber_pairs[col].first;
            const int k = fiber_pairs[col].second;
            for (int row = 0; row < npairs; ++row) {
                map(k * npairs + row, static_cast<int>(col)) += anti(row, j);
                map(j * npairs + row, static_cast<int>(col)) -= anti(row, k);
            }
        }
        rep.e3_02 = static_cast<int>(fiber_pairs.size()) - matrix_rank(map);
    }

    // Wedge against base covectors: column (a, j) has the coefficient
    // w_{pq} delta_{ar} - w_{pr} delta_{aq} + w_{qr} delta_{ap} at the
    // triple p < q < r, with w = conj B'_j.
    {
        std::vector<std::array<int, 3>> triples;
        for (int p = 0; p < m; ++p)
            for (int q = p + 1; q < m; ++q)
                for (int r = q + 1; r < m; ++r) triples.push_back({p, q, r});
        ExactMatrix map(static_cast<int>(triples.size()), m * d);
        for (int a = 0; a < m; ++a)
            for (int j = 0; j < d; ++j) {
                ExactMatrix w = dec.b_prime[static_cast<std::size_t>(j)].conjugate();
                const int col = a * d + j;
                for (std::size_t row = 0; row < triples.size(); ++row) {
                    const auto& t = triples[row];
                    GaussianRational value;
                    if (a == t[2]) value += w(t[0], t[1]);
                    if (a == t[1]) value -= w(t[0], t[2]);
                    if (a == t[0]) value += w(t[1], t[2]);
                    map(static_cast<int>(row), col) = value;
                }
            }
        rep.e3_11 = m * d - matrix_rank(map);
    }

    rep.h2_o = rep.e3_02 + rep.e3_20 + rep.e3_11;
    return rep;
}

ExactMatrix tangent_map_matrix(const BilinearDecomposition& dec) {
    const int m = dec.m;
    const int d = dec.d;
    const auto pairs = index_pairs(m);
    const int npairs = static_cast<int>(pairs.size());
    ExactMatrix g(d * npairs, m * m + d * d);

    // Base directions E_{lk} : V -> conj V perturb the mixed block; the
    // induced change of the compatibility obstruction at (j, p < q) is
    // delta_{kp} conjB''_j(l, q) - delta_{kq} conjB''_j(l, p).
    for (int l = 0; l < m; ++l)
        for (int k = 0; k < m; ++k) {
            const int col = l * m + k;
            for (int j = 0; j < d; ++j) {
                ExactMatrix conj = dec.b_double_prime[static_cast<std::size_t>(j)].conjugate();
                for (int row = 0; row < npairs; ++row) {
                    const auto& [p, q] = pairs[static_cast<std::size_t>(row)];
                    GaussianRational value;
                    if (k == p) value += conj(l, q);
                    if (k == q) value -= conj(l, p);
                    g(j * npairs + row, col) = value;
                }
            }
        }

    // Fiber directions E_{ji} : U -> conj U contribute -delta the
    // holomorphic block itself.
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            const int col = m * m + j * d + i;
            const ExactMatrix& b = dec.b_prime[static_cast<std::size_t>(i)];
            for (int row = 0; row < npairs; ++row) {
                const auto& [p, q] = pairs[static_cast<std::size_t>(row)];
                g(j * npairs + row, col) = -b(p, q);
            }
        }
    return g;
}

std::string to_string(KsCase c) {
    switch (c) {
        case KsCase::I: return "i";
        case KsCase::II: return "ii";
        case KsCase::III: return "iii";
        case KsCase::IV: return "iv";
        case KsCase::None: return "none";
    }
    throw Error("unknown surjectivity case");
}

KsCase ks_case_from_string(const std::string& text) {
    for (KsCase c : {KsCase::I, KsCase::II, KsCase::III, KsCase::IV, KsCase::None})
        if (to_string(c) == text) return c;
    throw MalformedInputError("unknown surjectivity case: " + text);
}

KsAnalysis ks_surjectivity(const BilinearDecomposition& dec) {
    const int d = dec.d;
    KsAnalysis out;
    out.holds[0] = matrix_rank(packed_conjugate_upper(dec)) == d;
    out.holds[1] = d == 1 && !dec.b_prime_is_zero();
    out.holds[2] = d == 1 && first_factor_kernel(dec).cols() == 0;
    {
        // iv: mixed block zero and the holomorphic pairing surjective onto
        // the fiber, i.e. the values B'(e_p, e_q) span all of U.
        auto pairs = index_pairs(dec.m);
        ExactMatrix values(d, static_cast<int>(pairs.size()));
        for (int j = 0; j < d; ++j)
            for (std::size_t c = 0; c < pairs.size(); ++c)
                values(j, static_cast<int>(c)) = dec.b_prime[static_cast<std::size_t>(j)](pairs[c].first, pairs[c].second);
        out.holds[3] = dec.b_double_prime_is_zero() && matrix_rank(values) == d;
    }

    out.reported = KsCase::None;
    for (int i = 0; i < 4; ++i)
        if (out.holds[static_cast<std::size_t>(i)]) {
            out.reported = static_cast<KsCase>(i);
            break;
        }
    // For a one dimensional fiber the injectivity condition collapses to
    // "holomorphic block nonzero", which is the d = 1 case label.
    if (out.reported == KsCase::I && d == 1) out.reported = KsCase::II;
    return out;
}

DeformationReport deformation_invariants(const AlternatingLatticeForm& a, const BilinearDecomposition& dec) {
    if (!check_riemann(dec)) throw PreconditionError("deformation invariants require the compatibility condition");
    DeformationReport rep;
    rep.not_kaehler = !a.is_zero();

    const ExactMatrix g = tangent_map_matrix(dec);
    const int r = matrix_rank(g);
    rep.g_rank = r;
    rep.tangent_dim_tb = dec.m * dec.m + dec.d * dec.d - r;
    rep.tangent_dim_complete = *rep.tangent_dim_tb + dec.m * dec.d;
    rep.smooth = r == g.rows();

    const KsAnalysis ks = ks_surjectivity(dec);
    rep.ks_case = ks.reported;
    rep.ks_log = ks.holds;
    return rep;
}

std::optional<ExactMatrix> degenerate_first_factor(const BilinearDecomposition& dec) {
    if (!check_riemann(dec)) throw PreconditionError("degeneracy test requires the compatibility condition");
    if (dec.d != 1) throw PreconditionError("degeneracy test requires a one dimensional fiber");
    ExactMatrix kernel = first_factor_kernel(dec);
    if (kernel.cols() == 0) return std::nullopt;
    return kernel.col(0);
}

std::pair<bool, bool> kernel_of_f_conditions(
    const BilinearDecomposition& dec, const ExactMatrix& l_map,
    const std::vector<std::pair<ExactMatrix, ExactMatrix>>& tensor) {
    const int m = dec.m;
    const int d = dec.d;
    if (l_map.rows() != m || l_map.cols() != m) throw PreconditionError("direction must be an m x m matrix");

    const ExactMatrix anti = packed_conjugate_upper(dec);
    for (const auto& [v, udual] : tensor) {
        if (v.rows() != m || v.cols() != 1 || udual.rows() != d || udual.cols() != 1)
            throw PreconditionError("tensor factors must be m x 1 and d x 1 columns");
        if (!(anti * udual).is_zero())
            throw PreconditionError("dual fiber vector must annihilate the conjugated pairing");
    }

    const auto pairs = index_pairs(m);
    const int npairs = static_cast<int>(pairs.size());

    // Condition 1: the antisymmetrized composite of the direction with the
    // mixed block lies in the image of conj B' under some fiber map.
    ExactMatrix rhs(npairs, d);
    const ExactMatrix lt = l_map.conjugate().transpose();
    for (int j = 0; j < d; ++j) {
        ExactMatrix composite = lt * dec.b_double_prime[static_cast<std::size_t>(j)];
        ExactMatrix anti_part = composite - composite.transpose();
        for (int row = 0; row < npairs; ++row) rhs(row, j) = anti_part(pairs[static_cast<std::size_t>(row)].first, pairs[static_cast<std::size_t>(row)].second);
    }
    const bool cond1 = solve(anti, rhs).has_value();

    // Condition 2: the contracted tensor sum_i B''(v_i, .) (x) dual-u_i
    // vanishes coefficientwise.
    bool cond2 = true;
    for (int a = 0; a < d && cond2; ++a)
        for (int b = 0; b < m && cond2; ++b)
            for (int j = 0; j < d && cond2; ++j) {
                GaussianRational total;
                for (const auto& [v, udual] : tensor) {
                    ExactMatrix row = v.transpose() * dec.b_double_prime[static_cast<std::size_t>(j)];
                    total += udual(a, 0) * row(0, b);
                }
                if (!total.is_zero()) cond2 = false;
            }
    return {cond1, cond2};
}

} // namespace torusbundle
