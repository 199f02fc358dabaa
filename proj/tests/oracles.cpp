#include "oracles.hpp"

#include "torusbundle/error.hpp"

namespace torusbundle::testing {

namespace {

const GaussianRational kOne(1);
const GaussianRational kI = GaussianRational::i();

void set_pair(ExactMatrix& m, int r, int c, const GaussianRational& value) {
    m(r, c) = value;
    m(c, r) = -value;
}

ExactMatrix iwasawa_a1() {
    ExactMatrix a(4, 4);
    set_pair(a, 0, 2, kOne);
    set_pair(a, 1, 3, -kOne);
    return a;
}

ExactMatrix iwasawa_a2() {
    ExactMatrix a(4, 4);
    set_pair(a, 0, 3, kOne);
    set_pair(a, 1, 2, kOne);
    return a;
}

ExactMatrix embed(const ExactMatrix& small, int n, const std::vector<int>& coords) {
    ExactMatrix out(n, n);
    for (int r = 0; r < small.rows(); ++r)
        for (int c = 0; c < small.cols(); ++c)
            out(coords[static_cast<std::size_t>(r)], coords[static_cast<std::size_t>(c)]) = small(r, c);
    return out;
}

} // namespace

AlternatingLatticeForm iwasawa_form() { return validate_form(2, 1, {iwasawa_a1(), iwasawa_a2()}); }

AlternatingLatticeForm split_form() {
    ExactMatrix a1(4, 4), a2(4, 4);
    set_pair(a1, 0, 1, kOne);
    set_pair(a2, 2, 3, kOne);
    return validate_form(2, 1, {a1, a2});
}

AlternatingLatticeForm block_pencil_form() {
    ExactMatrix a1(4, 4), a2(4, 4);
    set_pair(a1, 0, 2, -kOne);
    set_pair(a1, 1, 3, -kOne);
    set_pair(a2, 0, 3, -kOne);
    set_pair(a2, 1, 2, kOne);
    return validate_form(2, 1, {a1, a2});
}

AlternatingLatticeForm degenerate_pencil_form() {
    ExactMatrix a1(4, 4), a2(4, 4);
    set_pair(a1, 0, 1, kOne);
    set_pair(a2, 0, 2, kOne);
    return validate_form(2, 1, {a1, a2});
}

AlternatingLatticeForm product_m3_form() {
    const std::vector<int> coords{0, 1, 2, 3};
    return validate_form(3, 1, {embed(iwasawa_a1(), 6, coords), embed(iwasawa_a2(), 6, coords)});
}

AlternatingLatticeForm double_heisenberg_form() {
    const std::vector<int> first{0, 1, 2, 3};
    const std::vector<int> second{0, 1, 4, 5};
    return validate_form(3, 2,
                         {embed(iwasawa_a1(), 6, first), embed(iwasawa_a2(), 6, first),
                          embed(iwasawa_a1(), 6, second), embed(iwasawa_a2(), 6, second)});
}

AlternatingLatticeForm rank2_d2_form() {
    ExactMatrix a1(4, 4);
    set_pair(a1, 0, 1, kOne);
    return validate_form(2, 2, {a1, ExactMatrix(4, 4), ExactMatrix(4, 4), ExactMatrix(4, 4)});
}

PeriodSubspace standard_subspace(int n) {
    ExactMatrix basis(2 * n, n);
    for (int k = 0; k < n; ++k) {
        basis(2 * k, k) = kOne;
        basis(2 * k + 1, k) = kI;
    }
    return validate_subspace(basis);
}

PeriodSubspace fiber_line() {
    ExactMatrix basis(2, 1);
    basis(0, 0) = kOne;
    basis(1, 0) = kI;
    return validate_subspace(basis);
}

PeriodSubspace deformed_base() {
    ExactMatrix basis(4, 2);
    basis(0, 0) = kOne;
    basis(1, 0) = kI;
    basis(2, 1) = kOne;
    basis(3, 1) = -kI;
    return validate_subspace(basis);
}

PeriodSubspace violating_base() {
    ExactMatrix basis(4, 2);
    basis(0, 0) = kOne;
    basis(1, 0) = GaussianRational(Rational(0), Rational(2));
    basis(2, 1) = kOne;
    basis(3, 1) = GaussianRational(Rational(0), Rational(-2));
    return validate_subspace(basis);
}

bool OracleCohomology::matches(const CohomologyReport& rep) const {
    return riemann && rep.h0_omega1 == h0_omega1 && rep.h0_closed_coker == h0_closed_coker &&
           rep.h1_o == h1_o && rep.h2_o == h2_o && rep.e3_02 == e3_02 && rep.e3_20 == e3_20 &&
           rep.e3_11 == e3_11 && rep.parallelizable == parallelizable;
}

OracleCohomology brute_force_cohomology(const AlternatingLatticeForm& a, const PeriodSubspace& v,
                                        const PeriodSubspace& u) {
    const int m = v.dim();
    const int d = u.dim();
    const ExactMatrix frame = hstack({u.basis(), u.basis().conjugate()});

    // Fiber coordinates of a value vector, one linear solve per evaluation.
    auto upper = [&](const ExactMatrix& w) {
        auto c = solve(frame, w);
        if (!c) throw Error("fiber frame unexpectedly singular");
        return c->block(0, 0, d, 1);
    };

    std::vector<ExactMatrix> bp(static_cast<std::size_t>(d), ExactMatrix(m, m));
    std::vector<ExactMatrix> bpp(static_cast<std::size_t>(d), ExactMatrix(m, m));
    std::vector<ExactMatrix> obstruction(static_cast<std::size_t>(d), ExactMatrix(m, m));
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const ExactMatrix vp = v.basis().col(p);
            const ExactMatrix vq = v.basis().col(q);
            const ExactMatrix holo = upper(a.value(vp, vq));
            const ExactMatrix mixed = upper(a.value(vp, vq.conjugate()));
            const ExactMatrix anti = upper(a.value(vp.conjugate(), vq.conjugate()));
            for (int j = 0; j < d; ++j) {
                bp[static_cast<std::size_t>(j)](p, q) = holo(j, 0);
                bpp[static_cast<std::size_t>(j)](p, q) = mixed(j, 0);
                obstruction[static_cast<std::size_t>(j)](p, q) = anti(j, 0);
            }
        }

    OracleCohomology out;
    out.riemann = true;
    for (const ExactMatrix& block : obstruction)
        if (!block.is_zero()) out.riemann = false;
    if (!out.riemann) return out;

    out.parallelizable = true;
    for (const ExactMatrix& block : bpp)
        if (!block.is_zero()) out.parallelizable = false;

    auto grid_rank = [&](const std::vector<ExactMatrix>& blocks) {
        ExactMatrix grid(m * m, d);
        for (int j = 0; j < d; ++j)
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) grid(p * m + q, j) = blocks[static_cast<std::size_t>(j)](p, q);
        return grid.cols() == 0 ? 0 : rank(grid);
    };

    std::vector<ExactMatrix> conj_bp;
    conj_bp.reserve(static_cast<std::size_t>(d));
    for (const ExactMatrix& block : bp) conj_bp.push_back(block.conjugate());

    const int rank_mixed = grid_rank(bpp);
    out.h0_omega1 = m + (d - rank_mixed);

    {
        ExactMatrix both(2 * m * m, d);
        for (int j = 0; j < d; ++j)
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) {
                    both(p * m + q, j) = bp[static_cast<std::size_t>(j)](p, q);
                    both(m * m + p * m + q, j) = bpp[static_cast<std::size_t>(j)](p, q);
                }
        out.h0_closed_coker = d - (both.cols() == 0 ? 0 : rank(both));
    }

    const int rank_holo = grid_rank(conj_bp);
    out.h1_o = m + (d - rank_holo);
    out.e3_20 = m * (m - 1) / 2 - rank_holo;

    {
        // Fiber-wedge map over the full (a, p, q) grid, one column per j < k.
        const int ncols = d * (d - 1) / 2;
        ExactMatrix map(d * m * m, ncols > 0 ? ncols : 0);
        int col = 0;
        for (int j = 0; j < d; ++j)
            for (int k = j + 1; k < d; ++k, ++col)
                for (int aa = 0; aa < d; ++aa)
                    for (int p = 0; p < m; ++p)
                        for (int q = 0; q < m; ++q) {
                            GaussianRational value;
                            if (aa == k) value += conj_bp[static_cast<std::size_t>(j)](p, q);
                            if (aa == j) value -= conj_bp[static_cast<std::size_t>(k)](p, q);
                            map((aa * m + p) * m + q, col) = value;
                        }
        out.e3_02 = ncols - (map.cols() == 0 || map.rows() == 0 ? 0 : rank(map));
    }

    {
        // Base-wedge map over the full ordered-triple grid, columns (a, j).
        ExactMatrix map(m * m * m, m * d);
        for (int aa = 0; aa < m; ++aa)
            for (int j = 0; j < d; ++j) {
                const ExactMatrix& w = conj_bp[static_cast<std::size_t>(j)];
                const int col = aa * d + j;
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q)
                        for (int r = 0; r < m; ++r) {
                            GaussianRational value;
                            if (aa == r) value += w(p, q);
                            if (aa == q) value -= w(p, r);
                            if (aa == p) value += w(q, r);
                            map((p * m + q) * m + r, col) = value;
                        }
            }
        out.e3_11 = m * d - rank(map);
    }

    out.h2_o = out.e3_02 + out.e3_20 + out.e3_11;
    return out;
}

} // namespace torusbundle::testing
