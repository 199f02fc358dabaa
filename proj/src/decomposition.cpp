#include "torusbundle/decomposition.hpp"

#include "torusbundle/error.hpp"

#include <utility>

namespace torusbundle {

namespace {

// Matrix of the j-th fiber coordinate of the form in the base frame:
// M_j = P^T (sum_k Qinv(j, k) A_k) P.
ExactMatrix coordinate_matrix(const AlternatingLatticeForm& a, const ExactMatrix& p,
                              const ExactMatrix& qinv, int j) {
    ExactMatrix c(a.domain_rank(), a.domain_rank());
    for (int k = 0; k < a.value_rank(); ++k) {
        const GaussianRational& w = qinv(j, k);
        if (w.is_zero()) continue;
        c += a.component(k) * w;
    }
    return p.transpose() * c * p;
}

} // namespace

ExactMatrix BilinearDecomposition::eval_b_prime(const ExactMatrix& v, const ExactMatrix& w) const {
    ExactMatrix out(d, 1);
    for (int j = 0; j < d; ++j) out(j, 0) = (v.transpose() * b_prime[static_cast<std::size_t>(j)] * w)(0, 0);
    return out;
}

ExactMatrix BilinearDecomposition::eval_b_double_prime(const ExactMatrix& v, const ExactMatrix& wbar) const {
    ExactMatrix out(d, 1);
    for (int j = 0; j < d; ++j)
        out(j, 0) = (v.transpose() * b_double_prime[static_cast<std::size_t>(j)] * wbar)(0, 0);
    return out;
}

bool BilinearDecomposition::b_prime_is_zero() const {
    for (const auto& b : b_prime)
        if (!b.is_zero()) return false;
    return true;
}

bool BilinearDecomposition::b_double_prime_is_zero() const {
    for (const auto& b : b_double_prime)
        if (!b.is_zero()) return false;
    return true;
}

BilinearDecomposition decompose(const AlternatingLatticeForm& a, const PeriodSubspace& v,
                                const PeriodSubspace& u) {
    if (v.dim() != a.m() || v.ambient_rank() != a.domain_rank())
        throw PreconditionError("base subspace dimension does not match the form");
    if (u.dim() != a.d() || u.ambient_rank() != a.value_rank())
        throw PreconditionError("fiber subspace dimension does not match the form");
    const int m = a.m();
    const int d = a.d();
    SplittingFrame base(v);
    SplittingFrame fiber(u);
    std::vector<ExactMatrix> b_prime, b_double_prime, obstruction;
    b_prime.reserve(static_cast<std::size_t>(d));
    b_double_prime.reserve(static_cast<std::size_t>(d));
    obstruction.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        ExactMatrix mj = coordinate_matrix(a, base.frame(), fiber.frame_inverse(), j);
        b_prime.push_back(mj.block(0, 0, m, m));
        b_double_prime.push_back(mj.block(0, m, m, m));
        obstruction.push_back(mj.block(m, m, m, m));
    }
    return BilinearDecomposition{m,
                                 d,
                                 std::move(b_prime),
                                 std::move(b_double_prime),
                                 std::move(obstruction),
                                 std::move(base),
                                 std::move(fiber)};
}

bool check_riemann(const BilinearDecomposition& dec) {
    for (const auto& o : dec.obstruction)
        if (!o.is_zero()) return false;
    return true;
}

bool bracket_closure_oracle(const AlternatingLatticeForm& a, const PeriodSubspace& v,
                            const PeriodSubspace& u) {
    for (int i = 0; i < v.dim(); ++i)
        for (int j = i + 1; j < v.dim(); ++j) {
            ExactMatrix value = a.value(v.basis().col(i), v.basis().col(j));
            if (!contains_columns(u.basis(), value)) return false;
        }
    return true;
}

bool HermitianSystem::is_zero() const {
    for (const auto& m : d)
        if (!m.is_zero()) return false;
    return true;
}

HermitianSystem hermitian_system(const AlternatingLatticeForm& a, const PeriodSubspace& v) {
    if (v.dim() != a.m() || v.ambient_rank() != a.domain_rank())
        throw PreconditionError("subspace dimension does not match the form");
    HermitianSystem h;
    const ExactMatrix vt = v.basis().transpose();
    const ExactMatrix vbar = v.basis().conjugate();
    for (int k = 0; k < a.value_rank(); ++k)
        h.d.push_back(GaussianRational::i() * (vt * a.component(k) * vbar));
    return h;
}

namespace {

MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m, std::vector<int> cols, int row,
                           int nvars) {
    if (cols.empty()) return MultiPoly::constant(nvars, GaussianRational(1));
    MultiPoly det(nvars);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) rest.push_back(cols[t]);
        MultiPoly minor = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[k])] *
                          poly_determinant(m, rest, row + 1, nvars);
        if (k % 2 == 1) minor = -minor;
        det += minor;
    }
    return det;
}

} // namespace

MultiPoly discriminant_form(const HermitianSystem& h) {
    if (h.d.empty()) throw PreconditionError("empty Hermitian system");
    const int nvars = static_cast<int>(h.d.size());
    const int m = h.d.front().rows();
    std::vector<std::vector<MultiPoly>> entries(
        static_cast<std::size_t>(m), std::vector<MultiPoly>(static_cast<std::size_t>(m), MultiPoly(nvars)));
    for (int k = 0; k < nvars; ++k)
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] +=
                    MultiPoly::variable(nvars, k) *
                    MultiPoly::constant(nvars, h.d[static_cast<std::size_t>(k)](r, c));
    std::vector<int> cols(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) cols[static_cast<std::size_t>(c)] = c;
    return poly_determinant(entries, cols, 0, nvars);
}

ExactMatrix cocycle(const BilinearDecomposition& dec, const ExactMatrix& gamma, const ExactMatrix& v) {
    if (gamma.rows() != 2 * dec.m || gamma.cols() != 1)
        throw PreconditionError("cocycle lattice argument must be a 2m x 1 column");
    if (!gamma.is_real()) throw PreconditionError("cocycle lattice argument must be real");
    if (v.rows() != dec.m || v.cols() != 1)
        throw PreconditionError("cocycle fiber argument must be an m x 1 column");
    const ExactMatrix w = dec.base_frame.project(gamma);
    const ExactMatrix wbar = dec.base_frame.project_conj(gamma);
    ExactMatrix out = dec.eval_b_prime(v, w);
    out += dec.eval_b_double_prime(v, wbar) * GaussianRational(2);
    out += dec.eval_b_double_prime(w, wbar);
    return out;
}

bool cocycle_defect_is_integral(const BilinearDecomposition& dec, const ExactMatrix& gamma,
                                const ExactMatrix& delta, const ExactMatrix& v) {
    if (!gamma.is_integral() || !delta.is_integral())
        throw PreconditionError("cocycle defect requires integral lattice vectors");
    ExactMatrix shifted = v + dec.base_frame.project(delta);
    ExactMatrix defect =
        cocycle(dec, gamma + delta, v) - cocycle(dec, gamma, shifted) - cocycle(dec, delta, v);
    // Lift the U-coordinates back to the real value lattice and test integrality.
    ExactMatrix lattice_vector = dec.fiber_frame.frame() * vstack({defect, defect.conjugate()});
    return lattice_vector.is_integral();
}

std::vector<ExactMatrix> reassemble_components(const BilinearDecomposition& dec) {
    const int m = dec.m;
    const int d = dec.d;
    // Coordinate matrices for all 2d fiber coordinates; the conjugate half
    // is determined by swapping frame halves and conjugating.
    std::vector<ExactMatrix> mj;
    mj.reserve(static_cast<std::size_t>(2 * d));
    for (int j = 0; j < d; ++j) {
        const ExactMatrix& bp = dec.b_prime[static_cast<std::size_t>(j)];
        const ExactMatrix& bpp = dec.b_double_prime[static_cast<std::size_t>(j)];
        const ExactMatrix& ob = dec.obstruction[static_cast<std::size_t>(j)];
        mj.push_back(vstack({hstack({bp, bpp}), hstack({-bpp.transpose(), ob})}));
    }
    for (int j = 0; j < d; ++j) {
        const ExactMatrix& bp = dec.b_prime[static_cast<std::size_t>(j)];
        const ExactMatrix& bpp = dec.b_double_prime[static_cast<std::size_t>(j)];
        const ExactMatrix& ob = dec.obstruction[static_cast<std::size_t>(j)];
        mj.push_back(vstack({hstack({ob.conjugate(), -bpp.adjoint()}),
                             hstack({bpp.conjugate(), bp.conjugate()})}));
    }
    const ExactMatrix pinv = dec.base_frame.frame_inverse();
    const ExactMatrix pinv_t = pinv.transpose();
    const ExactMatrix& q = dec.fiber_frame.frame();
    std::vector<ExactMatrix> components;
    components.reserve(static_cast<std::size_t>(2 * d));
    for (int k = 0; k < 2 * d; ++k) {
        ExactMatrix ak(2 * m, 2 * m);
        for (int j = 0; j < 2 * d; ++j) {
            const GaussianRational& w = q(k, j);
            if (w.is_zero()) continue;
            ak += (pinv_t * mj[static_cast<std::size_t>(j)] * pinv) * w;
        }
        components.push_back(std::move(ak));
    }
    return components;
}

} // namespace torusbundle
