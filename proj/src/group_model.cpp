#include "torusbundle/group_model.hpp"

#include "torusbundle/error.hpp"

namespace torusbundle {

GroupElement::GroupElement(ExactMatrix y_in, ExactMatrix x_in) : y(std::move(y_in)), x(std::move(x_in)) {
    if (y.cols() != 1 || x.cols() != 1 || y.rows() % 2 != 0 || x.rows() % 2 != 0)
        throw PreconditionError("group element components must be even-length columns");
    if (!y.is_real() || !x.is_real()) throw PreconditionError("group element components must be real");
}

GroupElement group_identity(int m, int d) {
    return GroupElement(ExactMatrix(2 * d, 1), ExactMatrix(2 * m, 1));
}

GroupElement group_multiply(const TriangularSplitting& split, const GroupElement& g, const GroupElement& h) {
    return GroupElement(g.y + h.y + split.tminus_value(g.x, h.x), g.x + h.x);
}

GroupElement group_inverse(const TriangularSplitting& split, const GroupElement& g) {
    return GroupElement(-g.y - split.s_value(g.x, g.x) * GaussianRational(2), -g.x);
}

GroupElement lattice_action(const AlternatingLatticeForm& a, const TriangularSplitting& split,
                            const GroupElement& g, const ExactMatrix& gamma) {
    if (!gamma.is_integral()) throw PreconditionError("lattice action requires an integral vector");
    ExactMatrix shift = a.value(g.x, gamma) + split.s_value(gamma, gamma) * GaussianRational(2);
    return GroupElement(g.y + shift, g.x + gamma);
}

GroupElement normalized_multiply(const AlternatingLatticeForm& a, const GroupElement& g,
                                 const GroupElement& h) {
    return GroupElement(g.y + h.y + a.value(g.x, h.x), g.x + h.x);
}

ExactMatrix t10_fiber(const AlternatingLatticeForm& a, const PeriodSubspace& v, const PeriodSubspace& u,
                      const GroupElement& g) {
    const int m = a.m();
    const int d = a.d();
    if (v.dim() != m || u.dim() != d) throw PreconditionError("subspace dimensions do not match the form");
    ExactMatrix basis(2 * d + 2 * m, d + m);
    for (int j = 0; j < d; ++j)
        for (int r = 0; r < 2 * d; ++r) basis(r, j) = u.basis()(r, j);
    for (int i = 0; i < m; ++i) {
        ExactMatrix vi = v.basis().col(i);
        ExactMatrix top = a.value(vi, g.x);
        for (int r = 0; r < 2 * d; ++r) basis(r, d + i) = top(r, 0);
        for (int r = 0; r < 2 * m; ++r) basis(2 * d + r, d + i) = vi(r, 0);
    }
    return basis;
}

namespace {

void split_tangent(int d2, int m2, const ExactMatrix& tangent, ExactMatrix& dy, ExactMatrix& dx) {
    if (tangent.rows() != d2 + m2) throw PreconditionError("tangent columns must have 2d + 2m rows");
    dy = tangent.block(0, 0, d2, tangent.cols());
    dx = tangent.block(d2, 0, m2, tangent.cols());
}

} // namespace

ExactMatrix right_translation_pushforward(const AlternatingLatticeForm& a, const GroupElement& h,
                                          const ExactMatrix& tangent) {
    ExactMatrix dy, dx;
    split_tangent(a.value_rank(), a.domain_rank(), tangent, dy, dx);
    ExactMatrix out(tangent.rows(), tangent.cols());
    for (int c = 0; c < tangent.cols(); ++c) {
        ExactMatrix shifted = dy.col(c) + a.value(dx.col(c), h.x);
        for (int r = 0; r < a.value_rank(); ++r) out(r, c) = shifted(r, 0);
        for (int r = 0; r < a.domain_rank(); ++r) out(a.value_rank() + r, c) = dx(r, c);
    }
    return out;
}

ExactMatrix inversion_pushforward(const TriangularSplitting& split, const GroupElement& g,
                                  const ExactMatrix& tangent) {
    ExactMatrix dy, dx;
    split_tangent(2 * split.d, 2 * split.m, tangent, dy, dx);
    ExactMatrix out(tangent.rows(), tangent.cols());
    for (int c = 0; c < tangent.cols(); ++c) {
        ExactMatrix top = -dy.col(c) - split.s_value(g.x, dx.col(c)) * GaussianRational(4);
        for (int r = 0; r < 2 * split.d; ++r) out(r, c) = top(r, 0);
        for (int r = 0; r < 2 * split.m; ++r) out(2 * split.d + r, c) = -dx(r, c);
    }
    return out;
}

bool inversion_holomorphic_at(const AlternatingLatticeForm& a, const TriangularSplitting& split,
                              const PeriodSubspace& v, const PeriodSubspace& u, const GroupElement& g) {
    for (int i = 0; i < v.dim(); ++i) {
        ExactMatrix vi = v.basis().col(i);
        ExactMatrix w = a.value(vi, g.x) * GaussianRational(2) + split.s_value(g.x, vi) * GaussianRational(4);
        if (!contains_columns(u.basis(), w)) return false;
    }
    return true;
}

namespace {

// Column of values x_V^T B''_j conj(x_V) over the d mixed blocks.
ExactMatrix mixed_quadratic(const BilinearDecomposition& dec, const ExactMatrix& v) {
    return dec.eval_b_double_prime(v, v.conjugate());
}

void require_compatible(const BilinearDecomposition& dec) {
    if (!check_riemann(dec))
        throw PreconditionError("trivialization requires the compatibility condition to hold");
}

} // namespace

std::pair<ExactMatrix, ExactMatrix> trivialization_psi(const BilinearDecomposition& dec,
                                                       const GroupElement& g) {
    require_compatible(dec);
    ExactMatrix v = dec.base_frame.project(g.x);
    ExactMatrix u = dec.fiber_frame.project(g.y) + mixed_quadratic(dec, v);
    return {std::move(u), std::move(v)};
}

GroupElement trivialization_psi_inverse(const BilinearDecomposition& dec, const ExactMatrix& u,
                                        const ExactMatrix& v) {
    require_compatible(dec);
    if (u.rows() != dec.d || u.cols() != 1 || v.rows() != dec.m || v.cols() != 1)
        throw PreconditionError("fiber coordinates must be d x 1 and m x 1 columns");
    ExactMatrix c = u - mixed_quadratic(dec, v);
    ExactMatrix y = dec.fiber_frame.assemble(c, c.conjugate());
    ExactMatrix x = dec.base_frame.assemble(v, v.conjugate());
    return GroupElement(std::move(y), std::move(x));
}

std::pair<ExactMatrix, ExactMatrix> conjugated_right_action(const BilinearDecomposition& dec,
                                                            const AlternatingLatticeForm& a,
                                                            const GroupElement& g, const ExactMatrix& u,
                                                            const ExactMatrix& v) {
    GroupElement h = trivialization_psi_inverse(dec, u, v);
    return trivialization_psi(dec, normalized_multiply(a, h, g));
}

std::pair<ExactMatrix, ExactMatrix> cocycle_right_action(const BilinearDecomposition& dec,
                                                         const GroupElement& g, const ExactMatrix& u,
                                                         const ExactMatrix& v) {
    require_compatible(dec);
    ExactMatrix fiber_shift = dec.fiber_frame.project(g.y) + cocycle(dec, g.x, v);
    return {u + fiber_shift, v + dec.base_frame.project(g.x)};
}

} // namespace torusbundle
