#include "torusbundle/lattice_form.hpp"

#include "torusbundle/error.hpp"

#include <utility>

namespace torusbundle {

AlternatingLatticeForm::AlternatingLatticeForm(int m, int d, std::vector<ExactMatrix> components)
    : m_(m), d_(d), components_(std::move(components)) {
    if (m_ < 1 || d_ < 1) throw MalformedInputError("form ranks must be positive");
    if (static_cast<int>(components_.size()) != 2 * d_)
        throw MalformedInputError("form must have exactly 2d component matrices");
    for (const auto& c : components_)
        if (c.rows() != 2 * m_ || c.cols() != 2 * m_)
            throw MalformedInputError("form component matrices must be 2m x 2m");
}

ExactMatrix AlternatingLatticeForm::value(const ExactMatrix& x, const ExactMatrix& y) const {
    if (x.rows() != 2 * m_ || x.cols() != 1 || y.rows() != 2 * m_ || y.cols() != 1)
        throw PreconditionError("form arguments must be 2m x 1 columns");
    ExactMatrix out(2 * d_, 1);
    for (int k = 0; k < 2 * d_; ++k) out(k, 0) = (x.transpose() * component(k) * y)(0, 0);
    return out;
}

bool AlternatingLatticeForm::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

AlternatingLatticeForm validate_form(int m, int d, std::vector<ExactMatrix> components) {
    AlternatingLatticeForm a(m, d, std::move(components));
    for (int k = 0; k < 2 * d; ++k) {
        const ExactMatrix& c = a.component(k);
        if (!c.is_integral())
            throw MalformedInputError("form component " + std::to_string(k) + " has a non-integer entry");
        if (!c.is_antisymmetric())
            throw MalformedInputError("form component " + std::to_string(k) + " is not alternating");
    }
    return a;
}

ExactMatrix kernel_of_form(const AlternatingLatticeForm& a) {
    // x is in the kernel iff A_k x = 0 for every component k.
    std::vector<ExactMatrix> stacked;
    stacked.reserve(a.components().size());
    for (const auto& c : a.components()) stacked.push_back(c);
    return kernel_basis(vstack(stacked));
}

int image_dimension(const AlternatingLatticeForm& a) {
    // The value span is spanned by the vectors A(e_r, e_c) over basis pairs.
    const int n = a.domain_rank();
    ExactMatrix values(a.value_rank(), n * (n - 1) / 2);
    int col = 0;
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
            for (int k = 0; k < a.value_rank(); ++k) values(k, col) = a.component(k)(r, c);
            ++col;
        }
    return rank(values);
}

ExactMatrix TriangularSplitting::tminus_value(const ExactMatrix& x, const ExactMatrix& y) const {
    ExactMatrix out(2 * d, 1);
    for (int k = 0; k < 2 * d; ++k) out(k, 0) = (x.transpose() * tminus[static_cast<std::size_t>(k)] * y)(0, 0);
    return out;
}

ExactMatrix TriangularSplitting::s_value(const ExactMatrix& x, const ExactMatrix& y) const {
    ExactMatrix out(2 * d, 1);
    for (int k = 0; k < 2 * d; ++k) out(k, 0) = (x.transpose() * s[static_cast<std::size_t>(k)] * y)(0, 0);
    return out;
}

TriangularSplitting triangular_splitting(const AlternatingLatticeForm& a) {
    TriangularSplitting split;
    split.m = a.m();
    split.d = a.d();
    const GaussianRational quarter{Rational(-1, 4)};
    const GaussianRational half{Rational(1, 2)};
    for (const auto& c : a.components()) {
        ExactMatrix t(c.rows(), c.cols());
        for (int r = 0; r < c.rows(); ++r)
            for (int col = 0; col < r; ++col) t(r, col) = c(r, col);
        ExactMatrix sym = (t + t.transpose()) * quarter;
        // Identity T + 2S = A/2 ties the two pieces to the form.
        if (t + sym * GaussianRational(2) != c * half)
            throw PreconditionError("triangular splitting reconstruction failed");
        split.s.push_back(std::move(sym));
        split.tminus.push_back(std::move(t));
    }
    return split;
}

std::string to_string(PencilVerdict v) {
    switch (v) {
        case PencilVerdict::RealPoint: return "real-point";
        case PencilVerdict::ComplexConjugatePointsOnly: return "complex-conjugate-points-only";
        case PencilVerdict::IdenticallyZero: return "identically-zero";
        case PencilVerdict::Undecided: return "undecided";
    }
    return "undecided";
}

PencilVerdict pencil_verdict_from_string(const std::string& text) {
    for (PencilVerdict v : {PencilVerdict::RealPoint, PencilVerdict::ComplexConjugatePointsOnly,
                            PencilVerdict::IdenticallyZero, PencilVerdict::Undecided})
        if (to_string(v) == text) return v;
    throw MalformedInputError("unknown pencil verdict: " + text);
}

namespace {

// Pfaffian of a 4x4 alternating matrix with polynomial entries:
// m12 m34 - m13 m24 + m14 m23.
MultiPoly pfaffian4(const std::vector<std::vector<MultiPoly>>& m) {
    return m[0][1] * m[2][3] - m[0][2] * m[1][3] + m[0][3] * m[1][2];
}

} // namespace

PfaffianPencilReport pfaffian_pencil(const AlternatingLatticeForm& a) {
    if (a.m() != 2 || a.d() != 1)
        throw PreconditionError("pfaffian pencil is defined only for m = 2, d = 1");
    const int nvars = 2;
    MultiPoly mu1 = MultiPoly::variable(nvars, 0);
    MultiPoly mu2 = MultiPoly::variable(nvars, 1);
    std::vector<std::vector<MultiPoly>> entries(4, std::vector<MultiPoly>(4, MultiPoly(nvars)));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                mu1 * MultiPoly::constant(nvars, a.component(0)(r, c)) +
                mu2 * MultiPoly::constant(nvars, a.component(1)(r, c));

    PfaffianPencilReport report;
    report.form = pfaffian4(entries);

    auto coeff = [&](int e1, int e2) {
        GaussianRational c = report.form.coefficient({e1, e2});
        return c.re();  // integral inputs give real coefficients
    };
    Rational c20 = coeff(2, 0);
    Rational c11 = coeff(1, 1);
    Rational c02 = coeff(0, 2);
    // Normalize the reported form so its first nonzero coefficient in the
    // order mu1^2, mu1*mu2, mu2^2 is positive.  The zero set
    // and the discriminant sign are unchanged.
    int lead = sign(c20) != 0 ? sign(c20) : (sign(c11) != 0 ? sign(c11) : sign(c02));
    if (lead < 0) {
        report.form = -report.form;
        c20 = -c20;
        c11 = -c11;
        c02 = -c02;
    }
    report.coefficients = {c20, c11, c02};
    report.discriminant = c11 * c11 - 4 * c20 * c02;

    if (c20 == 0 && c11 == 0 && c02 == 0) {
        report.verdict = PencilVerdict::IdenticallyZero;
    } else if (report.discriminant >= 0) {
        report.verdict = PencilVerdict::RealPoint;
    } else {
        report.verdict = PencilVerdict::ComplexConjugatePointsOnly;
    }
    return report;
}

} // namespace torusbundle
