#include "torusbundle/sampling.hpp"

#include "torusbundle/error.hpp"

namespace torusbundle {

long long Sampler::integer(long long lo, long long hi) {
    if (lo > hi) throw PreconditionError("empty sampling range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(eng_() % span);
}

Rational Sampler::rational(int num_bound, int den_bound) {
    return Rational(Int(integer(-num_bound, num_bound)), Int(integer(1, den_bound)));
}

GaussianRational Sampler::gaussian(int num_bound, int den_bound) {
    Rational re = rational(num_bound, den_bound);
    Rational im = rational(num_bound, den_bound);
    return {std::move(re), std::move(im)};
}

ExactMatrix Sampler::real_matrix(int rows, int cols, int num_bound, int den_bound) {
    ExactMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = GaussianRational(rational(num_bound, den_bound));
    return m;
}

ExactMatrix Sampler::complex_matrix(int rows, int cols, int num_bound, int den_bound) {
    ExactMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = gaussian(num_bound, den_bound);
    return m;
}

ExactMatrix Sampler::integral_column(int n, int bound) {
    ExactMatrix m(n, 1);
    for (int r = 0; r < n; ++r) m(r, 0) = GaussianRational(static_cast<int>(integer(-bound, bound)));
    return m;
}

AlternatingLatticeForm Sampler::form(int m, int d, int bound, bool nonzero) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<ExactMatrix> components;
        components.reserve(static_cast<std::size_t>(2 * d));
        bool any = false;
        for (int k = 0; k < 2 * d; ++k) {
            ExactMatrix c(2 * m, 2 * m);
            for (int r = 0; r < 2 * m; ++r)
                for (int col = r + 1; col < 2 * m; ++col) {
                    const auto v = static_cast<int>(integer(-bound, bound));
                    if (v != 0) any = true;
                    c(r, col) = GaussianRational(v);
                    c(col, r) = GaussianRational(-v);
                }
            components.push_back(std::move(c));
        }
        if (nonzero && !any) continue;
        return validate_form(m, d, std::move(components));
    }
    throw Error("form sampling failed to produce a nonzero form");
}

PeriodSubspace Sampler::subspace(int n, int num_bound, int den_bound) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        try {
            return validate_subspace(complex_matrix(2 * n, n, num_bound, den_bound));
        } catch (const Error&) {
            // degenerate draw; resample
        }
    }
    throw Error("subspace sampling failed");
}

GroupElement Sampler::element(int m, int d, int num_bound, int den_bound) {
    return {real_matrix(2 * d, 1, num_bound, den_bound), real_matrix(2 * m, 1, num_bound, den_bound)};
}

ExactMatrix Sampler::unimodular(int n, int moves, int bound) {
    ExactMatrix m = ExactMatrix::identity(n);
    if (n < 2) return m;
    for (int step = 0; step < moves; ++step) {
        const int kind = static_cast<int>(integer(0, 2));
        int r = static_cast<int>(integer(0, n - 1));
        int c = static_cast<int>(integer(0, n - 2));
        if (c >= r) ++c;  // distinct pair
        if (kind == 0) {
            // add an integer multiple of row c to row r
            const GaussianRational factor(static_cast<int>(integer(-bound, bound)));
            for (int j = 0; j < n; ++j) m(r, j) += factor * m(c, j);
        } else if (kind == 1) {
            for (int j = 0; j < n; ++j) std::swap(m(r, j), m(c, j));
        } else {
            for (int j = 0; j < n; ++j) m(r, j) = -m(r, j);
        }
    }
    return m;
}

std::optional<std::pair<PeriodSubspace, PeriodSubspace>> find_structure_witness(
    const AlternatingLatticeForm& a, Sampler& sampler, int attempts) {
    if (a.m() != 2 || a.d() != 1)
        throw PreconditionError("witness search is supported for m = 2, d = 1 only");
    for (int attempt = 0; attempt < attempts; ++attempt) {
        PeriodSubspace v = sampler.subspace(2, 3, 2);
        ExactMatrix w = a.value(v.basis().col(0), v.basis().col(1));
        if (w.is_zero()) {
            // any valid fiber subspace is compatible
            return std::make_pair(std::move(v), sampler.subspace(1, 3, 2));
        }
        ExactMatrix frame = hstack({w, w.conjugate()});
        if (determinant(frame).is_zero()) continue;  // no valid line contains the value
        return std::make_pair(std::move(v), validate_subspace(w));
    }
    return std::nullopt;
}

} // namespace torusbundle
