#include "torusbundle/matrix.hpp"

#include "torusbundle/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <utility>

namespace torusbundle {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw PreconditionError(what);
}

} // namespace

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        require(static_cast<int>(row.size()) == cols_, "ragged initializer for matrix");
        for (const auto& entry : row) data_.push_back(entry);
    }
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::column(const std::vector<GaussianRational>& entries) {
    ExactMatrix m(static_cast<int>(entries.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m(i, 0) = entries[static_cast<std::size_t>(i)];
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ExactMatrix ExactMatrix::conjugate() const {
    ExactMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).conj();
    return m;
}

ExactMatrix ExactMatrix::block(int row0, int col0, int nrows, int ncols) const {
    require(row0 >= 0 && col0 >= 0 && nrows >= 0 && ncols >= 0 && row0 + nrows <= rows_ && col0 + ncols <= cols_,
            "block out of range");
    ExactMatrix m(nrows, ncols);
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < ncols; ++c) m(r, c) = (*this)(row0 + r, col0 + c);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_real() const {
    for (const auto& e : data_)
        if (!e.is_real()) return false;
    return true;
}

bool ExactMatrix::is_integral() const {
    for (const auto& e : data_)
        if (!e.is_integer()) return false;
    return true;
}

bool ExactMatrix::is_antisymmetric() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r; c < cols_; ++c)
            if ((*this)(r, c) != -(*this)(c, r)) return false;
    return true;
}

bool ExactMatrix::is_hermitian() const {
    if (!is_square()) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r).conj()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
    return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in addition");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
    for (auto& e : data_) e *= s;
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.cols_ == b.rows_, "matrix shape mismatch in product");
    ExactMatrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const GaussianRational& ark = a(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) m(r, c) += ark * b(k, c);
        }
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix hstack(const std::vector<ExactMatrix>& blocks) {
    require(!blocks.empty(), "hstack of no blocks");
    int rows = blocks.front().rows();
    int cols = 0;
    for (const auto& b : blocks) {
        require(b.rows() == rows, "hstack row count mismatch");
        cols += b.cols();
    }
    ExactMatrix m(rows, cols);
    int at = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < b.cols(); ++c) m(r, at + c) = b(r, c);
        at += b.cols();
    }
    return m;
}

ExactMatrix vstack(const std::vector<ExactMatrix>& blocks) {
    require(!blocks.empty(), "vstack of no blocks");
    int cols = blocks.front().cols();
    int rows = 0;
    for (const auto& b : blocks) {
        require(b.cols() == cols, "vstack column count mismatch");
        rows += b.rows();
    }
    ExactMatrix m(rows, cols);
    int at = 0;
    for (const auto& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < cols; ++c) m(at + r, c) = b(r, c);
        at += b.rows();
    }
    return m;
}

namespace {

// Clears denominators row by row so fraction-free updates stay in Z[i];
// returns the product of the positive scaling factors.
Rational clear_denominators(ExactMatrix& m) {
    Rational scaling = 1;
    for (int r = 0; r < m.rows(); ++r) {
        Int lcm = 1;
        for (int c = 0; c < m.cols(); ++c) {
            const GaussianRational& e = m(r, c);
            lcm = boost::multiprecision::lcm(lcm, denominator(e.re()));
            lcm = boost::multiprecision::lcm(lcm, denominator(e.im()));
        }
        if (lcm != 1) {
            GaussianRational factor{Rational(lcm)};
            for (int c = 0; c < m.cols(); ++c) m(r, c) *= factor;
            scaling *= Rational(lcm);
        }
    }
    return scaling;
}

} // namespace

EchelonForm echelon_form(ExactMatrix m, int pivot_limit) {
    EchelonForm out;
    out.row_scaling = clear_denominators(m);
    const int rows = m.rows();
    const int cols = m.cols();
    const int limit = pivot_limit < 0 ? cols : pivot_limit;
    GaussianRational prev{1};
    int lead = 0;
    for (int col = 0; col < limit && lead < rows; ++col) {
        int pivot_row = -1;
        for (int r = lead; r < rows; ++r) {
            if (!m(r, col).is_zero()) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != lead) {
            for (int c = 0; c < cols; ++c) std::swap(m(pivot_row, c), m(lead, c));
            out.swap_parity = -out.swap_parity;
        }
        const GaussianRational pivot = m(lead, col);
        for (int r = lead + 1; r < rows; ++r) {
            const GaussianRational factor = m(r, col);
            // One-step update; the division by the previous pivot is exact.
            for (int c = col + 1; c < cols; ++c)
                m(r, c) = (pivot * m(r, c) - factor * m(lead, c)) / prev;
            m(r, col) = GaussianRational();
        }
        prev = pivot;
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.reduced = std::move(m);
    return out;
}

int rank(const ExactMatrix& m) { return static_cast<int>(echelon_form(m).pivot_cols.size()); }

ExactMatrix kernel_basis(const ExactMatrix& m) {
    EchelonForm ech = echelon_form(m);
    const int n = m.cols();
    const int r = static_cast<int>(ech.pivot_cols.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    ExactMatrix basis(n, n - r);
    int out_col = 0;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<GaussianRational> x(static_cast<std::size_t>(n));
        x[static_cast<std::size_t>(free_col)] = GaussianRational(1);
        for (int row = r - 1; row >= 0; --row) {
            const int pc = ech.pivot_cols[static_cast<std::size_t>(row)];
            GaussianRational acc;
            for (int c = pc + 1; c < n; ++c) {
                if (x[static_cast<std::size_t>(c)].is_zero()) continue;
                acc += ech.reduced(row, c) * x[static_cast<std::size_t>(c)];
            }
            x[static_cast<std::size_t>(pc)] = -acc / ech.reduced(row, pc);
        }
        for (int i = 0; i < n; ++i) basis(i, out_col) = x[static_cast<std::size_t>(i)];
        ++out_col;
    }
    return basis;
}

GaussianRational determinant(const ExactMatrix& m) {
    require(m.is_square(), "determinant of non-square matrix");
    if (m.rows() == 0) return GaussianRational(1);
    EchelonForm ech = echelon_form(m);
    const int n = m.rows();
    if (static_cast<int>(ech.pivot_cols.size()) < n) return {};
    // With full rank and no skipped columns the last pivot is the scaled determinant.
    GaussianRational det = ech.reduced(n - 1, n - 1);
    if (ech.swap_parity < 0) det = -det;
    return det / GaussianRational(ech.row_scaling);
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.rows() == b.rows(), "solve row count mismatch");
    EchelonForm ech = echelon_form(hstack({a, b}), a.cols());
    const int r = static_cast<int>(ech.pivot_cols.size());
    // Any nonzero residue below the pivot rows means the system is inconsistent.
    for (int row = r; row < ech.reduced.rows(); ++row)
        for (int c = a.cols(); c < ech.reduced.cols(); ++c)
            if (!ech.reduced(row, c).is_zero()) return std::nullopt;
    ExactMatrix x(a.cols(), b.cols());
    for (int rhs = 0; rhs < b.cols(); ++rhs) {
        for (int row = r - 1; row >= 0; --row) {
            const int pc = ech.pivot_cols[static_cast<std::size_t>(row)];
            GaussianRational acc = ech.reduced(row, a.cols() + rhs);
            for (int c = pc + 1; c < a.cols(); ++c) {
                if (x(c, rhs).is_zero()) continue;
                acc -= ech.reduced(row, c) * x(c, rhs);
            }
            x(pc, rhs) = acc / ech.reduced(row, pc);
        }
    }
    return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
    require(m.is_square(), "inverse of non-square matrix");
    if (rank(m) < m.rows()) return std::nullopt;
    return solve(m, ExactMatrix::identity(m.rows()));
}

bool same_column_span(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) return false;
    const int ra = rank(a);
    const int rb = rank(b);
    return ra == rb && rank(hstack({a, b})) == ra;
}

bool contains_columns(const ExactMatrix& space, const ExactMatrix& v) {
    if (space.rows() != v.rows()) return false;
    return rank(hstack({space, v})) == rank(space);
}

std::string to_string(const ExactMatrix& m) {
    std::ostringstream out;
    for (int r = 0; r < m.rows(); ++r) {
        out << (r == 0 ? "[" : " ");
        out << "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ", ";
            out << m(r, c).to_string();
        }
        out << "]" << (r + 1 == m.rows() ? "]" : "\n");
    }
    if (m.rows() == 0) out << "[]";
    return out.str();
}

} // namespace torusbundle
