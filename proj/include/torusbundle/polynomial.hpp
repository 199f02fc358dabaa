// polynomial.hpp — sparse multivariate polynomials over Q(i), used for
// parameter pencils and discriminant forms.
#pragma once

#include "torusbundle/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace torusbundle {

/**
 * A polynomial in a fixed number of variables, stored as a map from
 * exponent vectors to nonzero coefficients.  Exponent vectors compare
 * lexicographically, so iteration order is deterministic.
 */
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const GaussianRational& c);
    static MultiPoly monomial(int nvars, Exponents exps, const GaussianRational& c);
    /** The variable with the given index as a degree-one monomial. */
    static MultiPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    GaussianRational coefficient(const Exponents& exps) const;
    const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

    /** Coefficient of the lexicographically greatest exponent vector. */
    GaussianRational leading_coefficient() const;

    bool has_real_coefficients() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const GaussianRational& s);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

    /** Renders like "mu1^2 - 2*mu1*mu2" with the given variable names. */
    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(const Exponents& exps, const GaussianRational& c);

    int nvars_;
    std::map<Exponents, GaussianRational> terms_;
};

} // namespace torusbundle
