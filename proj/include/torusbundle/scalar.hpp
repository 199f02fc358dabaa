// scalar.hpp — exact scalar types: arbitrary-precision rationals and
// Gaussian rationals (rational real and imaginary parts).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace torusbundle {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/** Renders a rational as "n" or "n/d" with d > 0 and gcd(n, d) = 1. */
std::string rational_to_string(const Rational& r);

/** Parses "n" or "n/d" with optional leading sign. Throws MalformedInputError. */
Rational rational_from_string(const std::string& text);

/** Sign of a rational: -1, 0, or +1. */
int sign(const Rational& r);

/** True when the rational has denominator 1. */
bool is_integer(const Rational& r);

/**
 * An element of Q(i).  All arithmetic is exact; components are kept in
 * lowest terms by the underlying rational type.
 */
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int value) : re_(value) {}
    GaussianRational(Rational real) : re_(std::move(real)) {}
    GaussianRational(Rational real, Rational imag) : re_(std::move(real)), im_(std::move(imag)) {}

    /** The imaginary unit. */
    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    /** True when the value lies in Z (real with denominator 1). */
    bool is_integer() const;

    GaussianRational conj() const { return {re_, -im_}; }
    /** Squared modulus re^2 + im^2, a nonnegative rational. */
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /** Multiplicative inverse; throws PreconditionError on zero. */
    GaussianRational inverse() const;

    /**
     * Canonical text form: "0", "3", "-1/2", "i", "-i", "2*i", "1/2-3/4*i".
     * Real part first when nonzero, imaginary part written as "[c]*i" with
     * the coefficient omitted when it is 1.
     */
    std::string to_string() const;

    /**
     * Parses a signed sum of rational and rational-times-i terms, the
     * grammar of to_string plus term reordering.  No whitespace.
     * Throws MalformedInputError on anything else.
     */
    static GaussianRational from_string(const std::string& text);

private:
    Rational re_{0};
    Rational im_{0};
};

} // namespace torusbundle
