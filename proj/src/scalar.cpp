#include "torusbundle/scalar.hpp"

#include "torusbundle/error.hpp"

#include <cctype>
#include <cstddef>

namespace torusbundle {

std::string rational_to_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += "/";
        out += denominator(r).str();
    }
    return out;
}

Rational rational_from_string(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](const char* what) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw MalformedInputError(std::string("expected ") + what + " in rational: '" + text + "'");
        return Int(text.substr(start, pos - start));
    };
    Int num = read_digits("numerator");
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_digits("denominator");
        if (den == 0) throw MalformedInputError("zero denominator in rational: '" + text + "'");
    }
    if (pos != text.size()) throw MalformedInputError("trailing characters in rational: '" + text + "'");
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

int sign(const Rational& r) {
    if (r == 0) return 0;
    return r > 0 ? 1 : -1;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

bool GaussianRational::is_integer() const { return im_ == 0 && torusbundle::is_integer(re_); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw PreconditionError("division by zero Gaussian rational");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string GaussianRational::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out = rational_to_string(re_);
    if (im_ != 0) {
        if (im_ > 0 && !out.empty()) out += "+";
        if (im_ == 1) {
            out += "i";
        } else if (im_ == -1) {
            out += "-i";
        } else {
            out += rational_to_string(im_);
            out += "*i";
        }
    }
    return out;
}

GaussianRational GaussianRational::from_string(const std::string& text) {
    if (text.empty()) throw MalformedInputError("empty scalar");
    GaussianRational total;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
        } else if (!first) {
            throw MalformedInputError("expected '+' or '-' between terms in scalar: '" + text + "'");
        }
        first = false;
        if (pos >= text.size()) throw MalformedInputError("dangling sign in scalar: '" + text + "'");

        // Bare imaginary unit.
        if (text[pos] == 'i') {
            ++pos;
            total += GaussianRational(Rational(0), Rational(negative ? -1 : 1));
            continue;
        }

        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        if (pos == start) throw MalformedInputError("unexpected character in scalar: '" + text + "'");
        Rational magnitude = rational_from_string(text.substr(start, pos - start));
        if (negative) magnitude = -magnitude;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            if (pos >= text.size() || text[pos] != 'i')
                throw MalformedInputError("expected 'i' after '*' in scalar: '" + text + "'");
            ++pos;
            total += GaussianRational(Rational(0), magnitude);
        } else {
            total += GaussianRational(magnitude);
        }
    }
    return total;
}

} // namespace torusbundle
