#include "torusbundle/polynomial.hpp"

#include "torusbundle/error.hpp"

#include <numeric>
#include <sstream>

namespace torusbundle {

MultiPoly MultiPoly::constant(int nvars, const GaussianRational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exponents exps, const GaussianRational& c) {
    if (static_cast<int>(exps.size()) != nvars) throw PreconditionError("monomial exponent arity mismatch");
    MultiPoly p(nvars);
    p.add_term(exps, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw PreconditionError("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(nvars, e, GaussianRational(1));
}

int MultiPoly::total_degree() const {
    int deg = 0;
    for (const auto& [exps, coeff] : terms_) {
        int d = std::accumulate(exps.begin(), exps.end(), 0);
        if (d > deg) deg = d;
    }
    return deg;
}

GaussianRational MultiPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational MultiPoly::leading_coefficient() const {
    if (terms_.empty()) return {};
    return terms_.rbegin()->second;
}

bool MultiPoly::has_real_coefficients() const {
    for (const auto& [exps, coeff] : terms_)
        if (!coeff.is_real()) return false;
    return true;
}

void MultiPoly::add_term(const Exponents& exps, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(nvars_);
    for (const auto& [exps, coeff] : terms_) p.terms_.emplace(exps, -coeff);
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw PreconditionError("polynomial arity mismatch");
    for (const auto& [exps, coeff] : o.terms_) add_term(exps, coeff);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw PreconditionError("polynomial arity mismatch");
    for (const auto& [exps, coeff] : o.terms_) add_term(exps, -coeff);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw PreconditionError("polynomial arity mismatch");
    MultiPoly p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e(ea);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            p.add_term(e, ca * cb);
        }
    return p;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_) coeff *= s;
    return *this;
}

GaussianRational MultiPoly::evaluate(const std::vector<GaussianRational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw PreconditionError("evaluation point arity mismatch");
    GaussianRational total;
    for (const auto& [exps, coeff] : terms_) {
        GaussianRational term = coeff;
        for (std::size_t k = 0; k < exps.size(); ++k)
            for (int p = 0; p < exps[k]; ++p) term *= point[k];
        total += term;
    }
    return total;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_) throw PreconditionError("variable name arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Iterate lex-descending so the highest power of the first variable leads.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, coeff] = *it;
        std::string c = coeff.to_string();
        bool negated = false;
        if (coeff.is_real() && coeff.re() < 0) {
            negated = true;
            c = (-coeff).to_string();
        }
        if (first) {
            if (negated) out << "-";
        } else {
            out << (negated ? " - " : " + ");
        }
        first = false;
        std::string monomial;
        for (std::size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += names[k];
            if (exps[k] > 1) monomial += "^" + std::to_string(exps[k]);
        }
        if (monomial.empty()) {
            out << c;
        } else if (c == "1") {
            out << monomial;
        } else {
            bool needs_parens = c.find('+') != std::string::npos || c.find('-') != std::string::npos;
            out << (needs_parens ? "(" + c + ")" : c) << "*" << monomial;
        }
    }
    return out.str();
}

} // namespace torusbundle
