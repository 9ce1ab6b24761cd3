#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qht/rational.hpp"

namespace qht {

/// Dense univariate polynomial over exact rationals, coefficients stored
/// lowest degree first. Canonical form: no trailing zero coefficients, the
/// zero polynomial is the empty list.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<Rational> coeffs)
        : coeffs_(coeffs.begin(), coeffs.end()) {
        trim();
    }

    static Polynomial constant(Rational c) {
        Polynomial p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }

    /// The monic linear factor x + c.
    static Polynomial monic_linear(Rational c) {
        Polynomial p;
        p.coeffs_ = {std::move(c), Rational(1)};
        return p;
    }

    static Polynomial variable() { return monic_linear(Rational(0)); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int i) const {
        static const Rational zero(0);
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<size_t>(i)];
    }

    const Rational& leading() const {
        if (is_zero()) throw std::invalid_argument("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + to_double(*it);
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        if (c == 0) return {};
        Polynomial r(a);
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// This polynomial divided by its leading coefficient.
    Polynomial monic() const {
        if (is_zero()) throw std::invalid_argument("monic form of the zero polynomial");
        if (coeffs_.back() == 1) return *this;
        Polynomial r(*this);
        const Rational lc = r.coeffs_.back();
        for (auto& c : r.coeffs_) c /= lc;
        return r;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> out(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
        return Polynomial(std::move(out));
    }

    /// Substitutes x := scale*x + offset.
    Polynomial compose_affine(const Rational& scale, const Rational& offset) const {
        Polynomial lin({offset, scale});
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * lin + constant(*it);
        return acc;
    }

    /// Expanded form, highest degree first: "k^2+3*k+2"; "0" for zero.
    std::string str(char var = 'k') const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[static_cast<size_t>(i)];
            if (c == 0) continue;
            const bool first = out.empty();
            const bool neg = c < 0;
            if (!first) out += neg ? "-" : "+";
            else if (neg) out += "-";
            Rational mag = neg ? Rational(-c) : c;
            if (i == 0) {
                out += to_string(mag);
            } else {
                if (mag != 1) out += to_string(mag) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct DivModResult {
    Polynomial quot, rem;
};

inline DivModResult divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const int da = a.degree(), db = b.degree();
    if (da < db) return {Polynomial{}, a};
    std::vector<Rational> rem(a.coefficients());
    std::vector<Rational> quot(static_cast<size_t>(da - db) + 1, Rational(0));
    const Rational& lead = b.leading();
    for (int i = da; i >= db; --i) {
        if (rem[static_cast<size_t>(i)] == 0) continue;
        Rational c = rem[static_cast<size_t>(i)] / lead;
        quot[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= c * b.coeff(j);
    }
    rem.resize(static_cast<size_t>(db > 0 ? db : 0));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic greatest common divisor over the rationals. Undefined for (0, 0).
inline Polynomial gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).rem;
        a = std::move(b);
        // monic remainders keep coefficient growth in check
        b = r.is_zero() ? Polynomial{} : r.monic();
    }
    return a.monic();
}

} // namespace qht
