#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

#include "qht/errors.hpp"

namespace qht {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// zero is 0/1. All arithmetic, comparison, and ordering are exact.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form. Throws ZeroDenominator if den == 0.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw ZeroDenominator();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline Integer rational_num(const Rational& q) { return numerator(q); }
inline Integer rational_den(const Rational& q) { return denominator(q); }

/// Canonical string form: "2/3", "-1/2", integers without the "/1".
inline std::string to_string(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace detail {

inline Integer parse_digits(std::string_view s, size_t& i) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("expected digits in rational literal");
    Integer value = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        value = value * 10 + (s[i] - '0');
        ++i;
    }
    return value;
}

/// Parses `integer ["/" positive-integer] | decimal` starting at s[i].
inline Rational parse_rational_at(std::string_view s, size_t& i) {
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = (s[i] == '-');
        ++i;
    }
    Integer int_part = parse_digits(s, i);
    if (i < s.size() && s[i] == '/') {
        ++i;
        Integer den = parse_digits(s, i);
        if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
        Rational q = make_rational(int_part, den);
        return negative ? Rational(-q) : q;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        size_t start = i;
        Integer frac = parse_digits(s, i);
        Integer scale = 1;
        for (size_t d = start; d < i; ++d) scale *= 10;
        Rational q = make_rational(int_part * scale + frac, scale);
        return negative ? Rational(-q) : q;
    }
    return negative ? Rational(-int_part) : Rational(int_part);
}

} // namespace detail

/// Parses a full rational literal: "3", "-2/3", "4.5". Whitespace is not
/// accepted here; callers strip it.
inline Rational parse_rational(std::string_view s) {
    size_t i = 0;
    Rational q = detail::parse_rational_at(s, i);
    if (i != s.size()) throw std::invalid_argument("trailing characters in rational literal");
    return q;
}

} // namespace qht
