#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

#include "eph/sign.hpp"

namespace eph {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind {
    ZeroDivisor,
    SignatureMismatch,
    NotNormalizable,
    FlatCycle,
    FocusUndefined,
    GhostUndefined,
    NegativeDiscriminant,
    DegenerateDenominator,
    DegenerateCurvature,
    NotFactorable,
    UndefinedParabolicCentreLength,
    NegativeRadicand,
    CoincidentOrdinates,
    NonPositiveV,
    DivisionLeadingZero,
    SqrtNonPositiveLead,
    SqrtIrrational,
    ParabolicNotSimilarity,
    EmptyLocus,
    UnknownFigure,
    BadInput,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational from_int(long v) { return Rational(v); }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
    static double to_double(const Rational& a) { return a.convert_to<double>(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static constexpr double rel_tolerance = 1e-9;
    static double from_int(long v) { return static_cast<double>(v); }
    static bool equal(double a, double b) {
        double scale = std::max({std::abs(a), std::abs(b), 1.0});
        return std::abs(a - b) <= rel_tolerance * scale;
    }
    static double to_double(double a) { return a; }
};

template <typename S>
concept ScalarField = requires { scalar_traits<S>::is_exact; };

template <typename S>
inline constexpr bool is_exact_v = scalar_traits<S>::is_exact;

template <typename S>
S scalar_of(Sign s) {
    return scalar_traits<S>::from_int(s.value());
}

inline std::optional<Rational> sqrt_exact(const Rational& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rational(0);
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    Integer rn  = boost::multiprecision::sqrt(num);
    Integer rd  = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

inline std::optional<double> sqrt_exact(double x) {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
}

// Parses "p/q", an integer, or a decimal like "-1.25" (converted exactly).
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw Error(ErrorKind::BadInput, "cannot parse rational: '" + text + "'"); };
    std::string t = text;
    if (t.empty()) bad();
    auto slash = t.find('/');
    try {
        if (slash != std::string::npos) {
            Integer num(t.substr(0, slash));
            Integer den(t.substr(slash + 1));
            if (den == 0) bad();
            return Rational(num, den);
        }
        auto dot = t.find('.');
        auto exp = t.find_first_of("eE");
        long expo = 0;
        if (exp != std::string::npos) {
            expo = std::strtol(t.c_str() + exp + 1, nullptr, 10);
            t = t.substr(0, exp);
            dot = t.find('.');
        }
        std::string digits = t;
        long frac = 0;
        if (dot != std::string::npos) {
            digits = t.substr(0, dot) + t.substr(dot + 1);
            frac = static_cast<long>(t.size() - dot - 1);
        }
        if (digits.empty() || digits == "-" || digits == "+") bad();
        Rational r(Integer(digits), 1);
        long shift = expo - frac;
        Integer ten(10);
        for (long i = 0; i < std::labs(shift); ++i) {
            if (shift > 0) r *= ten; else r /= ten;
        }
        return r;
    } catch (const std::exception&) {
        bad();
    }
    return Rational(0);  // unreachable
}

inline std::string to_string(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

template <typename S>
S parse_scalar(const std::string& text);

template <>
inline Rational parse_scalar<Rational>(const std::string& text) { return parse_rational(text); }

template <>
inline double parse_scalar<double>(const std::string& text) {
    return parse_rational(text).convert_to<double>();
}

}  // namespace eph
