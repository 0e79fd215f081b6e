#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace smtop {

/// Exact arbitrary-precision rational. All core arithmetic goes through this type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "n", "-n" or "n/d". Throws ParseError on anything else, including d = 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "2", "-1/3".
std::string to_string(const Rational& r);

/// Midpoint of two rationals.
inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

/// A rational or +infinity.
struct ExtRational {
    std::optional<Rational> finite;

    static ExtRational infinity() { return {}; }
    bool is_infinite() const { return !finite.has_value(); }
    friend bool operator==(const ExtRational&, const ExtRational&) = default;
};

std::string to_string(const ExtRational& r);

} // namespace smtop
