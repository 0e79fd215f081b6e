#include "smtop/rational.hpp"

#include <cctype>

#include "smtop/error.hpp"

namespace smtop {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole)
{
    if (digits.empty())
        throw ParseError("invalid rational '" + std::string(whole) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("invalid rational '" + std::string(whole) + "'");
    }
    return Integer(std::string(digits));
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    Integer num = parse_integer(body.substr(0, slash), text);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(body.substr(slash + 1), text);
        if (den == 0)
            throw ParseError("zero denominator in rational '" + std::string(text) + "'");
    }
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const ExtRational& r)
{
    return r.finite ? to_string(*r.finite) : std::string("inf");
}

} // namespace smtop
