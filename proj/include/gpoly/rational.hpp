#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "gpoly/errors.hpp"

namespace gpoly {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always canonical: positive denominator,
/// gcd(|num|, den) = 1. Canonicalization is handled by the backend on every
/// construction and arithmetic operation.
using Rat = boost::multiprecision::cpp_rational;

/// Builds a rational from a possibly signed numerator/denominator pair.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) {
        throw MalformedRational("zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

/// Serializes as "p/q" with the sign on the numerator, or "p" when q = 1.
inline std::string to_string(const Rat& value) {
    return value.str();
}

namespace detail {

inline bool parse_int(std::string_view text, Int& out) {
    if (text.empty()) {
        return false;
    }
    const bool negative = text[0] == '-';
    const std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) {
        return false;
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            return false;
        }
    }
    out = Int(std::string(text.substr(start)));
    if (negative) {
        out = -out;
    }
    return true;
}

}  // namespace detail

/// Parses "p", "p/q" (decimal, optional sign). Anything else, including
/// floating-point syntax, is rejected.
inline Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    Int num;
    if (slash == std::string_view::npos) {
        if (!detail::parse_int(text, num)) {
            throw MalformedRational("not a rational: \"" + std::string(text) + "\"");
        }
        return Rat(num);
    }
    Int den;
    if (!detail::parse_int(text.substr(0, slash), num) ||
        !detail::parse_int(text.substr(slash + 1), den)) {
        throw MalformedRational("not a rational: \"" + std::string(text) + "\"");
    }
    if (den == 0) {
        throw MalformedRational("zero denominator: \"" + std::string(text) + "\"");
    }
    return make_rat(std::move(num), std::move(den));
}

}  // namespace gpoly
