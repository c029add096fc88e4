#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "braidrep/errors.hpp"

namespace braidrep {

// Exact rational arithmetic. cpp_rational keeps values in lowest terms with a
// positive denominator and represents zero uniquely as 0/1, which is exactly
// the canonical form required of matrix entries here.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "a" or "a/b" with optional leading sign. Throws ParseError.
inline Rational parse_rational(std::string_view text, std::size_t offset = 0) {
    auto bad = [&](const char* why, std::size_t at) -> ParseError {
        return ParseError(std::string("bad rational '") + std::string(text) + "': " + why,
                          offset + at);
    };
    if (text.empty()) throw bad("empty", 0);
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view s, std::size_t at) -> BigInt {
        if (s.empty()) throw bad("empty integer", at);
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw bad("sign without digits", at);
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') throw bad("unexpected character", at + j);
        return BigInt(std::string(s));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
    BigInt num = parse_int(text.substr(0, slash), 0);
    BigInt den = parse_int(text.substr(slash + 1), slash + 1);
    if (den == 0) throw bad("zero denominator", slash + 1);
    if (den < 0) {  // cpp_rational requires a positive denominator
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

}  // namespace braidrep
