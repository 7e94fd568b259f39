#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace domcover {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(long long p, long long q = 1) { return Rational(p, q); }

/// Always "p/q", including q = 1.
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rational(BigInt(s.substr(0, slash)), q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

/// Round-half-up decimal rendering with `places` fractional digits.
inline std::string to_decimal_string(const Rational& r, int places = 6) {
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const bool negative = r < 0;
    const Rational a = negative ? Rational(-r) : r;
    BigInt scaled = (numerator(a) * scale * 2 + denominator(a)) / (denominator(a) * 2);
    std::string digits = scaled.str();
    if (digits.size() <= static_cast<std::size_t>(places)) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = negative ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    return out;
}

/// Smallest integer >= r.
inline BigInt ceil(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;
    return q;
}

}  // namespace domcover
