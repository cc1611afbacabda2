#ifndef CHENLORENZ_RATIONAL_HPP
#define CHENLORENZ_RATIONAL_HPP

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chenlorenz {

using Int = boost::multiprecision::cpp_int;

// Always stored reduced with positive denominator (cpp_rational canonical form).
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// Serializes as "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << '/' << den(r);
    return os.str();
}

/// Accepts "p", "p/q" and exact decimal literals ("2.5" -> 5/2).
inline std::optional<Rational> parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i >= s.size()) return std::nullopt;

    Int numer = 0, denom = 1;
    bool any_digit = false, seen_dot = false, seen_slash = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            any_digit = true;
            if (seen_slash) {
                denom = denom * 10 + (c - '0');
            } else {
                numer = numer * 10 + (c - '0');
                if (seen_dot) denom *= 10;
            }
        } else if (c == '.' && !seen_dot && !seen_slash) {
            seen_dot = true;
        } else if (c == '/' && !seen_slash && !seen_dot && any_digit) {
            seen_slash = true;
            denom = 0;
            any_digit = false;
        } else {
            return std::nullopt;
        }
    }
    if (!any_digit || denom == 0) return std::nullopt;
    Rational r(numer, denom);
    return neg ? Rational(-r) : r;
}

/// Exact integer square root test: returns sqrt(n) if n is a perfect square.
inline std::optional<Int> perfect_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// sqrt of a rational if it is a perfect square of a rational.
inline std::optional<Rational> perfect_sqrt(const Rational& r) {
    auto n = perfect_sqrt(num(r));
    if (!n) return std::nullopt;
    auto d = perfect_sqrt(den(r));
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

} // namespace chenlorenz

#endif // CHENLORENZ_RATIONAL_HPP
