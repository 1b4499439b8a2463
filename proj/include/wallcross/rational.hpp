#pragma once

#include <charconv>
#include <numeric>
#include <string>

#include "wallcross/error.hpp"

namespace wallcross {

// Exact rational with positive denominator, always stored reduced.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;

    Fraction(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw input_error("fraction with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }

    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.num * b.den < b.num * a.den;
    }

    friend bool operator<=(const Fraction& a, const Fraction& b) {
        return a.num * b.den <= b.num * a.den;
    }

    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return b <= a; }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
};

inline std::string format_fraction(const Fraction& f) {
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

inline Fraction parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        throw input_error("expected a/b fraction, got: " + text);
    auto read_int = [&text](std::size_t first, std::size_t last) {
        long long value = 0;
        auto [end, ec] = std::from_chars(text.data() + first, text.data() + last, value);
        if (ec != std::errc{} || end != text.data() + last)
            throw input_error("expected a/b fraction, got: " + text);
        return value;
    };
    return Fraction(read_int(0, slash), read_int(slash + 1, text.size()));
}

}  // namespace wallcross
