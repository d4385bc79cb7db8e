#ifndef ORDTILE_RATIONAL_HPP
#define ORDTILE_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ordtile {

// Exact rational on int64, always kept in lowest terms with positive
// denominator. The graph parameters this library computes have numerators
// and denominators bounded by small multiples of the vertex count, so
// int64 intermediate products cannot overflow at any supported size.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;

    Rational(std::int64_t n) : num(n), den(1) {}

    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0)
            throw std::invalid_argument{"rational with zero denominator"};
        if (den < 0) {
            num = -num;
            den = -den;
        }
        auto g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(const Rational & a, const Rational & b) {
        return Rational{a.num * b.den + b.num * a.den, a.den * b.den};
    }

    friend Rational operator-(const Rational & a, const Rational & b) {
        return Rational{a.num * b.den - b.num * a.den, a.den * b.den};
    }

    friend Rational operator*(const Rational & a, const Rational & b) {
        return Rational{a.num * b.num, a.den * b.den};
    }

    friend Rational operator/(const Rational & a, const Rational & b) {
        if (b.num == 0)
            throw std::invalid_argument{"rational division by zero"};
        return Rational{a.num * b.den, a.den * b.num};
    }

    friend bool operator==(const Rational & a, const Rational & b) {
        return a.num == b.num && a.den == b.den;
    }

    friend bool operator!=(const Rational & a, const Rational & b) { return ! (a == b); }

    friend bool operator<(const Rational & a, const Rational & b) {
        return a.num * b.den < b.num * a.den;
    }

    friend bool operator>(const Rational & a, const Rational & b) { return b < a; }

    friend bool operator<=(const Rational & a, const Rational & b) { return ! (b < a); }

    friend bool operator>=(const Rational & a, const Rational & b) { return ! (a < b); }

    std::string str() const {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend std::ostream & operator<<(std::ostream & s, const Rational & r) {
        return s << r.str();
    }
};

inline Rational min(const Rational & a, const Rational & b) { return a < b ? a : b; }

}

#endif
