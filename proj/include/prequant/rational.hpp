#pragma once

#include <numeric>
#include <string>

#include "prequant/errors.hpp"

namespace prequant {

// Exact rational arithmetic on small values; integrality tests disqualify
// floating point here.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize()
    {
        if (den == 0)
            throw DomainError("zero denominator");
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

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend Rat operator+(const Rat& a, const Rat& b)
    {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b)
    {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b)
    {
        if (b.num == 0)
            throw DomainError("division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat operator-() const { return Rat(-num, den); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num < 0 ? Rat(-num, den) : *this; }

    // Smallest integer >= the value.
    long long ceil() const
    {
        if (num >= 0)
            return (num + den - 1) / den;
        return -((-num) / den);
    }

    std::string str() const
    {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Parses "p/q" or "p".
Rat parse_rat(const std::string& text);

}  // namespace prequant
