#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <compare>
#include <stdexcept>
#include <vector>

namespace harmonia {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using ComplexF = std::complex<double>;

// Integer or half-odd-integer spin label, stored as 2j.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr HalfInt(int n) : twice(2 * n) {}
    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice = t;
        return h;
    }

    bool is_integer() const { return twice % 2 == 0; }
    // Value as an integer; only valid when is_integer().
    int as_int() const {
        if (!is_integer()) throw std::invalid_argument("HalfInt: not an integer");
        return twice / 2;
    }
    double value() const { return twice / 2.0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice - b.twice); }
    constexpr HalfInt operator-() const { return from_twice(-twice); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;
};

// n! as a big integer; values up to a cache bound (default 200) are memoized
// once per process and shared by concurrent readers.
const BigInt& factorial(int n);

BigInt binomial(int n, int k);

double to_double(const Rational& q);

inline int parity(long long e) { return (e % 2 == 0) ? 1 : -1; }

// sign * sqrt(radicand), the closure of 3j values and harmonic normalizations.
struct SqrtRational {
    int sign = 0;            // -1, 0, +1
    Rational radicand = 0;   // >= 0; 0 iff sign == 0

    SqrtRational() = default;
    SqrtRational(int s, Rational rad) : sign(s), radicand(std::move(rad)) {
        if (sign == 0 || radicand == 0) {
            sign = 0;
            radicand = 0;
        }
        if (radicand < 0) throw std::invalid_argument("SqrtRational: negative radicand");
    }

    // The SqrtRational equal to the rational q (i.e. sgn(q)*sqrt(q^2)).
    static SqrtRational of_rational(const Rational& q) {
        if (q == 0) return SqrtRational();
        return SqrtRational(q > 0 ? 1 : -1, q * q);
    }
    // sqrt(q) for q >= 0.
    static SqrtRational sqrt_of(const Rational& q) {
        if (q < 0) throw std::invalid_argument("SqrtRational: sqrt of negative rational");
        if (q == 0) return SqrtRational();
        return SqrtRational(1, q);
    }

    bool is_zero() const { return sign == 0; }
    double value() const { return sign * std::sqrt(to_double(radicand)); }

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
        if (a.sign == 0 || b.sign == 0) return SqrtRational();
        return SqrtRational(a.sign * b.sign, a.radicand * b.radicand);
    }
    SqrtRational times(const Rational& q) const { return *this * of_rational(q); }
    SqrtRational operator-() const { return SqrtRational(-sign, radicand); }
    friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
        return a.sign == b.sign && a.radicand == b.radicand;
    }
};

// Wigner 3j symbol, exact. Zero on selection-rule failure (m-sum, triangle,
// |m|>j); throws if any j+m is not integral or a j is negative.
SqrtRational wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

// Index raising per phi^m = (-1)^{j+m} phi_{-m}. Input and output are indexed
// k = 0..2j with m = k - j (ascending). Involutive up to (-1)^{2j}.
std::vector<ComplexF> raise_lower(const std::vector<ComplexF>& phi, HalfInt j);

// (-1)^{j+m} as an int; throws if j+m is not integral.
int raising_phase(HalfInt j, HalfInt m);

}  // namespace harmonia
