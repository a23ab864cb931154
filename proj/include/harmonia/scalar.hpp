#pragma once

#include <array>
#include <cmath>

#include "harmonia/numcore.hpp"

namespace harmonia {

// Exact scalar in Q(i, sqrt2, sqrt3): rational coordinates over the basis
// {1, sqrt2, sqrt3, sqrt6} for both the real and imaginary parts. Closed
// under the arithmetic generated by the Cartan map (sqrt2, i) and the
// tetrahedron pole data (sqrt2, sqrt6).
class Ext {
public:
    Ext() = default;
    Ext(int n) { re_[0] = n; }
    Ext(const Rational& q) { re_[0] = q; }
    Ext(const Rational& re, const Rational& im) {
        re_[0] = re;
        im_[0] = im;
    }

    static Ext i() {
        Ext z;
        z.im_[0] = 1;
        return z;
    }
    static Ext sqrt2() {
        Ext z;
        z.re_[1] = 1;
        return z;
    }
    static Ext sqrt3() {
        Ext z;
        z.re_[2] = 1;
        return z;
    }
    static Ext sqrt6() {
        Ext z;
        z.re_[3] = 1;
        return z;
    }

    const Rational& re_coord(int k) const { return re_[k]; }
    const Rational& im_coord(int k) const { return im_[k]; }

    bool is_zero() const {
        for (int k = 0; k < 4; ++k)
            if (re_[k] != 0 || im_[k] != 0) return false;
        return true;
    }
    bool is_real() const {
        for (int k = 0; k < 4; ++k)
            if (im_[k] != 0) return false;
        return true;
    }
    bool is_rational() const {
        if (!is_real()) return false;
        return re_[1] == 0 && re_[2] == 0 && re_[3] == 0;
    }
    // Value as a Rational; only valid when is_rational().
    const Rational& as_rational() const {
        if (!is_rational()) throw std::invalid_argument("Ext: not rational");
        return re_[0];
    }

    friend Ext operator+(const Ext& a, const Ext& b) {
        Ext z;
        for (int k = 0; k < 4; ++k) {
            z.re_[k] = a.re_[k] + b.re_[k];
            z.im_[k] = a.im_[k] + b.im_[k];
        }
        return z;
    }
    friend Ext operator-(const Ext& a, const Ext& b) {
        Ext z;
        for (int k = 0; k < 4; ++k) {
            z.re_[k] = a.re_[k] - b.re_[k];
            z.im_[k] = a.im_[k] - b.im_[k];
        }
        return z;
    }
    Ext operator-() const { return Ext() - *this; }

    friend Ext operator*(const Ext& a, const Ext& b) {
        Ext z;
        qmul(a.re_, b.re_, z.re_, +1);
        qmul(a.im_, b.im_, z.re_, -1);
        qmul(a.re_, b.im_, z.im_, +1);
        qmul(a.im_, b.re_, z.im_, +1);
        return z;
    }
    Ext& operator+=(const Ext& b) { return *this = *this + b; }
    Ext& operator-=(const Ext& b) { return *this = *this - b; }
    Ext& operator*=(const Ext& b) { return *this = *this * b; }

    Ext conj() const {
        Ext z = *this;
        for (int k = 0; k < 4; ++k) z.im_[k] = -z.im_[k];
        return z;
    }

    Ext inv() const {
        if (is_zero()) throw std::domain_error("Ext: division by zero");
        // z * conj(z) is real; then clear sqrt2 and sqrt3 by Galois conjugation.
        Ext zc = conj();
        Ext n1 = *this * zc;                 // real, in Q(sqrt2, sqrt3)
        Ext s2 = n1.galois_flip(1, 3);       // sqrt2 -> -sqrt2 (flips sqrt6 too)
        Ext n2 = n1 * s2;                    // in Q(sqrt3)
        Ext s3 = n2.galois_flip(2, 3);       // sqrt3 -> -sqrt3
        Ext n3 = n2 * s3;                    // rational
        Rational d = n3.re_[0];
        if (d == 0) throw std::domain_error("Ext: inverse degenerated");
        Ext num = zc * s2 * s3;
        Ext z;
        for (int k = 0; k < 4; ++k) {
            z.re_[k] = num.re_[k] / d;
            z.im_[k] = num.im_[k] / d;
        }
        return z;
    }
    friend Ext operator/(const Ext& a, const Ext& b) { return a * b.inv(); }

    friend bool operator==(const Ext& a, const Ext& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    ComplexF to_complex() const {
        static const double w[4] = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(6.0)};
        double re = 0, im = 0;
        for (int k = 0; k < 4; ++k) {
            re += to_double(re_[k]) * w[k];
            im += to_double(im_[k]) * w[k];
        }
        return {re, im};
    }

private:
    // Basis index: 0 -> 1, 1 -> sqrt2, 2 -> sqrt3, 3 -> sqrt6.
    std::array<Rational, 4> re_{}, im_{};

    // Accumulate sign * (x * y) into out, where x, y are coordinate vectors
    // over {1, sqrt2, sqrt3, sqrt6}.
    static void qmul(const std::array<Rational, 4>& x, const std::array<Rational, 4>& y,
                     std::array<Rational, 4>& out, int sign) {
        static constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static constexpr int mul[4][4] = {{1, 1, 1, 1}, {1, 2, 1, 2}, {1, 1, 3, 3}, {1, 2, 3, 6}};
        for (int a = 0; a < 4; ++a) {
            if (x[a] == 0) continue;
            for (int b = 0; b < 4; ++b) {
                if (y[b] == 0) continue;
                Rational t = x[a] * y[b] * mul[a][b];
                if (sign < 0) t = -t;
                out[idx[a][b]] += t;
            }
        }
    }

    Ext galois_flip(int g1, int g2) const {
        Ext z = *this;
        z.re_[g1] = -z.re_[g1];
        z.re_[g2] = -z.re_[g2];
        z.im_[g1] = -z.im_[g1];
        z.im_[g2] = -z.im_[g2];
        return z;
    }
};

// Uniform coefficient access for the exact and floating backends.
template <class S>
struct coeff_ops;

template <>
struct coeff_ops<Ext> {
    static Ext zero() { return Ext(); }
    static Ext one() { return Ext(1); }
    static bool is_zero(const Ext& c) { return c.is_zero(); }
    static Ext conj(const Ext& c) { return c.conj(); }
    static ComplexF to_complex(const Ext& c) { return c.to_complex(); }
    static Ext from_int(long long n) { return Ext(Rational(n)); }
    static Ext mul_rational(const Ext& c, const Rational& q) { return c * Ext(q); }
};

template <>
struct coeff_ops<ComplexF> {
    static ComplexF zero() { return {0.0, 0.0}; }
    static ComplexF one() { return {1.0, 0.0}; }
    static bool is_zero(const ComplexF& c) { return c == ComplexF(0.0, 0.0); }
    static ComplexF conj(const ComplexF& c) { return std::conj(c); }
    static ComplexF to_complex(const ComplexF& c) { return c; }
    static ComplexF from_int(long long n) { return {static_cast<double>(n), 0.0}; }
    static ComplexF mul_rational(const ComplexF& c, const Rational& q) { return c * to_double(q); }
};

}  // namespace harmonia
