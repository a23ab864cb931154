#pragma once

#include <vector>

#include "harmonia/poly.hpp"
#include "harmonia/spinor.hpp"

namespace harmonia {

// Degree L plus the coefficient list phi_L^M, M = -L..L (index k = M + L).
struct HarmonicNormalForm {
    int L = 0;
    std::vector<ComplexF> phi;

    HarmonicNormalForm() : phi(1, ComplexF(0, 0)) {}
    explicit HarmonicNormalForm(int degree) : L(degree), phi(2 * degree + 1, ComplexF(0, 0)) {}

    ComplexF get(int M) const { return phi.at(M + L); }
    void set(int M, ComplexF v) { phi.at(M + L) = v; }

    // Max deviation from (phi^M)* = (-1)^{L-M} phi^{-M}.
    double reality_residual() const {
        double r = 0;
        for (int M = -L; M <= L; ++M)
            r = std::max(r, std::abs(std::conj(get(M)) -
                                     static_cast<double>(parity(L - M)) * get(-M)));
        return r;
    }
    double norm() const {
        double s = 0;
        for (const auto& c : phi) s += std::norm(c);
        return std::sqrt(s);
    }
};

// Solid harmonic C^L_M, built by the 3j recursion from C^1; memoized.
TernaryPolyF solid_harmonic(int L, int M);

// The exact degree-1 harmonics C^1_M (M = -1, 0, 1) over the exact scalars.
TernaryPolyX solid_harmonic_deg1(int M);

// Leading harmonic part: f = H(f) + r^2 (...), Delta H(f) = 0.
template <class S>
TernaryPoly<S> harmonic_projection(const TernaryPoly<S>& f);

// Gauss expansion f = sum_s r^{2s} Y_{n-2s}; returns [Y_n, Y_{n-2}, ...].
template <class S>
std::vector<TernaryPoly<S>> gauss_decompose(const TernaryPoly<S>& f);

// Substitute the Cartan map: degree-n ternary -> degree-2n binary.
template <class S>
BinaryForm<S> restrict_to_conic(const TernaryPoly<S>& f);

// A (non-harmonic in general) ternary preimage of B under restriction.
template <class S>
TernaryPoly<S> conic_preimage(const BinaryForm<S>& B);

// The unique harmonic ternary polynomial restricting to B.
template <class S>
TernaryPoly<S> harmonic_from_conic(const BinaryForm<S>& B) {
    return harmonic_projection(conic_preimage(B));
}

// Read phi^M off the monomial coefficients of B (degree 2L).
HarmonicNormalForm reconstruct_from_conic(const BinaryFormF& B);

TernaryPolyF normal_form_to_poly(const HarmonicNormalForm& nf);

// Inverse of normal_form_to_poly; throws if the Laplacian residual exceeds
// tol * |f| (the residual is included in the message).
HarmonicNormalForm poly_to_normal_form(const TernaryPolyF& f, double tol = 1e-9);

// One term of a product expansion in solid harmonics:
// coeff * r^{L1+L2-L3} * C^{L3}_{M3}.
struct HarmonicProductTerm {
    int L3 = 0;
    int M3 = 0;
    ComplexF coeff{0.0, 0.0};
};

// Expansion of the ordinary (lower-index) product C^{L1}_{M1} C^{L2}_{M2}.
std::vector<HarmonicProductTerm> compose_harmonics(int L1, int M1, int L2, int M2);

// Biaxal harmonic H_L(r, r') evaluated numerically (addition-theorem oracle).
ComplexF biaxal_harmonic(int L, const std::array<ComplexF, 3>& r1,
                         const std::array<ComplexF, 3>& r2);

// --- template implementations ---

template <class S>
TernaryPoly<S> harmonic_projection(const TernaryPoly<S>& f) {
    if (f.is_zero()) return f;
    int m = f.degree();
    TernaryPoly<S> result = f;
    TernaryPoly<S> lap = f.laplacian();
    TernaryPoly<S> r2k = r2_poly<S>();
    Rational denom = 1;
    for (int k = 1; !lap.is_zero(); ++k) {
        // denominator 2^k k! (2m-1)(2m-3)...(2m-2k+1)
        denom *= Rational(2 * k) * Rational(2 * m - 2 * k + 1);
        TernaryPoly<S> term = (r2k * lap).scaled(
            coeff_ops<S>::mul_rational(coeff_ops<S>::from_int(parity(k)), Rational(1) / denom));
        result = result + term;
        lap = lap.laplacian();
        if (!lap.is_zero()) r2k = r2k * r2_poly<S>();
    }
    return result;
}

template <class S>
std::vector<TernaryPoly<S>> gauss_decompose(const TernaryPoly<S>& f) {
    if (f.is_zero()) return {f};
    int n = f.degree();
    std::vector<TernaryPoly<S>> out;
    TernaryPoly<S> lap = f;
    Rational A = 1;  // A_s(n) = (2.4...2s) * (2n-2s+1)(2n-2s-1)...(2n-4s+3)
    for (int s = 0; s <= n / 2; ++s) {
        if (s > 0) {
            lap = lap.laplacian();
            A = 1;
            for (int k = 1; k <= s; ++k) A *= Rational(2 * k);
            for (int v = 2 * n - 2 * s + 1; v >= 2 * n - 4 * s + 3; v -= 2) A *= Rational(v);
        }
        out.push_back(harmonic_projection(lap).scaled(
            coeff_ops<S>::mul_rational(coeff_ops<S>::one(), Rational(1) / A)));
    }
    return out;
}

namespace detail {
template <class S>
std::array<BinaryForm<S>, 3> cartan_substitution();
}

// Ternary polynomials restricting exactly to xi^2, xi*eta, eta^2
// (which = 0, 1, 2 respectively).
template <class S>
TernaryPoly<S> detail_b_poly(int which);

template <class S>
BinaryForm<S> restrict_to_conic(const TernaryPoly<S>& f) {
    int n = std::max(f.degree(), 0);
    BinaryForm<S> out(2 * n);
    if (f.is_zero()) return out;
    auto sub = detail::cartan_substitution<S>();
    // Power tables for x(xi,eta), y(xi,eta), z(xi,eta).
    std::array<std::vector<BinaryForm<S>>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].push_back(BinaryForm<S>(std::vector<S>{coeff_ops<S>::one()}));
        for (int k = 1; k <= n; ++k) pw[v].push_back(pw[v][k - 1] * sub[v]);
    }
    for (const auto& [e, c] : f.terms()) {
        BinaryForm<S> t = (pw[0][e[0]] * pw[1][e[1]]) * pw[2][e[2]];
        out = out + t.scaled(c);
    }
    return out;
}

template <class S>
TernaryPoly<S> conic_preimage(const BinaryForm<S>& B) {
    int d = B.degree();
    if (d % 2 != 0) throw std::invalid_argument("conic_preimage: degree must be even");
    int n = d / 2;
    // Build from b_1 = xi^2, b_0/sqrt2 = xi eta, b_{-1} = eta^2 as ternary polys.
    TernaryPoly<S> out(n);
    TernaryPoly<S> b1 = detail_b_poly<S>(0);
    TernaryPoly<S> b0h = detail_b_poly<S>(1);  // b_0 / sqrt2 as a ternary poly
    TernaryPoly<S> bm1 = detail_b_poly<S>(2);
    for (int k = 0; k <= d; ++k) {
        const S& c = B.b(k);
        if (coeff_ops<S>::is_zero(c)) continue;
        int p = d - k, q = k;  // xi^p eta^q
        TernaryPoly<S> term = TernaryPoly<S>::monomial(0, 0, 0, coeff_ops<S>::one());
        int hp = p, hq = q;
        if (p % 2 == 1) {
            term = term * b0h;
            hp -= 1;
            hq -= 1;
        }
        for (int s = 0; s < hp / 2; ++s) term = term * b1;
        for (int s = 0; s < hq / 2; ++s) term = term * bm1;
        out = out + term.scaled(c);
    }
    return out;
}

}  // namespace harmonia
