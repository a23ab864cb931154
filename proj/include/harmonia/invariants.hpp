#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "harmonia/multipoly.hpp"
#include "harmonia/poly.hpp"

namespace harmonia {

// Classical coefficient view of a binary quantic:
// Phi = sum_r C(n,r) a_r xi^{n-r} eta^r.
template <class S>
struct QuanticCoefficients {
    int n = 0;
    std::vector<S> a;  // a_0..a_n

    QuanticCoefficients() : a(1, coeff_ops<S>::zero()) {}
    explicit QuanticCoefficients(int degree) : n(degree), a(degree + 1, coeff_ops<S>::zero()) {}

    static QuanticCoefficients from_form(const BinaryForm<S>& f) {
        QuanticCoefficients q(f.degree());
        q.a = f.a_view();
        return q;
    }
    BinaryForm<S> to_form() const { return BinaryForm<S>::from_a_view(a); }
    // phi^{j-r} = C(n,r)^{1/2} a_r, ascending in m.
    std::vector<ComplexF> phi_view() const { return to_form().phi_view(); }
};

// Polynomial in the coefficient gradients a_0..a_n (optionally xi, eta).
using GradientPoly = MultiPoly;

// --- polars, transvectants, apolarity ---

// r-th transvectant by the derivative double sum:
// ((n-r)!(m-r)!/(n! m!)) sum_k (-1)^k C(r,k) f_{xi^{r-k} eta^k} g_{xi^k eta^{r-k}}.
template <class S>
BinaryForm<S> transvectant(const BinaryForm<S>& f, const BinaryForm<S>& g, int r);

// Generalised polar of g with respect to f (degree n - m), computed by the
// m-fold doubled-variable Cayley Omega process. Zero form when n < m.
template <class S>
BinaryForm<S> polar(const BinaryForm<S>& f, const BinaryForm<S>& g);

// The 2(j1-j2)+1 normalized coupling contractions of f and g to total spin
// j1 - j2; all vanish exactly when the polar does (floating evaluation).
std::vector<ComplexF> apolar_contractions(const BinaryFormF& f, const BinaryFormF& g);

// True when the polar of g with respect to f vanishes. Cross-checked against
// the coupling-contraction route; a disagreement throws std::logic_error.
template <class S>
bool apolar(const BinaryForm<S>& f, const BinaryForm<S>& g, double tol = 1e-10);

template <class S>
BinaryForm<S> hessian(const BinaryForm<S>& f);

// sum_r (-1)^r C(n,r) a_r b_{n-r}; zero iff the equal-degree forms are conjugate.
template <class S>
S joint_invariant(const BinaryForm<S>& f, const BinaryForm<S>& g);

// --- annihilators and projectors ---

// Omega = sum_{k=0}^{n-1} (k+1) a_k d/d a_{k+1}.
GradientPoly annihilator_omega(const GradientPoly& F);
// O = sum_{k=0}^{n-1} (n-k) a_{k+1} d/d a_k.
GradientPoly annihilator_O(const GradientPoly& F);
// Primed extensions acting also on xi, eta: Omega' = Omega - eta d_xi,
// O' = O - xi d_eta.
GradientPoly annihilator_omega_primed(const GradientPoly& F);
GradientPoly annihilator_O_primed(const GradientPoly& F);

// (1/2)[O, Omega] applied to F (includes the xi, eta grading:
// weight(a_r) = r - n/2, weight(xi) = 1/2, weight(eta) = -1/2).
GradientPoly weight_operator(const GradientPoly& F);

// The common weight of an isobaric F; throws if F mixes weights.
Rational weight_eigenvalue(const GradientPoly& F);

// Covariant extraction: K = sum_r (-1)^r / (r!(r+1)!) O'^r Omega'^r F on a
// zero-weight isobaric F; Omega' K = O' K = 0.
GradientPoly hilbert_project(const GradientPoly& F);

// Extreme-state projector for an isobaric coefficient gradient G of weight
// eigenvalue w = -m or +m: series sum_r (-1)^r O^r Omega^r G / (r!(2m+2)...(2m+1+r)),
// mirrored (Omega^r O^r) for positive weight. The output is annihilated by
// Omega (w <= 0) or by O (w > 0); at m = 0 it is the coefficient-only form of
// hilbert_project.
GradientPoly loewdin_project(const GradientPoly& G);

// --- induced transformations and root systems ---

// Coefficients of Phi under (xi,eta) -> M(xi,eta): with columns l, m of M,
// a'_r = (r!(n-r)!/n!) [t^{n-r}] Phi(a; m1 + t l1, m2 + t l2).
template <class S>
QuanticCoefficients<S> induced_transform(const QuanticCoefficients<S>& f,
                                         const std::array<std::array<S, 2>, 2>& M);

// The e forms (-1)^i C(e-1,i) d_xi^{e-1-i} d_eta^i Phi, i = 0..e-1; they share
// a common root iff Phi has a root of multiplicity >= e.
template <class S>
std::vector<BinaryForm<S>> equal_root_system(const BinaryForm<S>& Phi, int e);

// Clebsch's factorisable companion of a harmonic Omega of degree n:
// Upsilon = sum_s (-1)^s [prod_{k<s} (n+k)/(n-k)] r^{2s} Delta^s(Omega^2) / (2s)!.
template <class S>
TernaryPoly<S> clebsch_upsilon(const TernaryPoly<S>& om);

template <class S>
struct QuarticResolvent {
    S I, J;                        // 4 lambda^3 - I lambda + J = 0
    std::array<ComplexF, 3> lambda;
    bool repeated = false;         // I^3 = 27 J^2
    ComplexF repeated_lambda{0.0, 0.0};
};

template <class S>
QuarticResolvent<S> quartic_resolvent(const BinaryForm<S>& B);

struct SchlesingerReport {
    double max_residual = 0;
    ComplexF constant{0.0, 0.0};  // T / polarization, estimated at the first sample
    int samples = 0;
    bool ok = false;
};

// Compares T at r(lambda,mu) = (l1 m1, (l1 m2 + l2 m1)/sqrt2, l2 m2) with the
// n-fold mixed polarization (lambda . grad)^n B evaluated at mu, at random
// two-spinor pairs, up to one global constant.
SchlesingerReport schlesinger_check(const BinaryFormF& B, const TernaryPolyF& T,
                                    int samples = 20, unsigned seed = 0, double tol = 1e-10);

// --- template implementations ---

namespace detail {
template <class S>
BinaryForm<S> mixed_derivative(const BinaryForm<S>& f, int dxi, int deta) {
    BinaryForm<S> z = f;
    for (int k = 0; k < dxi; ++k) z = z.d_xi();
    for (int k = 0; k < deta; ++k) z = z.d_eta();
    return z;
}
}  // namespace detail

template <class S>
BinaryForm<S> transvectant(const BinaryForm<S>& f, const BinaryForm<S>& g, int r) {
    int n = f.degree(), m = g.degree();
    if (r < 0 || r > std::min(n, m))
        throw std::invalid_argument("transvectant: index out of range");
    Rational pre = Rational(factorial(n - r)) * Rational(factorial(m - r)) /
                   (Rational(factorial(n)) * Rational(factorial(m)));
    BinaryForm<S> acc(n + m - 2 * r);
    for (int k = 0; k <= r; ++k) {
        BinaryForm<S> t =
            detail::mixed_derivative(f, r - k, k) * detail::mixed_derivative(g, k, r - k);
        acc = acc + t.scaled(coeff_ops<S>::mul_rational(
                  coeff_ops<S>::from_int(parity(k)), pre * Rational(binomial(r, k))));
    }
    return acc;
}

template <class S>
BinaryForm<S> polar(const BinaryForm<S>& f, const BinaryForm<S>& g) {
    using ops = coeff_ops<S>;
    int n = f.degree(), m = g.degree();
    if (n < m) return BinaryForm<S>(0);
    // F(xi, eta, xi', eta') with exponents (p, q, u, v); Omega = d_xi d_eta'
    // - d_eta d_xi' applied m times, then identify the primed variables.
    using Key = std::array<int, 4>;
    std::map<Key, S> F;
    for (int i = 0; i <= n; ++i) {
        if (ops::is_zero(f.b(i))) continue;
        for (int j = 0; j <= m; ++j) {
            if (ops::is_zero(g.b(j))) continue;
            F[{n - i, i, m - j, j}] = f.b(i) * g.b(j);
        }
    }
    for (int step = 0; step < m; ++step) {
        std::map<Key, S> next;
        auto put = [&next](Key k, const S& c) {
            auto it = next.find(k);
            if (it == next.end())
                next.emplace(k, c);
            else
                it->second = it->second + c;
        };
        for (const auto& [e, c] : F) {
            if (e[0] > 0 && e[3] > 0)
                put({e[0] - 1, e[1], e[2], e[3] - 1},
                    ops::mul_rational(c, Rational(e[0]) * Rational(e[3])));
            if (e[1] > 0 && e[2] > 0)
                put({e[0], e[1] - 1, e[2] - 1, e[3]},
                    ops::mul_rational(c, -Rational(e[1]) * Rational(e[2])));
        }
        F = std::move(next);
    }
    Rational pre = Rational(factorial(n - m)) / (Rational(factorial(n)) * Rational(factorial(m)));
    BinaryForm<S> out(n - m);
    for (const auto& [e, c] : F) {
        int q = e[1] + e[3];  // total eta power after identification
        out.set_b(q, out.b(q) + ops::mul_rational(c, pre));
    }
    return out;
}

template <class S>
bool apolar(const BinaryForm<S>& f, const BinaryForm<S>& g, double tol) {
    BinaryForm<S> h = polar(f, g);
    bool by_polar;
    if constexpr (std::is_same_v<S, Ext>) {
        by_polar = h.is_zero();
    } else {
        double scale = std::max(1e-300, f.coeff_norm() * g.coeff_norm());
        by_polar = h.coeff_norm() <= tol * scale;
    }
    if (f.degree() >= g.degree()) {
        auto contractions = apolar_contractions(f.to_complex(), g.to_complex());
        double scale = std::max(1e-300, f.coeff_norm() * g.coeff_norm());
        double worst = 0;
        for (const auto& c : contractions) worst = std::max(worst, std::abs(c));
        bool by_coupling = worst <= std::max(tol, 1e-9) * scale;
        if (by_coupling != by_polar)
            throw std::logic_error("apolar: polar and coupling routes disagree");
    }
    return by_polar;
}

template <class S>
BinaryForm<S> hessian(const BinaryForm<S>& f) {
    if (f.degree() < 2) throw std::invalid_argument("hessian: degree < 2");
    BinaryForm<S> fxx = f.d_xi().d_xi();
    BinaryForm<S> fyy = f.d_eta().d_eta();
    BinaryForm<S> fxy = f.d_xi().d_eta();
    return fxx * fyy - fxy * fxy;
}

template <class S>
S joint_invariant(const BinaryForm<S>& f, const BinaryForm<S>& g) {
    int n = f.degree();
    if (g.degree() != n) throw std::invalid_argument("joint_invariant: degree mismatch");
    auto a = f.a_view();
    auto b = g.a_view();
    S acc = coeff_ops<S>::zero();
    for (int r = 0; r <= n; ++r)
        acc = acc + coeff_ops<S>::mul_rational(a[r] * b[n - r],
                                               Rational(parity(r)) * Rational(binomial(n, r)));
    return acc;
}

template <class S>
QuanticCoefficients<S> induced_transform(const QuanticCoefficients<S>& f,
                                         const std::array<std::array<S, 2>, 2>& M) {
    using ops = coeff_ops<S>;
    int n = f.n;
    S det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    if (std::abs(ops::to_complex(det)) < 1e-12) throw std::invalid_argument("induced_transform: singular matrix");
    // Columns l = (M00, M10), m = (M01, M11); expand Phi(a; m1 + t l1, m2 + t l2)
    // as a polynomial in t.
    const S &l1 = M[0][0], &l2 = M[1][0], &m1 = M[0][1], &m2 = M[1][1];
    auto powers = [n](const S& base) {
        std::vector<S> pw(n + 1, coeff_ops<S>::one());
        for (int k = 1; k <= n; ++k) pw[k] = pw[k - 1] * base;
        return pw;
    };
    auto l1p = powers(l1), l2p = powers(l2), m1p = powers(m1), m2p = powers(m2);
    std::vector<S> t_coeff(n + 1, ops::zero());
    for (int s = 0; s <= n; ++s) {
        if (ops::is_zero(f.a[s])) continue;
        S lead = ops::mul_rational(f.a[s], Rational(binomial(n, s)));
        // (m1 + t l1)^{n-s} (m2 + t l2)^s
        for (int u = 0; u <= n - s; ++u)
            for (int v = 0; v <= s; ++v) {
                S term = lead * l1p[u] * m1p[n - s - u] * l2p[v] * m2p[s - v];
                t_coeff[u + v] =
                    t_coeff[u + v] +
                    ops::mul_rational(term, Rational(binomial(n - s, u) * binomial(s, v)));
            }
    }
    QuanticCoefficients<S> out(n);
    for (int r = 0; r <= n; ++r)
        out.a[r] = ops::mul_rational(
            t_coeff[n - r],
            Rational(factorial(r)) * Rational(factorial(n - r)) / Rational(factorial(n)));
    return out;
}

template <class S>
std::vector<BinaryForm<S>> equal_root_system(const BinaryForm<S>& Phi, int e) {
    int d = Phi.degree();
    if (e < 1 || e > d) throw std::invalid_argument("equal_root_system: e out of range");
    std::vector<BinaryForm<S>> out;
    for (int i = 0; i < e; ++i) {
        BinaryForm<S> t = detail::mixed_derivative(Phi, e - 1 - i, i);
        out.push_back(t.scaled(coeff_ops<S>::mul_rational(coeff_ops<S>::from_int(parity(i)),
                                                          Rational(binomial(e - 1, i)))));
    }
    return out;
}

template <class S>
TernaryPoly<S> clebsch_upsilon(const TernaryPoly<S>& om) {
    TernaryPoly<S> lap_in = om.laplacian();
    if constexpr (std::is_same_v<S, Ext>) {
        if (!lap_in.is_zero()) throw std::invalid_argument("clebsch_upsilon: input not harmonic");
    } else {
        if (lap_in.coeff_norm() > 1e-9 * std::max(1.0, om.coeff_norm()))
            throw std::invalid_argument("clebsch_upsilon: input not harmonic");
    }
    int n = om.degree();
    TernaryPoly<S> sq = om * om;
    TernaryPoly<S> result = sq;
    TernaryPoly<S> lap = sq;
    TernaryPoly<S> r2s = r2_poly<S>();
    Rational ratio = 1;  // prod_{k<s} (n+k)/(n-k)
    for (int s = 1; s <= n; ++s) {
        lap = lap.laplacian();
        if (lap.is_zero()) break;
        ratio *= Rational(n + s - 1) / Rational(n - s + 1);
        Rational coeff = Rational(parity(s)) * ratio / Rational(factorial(2 * s));
        result = result + (r2s * lap).scaled(
                              coeff_ops<S>::mul_rational(coeff_ops<S>::one(), coeff));
        if (s < n) r2s = r2s * r2_poly<S>();
    }
    return result;
}

namespace detail {
// Roots of lambda^3 + p lambda + q = 0.
std::array<ComplexF, 3> depressed_cubic_roots(ComplexF p, ComplexF q);
}

template <class S>
QuarticResolvent<S> quartic_resolvent(const BinaryForm<S>& B) {
    using ops = coeff_ops<S>;
    if (B.degree() != 4) throw std::invalid_argument("quartic_resolvent: degree != 4");
    auto a = B.a_view();
    // Classical I_det = a0 a4 - 4 a1 a3 + 3 a2^2 and the catalecticant J_det;
    // scaled so the resolvent reads 4 lambda^3 - I lambda + J = 0.
    S Idet = a[0] * a[4] - ops::mul_rational(a[1] * a[3], Rational(4)) +
             ops::mul_rational(a[2] * a[2], Rational(3));
    S Jdet = a[0] * (a[2] * a[4] - a[3] * a[3]) - a[1] * (a[1] * a[4] - a[2] * a[3]) +
             a[2] * (a[1] * a[3] - a[2] * a[2]);
    QuarticResolvent<S> out;
    out.I = ops::mul_rational(Idet, Rational(4));
    out.J = ops::mul_rational(Jdet, Rational(-8));
    ComplexF I = ops::to_complex(out.I), J = ops::to_complex(out.J);
    // 4 l^3 - I l + J = 0  <=>  l^3 + p l + q = 0.
    ComplexF p = -I / 4.0, q = J / 4.0;
    ComplexF disc = I * I * I - 27.0 * J * J;
    if constexpr (std::is_same_v<S, Ext>) {
        out.repeated = (out.I * out.I * out.I == ops::mul_rational(out.J * out.J, Rational(27)));
    } else {
        double scale = std::max({1.0, std::abs(I * I * I), 27.0 * std::abs(J * J)});
        out.repeated = std::abs(disc) <= 1e-9 * scale;
    }
    if (out.repeated) {
        if (std::abs(p) < 1e-300) {
            out.repeated_lambda = ComplexF(0, 0);
            out.lambda = {ComplexF(0, 0), ComplexF(0, 0), ComplexF(0, 0)};
        } else {
            ComplexF dbl = -3.0 * q / (2.0 * p);
            out.repeated_lambda = dbl;
            out.lambda = {dbl, dbl, 3.0 * q / p};
        }
    } else {
        out.lambda = detail::depressed_cubic_roots(p, q);
    }
    std::sort(out.lambda.begin(), out.lambda.end(), [](ComplexF u, ComplexF v) {
        return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
    });
    return out;
}

}  // namespace harmonia
