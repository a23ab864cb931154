#include "harmonia/harmonic.hpp"

#include <map>
#include <mutex>

namespace harmonia {

namespace {

template <class S>
S s_i();
template <>
Ext s_i<Ext>() {
    return Ext::i();
}
template <>
ComplexF s_i<ComplexF>() {
    return ComplexF(0, 1);
}

template <class S>
S s_inv_sqrt2();  // 1/sqrt2
template <>
Ext s_inv_sqrt2<Ext>() {
    return Ext::sqrt2() * Ext(Rational(1, 2));
}
template <>
ComplexF s_inv_sqrt2<ComplexF>() {
    return ComplexF(1.0 / std::sqrt(2.0), 0);
}

}  // namespace

namespace detail {

// Cartan-map images of x, y, z as binary quadratics (b-coefficients of
// xi^2, xi eta, eta^2).
template <class S>
std::array<BinaryForm<S>, 3> cartan_substitution() {
    using ops = coeff_ops<S>;
    S is2 = s_i<S>() * s_inv_sqrt2<S>();   // i/sqrt2
    S s2i = s_i<S>() * (ops::mul_rational(s_inv_sqrt2<S>(), Rational(2)));  // i*sqrt2
    BinaryForm<S> x(std::vector<S>{ops::zero() - is2, ops::zero(), is2});
    BinaryForm<S> y(std::vector<S>{s_inv_sqrt2<S>(), ops::zero(), s_inv_sqrt2<S>()});
    BinaryForm<S> z(std::vector<S>{ops::zero(), s2i, ops::zero()});
    return {x, y, z};
}

template std::array<BinaryForm<Ext>, 3> cartan_substitution<Ext>();
template std::array<BinaryForm<ComplexF>, 3> cartan_substitution<ComplexF>();

}  // namespace detail

// which = 0: b_1 = (ix+y)/sqrt2 -> xi^2
// which = 1: b_0/sqrt2 = -iz/sqrt2 -> xi eta
// which = 2: b_{-1} = (y-ix)/sqrt2 -> eta^2
template <class S>
TernaryPoly<S> detail_b_poly(int which) {
    using ops = coeff_ops<S>;
    S is2 = s_i<S>() * s_inv_sqrt2<S>();
    TernaryPoly<S> f(1);
    switch (which) {
        case 0:
            f.add_term(1, 0, 0, is2);
            f.add_term(0, 1, 0, s_inv_sqrt2<S>());
            break;
        case 1:
            f.add_term(0, 0, 1, ops::zero() - is2);
            break;
        case 2:
            f.add_term(1, 0, 0, ops::zero() - is2);
            f.add_term(0, 1, 0, s_inv_sqrt2<S>());
            break;
        default:
            throw std::invalid_argument("detail_b_poly: bad selector");
    }
    return f;
}

template TernaryPoly<Ext> detail_b_poly<Ext>(int);
template TernaryPoly<ComplexF> detail_b_poly<ComplexF>(int);

TernaryPolyX solid_harmonic_deg1(int M) {
    // C^1_1 = (ix+y)/sqrt2, C^1_0 = -iz, C^1_{-1} = (y-ix)/sqrt2.
    switch (M) {
        case 1:
            return detail_b_poly<Ext>(0);
        case -1:
            return detail_b_poly<Ext>(2);
        case 0: {
            TernaryPolyX f(1);
            f.add_term(0, 0, 1, Ext() - Ext::i());
            return f;
        }
        default:
            throw std::invalid_argument("solid_harmonic_deg1: |M| > 1");
    }
}

TernaryPolyF solid_harmonic(int L, int M) {
    if (L < 0 || std::abs(M) > L) throw std::invalid_argument("solid_harmonic: |M| > L");
    static std::map<std::pair<int, int>, TernaryPolyF> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (memo.empty()) {
        TernaryPolyF one(0);
        one.add_term(0, 0, 0, ComplexF(1, 0));
        memo[{0, 0}] = one;
        for (int m = -1; m <= 1; ++m) memo[{1, m}] = solid_harmonic_deg1(m).to_complex();
    }
    for (int l = 2; l <= L; ++l) {
        if (memo.count({l, 0})) continue;
        for (int m = -l; m <= l; ++m) {
            // (recurs2): C^l_m = sqrt((4l^2-1)/l) * 3j[(l,m),(1,m1)^,(l-1,m2)^]
            //            C^{l-1}_{m2} C^1_{m1}, with raised-index columns.
            TernaryPolyF acc(l);
            double norm = std::sqrt((4.0 * l * l - 1.0) / l);
            for (int m1 = -1; m1 <= 1; ++m1) {
                int m2 = m - m1;
                if (std::abs(m2) > l - 1) continue;
                SqrtRational w = wigner_3j(l, 1, l - 1, m, -m1, -m2);
                if (w.is_zero()) continue;
                double phase = parity(1 + m1) * parity(l - 1 + m2);
                acc = acc + (memo[{1, m1}] * memo[{l - 1, m2}])
                                .scaled(ComplexF(norm * phase * w.value(), 0));
            }
            memo[{l, m}] = acc;
        }
    }
    return memo[{L, M}];
}

HarmonicNormalForm reconstruct_from_conic(const BinaryFormF& B) {
    int d = B.degree();
    if (d % 2 != 0) throw std::invalid_argument("reconstruct_from_conic: odd degree");
    int L = d / 2;
    HarmonicNormalForm nf(L);
    for (int M = -L; M <= L; ++M) {
        // phi^M = b(xi^{L+M} eta^{L-M}) * 2^{L/2} L! sqrt((L+M)!(L-M)!) / (2L)!
        ComplexF c = B.b(L - M);
        double fac = std::pow(2.0, L / 2.0) * to_double(Rational(factorial(L))) *
                     std::sqrt(to_double(Rational(factorial(L + M) * factorial(L - M)))) /
                     to_double(Rational(factorial(2 * L)));
        nf.set(M, c * fac);
    }
    return nf;
}

TernaryPolyF normal_form_to_poly(const HarmonicNormalForm& nf) {
    TernaryPolyF f(nf.L);
    for (int M = -nf.L; M <= nf.L; ++M) {
        ComplexF c = nf.get(M);
        if (c == ComplexF(0, 0)) continue;
        f = f + solid_harmonic(nf.L, M).scaled(c);
    }
    return f;
}

HarmonicNormalForm poly_to_normal_form(const TernaryPolyF& f, double tol) {
    if (f.is_zero()) return HarmonicNormalForm(std::max(f.degree(), 0));
    double resid = f.laplacian().coeff_norm();
    if (resid > tol * f.coeff_norm())
        throw std::invalid_argument("poly_to_normal_form: input not harmonic, Laplacian residual " +
                                    std::to_string(resid));
    return reconstruct_from_conic(restrict_to_conic(f));
}

std::vector<HarmonicProductTerm> compose_harmonics(int L1, int M1, int L2, int M2) {
    if (std::abs(M1) > L1 || std::abs(M2) > L2)
        throw std::invalid_argument("compose_harmonics: |M| > L");
    // Expand the product through its Gauss decomposition; each component is a
    // multiple of C^{L3}_{M1+M2} by angular-momentum addition.
    TernaryPolyF prod = solid_harmonic(L1, M1) * solid_harmonic(L2, M2);
    int M3 = M1 + M2;
    std::vector<HarmonicProductTerm> out;
    auto parts = gauss_decompose(prod);
    double scale = prod.coeff_norm();
    for (std::size_t s = 0; s < parts.size(); ++s) {
        int L3 = L1 + L2 - 2 * static_cast<int>(s);
        if (parts[s].is_zero() || std::abs(M3) > L3) continue;
        if (parts[s].coeff_norm() < 1e-12 * std::max(scale, 1e-300)) continue;
        TernaryPolyF basis = solid_harmonic(L3, M3);
        // Match on the largest basis coefficient.
        ComplexF best(0, 0);
        std::array<int, 3> bexp{0, 0, 0};
        for (const auto& [e, c] : basis.terms())
            if (std::abs(c) > std::abs(best)) {
                best = c;
                bexp = e;
            }
        ComplexF ratio = parts[s].coeff(bexp[0], bexp[1], bexp[2]) / best;
        out.push_back(HarmonicProductTerm{L3, M3, ratio});
    }
    return out;
}

ComplexF biaxal_harmonic(int L, const std::array<ComplexF, 3>& r1,
                         const std::array<ComplexF, 3>& r2) {
    auto dot = [](const std::array<ComplexF, 3>& a, const std::array<ComplexF, 3>& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    ComplexF r1sq = dot(r1, r1), r2sq = dot(r2, r2), rr = dot(r1, r2);
    ComplexF acc = 0;
    for (int K = 0; 2 * K <= L; ++K) {
        double c = static_cast<double>(parity(K)) *
                   to_double(Rational(binomial(L, K) * binomial(2 * L - 2 * K, L)));
        ComplexF t = c;
        for (int s = 0; s < K; ++s) t *= r1sq * r2sq;
        for (int s = 0; s < L - 2 * K; ++s) t *= rr;
        acc += t;
    }
    return acc / std::pow(2.0, L);
}

}  // namespace harmonia
