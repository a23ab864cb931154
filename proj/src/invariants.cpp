#include "harmonia/invariants.hpp"

#include <random>
#include <sstream>

namespace harmonia {

std::vector<ComplexF> apolar_contractions(const BinaryFormF& f, const BinaryFormF& g) {
    int n = f.degree(), m = g.degree();
    if (n < m) throw std::invalid_argument("apolar_contractions: deg f < deg g");
    HalfInt j1 = HalfInt::from_twice(n), j2 = HalfInt::from_twice(m);
    HalfInt j3 = j1 - j2;
    auto pf = f.phi_view();
    auto pg = g.phi_view();
    std::vector<ComplexF> out(j3.twice + 1, ComplexF(0, 0));
    for (int k3 = 0; k3 <= j3.twice; ++k3) {
        HalfInt m3 = HalfInt::from_twice(2 * k3 - j3.twice);
        ComplexF acc(0, 0);
        for (int k1 = 0; k1 <= n; ++k1) {
            HalfInt m1 = HalfInt::from_twice(2 * k1 - n);
            HalfInt m2 = m3 - m1;
            if (std::abs(m2.twice) > m) continue;
            SqrtRational w = wigner_3j(j1, j2, j3, m1, m2, -m3);
            if (w.is_zero()) continue;
            acc += static_cast<double>(raising_phase(j3, m3)) * w.value() * pf[k1] *
                   pg[(m2.twice + m) / 2];
        }
        out[k3] = acc;
    }
    return out;
}

GradientPoly annihilator_omega(const GradientPoly& F) {
    int n = F.n();
    GradientPoly out(n);
    for (const auto& [e, c] : F.terms())
        for (int k = 0; k + 1 <= n; ++k) {
            if (e[k + 1] == 0) continue;
            auto d = e;
            d[k + 1] -= 1;
            d[k] += 1;
            out.add_term(d, c * Ext(Rational((k + 1) * e[k + 1])));
        }
    return out;
}

GradientPoly annihilator_O(const GradientPoly& F) {
    int n = F.n();
    GradientPoly out(n);
    for (const auto& [e, c] : F.terms())
        for (int k = 0; k + 1 <= n; ++k) {
            if (e[k] == 0) continue;
            auto d = e;
            d[k] -= 1;
            d[k + 1] += 1;
            out.add_term(d, c * Ext(Rational((n - k) * e[k])));
        }
    return out;
}

GradientPoly annihilator_omega_primed(const GradientPoly& F) {
    // Omega' = Omega - eta d_xi.
    GradientPoly out = annihilator_omega(F);
    int xi = F.xi_slot(), eta = F.eta_slot();
    for (const auto& [e, c] : F.terms()) {
        if (e[xi] == 0) continue;
        auto d = e;
        d[xi] -= 1;
        d[eta] += 1;
        out.add_term(d, c * Ext(-Rational(e[xi])));
    }
    return out;
}

GradientPoly annihilator_O_primed(const GradientPoly& F) {
    // O' = O - xi d_eta.
    GradientPoly out = annihilator_O(F);
    int xi = F.xi_slot(), eta = F.eta_slot();
    for (const auto& [e, c] : F.terms()) {
        if (e[eta] == 0) continue;
        auto d = e;
        d[eta] -= 1;
        d[xi] += 1;
        out.add_term(d, c * Ext(-Rational(e[eta])));
    }
    return out;
}

namespace {

Rational term_weight(const GradientPoly& F, const MultiPoly::Exponents& e) {
    int n = F.n();
    Rational w = 0;
    for (int k = 0; k <= n; ++k) w += Rational(e[k]) * (Rational(k) - Rational(n, 2));
    w += Rational(e[F.xi_slot()], 2) - Rational(e[F.eta_slot()], 2);
    return w;
}

}  // namespace

GradientPoly weight_operator(const GradientPoly& F) {
    GradientPoly out(F.n());
    for (const auto& [e, c] : F.terms()) out.add_term(e, c * Ext(term_weight(F, e)));
    return out;
}

Rational weight_eigenvalue(const GradientPoly& F) {
    bool first = true;
    Rational w = 0;
    for (const auto& [e, c] : F.terms()) {
        Rational t = term_weight(F, e);
        if (first) {
            w = t;
            first = false;
        } else if (t != w) {
            throw std::invalid_argument("weight_eigenvalue: not isobaric (mixed weights)");
        }
    }
    return w;
}

GradientPoly hilbert_project(const GradientPoly& F) {
    Rational w = weight_eigenvalue(F);
    if (w != 0) {
        std::ostringstream os;
        os << "hilbert_project: nonzero total weight " << w;
        throw std::invalid_argument(os.str());
    }
    GradientPoly K = F;
    GradientPoly low = F;  // Omega'^r F
    Rational den = 1;      // r! (r+1)!
    for (int r = 1;; ++r) {
        low = annihilator_omega_primed(low);
        if (low.is_zero()) break;
        den *= Rational(r) * Rational(r + 1);
        GradientPoly lift = low;
        for (int s = 0; s < r; ++s) lift = annihilator_O_primed(lift);
        K = K + lift.scaled(Ext(Rational(parity(r)) / den));
    }
    return K;
}

GradientPoly loewdin_project(const GradientPoly& G) {
    Rational w = weight_eigenvalue(G);
    Rational m = w < 0 ? -w : w;
    // Descend toward the extreme state on the input's side of the multiplet:
    // nonpositive weight uses O^r Omega^r (output killed by Omega), positive
    // weight the mirror image (output killed by O).
    const bool lower_side = (w <= 0);
    auto down = lower_side ? annihilator_omega : annihilator_O;
    auto up = lower_side ? annihilator_O : annihilator_omega;
    GradientPoly K = G;
    GradientPoly g = G;
    Rational den = 1;  // r! (2m+2)(2m+3)...(2m+1+r)
    for (int r = 1;; ++r) {
        g = down(g);
        if (g.is_zero()) break;
        den *= Rational(r) * (2 * m + Rational(1 + r));
        GradientPoly lift = g;
        for (int s = 0; s < r; ++s) lift = up(lift);
        K = K + lift.scaled(Ext(Rational(parity(r)) / den));
    }
    return K;
}

namespace detail {

std::array<ComplexF, 3> depressed_cubic_roots(ComplexF p, ComplexF q) {
    if (std::abs(p) < 1e-300 && std::abs(q) < 1e-300)
        return {ComplexF(0, 0), ComplexF(0, 0), ComplexF(0, 0)};
    const ComplexF omega(-0.5, std::sqrt(3.0) / 2.0);
    ComplexF disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    ComplexF u3 = -q / 2.0 + disc;
    if (std::abs(u3) < 1e-14 * (std::abs(q) + 1e-300)) u3 = -q / 2.0 - disc;
    ComplexF u = std::pow(u3, 1.0 / 3.0);
    std::array<ComplexF, 3> roots;
    for (int k = 0; k < 3; ++k) {
        ComplexF uk = u;
        for (int s = 0; s < k; ++s) uk *= omega;
        roots[k] = uk - p / (3.0 * uk);
    }
    return roots;
}

}  // namespace detail

SchlesingerReport schlesinger_check(const BinaryFormF& B, const TernaryPolyF& T, int samples,
                                    unsigned seed, double tol) {
    int d = B.degree();
    if (d % 2 != 0) throw std::invalid_argument("schlesinger_check: odd binary degree");
    int n = d / 2;
    if (T.degree() != n)
        throw std::invalid_argument("schlesinger_check: ternary degree must be half the binary");
    if (T.laplacian().coeff_norm() > 1e-9 * std::max(1.0, T.coeff_norm()))
        throw std::invalid_argument("schlesinger_check: ternary input not harmonic");

    // Precompute the n-th mixed derivatives of B.
    std::vector<BinaryFormF> forms;
    for (int k = 0; k <= n; ++k) forms.push_back(detail::mixed_derivative(B, n - k, k));

    std::mt19937 rng(seed);
    std::normal_distribution<double> N(0.0, 1.0);
    auto spinor = [&]() {
        ComplexF a(N(rng), N(rng)), b(N(rng), N(rng));
        double s = std::sqrt(std::norm(a) + std::norm(b));
        return std::pair<ComplexF, ComplexF>(a / s, b / s);
    };
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const ComplexF I(0, 1);

    SchlesingerReport rep;
    bool have_constant = false;
    for (int s = 0; s < samples; ++s) {
        auto [l1, l2] = spinor();
        auto [m1, m2] = spinor();
        ComplexF P(0, 0);
        for (int k = 0; k <= n; ++k) {
            ComplexF t = to_double(Rational(binomial(n, k)));
            for (int u = 0; u < n - k; ++u) t *= l1;
            for (int u = 0; u < k; ++u) t *= l2;
            P += t * forms[k].evaluate(m1, m2);
        }
        ComplexF r1 = l1 * m1, r0 = (l1 * m2 + l2 * m1) * inv_sqrt2, rm1 = l2 * m2;
        ComplexF x = I * inv_sqrt2 * (rm1 - r1);
        ComplexF y = (r1 + rm1) * inv_sqrt2;
        ComplexF z = I * r0;
        ComplexF Tv = T.evaluate(x, y, z);
        if (!have_constant) {
            if (std::abs(P) < 1e-8 * std::max(1.0, B.coeff_norm())) continue;  // degenerate draw
            rep.constant = Tv / P;
            have_constant = true;
        }
        double resid = std::abs(Tv - rep.constant * P) /
                       std::max({1.0, std::abs(Tv), std::abs(rep.constant * P)});
        rep.max_residual = std::max(rep.max_residual, resid);
        ++rep.samples;
    }
    rep.ok = have_constant && rep.max_residual <= tol;
    return rep;
}

}  // namespace harmonia
