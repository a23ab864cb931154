#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "harmonia/scalar.hpp"

namespace harmonia {

// Homogeneous polynomial in (x, y, z). Degree is fixed at first insertion;
// mixed-degree terms are rejected. A polynomial with no terms is the zero
// polynomial (its degree is whatever context assigned, -1 if never set).
template <class S>
class TernaryPoly {
public:
    using ops = coeff_ops<S>;
    using Exponents = std::array<int, 3>;

    TernaryPoly() = default;
    explicit TernaryPoly(int degree) : deg_(degree) {}

    static TernaryPoly monomial(int p, int q, int r, S c) {
        TernaryPoly f(p + q + r);
        f.add_term(p, q, r, std::move(c));
        return f;
    }

    int degree() const { return deg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, S>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(int p, int q, int r, const S& c) {
        if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("TernaryPoly: negative exponent");
        if (ops::is_zero(c)) return;
        int d = p + q + r;
        if (deg_ < 0) deg_ = d;
        if (d != deg_) throw std::invalid_argument("TernaryPoly: mixed-degree term");
        Exponents e{p, q, r};
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (ops::is_zero(it->second)) terms_.erase(it);
        }
    }

    S coeff(int p, int q, int r) const {
        auto it = terms_.find(Exponents{p, q, r});
        return it == terms_.end() ? ops::zero() : it->second;
    }

    friend TernaryPoly operator+(const TernaryPoly& a, const TernaryPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.deg_ != b.deg_) throw std::invalid_argument("TernaryPoly: degree mismatch in +");
        TernaryPoly z = a;
        for (const auto& [e, c] : b.terms_) z.add_term(e[0], e[1], e[2], c);
        return z;
    }
    friend TernaryPoly operator-(const TernaryPoly& a, const TernaryPoly& b) { return a + (-b); }
    TernaryPoly operator-() const {
        TernaryPoly z(deg_);
        for (const auto& [e, c] : terms_) z.terms_.emplace(e, ops::zero() - c);
        return z;
    }
    friend TernaryPoly operator*(const TernaryPoly& a, const TernaryPoly& b) {
        if (a.is_zero() || b.is_zero()) return TernaryPoly();
        TernaryPoly z(a.deg_ + b.deg_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                z.add_term(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ca * cb);
        return z;
    }
    TernaryPoly scaled(const S& c) const {
        if (ops::is_zero(c)) return TernaryPoly();
        TernaryPoly z(deg_);
        for (const auto& [e, k] : terms_) {
            S v = k * c;
            if (!ops::is_zero(v)) z.terms_.emplace(e, v);
        }
        return z;
    }

    TernaryPoly laplacian() const {
        TernaryPoly z(deg_ >= 2 ? deg_ - 2 : -1);
        for (const auto& [e, c] : terms_) {
            for (int v = 0; v < 3; ++v) {
                if (e[v] < 2) continue;
                Exponents d = e;
                d[v] -= 2;
                z.add_term(d[0], d[1], d[2], ops::mul_rational(c, Rational(e[v] * (e[v] - 1))));
            }
        }
        if (z.is_zero()) z.deg_ = (deg_ >= 2 ? deg_ - 2 : -1);
        return z;
    }

    // f = r^2 * quotient + remainder with the remainder z-degree <= 1 in every
    // monomial (z^2 eliminated via z^2 = r^2 - x^2 - y^2).
    std::pair<TernaryPoly, TernaryPoly> divide_by_r2() const {
        TernaryPoly quot(deg_ >= 2 ? deg_ - 2 : -1);
        TernaryPoly rem(deg_);
        // Work down from the highest z-power so each reduction step is final.
        std::map<Exponents, S> work(terms_.begin(), terms_.end());
        while (!work.empty()) {
            // Pick the term with maximal z-exponent.
            auto best = work.begin();
            for (auto it = work.begin(); it != work.end(); ++it)
                if (it->first[2] > best->first[2]) best = it;
            auto [e, c] = *best;
            work.erase(best);
            if (ops::is_zero(c)) continue;
            if (e[2] < 2) {
                rem.add_term(e[0], e[1], e[2], c);
                continue;
            }
            quot.add_term(e[0], e[1], e[2] - 2, c);
            // c*x^p y^q z^s - c*x^p y^q z^{s-2} * r^2 = -c x^{p+2}..z^{s-2} - c x^p y^{q+2} z^{s-2}
            auto put = [&work](Exponents key, const S& v) {
                auto it = work.find(key);
                if (it == work.end())
                    work.emplace(key, v);
                else
                    it->second = it->second + v;
            };
            put({e[0] + 2, e[1], e[2] - 2}, ops::zero() - c);
            put({e[0], e[1] + 2, e[2] - 2}, ops::zero() - c);
        }
        return {quot, rem};
    }

    ComplexF evaluate(ComplexF x, ComplexF y, ComplexF z) const {
        ComplexF acc = 0;
        for (const auto& [e, c] : terms_) {
            ComplexF t = ops::to_complex(c);
            for (int k = 0; k < e[0]; ++k) t *= x;
            for (int k = 0; k < e[1]; ++k) t *= y;
            for (int k = 0; k < e[2]; ++k) t *= z;
            acc += t;
        }
        return acc;
    }

    double coeff_norm() const {
        double s = 0;
        for (const auto& [e, c] : terms_) s += std::norm(ops::to_complex(c));
        return std::sqrt(s);
    }

    TernaryPoly<ComplexF> to_complex() const {
        TernaryPoly<ComplexF> z(deg_);
        for (const auto& [e, c] : terms_) z.add_term(e[0], e[1], e[2], ops::to_complex(c));
        return z;
    }

    TernaryPoly conjugated() const {
        TernaryPoly z(deg_);
        for (const auto& [e, c] : terms_) z.add_term(e[0], e[1], e[2], ops::conj(c));
        return z;
    }

    friend bool operator==(const TernaryPoly& a, const TernaryPoly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if (a.deg_ != b.deg_) return false;
        return (a - b).is_zero();
    }

private:
    int deg_ = -1;
    std::map<Exponents, S> terms_;
};

template <class S>
TernaryPoly<S> r2_poly() {
    TernaryPoly<S> f(2);
    f.add_term(2, 0, 0, coeff_ops<S>::one());
    f.add_term(0, 2, 0, coeff_ops<S>::one());
    f.add_term(0, 0, 2, coeff_ops<S>::one());
    return f;
}

// Binary form of degree d in (xi, eta): sum_k b_k xi^{d-k} eta^k.
template <class S>
class BinaryForm {
public:
    using ops = coeff_ops<S>;

    BinaryForm() : b_(1, ops::zero()) {}
    explicit BinaryForm(int degree) : b_(degree + 1, ops::zero()) {
        if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
    }
    explicit BinaryForm(std::vector<S> coeffs) : b_(std::move(coeffs)) {
        if (b_.empty()) throw std::invalid_argument("BinaryForm: empty coefficient list");
    }

    int degree() const { return static_cast<int>(b_.size()) - 1; }
    const std::vector<S>& coeffs() const { return b_; }
    const S& b(int k) const { return b_.at(k); }
    void set_b(int k, S c) { b_.at(k) = std::move(c); }
    // Coefficient of xi^p eta^q.
    const S& coeff_xi_eta(int p, int q) const {
        if (p + q != degree()) throw std::invalid_argument("BinaryForm: exponent mismatch");
        return b_.at(q);
    }

    bool is_zero() const {
        for (const auto& c : b_)
            if (!ops::is_zero(c)) return false;
        return true;
    }

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree() != b.degree()) throw std::invalid_argument("BinaryForm: degree mismatch");
        BinaryForm z(a.degree());
        for (int k = 0; k <= a.degree(); ++k) z.b_[k] = a.b_[k] + b.b_[k];
        return z;
    }
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + (-b); }
    BinaryForm operator-() const {
        BinaryForm z(degree());
        for (int k = 0; k <= degree(); ++k) z.b_[k] = ops::zero() - b_[k];
        return z;
    }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm z(a.degree() + b.degree());
        for (int i = 0; i <= a.degree(); ++i)
            for (int j = 0; j <= b.degree(); ++j) z.b_[i + j] = z.b_[i + j] + a.b_[i] * b.b_[j];
        return z;
    }
    BinaryForm scaled(const S& c) const {
        BinaryForm z(degree());
        for (int k = 0; k <= degree(); ++k) z.b_[k] = b_[k] * c;
        return z;
    }

    BinaryForm d_xi() const {
        if (degree() == 0) return BinaryForm(std::vector<S>{ops::zero()});
        BinaryForm z(degree() - 1);
        for (int k = 0; k < degree(); ++k)
            z.b_[k] = ops::mul_rational(b_[k], Rational(degree() - k));
        return z;
    }
    BinaryForm d_eta() const {
        if (degree() == 0) return BinaryForm(std::vector<S>{ops::zero()});
        BinaryForm z(degree() - 1);
        for (int k = 1; k <= degree(); ++k) z.b_[k - 1] = ops::mul_rational(b_[k], Rational(k));
        return z;
    }

    ComplexF evaluate(ComplexF xi, ComplexF eta) const {
        int d = degree();
        ComplexF acc = 0;
        for (int k = 0; k <= d; ++k) {
            ComplexF t = ops::to_complex(b_[k]);
            for (int s = 0; s < d - k; ++s) t *= xi;
            for (int s = 0; s < k; ++s) t *= eta;
            acc += t;
        }
        return acc;
    }

    // Classical view: form = sum_r a_r C(d,r) xi^{d-r} eta^r.
    std::vector<S> a_view() const {
        std::vector<S> a(b_.size());
        for (int r = 0; r <= degree(); ++r)
            a[r] = ops::mul_rational(b_[r], Rational(1, binomial(degree(), r)));
        return a;
    }
    static BinaryForm from_a_view(const std::vector<S>& a) {
        BinaryForm z(static_cast<int>(a.size()) - 1);
        for (int r = 0; r <= z.degree(); ++r)
            z.b_[r] = ops::mul_rational(a[r], Rational(binomial(z.degree(), r)));
        return z;
    }
    // Normalized view: phi^{j-r} = C(d,r)^{1/2} a_r, listed ascending in m
    // (index k = 0..d corresponds to m = k - j, 2j = d). Floating point.
    std::vector<ComplexF> phi_view() const {
        int d = degree();
        std::vector<ComplexF> phi(d + 1);
        for (int r = 0; r <= d; ++r) {
            ComplexF ar = ops::to_complex(b_[r]) / to_double(Rational(binomial(d, r)));
            phi[d - r] = ar * std::sqrt(to_double(Rational(binomial(d, r))));
        }
        return phi;
    }

    double coeff_norm() const {
        double s = 0;
        for (const auto& c : b_) s += std::norm(ops::to_complex(c));
        return std::sqrt(s);
    }

    BinaryForm<ComplexF> to_complex() const {
        std::vector<ComplexF> c(b_.size());
        for (std::size_t k = 0; k < b_.size(); ++k) c[k] = ops::to_complex(b_[k]);
        return BinaryForm<ComplexF>(std::move(c));
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if (a.degree() != b.degree()) return false;
        return (a - b).is_zero();
    }

private:
    std::vector<S> b_;
};

using TernaryPolyX = TernaryPoly<Ext>;
using TernaryPolyF = TernaryPoly<ComplexF>;
using BinaryFormX = BinaryForm<Ext>;
using BinaryFormF = BinaryForm<ComplexF>;

}  // namespace harmonia
