#pragma once

#include <map>
#include <vector>

#include "harmonia/scalar.hpp"

namespace harmonia {

// Exact polynomial in the variables a_0..a_n, xi, eta (n+3 slots; the last
// two are xi and eta). Used by the annihilator operators and projectors.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(int n) : n_(n) {}

    int n() const { return n_; }
    int nvars() const { return n_ + 3; }
    int xi_slot() const { return n_ + 1; }
    int eta_slot() const { return n_ + 2; }

    static MultiPoly variable(int n, int slot, Ext c = Ext(1)) {
        MultiPoly f(n);
        Exponents e(n + 3, 0);
        e[slot] = 1;
        f.add_term(e, c);
        return f;
    }
    static MultiPoly a_var(int n, int r) { return variable(n, r); }
    static MultiPoly constant(int n, Ext c) {
        MultiPoly f(n);
        f.add_term(Exponents(n + 3, 0), c);
        return f;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Ext>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Ext& c) {
        if (static_cast<int>(e.size()) != nvars())
            throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check_compat(a, b);
        MultiPoly z = a.is_zero() ? MultiPoly(b.n_) : a;
        if (a.is_zero()) z.n_ = b.n_;
        for (const auto& [e, c] : b.terms_) z.add_term(e, c);
        return z;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + b.scaled(Ext(-1)); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check_compat(a, b);
        MultiPoly z(std::max(a.n_, b.n_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                z.add_term(e, ca * cb);
            }
        return z;
    }
    MultiPoly scaled(const Ext& c) const {
        MultiPoly z(n_);
        if (c.is_zero()) return z;
        for (const auto& [e, k] : terms_) z.add_term(e, k * c);
        return z;
    }

    MultiPoly derivative(int slot) const {
        MultiPoly z(n_);
        for (const auto& [e, c] : terms_) {
            if (e[slot] == 0) continue;
            Exponents d = e;
            d[slot] -= 1;
            z.add_term(d, c * Ext(Rational(e[slot])));
        }
        return z;
    }
    MultiPoly times_var(int slot) const {
        MultiPoly z(n_);
        for (const auto& [e, c] : terms_) {
            Exponents d = e;
            d[slot] += 1;
            z.add_term(d, c);
        }
        return z;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return (a - b).is_zero();
    }

private:
    static void check_compat(const MultiPoly& a, const MultiPoly& b) {
        if (!a.is_zero() && !b.is_zero() && a.n_ != b.n_)
            throw std::invalid_argument("MultiPoly: variable-set mismatch");
    }

    int n_ = 0;
    std::map<Exponents, Ext> terms_;
};

}  // namespace harmonia
