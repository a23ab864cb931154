#include "harmonia/numcore.hpp"

#include <algorithm>
#include <mutex>

namespace harmonia {

namespace {
constexpr int kFactorialCacheBound = 200;
}

const BigInt& factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    static std::vector<BigInt> cache = [] {
        std::vector<BigInt> c(kFactorialCacheBound + 1);
        c[0] = 1;
        for (int i = 1; i <= kFactorialCacheBound; ++i) c[i] = c[i - 1] * i;
        return c;
    }();
    if (n <= kFactorialCacheBound) return cache[n];
    // Rare path beyond the cache bound; thread-local so readers stay lock-free.
    thread_local BigInt big;
    big = cache[kFactorialCacheBound];
    for (int i = kFactorialCacheBound + 1; i <= n; ++i) big *= i;
    return big;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

double to_double(const Rational& q) { return static_cast<double>(q); }

int raising_phase(HalfInt j, HalfInt m) {
    int t = j.twice + m.twice;
    if (t % 2 != 0) throw std::invalid_argument("raising_phase: j+m not integral");
    return parity(t / 2);
}

std::vector<ComplexF> raise_lower(const std::vector<ComplexF>& phi, HalfInt j) {
    if (j.twice < 0 || static_cast<int>(phi.size()) != j.twice + 1)
        throw std::invalid_argument("raise_lower: list length must be 2j+1");
    std::vector<ComplexF> out(phi.size());
    for (int k = 0; k <= j.twice; ++k) {
        HalfInt m = HalfInt::from_twice(2 * k - j.twice);
        // phi^m = (-1)^{j+m} phi_{-m}; -m sits at index 2j-k.
        out[k] = static_cast<double>(raising_phase(j, m)) * phi[j.twice - k];
    }
    return out;
}

SqrtRational wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    if (j1.twice < 0 || j2.twice < 0 || j3.twice < 0)
        throw std::invalid_argument("wigner_3j: negative j");
    for (auto [j, m] : {std::pair{j1, m1}, {j2, m2}, {j3, m3}})
        if ((j.twice + m.twice) % 2 != 0)
            throw std::invalid_argument("wigner_3j: j+m not integral");
    // Selection rules.
    if (m1.twice + m2.twice + m3.twice != 0) return SqrtRational();
    if (std::abs(m1.twice) > j1.twice || std::abs(m2.twice) > j2.twice ||
        std::abs(m3.twice) > j3.twice)
        return SqrtRational();
    int t1 = (j1.twice + j2.twice - j3.twice) / 2;
    int t2 = (j1.twice - j2.twice + j3.twice) / 2;
    int t3 = (-j1.twice + j2.twice + j3.twice) / 2;
    if (t1 < 0 || t2 < 0 || t3 < 0) return SqrtRational();
    if ((j1.twice + j2.twice + j3.twice) % 2 != 0) return SqrtRational();

    int jpm1 = (j1.twice + m1.twice) / 2, jmm1 = (j1.twice - m1.twice) / 2;
    int jpm2 = (j2.twice + m2.twice) / 2, jmm2 = (j2.twice - m2.twice) / 2;
    int jpm3 = (j3.twice + m3.twice) / 2, jmm3 = (j3.twice - m3.twice) / 2;

    // Racah single sum over k.
    int a1 = t1;                                     // j1+j2-j3-k >= 0
    int a2 = jmm1;                                   // j1-m1-k >= 0
    int a3 = jpm2;                                   // j2+m2-k >= 0
    int b1 = (j3.twice - j2.twice + m1.twice) / 2;   // j3-j2+m1+k >= 0
    int b2 = (j3.twice - j1.twice - m2.twice) / 2;   // j3-j1-m2+k >= 0
    int kmin = std::max({0, -b1, -b2});
    int kmax = std::min({a1, a2, a3});
    Rational sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        BigInt den = factorial(k) * factorial(a1 - k) * factorial(a2 - k) * factorial(a3 - k) *
                     factorial(b1 + k) * factorial(b2 + k);
        sum += Rational(parity(k), 1) / Rational(den);
    }
    if (sum == 0) return SqrtRational();

    Rational delta = Rational(factorial(t1) * factorial(t2) * factorial(t3),
                              factorial((j1.twice + j2.twice + j3.twice) / 2 + 1));
    Rational prod(factorial(jpm1) * factorial(jmm1) * factorial(jpm2) * factorial(jmm2) *
                  factorial(jpm3) * factorial(jmm3));
    int phase = parity((j1.twice - j2.twice - m3.twice) / 2);
    int sgn = phase * (sum > 0 ? 1 : -1);
    return SqrtRational(sgn, sum * sum * delta * prod);
}

}  // namespace harmonia
