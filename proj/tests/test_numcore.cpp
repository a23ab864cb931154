#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "harmonia/numcore.hpp"

using namespace harmonia;

namespace {

HalfInt ht(int t) { return HalfInt::from_twice(t); }

// Decompose a SqrtRational into (rational coefficient, squarefree integer
// kernel): sign*sqrt(p/q) = (c) * sqrt(k) with k squarefree. Exact; used to
// sum mixed-radical expressions without floating point.
std::pair<Rational, BigInt> radical_split(const SqrtRational& v) {
    if (v.is_zero()) return {Rational(0), BigInt(1)};
    BigInt num = boost::multiprecision::numerator(v.radicand);
    BigInt den = boost::multiprecision::denominator(v.radicand);
    BigInt n = num * den;  // sqrt(num/den) = sqrt(num*den)/den
    BigInt square = 1, kernel = 1;
    for (BigInt p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int s = 0; s < e / 2; ++s) square *= p;
        if (e % 2 == 1) kernel *= p;
    }
    kernel *= n;  // leftover prime
    return {Rational(v.sign) * Rational(square, den), kernel};
}

// Exact sum of SqrtRationals as a map kernel -> rational coefficient.
struct RadicalSum {
    std::map<BigInt, Rational> terms;
    void add(const SqrtRational& v) {
        if (v.is_zero()) return;
        auto [c, k] = radical_split(v);
        terms[k] += c;
        if (terms[k] == 0) terms.erase(k);
    }
    bool is_zero() const { return terms.empty(); }
    bool equals_rational(const Rational& q) const {
        if (q == 0) return is_zero();
        return terms.size() == 1 && terms.count(1) == 1 && terms.at(1) == q;
    }
};

SqrtRational w3j(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
    return wigner_3j(ht(tj1), ht(tj2), ht(tj3), ht(tm1), ht(tm2), ht(tm3));
}

}  // namespace

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    // beyond the memo bound still works
    CHECK(factorial(201) == factorial(200) * 201);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(parity(4) == 1);
    CHECK(parity(-3) == -1);
}

TEST_CASE("half-integer labels") {
    HalfInt j(2);
    CHECK(j.twice == 4);
    CHECK(j.is_integer());
    CHECK(j.as_int() == 2);
    HalfInt h = HalfInt::from_twice(3);
    CHECK(!h.is_integer());
    CHECK(h.value() == doctest::Approx(1.5));
    CHECK_THROWS_AS(h.as_int(), std::invalid_argument);
    CHECK((j + h).twice == 7);
    CHECK((j - h).twice == 1);
    CHECK((-h).twice == -3);
    CHECK(HalfInt(1) < HalfInt(2));
}

TEST_CASE("signed square roots of rationals") {
    SqrtRational z;
    CHECK(z.is_zero());
    SqrtRational a = SqrtRational::sqrt_of(Rational(2));
    CHECK(a.value() == doctest::Approx(std::sqrt(2.0)));
    SqrtRational b = SqrtRational::of_rational(Rational(-3, 2));
    CHECK(b.sign == -1);
    CHECK(b.value() == doctest::Approx(-1.5));
    CHECK((a * a) == SqrtRational::of_rational(Rational(2)));
    CHECK((-a).sign == -1);
    CHECK(a.times(Rational(-2)) == SqrtRational(-1, Rational(8)));
    CHECK_THROWS_AS(SqrtRational::sqrt_of(Rational(-1)), std::invalid_argument);
    CHECK(SqrtRational(1, Rational(0)).is_zero());

    // associativity / commutativity on random triples, exact
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
    for (int it = 0; it < 1000; ++it) {
        auto rnd = [&] {
            int n = num(rng);
            if (n == 0) return SqrtRational();
            return SqrtRational(n > 0 ? 1 : -1, Rational(std::abs(n), den(rng)));
        };
        SqrtRational x = rnd(), y = rnd(), w = rnd();
        CHECK(((x * y) * w) == (x * (y * w)));
        CHECK((x * y) == (y * x));
    }
}

TEST_CASE("3j symbols: basic values and selection rules") {
    CHECK(w3j(0, 0, 0, 0, 0, 0) == SqrtRational::of_rational(1));
    // m-sum violation
    CHECK(w3j(2, 2, 2, 2, 2, 2).is_zero());
    // triangle violation
    CHECK(w3j(2, 2, 6, 0, 0, 0).is_zero());
    // |m| > j
    CHECK(w3j(2, 2, 2, 4, -2, -2).is_zero());
    // all-zero m column with odd j1+j2+j3 vanishes
    CHECK(w3j(2, 2, 2, 0, 0, 0).is_zero());
    // (j j 0; m -m 0) = (-1)^{j-m}/sqrt(2j+1)
    CHECK(w3j(2, 2, 0, 2, -2, 0) == SqrtRational(1, Rational(1, 3)));
    CHECK(w3j(2, 2, 0, 0, 0, 0) == SqrtRational(-1, Rational(1, 3)));
    // stretched: (j1 j2 j1+j2; j1 j2 -(j1+j2)) = (-1)^{2 j1}/sqrt(2J+1)
    CHECK(w3j(2, 2, 4, 2, 2, -4) == SqrtRational(1, Rational(1, 5)));
    CHECK(w3j(1, 1, 2, 1, 1, -2) == SqrtRational(-1, Rational(1, 3)));
    // non-integral j+m rejected
    CHECK_THROWS_AS(w3j(1, 2, 3, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(w3j(-2, 2, 2, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("3j symbols: permutation symmetries, exact") {
    for (int tj1 = 0; tj1 <= 6; ++tj1)
        for (int tj2 = 0; tj2 <= 6; ++tj2)
            for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2) {
                if (tj3 > 6) continue;
                int ph = parity((tj1 + tj2 + tj3) / 2);
                for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
                    for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
                        int tm3 = -tm1 - tm2;
                        if (std::abs(tm3) > tj3) continue;
                        SqrtRational v = w3j(tj1, tj2, tj3, tm1, tm2, tm3);
                        // cyclic
                        CHECK(w3j(tj2, tj3, tj1, tm2, tm3, tm1) == v);
                        CHECK(w3j(tj3, tj1, tj2, tm3, tm1, tm2) == v);
                        // transposition picks up (-1)^{j1+j2+j3}
                        SqrtRational s = v.times(Rational(ph));
                        CHECK(w3j(tj2, tj1, tj3, tm2, tm1, tm3) == s);
                        // m negation likewise
                        CHECK(w3j(tj1, tj2, tj3, -tm1, -tm2, -tm3) == s);
                    }
            }
}

TEST_CASE("3j symbols: orthogonality, exact for j <= 3") {
    for (int tj1 = 0; tj1 <= 6; ++tj1)
        for (int tj2 = 0; tj2 <= 6; ++tj2)
            for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2)
                for (int tj3p = std::abs(tj1 - tj2); tj3p <= tj1 + tj2; tj3p += 2)
                    for (int tm3 = -tj3; tm3 <= tj3; tm3 += 2)
                        for (int tm3p = -tj3p; tm3p <= tj3p; tm3p += 2) {
                            RadicalSum sum;
                            for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                                int tm2 = tm3 - tm1;
                                if (std::abs(tm2) > tj2) continue;
                                SqrtRational prod = w3j(tj1, tj2, tj3, tm1, tm2, -tm3) *
                                                    w3j(tj1, tj2, tj3p, tm1, tm2, -tm3p);
                                sum.add(prod.times(Rational(tj3 + 1)));
                            }
                            bool diag = (tj3 == tj3p && tm3 == tm3p);
                            CHECK(sum.equals_rational(diag ? Rational(1) : Rational(0)));
                        }
}

TEST_CASE("index raising") {
    CHECK(raising_phase(ht(3), ht(1)) == 1);
    CHECK(raising_phase(ht(3), ht(-1)) == -1);
    CHECK(raising_phase(HalfInt(2), HalfInt(-1)) == -1);
    CHECK_THROWS_AS(raising_phase(ht(3), ht(0)), std::invalid_argument);

    std::mt19937 rng(3);
    std::normal_distribution<double> N(0.0, 1.0);
    for (int twice_j : {2, 3, 4, 5}) {
        std::vector<ComplexF> v(twice_j + 1);
        for (auto& c : v) c = ComplexF(N(rng), N(rng));
        auto w = raise_lower(raise_lower(v, ht(twice_j)), ht(twice_j));
        double sgn = parity(twice_j);
        for (std::size_t k = 0; k < v.size(); ++k) CHECK(std::abs(w[k] - sgn * v[k]) < 1e-15);
    }
}
