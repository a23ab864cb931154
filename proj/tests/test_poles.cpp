#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "harmonia/harmonic.hpp"
#include "harmonia/poles.hpp"

using namespace harmonia;

namespace {

const double S2 = std::sqrt(2.0), S3 = std::sqrt(3.0), S6 = std::sqrt(6.0);

// -3x^4 - 3y^4 - 8z^4 - 6x^2y^2 + 24y^2z^2 + 24x^2z^2 - 60 sqrt2 x^2yz + 20 sqrt2 y^3z
TernaryPolyF tetrahedral_quartic() {
    TernaryPolyF H(4);
    H.add_term(4, 0, 0, -3);
    H.add_term(0, 4, 0, -3);
    H.add_term(0, 0, 4, -8);
    H.add_term(2, 2, 0, -6);
    H.add_term(0, 2, 2, 24);
    H.add_term(2, 0, 2, 24);
    H.add_term(2, 1, 1, -60 * S2);
    H.add_term(0, 3, 1, 20 * S2);
    return H;
}

// The tetrahedral axes in the orientation whose product reproduces the
// quartic over 135.
std::vector<Pole> tetrahedral_poles() {
    return {Pole{{0, 0, 1}, 1}, Pole{{0, 2 * S2 / 3, -1.0 / 3}, 1},
            Pole{{-S6 / 3, -S2 / 3, -1.0 / 3}, 1}, Pole{{S6 / 3, -S2 / 3, -1.0 / 3}, 1}};
}

TernaryPolyF cross_terms() {
    TernaryPolyF f(2);
    f.add_term(1, 1, 0, 1);
    f.add_term(0, 1, 1, 1);
    f.add_term(1, 0, 1, 1);
    return f;
}

TernaryPolyF random_real_harmonic(std::mt19937& rng, int L) {
    std::normal_distribution<double> N(0.0, 1.0);
    HarmonicNormalForm nf(L);
    for (int M = 0; M <= L; ++M) {
        ComplexF v(N(rng), M == 0 ? 0.0 : N(rng));
        if (M == 0 && L % 2 == 1) v = ComplexF(0, N(rng));
        nf.set(M, v);
        nf.set(-M, double(parity(L - M)) * std::conj(v));
    }
    return normal_form_to_poly(nf);
}

double dir_dist(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    double s = 0;
    for (int k = 0; k < 3; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
}

double dir_dist_up_to_sign(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    std::array<double, 3> mb{-b[0], -b[1], -b[2]};
    return std::min(dir_dist(a, b), dir_dist(a, mb));
}

// Greedy matching of computed poles against references, sign-insensitive.
double match_poles(const std::vector<Pole>& got, const std::vector<std::array<double, 3>>& want) {
    std::vector<Pole> flat;
    for (const auto& p : got)
        for (int s = 0; s < p.multiplicity; ++s) flat.push_back(Pole{p.dir, 1});
    if (flat.size() != want.size()) return 1e9;
    std::vector<bool> used(flat.size(), false);
    double worst = 0;
    for (const auto& w : want) {
        double best = 1e9;
        std::size_t bk = 0;
        for (std::size_t k = 0; k < flat.size(); ++k) {
            if (used[k]) continue;
            double d = dir_dist_up_to_sign(flat[k].dir, w);
            if (d < best) {
                best = d;
                bk = k;
            }
        }
        used[bk] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

// Apply a rotation matrix to a polynomial: f(R^T r).
TernaryPolyF rotate_poly(const TernaryPolyF& f, const std::array<std::array<double, 3>, 3>& R) {
    // substitute x_i -> sum_j R_ji x_j (i.e. evaluate f at R^T r)
    std::array<TernaryPolyF, 3> lin;
    for (int i = 0; i < 3; ++i) {
        TernaryPolyF l(1);
        l.add_term(1, 0, 0, R[0][i]);
        l.add_term(0, 1, 0, R[1][i]);
        l.add_term(0, 0, 1, R[2][i]);
        lin[i] = l;
    }
    TernaryPolyF out(f.degree());
    for (const auto& [e, c] : f.terms()) {
        TernaryPolyF t = TernaryPolyF::monomial(0, 0, 0, 1);
        for (int i = 0; i < 3; ++i)
            for (int s = 0; s < e[i]; ++s) t = t * lin[i];
        out = out + t.scaled(c);
    }
    return out;
}

std::array<std::array<double, 3>, 3> random_rotation(std::mt19937& rng) {
    std::normal_distribution<double> N(0.0, 1.0);
    // Gram-Schmidt on a random frame
    std::array<std::array<double, 3>, 3> R;
    for (auto& row : R)
        for (auto& v : row) v = N(rng);
    auto dot = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
            double d = dot(R[i], R[j]);
            for (int k = 0; k < 3; ++k) R[i][k] -= d * R[j][k];
        }
        double n = std::sqrt(dot(R[i], R[i]));
        for (auto& v : R[i]) v /= n;
    }
    // force det = +1
    std::array<double, 3> c{R[0][1] * R[1][2] - R[0][2] * R[1][1],
                            R[0][2] * R[1][0] - R[0][0] * R[1][2],
                            R[0][0] * R[1][1] - R[0][1] * R[1][0]};
    if (dot(c, R[2]) < 0)
        for (auto& v : R[2]) v = -v;
    return R;
}

}  // namespace

TEST_CASE("projective roots of binary forms") {
    // xi eta has one root at 0 and one at infinity
    BinaryFormF f(std::vector<ComplexF>{0, 1, 0});
    auto rs = find_projective_roots(f);
    REQUIRE(rs.total_multiplicity() == 2);
    bool seen0 = false, seeninf = false;
    for (const auto& r : rs.roots) {
        if (r.root.infinite) seeninf = true;
        else if (std::abs(r.root.t) < 1e-12) seen0 = true;
    }
    CHECK(seen0);
    CHECK(seeninf);
    CHECK_THROWS_AS(find_projective_roots(BinaryFormF(4)), std::invalid_argument);

    // the restricted cross-term quartic has two double roots (1-i)(1 +- sqrt3)/2
    BinaryFormF q = restrict_to_conic(cross_terms());
    auto qr = find_projective_roots(q);
    CHECK(qr.total_multiplicity() == 4);
    std::vector<ComplexF> want{{(1 + S3) / 2, -(1 + S3) / 2}, {(1 - S3) / 2, -(1 - S3) / 2}};
    for (const auto& w : want) {
        bool found = false;
        for (const auto& r : qr.roots)
            if (!r.root.infinite && std::abs(r.root.t - w) < 1e-8 && r.multiplicity == 2)
                found = true;
        CHECK(found);
    }

    // the tetrahedral octavic contains the root -(1/2)sqrt(3/2) + i/(2 sqrt2)
    BinaryFormF o = restrict_to_conic(tetrahedral_quartic());
    auto orts = find_projective_roots(o);
    CHECK(orts.total_multiplicity() == 8);
    ComplexF special(-0.5 * std::sqrt(1.5), 1.0 / (2 * S2));
    bool found = false;
    for (const auto& r : orts.roots)
        if (!r.root.infinite && std::abs(r.root.t - special) < 1e-9) found = true;
    CHECK(found);
}

TEST_CASE("conjugate pairing of root sets") {
    // 0 pairs with infinity
    BinaryFormF f(std::vector<ComplexF>{0, 1, 0});
    auto pairs = pair_conjugate_roots(find_projective_roots(f));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].multiplicity == 1);

    // the cross-term quartic roots are mutually antipodal double roots
    auto qp = pair_conjugate_roots(find_projective_roots(restrict_to_conic(cross_terms())));
    REQUIRE(qp.size() == 1);
    CHECK(qp[0].multiplicity == 2);

    // restrictions of random real harmonics always pair off completely
    std::mt19937 rng(1);
    for (int L = 1; L <= 6; ++L)
        for (int it = 0; it < 10; ++it) {
            auto B = restrict_to_conic(random_real_harmonic(rng, L));
            auto rp = pair_conjugate_roots(find_projective_roots(B));
            int total = 0;
            for (const auto& p : rp) total += p.multiplicity;
            CHECK(total == L);
        }

    // an unpaired configuration is rejected
    BinaryFormF bad(std::vector<ComplexF>{1, 0});  // single root, odd multiplicity
    CHECK_THROWS(pair_conjugate_roots(find_projective_roots(bad)));
}

TEST_CASE("pole decomposition goldens") {
    // phi = z
    TernaryPolyF z = TernaryPolyF::monomial(0, 0, 1, 1);
    auto d = maxwell_poles(z);
    CHECK(d.C == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(d.poles.size() == 1);
    CHECK(dir_dist(d.poles[0].dir, {0, 0, 1}) < 1e-12);
    CHECK(d.G.is_zero());

    // phi = xy + yz + zx: double pole along (1,1,1)/sqrt3
    auto d9 = maxwell_poles(cross_terms());
    CHECK(d9.C == doctest::Approx(1.5).epsilon(1e-10));
    REQUIRE(d9.poles.size() == 1);
    CHECK(d9.poles[0].multiplicity == 2);
    CHECK(dir_dist(d9.poles[0].dir, {1 / S3, 1 / S3, 1 / S3}) < 1e-10);
    REQUIRE(d9.G.degree() == 0);
    CHECK(std::abs(d9.G.coeff(0, 0, 0) - ComplexF(-0.5, 0)) < 1e-10);

    // the tetrahedral quartic: |C| = 135 and the four symmetry axes
    auto d7 = maxwell_poles(tetrahedral_quartic());
    CHECK(std::abs(d7.C) == doctest::Approx(135.0).epsilon(1e-7));
    std::vector<std::array<double, 3>> axes;
    for (const auto& p : tetrahedral_poles()) axes.push_back(p.dir);
    CHECK(match_poles(d7.poles, axes) < 1e-9);
    // G = -3 r^2 up to the orientation signs absorbed into C
    TernaryPolyF g_want = r2_poly<ComplexF>().scaled(ComplexF(-3, 0));
    CHECK((d7.G - g_want).coeff_norm() < 1e-7);
    CHECK(d7.diagnostics.coeff_residual < 1e-9);

    // error paths
    CHECK_THROWS_AS(maxwell_poles(TernaryPolyF()), std::invalid_argument);
    CHECK_THROWS_AS(maxwell_poles(TernaryPolyF::monomial(1, 0, 0, ComplexF(0, 1))),
                    std::invalid_argument);
    // non-harmonic input rejected unless projection requested
    TernaryPolyF x2 = TernaryPolyF::monomial(2, 0, 0, 1);
    CHECK_THROWS_AS(maxwell_poles(x2), std::invalid_argument);
    PoleOptions opt;
    opt.project = true;
    auto dp = maxwell_poles(x2, opt);
    CHECK(dp.poles.size() >= 1);
}

TEST_CASE("verification reports") {
    TernaryPolyF H = tetrahedral_quartic();
    auto d = maxwell_poles(H);
    auto rep = verify_decomposition(H, d);
    CHECK(rep.ok);
    CHECK(rep.coeff_residual < 1e-9);
    CHECK(rep.max_eval_residual < 1e-9);
    // the report spells out the residual-term bookkeeping for this quartic
    CHECK(rep.notes.find("-3 r^2") != std::string::npos);
    CHECK(rep.notes.find("(1/3) r^2") != std::string::npos);

    // a 1% error in the scale is flagged
    auto bad = d;
    bad.C *= 1.01;
    CHECK(!verify_decomposition(H, bad).ok);

    // zero input short-circuits
    auto zr = verify_decomposition(TernaryPolyF(), d);
    CHECK(!zr.ok);
    CHECK(zr.notes == "zero input");
}

TEST_CASE("end-to-end decomposition of random real harmonics") {
    std::mt19937 rng(2);
    int done = 0;
    for (int it = 0; done < 100; ++it) {
        int L = 1 + it % 6;
        TernaryPolyF phi = random_real_harmonic(rng, L);
        auto d = maxwell_poles(phi);
        int total = 0;
        for (const auto& p : d.poles) total += p.multiplicity;
        CHECK(total == L);
        auto rep = verify_decomposition(phi, d);
        CHECK(rep.coeff_residual < 1e-8);
        CHECK(rep.ok);
        ++done;
    }
}

TEST_CASE("pole directions are rotation covariant") {
    std::mt19937 rng(3);
    for (int L = 1; L <= 4; ++L)
        for (int it = 0; it < 5; ++it) {
            TernaryPolyF phi = random_real_harmonic(rng, L);
            auto R = random_rotation(rng);
            TernaryPolyF phir = rotate_poly(phi, R);
            auto d = maxwell_poles(phi);
            auto dr = maxwell_poles(phir);
            // rotate the reference poles and match
            std::vector<std::array<double, 3>> want;
            for (const auto& p : d.poles)
                for (int s = 0; s < p.multiplicity; ++s)
                    want.push_back({R[0][0] * p.dir[0] + R[0][1] * p.dir[1] + R[0][2] * p.dir[2],
                                    R[1][0] * p.dir[0] + R[1][1] * p.dir[1] + R[1][2] * p.dir[2],
                                    R[2][0] * p.dir[0] + R[2][1] * p.dir[1] + R[2][2] * p.dir[2]});
            CHECK(match_poles(dr.poles, want) < 1e-7);
            CHECK(std::abs(std::abs(dr.C) - std::abs(d.C)) < 1e-6 * std::abs(d.C));
        }
}

TEST_CASE("rank-4 trace removal") {
    auto tr = rank4_trace_residual(tetrahedral_poles());
    // Sigma3 = 1/3, Sigma6 = (2/9) r^2, trace terms = r^4/45
    CHECK(tr.sigma3 == doctest::Approx(1.0 / 3).epsilon(1e-12));
    TernaryPolyF s6_want = r2_poly<ComplexF>().scaled(ComplexF(2.0 / 9, 0));
    CHECK((tr.sigma6 - s6_want).coeff_norm() < 1e-12);
    TernaryPolyF tt_want = (r2_poly<ComplexF>() * r2_poly<ComplexF>()).scaled(ComplexF(1.0 / 45, 0));
    CHECK((tr.trace_terms - tt_want).coeff_norm() < 1e-12);
    // both residual-term bookkeepings appear in the notes
    CHECK(tr.notes.find("-3 r^2") != std::string::npos);
    CHECK(tr.notes.find("(1/3) r^2") != std::string::npos);

    // four coincident z-axes
    std::vector<Pole> zz(4, Pole{{0, 0, 1}, 1});
    auto tz = rank4_trace_residual(zz);
    CHECK(tz.sigma3 == doctest::Approx(3.0).epsilon(1e-12));
    TernaryPolyF z2 = TernaryPolyF::monomial(0, 0, 2, 6);
    CHECK((tz.sigma6 - z2).coeff_norm() < 1e-12);

    CHECK_THROWS_AS(rank4_trace_residual(std::vector<Pole>(3, Pole{{0, 0, 1}, 1})),
                    std::invalid_argument);

    // oracle: product minus trace terms is harmonic, for random axes
    std::mt19937 rng(4);
    std::normal_distribution<double> N(0.0, 1.0);
    for (int it = 0; it < 20; ++it) {
        std::vector<Pole> ps;
        for (int k = 0; k < 4; ++k) {
            std::array<double, 3> d{N(rng), N(rng), N(rng)};
            double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
            for (auto& v : d) v /= n;
            ps.push_back(Pole{d, 1});
        }
        auto t = rank4_trace_residual(ps);
        TernaryPolyF resid = (pole_product(ps) - t.trace_terms).laplacian();
        CHECK(resid.coeff_norm() < 1e-12);
    }
}

TEST_CASE("quartic residual term from the trace data") {
    // for L = 4 the G of the decomposition equals -C * (trace_terms / r^2)
    auto check_g = [](const TernaryPolyF& phi, double tol) {
        auto d = maxwell_poles(phi);
        std::vector<Pole> expanded;
        for (const auto& p : d.poles)
            for (int s = 0; s < p.multiplicity; ++s) expanded.push_back(Pole{p.dir, 1});
        REQUIRE(expanded.size() == 4);
        auto tr = rank4_trace_residual(expanded);
        auto [q, rem] = tr.trace_terms.divide_by_r2();
        REQUIRE(rem.coeff_norm() < 1e-10);
        TernaryPolyF g_pred = q.scaled(ComplexF(-d.C, 0));
        CHECK((d.G - g_pred).coeff_norm() < tol * std::max(1.0, d.G.coeff_norm()));
    };
    check_g(tetrahedral_quartic(), 1e-10);
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) check_g(random_real_harmonic(rng, 4), 1e-8);
}
