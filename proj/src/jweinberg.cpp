#include "harmonia/jweinberg.hpp"

#include <random>

#include "harmonia/harmonic.hpp"

namespace harmonia {

SpinMatrices spin_matrices(HalfInt j) {
    if (j.twice < 0) throw std::invalid_argument("spin_matrices: negative j");
    int d = j.twice + 1;
    double jv = j.value();
    Matrix Jp = Matrix::Zero(d, d), Jz = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        double m = k - jv;
        Jz(k, k) = m;
        if (k + 1 < d) Jp(k + 1, k) = std::sqrt(jv * (jv + 1) - m * (m + 1));
    }
    Matrix Jm = Jp.adjoint();
    SpinMatrices S;
    S.j = j;
    S.Jx = (Jp + Jm) / 2.0;
    S.Jy = (Jp - Jm) / ComplexF(0, 2);
    S.Jz = Jz;
    return S;
}

namespace {

// Exact Gaussian elimination for a small square rational system.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> A,
                                     std::vector<Rational> b) {
    int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("solve_rational: singular system");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rational f = A[r][col] / A[col][col];
            for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (int k = 0; k < n; ++k) x[k] = b[k] / A[k][k];
    return x;
}

Rational rational_pow(const Rational& q, int e) {
    Rational r = 1;
    for (int k = 0; k < e; ++k) r *= q;
    return r;
}

}  // namespace

CkTable ck_pi(HalfInt j) {
    if (j.twice < 1) throw std::invalid_argument("ck_pi: j must be >= 1/2");
    CkTable T;
    T.j = j;
    T.c.assign(j.twice + 1, Ext());
    if (j.is_integer()) {
        // (-1)^m = sum_{k=0}^{j} m^{2k} c_{2k},  m = 1..j,  c_0 = 1.
        int n = j.as_int();
        std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
        std::vector<Rational> rhs(n);
        for (int row = 0; row < n; ++row) {
            Rational m = row + 1;
            for (int k = 1; k <= n; ++k) A[row][k - 1] = rational_pow(m, 2 * k);
            rhs[row] = Rational(parity(row + 1)) - 1;
        }
        T.c[0] = Ext(1);
        auto x = solve_rational(A, rhs);
        for (int k = 1; k <= n; ++k) T.c[2 * k] = Ext(x[k - 1]);
    } else {
        // i(-1)^{m-1/2} = sum_{k=0}^{j-1/2} m^{2k+1} c_{2k+1},  m = 1/2..j.
        int n = (j.twice + 1) / 2;  // number of odd coefficients
        std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
        std::vector<Rational> rhs(n);
        for (int row = 0; row < n; ++row) {
            Rational m = Rational(2 * row + 1, 2);
            for (int k = 0; k < n; ++k) A[row][k] = rational_pow(m, 2 * k + 1);
            rhs[row] = Rational(parity(row));
        }
        auto x = solve_rational(A, rhs);
        for (int k = 0; k < n; ++k) T.c[2 * k + 1] = Ext::i() * Ext(x[k]);
    }
    return T;
}

Matrix CkTable::evaluate(const SpinMatrices& S, const std::array<double, 3>& n) const {
    Matrix nJ = n[0] * S.Jx + n[1] * S.Jy + n[2] * S.Jz;
    Matrix acc = Matrix::Zero(S.dim(), S.dim());
    Matrix pw = Matrix::Identity(S.dim(), S.dim());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero()) acc += c[k].to_complex() * pw;
        pw = nJ * pw;
    }
    return acc;
}

namespace {

using MatPoly = std::map<std::array<int, 3>, Matrix>;

MatPoly matpoly_mul(const MatPoly& a, const MatPoly& b) {
    MatPoly z;
    for (const auto& [ea, ma] : a)
        for (const auto& [eb, mb] : b) {
            std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            Matrix prod = ma * mb;
            auto it = z.find(e);
            if (it == z.end())
                z.emplace(e, prod);
            else
                it->second += prod;
        }
    return z;
}

Rational multinomial(int n, int p, int q, int s) {
    return Rational(factorial(n)) / (Rational(factorial(p)) * Rational(factorial(q)) *
                                     Rational(factorial(s)));
}

}  // namespace

JwTensor jw_spatial_tensor(HalfInt j, int max_twice_j) {
    if (j.twice < 1) throw std::invalid_argument("jw_spatial_tensor: j must be >= 1/2");
    if (j.twice > max_twice_j)
        throw std::invalid_argument("jw_spatial_tensor: j exceeds the configured cap");
    SpinMatrices S = spin_matrices(j);
    CkTable ck = ck_pi(j);
    int d = S.dim();
    // r.J and r^2 as matrix-valued polynomials.
    MatPoly rJ;
    rJ[{1, 0, 0}] = S.Jx;
    rJ[{0, 1, 0}] = S.Jy;
    rJ[{0, 0, 1}] = S.Jz;
    MatPoly r2;
    for (int v = 0; v < 3; ++v) {
        std::array<int, 3> e{0, 0, 0};
        e[v] = 2;
        r2[e] = Matrix::Identity(d, d);
    }
    // e^{i pi j}: the table expands e^{-i pi n.J} (integral j) or its
    // conjugate (half-odd), so half-odd coefficients enter conjugated.
    ComplexF phase = j.is_integer() ? ComplexF(parity(j.as_int()), 0)
                                    : ComplexF(0, parity((j.twice - 1) / 2));
    MatPoly total;
    std::vector<MatPoly> rJ_pow(j.twice + 1);
    rJ_pow[0][{0, 0, 0}] = Matrix::Identity(d, d);
    for (int k = 1; k <= j.twice; ++k) rJ_pow[k] = matpoly_mul(rJ_pow[k - 1], rJ);
    for (int k = 0; k <= j.twice; ++k) {
        if (ck.c[k].is_zero() && !(k == 0 && j.is_integer())) continue;
        ComplexF cv = ck.c[k].to_complex();
        if (!j.is_integer()) cv = std::conj(cv);
        MatPoly term = rJ_pow[k];
        for (int s = 0; s < (j.twice - k) / 2; ++s) term = matpoly_mul(term, r2);
        for (const auto& [e, m] : term) {
            Matrix add = phase * cv * m;
            auto it = total.find(e);
            if (it == total.end())
                total.emplace(e, add);
            else
                it->second += add;
        }
    }
    JwTensor T;
    T.j = j;
    for (const auto& [e, m] : total)
        T.components[e] = m / to_double(multinomial(j.twice, e[0], e[1], e[2]));
    return T;
}

Matrix JwTensor::contract(const std::array<double, 3>& r) const {
    Matrix acc;
    bool first = true;
    for (const auto& [e, m] : components) {
        double w = to_double(multinomial(j.twice, e[0], e[1], e[2]));
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < e[v]; ++k) w *= r[v];
        if (first) {
            acc = w * m;
            first = false;
        } else {
            acc += w * m;
        }
    }
    return acc;
}

ComplexF jw_normalization(HalfInt j) {
    // e^{-i pi j} / 2^j.  With the tensor normalized so that the full
    // contraction equals e^{i pi j} r^{2j} e^{-i pi rhat.J}, the spin-j
    // sandwich is exactly the 2j-th power of the spin-1/2 one, whose
    // constant is -i/sqrt(2); hence the normalization is (-i/sqrt 2)^{2j}.
    ComplexF phase = j.is_integer() ? ComplexF(parity(j.as_int()), 0)
                                    : ComplexF(0, -parity((j.twice - 1) / 2));
    return phase / std::pow(2.0, 0.5 * j.twice);
}

NullSandwichReport null_sandwich_check(HalfInt j, const TwoSpinor& psi, int samples,
                                       unsigned seed, double tol) {
    if (std::abs(psi.xi) == 0 && std::abs(psi.eta) == 0)
        throw std::invalid_argument("null_sandwich_check: zero two-spinor");
    NullSandwichReport rep;
    auto xi = null_spinor(j, psi);
    auto xibar = raise_lower(xi, j);
    double xi_scale = 0;
    for (const auto& c : xi) xi_scale += std::norm(c);
    auto sandwich = [&](const Matrix& M) {
        ComplexF acc(0, 0);
        for (int a = 0; a < M.rows(); ++a)
            for (int b = 0; b < M.cols(); ++b) acc += xibar[a] * M(a, b) * xi[b];
        return acc;
    };

    // (a) xibar J^{i1}..J^{in} xi = 0 for n <= 2j - 2.
    SpinMatrices S = spin_matrices(j);
    const Matrix Js[3] = {S.Jx, S.Jy, S.Jz};
    double jmax = std::max(1.0, j.value());
    for (int n = 0; n <= j.twice - 2; ++n) {
        std::vector<int> idx(n, 0);
        while (true) {
            Matrix M = Matrix::Identity(S.dim(), S.dim());
            for (int t : idx) M = M * Js[t];
            double scale = xi_scale * std::pow(jmax, n);
            rep.trace_residual = std::max(rep.trace_residual, std::abs(sandwich(M)) / scale);
            int pos = n - 1;
            while (pos >= 0 && idx[pos] == 2) idx[pos--] = 0;
            if (pos < 0) break;
            ++idx[pos];
        }
    }

    // (b), (c) at random real unit directions.
    JwTensor T = jw_spatial_tensor(j);
    ComplexF rho = jw_normalization(j);
    NullVector a = cartan_map(psi);
    ComplexF ax = a.x(), ay = a.y(), az = a.z();
    int L = j.twice;  // harmonic degree 2j
    std::mt19937 rng(seed);
    std::normal_distribution<double> N(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        std::array<double, 3> r{N(rng), N(rng), N(rng)};
        double nr = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
        if (nr < 1e-8) {
            --s;
            continue;
        }
        for (double& v : r) v /= nr;
        ComplexF ar = ax * r[0] + ay * r[1] + az * r[2];
        ComplexF lhs = 1;
        for (int k = 0; k < j.twice; ++k) lhs *= ar;
        double scale = std::max(1.0, std::abs(lhs)) + xi_scale;

        ComplexF rhs_tensor = rho * sandwich(T.contract(r));
        rep.tensor_residual =
            std::max(rep.tensor_residual, std::abs(lhs - rhs_tensor) / scale);

        // (c): sqrt((2L)!)/(2^{L/2} L!) (a.r)^L = C^m_L(r) xi^{(L)}_m, L = 2j.
        auto xi2j = null_spinor(HalfInt::from_twice(2 * L), psi);
        double kfac = std::pow(2.0, 0.5 * L) * to_double(Rational(factorial(L))) /
                      std::sqrt(to_double(Rational(factorial(2 * L))));
        ComplexF rhs_harm(0, 0);
        for (int k = 0; k <= 2 * L; ++k) {
            int m = k - L;
            rhs_harm += static_cast<double>(parity(L + m)) *
                        solid_harmonic(L, -m).evaluate(r[0], r[1], r[2]) * xi2j[k];
        }
        rhs_harm *= kfac;
        rep.harmonic_residual =
            std::max(rep.harmonic_residual, std::abs(lhs - rhs_harm) / scale);
        ++rep.samples;
    }
    rep.ok = rep.trace_residual <= tol && rep.tensor_residual <= tol &&
             rep.harmonic_residual <= tol;
    return rep;
}

}  // namespace harmonia
