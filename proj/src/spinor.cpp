#include "harmonia/spinor.hpp"

#include <cmath>

namespace harmonia {

bool canonicalize_direction(std::array<double, 3>& dir) {
    constexpr double kZeroTol = 1e-9;
    for (int idx : {2, 1, 0}) {
        if (std::abs(dir[idx]) <= kZeroTol) continue;
        if (dir[idx] < 0) {
            for (double& c : dir) c = -c;
            return true;
        }
        return false;
    }
    return false;
}

std::vector<ComplexF> null_spinor(HalfInt j, const TwoSpinor& psi) {
    if (j.twice < 0) throw std::invalid_argument("null_spinor: negative j");
    int d = j.twice;  // 2j
    std::vector<ComplexF> out(d + 1);
    for (int k = 0; k <= d; ++k) {
        // m = k - j, so j+m = k, j-m = d-k.
        ComplexF t = std::sqrt(to_double(Rational(binomial(d, k))));
        for (int s = 0; s < k; ++s) t *= psi.xi;
        for (int s = 0; s < d - k; ++s) t *= psi.eta;
        out[k] = t;
    }
    return out;
}

std::vector<ComplexF> couple_null(HalfInt j1, const std::vector<ComplexF>& x1, HalfInt j2,
                                  const std::vector<ComplexF>& x2, HalfInt j3) {
    if (static_cast<int>(x1.size()) != j1.twice + 1 || static_cast<int>(x2.size()) != j2.twice + 1)
        throw std::invalid_argument("couple_null: component count mismatch");
    std::vector<ComplexF> out(j3.twice + 1, ComplexF(0, 0));
    for (int k1 = 0; k1 <= j1.twice; ++k1) {
        HalfInt m1 = HalfInt::from_twice(2 * k1 - j1.twice);
        for (int k2 = 0; k2 <= j2.twice; ++k2) {
            HalfInt m2 = HalfInt::from_twice(2 * k2 - j2.twice);
            HalfInt m3 = m1 + m2;
            if (std::abs(m3.twice) > j3.twice) continue;
            SqrtRational w = wigner_3j(j1, j2, j3, m1, m2, -m3);
            if (w.is_zero()) continue;
            out[(m3.twice + j3.twice) / 2] += w.value() * x1[k1] * x2[k2];
        }
    }
    return out;
}

namespace {

// Projective source (xi : eta) of a null spinor; nullopt if the components
// are not a perfect-power pattern.
std::optional<TwoSpinor> recover_source(HalfInt j, const std::vector<ComplexF>& x, double tol) {
    int d = j.twice;
    if (d == 0) return TwoSpinor{1.0, 0.0};  // arbitrary; j=0 carries no direction
    double scale = 0;
    for (const auto& c : x) scale = std::max(scale, std::abs(c));
    if (scale == 0) return std::nullopt;
    // x_k = sqrt(C(d,k)) xi^k eta^{d-k}. Use the largest neighbour ratio.
    ComplexF top = x[d] / std::sqrt(to_double(Rational(binomial(d, d))));
    ComplexF bot = x[0];
    TwoSpinor psi;
    if (std::abs(top) >= std::abs(bot)) {
        // xi dominates: eta/xi from x_{d-1}/x_d.
        ComplexF ratio = (x[d - 1] / std::sqrt(to_double(Rational(binomial(d, d - 1))))) / top;
        psi = TwoSpinor{1.0, ratio};
    } else {
        ComplexF ratio = (x[1] / std::sqrt(to_double(Rational(binomial(d, 1))))) / bot;
        psi = TwoSpinor{ratio, 1.0};
    }
    // Verify the pattern: components must match null_spinor(psi) up to the
    // global scale fixed by the dominant entry.
    auto model = null_spinor(j, psi);
    int kref = (std::abs(top) >= std::abs(bot)) ? d : 0;
    ComplexF lambda = x[kref] / model[kref];
    for (int k = 0; k <= d; ++k)
        if (std::abs(x[k] - lambda * model[k]) > tol * scale) return std::nullopt;
    return psi;
}

}  // namespace

std::vector<ComplexF> null_product(HalfInt j1, const std::vector<ComplexF>& x1, HalfInt j2,
                                   const std::vector<ComplexF>& x2) {
    constexpr double kTol = 1e-9;
    auto s1 = recover_source(j1, x1, kTol);
    auto s2 = recover_source(j2, x2, kTol);
    if (!s1 || !s2) throw std::invalid_argument("null_product: input is not a null spinor");
    if (j1.twice > 0 && j2.twice > 0) {
        // Compare projective points via the bracket.
        ComplexF br = s1->xi * s2->eta - s1->eta * s2->xi;
        double n1 = std::hypot(std::abs(s1->xi), std::abs(s1->eta));
        double n2 = std::hypot(std::abs(s2->xi), std::abs(s2->eta));
        if (std::abs(br) > kTol * n1 * n2)
            throw std::invalid_argument("null_product: factors come from different two-spinors");
    }
    return couple_null(j1, x1, j2, x2, j1 + j2);
}

NullVector cartan_map(const TwoSpinor& psi) {
    return NullVector{psi.xi * psi.xi, std::sqrt(2.0) * psi.xi * psi.eta, psi.eta * psi.eta};
}

Pole pole_from_conjugate_pair(const NullVector& b) {
    const ComplexF bx = b.x(), by = b.y(), bz = b.z();
    const ComplexF cx = std::conj(bx), cy = std::conj(by), cz = std::conj(bz);
    ComplexF dot = bx * cx + by * cy + bz * cz;  // = |b|^2, real
    double scale = std::abs(dot);
    if (scale == 0) throw std::invalid_argument("pole_from_conjugate_pair: zero vector");
    ComplexF cross[3] = {by * cz - bz * cy, bz * cx - bx * cz, bx * cy - by * cx};
    std::array<double, 3> dir;
    double imag_resid = 0, mag = 0;
    for (int k = 0; k < 3; ++k) {
        ComplexF v = ComplexF(0, 1) * cross[k] / dot;
        dir[k] = v.real();
        imag_resid = std::max(imag_resid, std::abs(v.imag()));
        mag = std::max(mag, std::abs(v));
    }
    if (mag == 0 || imag_resid > 1e-10 * std::max(1.0, mag))
        throw std::domain_error("pole_from_conjugate_pair: direction not consistently real");
    double norm = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
    for (double& c : dir) c /= norm;
    canonicalize_direction(dir);
    return Pole{dir, 1};
}

ProjRoot antipode(const ProjRoot& r) {
    if (r.infinite) return ProjRoot::at(ComplexF(0, 0));
    if (r.t == ComplexF(0, 0)) return ProjRoot::inf();
    return ProjRoot::at(-1.0 / std::conj(r.t));
}

double chordal_distance(const ProjRoot& a, const ProjRoot& b) {
    auto lift = [](const ProjRoot& r) -> std::pair<ComplexF, double> {
        // Homogeneous (t : 1) normalized; infinity is (1 : 0).
        if (r.infinite) return {ComplexF(1, 0), 0.0};
        double n = std::sqrt(1.0 + std::norm(r.t));
        return {r.t / n, 1.0 / n};
    };
    auto [ta, wa] = lift(a);
    auto [tb, wb] = lift(b);
    // |ta*wb - tb*wa| is the chordal distance for unit homogeneous vectors.
    return std::abs(ta * wb - tb * wa);
}

Pole pole_from_root(const ProjRoot& t) {
    std::array<double, 3> dir;
    if (t.infinite) {
        dir = {0, 0, 1};
    } else {
        // Antipodal inputs must give identical directions; evaluate on the
        // unit-disk representative so t and -1/conj(t) take the same path.
        ComplexF v = t.t;
        if (std::norm(v) > 1.0) v = antipode(ProjRoot::at(v)).t;
        double n = 1.0 + std::norm(v);
        dir = {2.0 * v.real() / n, -2.0 * v.imag() / n, -(1.0 - std::norm(v)) / n};
    }
    double norm = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
    for (double& c : dir) c /= norm;
    canonicalize_direction(dir);
    return Pole{dir, 1};
}

}  // namespace harmonia
