#pragma once

#include <array>
#include <optional>
#include <vector>

#include "harmonia/numcore.hpp"

namespace harmonia {

struct TwoSpinor {
    ComplexF xi{0.0, 0.0};
    ComplexF eta{0.0, 0.0};
};

// Null 3-vector b with spherical components b_1 = xi^2, b_0 = sqrt2 xi eta,
// b_{-1} = eta^2 and the matching Cartesian view.
struct NullVector {
    ComplexF b1{0.0, 0.0}, b0{0.0, 0.0}, bm1{0.0, 0.0};

    ComplexF x() const { return ComplexF(0, 1) / std::sqrt(2.0) * (bm1 - b1); }
    ComplexF y() const { return (b1 + bm1) / std::sqrt(2.0); }
    ComplexF z() const { return ComplexF(0, 1) * b0; }
    // 2 b_1 b_{-1} - b_0^2, zero on the cone.
    ComplexF null_residual() const { return 2.0 * b1 * bm1 - b0 * b0; }

    static NullVector from_spherical(ComplexF b1, ComplexF b0, ComplexF bm1) {
        return NullVector{b1, b0, bm1};
    }
    static NullVector from_cartesian(ComplexF x, ComplexF y, ComplexF z) {
        const ComplexF i(0, 1);
        const double s2 = std::sqrt(2.0);
        return NullVector{-(x - i * y) / (i * s2), -i * z, (x + i * y) / (i * s2)};
    }
};

struct Pole {
    std::array<double, 3> dir{0, 0, 0};
    int multiplicity = 1;
};

// Flip dir so the first coordinate that is nonzero (checked in the order
// z, y, x at threshold 1e-9) is positive. Returns true if a flip happened.
bool canonicalize_direction(std::array<double, 3>& dir);

// xi^{(j)}_m = C(2j, j-m)^{1/2} xi^{j+m} eta^{j-m}, indexed k = 0..2j with
// m = k - j (ascending).
std::vector<ComplexF> null_spinor(HalfInt j, const TwoSpinor& psi);

// Couple two null spinors to total spin j3: out_{m3} =
// sum_{m1+m2=m3} 3j(j1,j2,j3; m1,m2,-m3) x1_{m1} x2_{m2}.
// Vanishes identically for j3 < j1+j2 when both factors come from the same
// two-spinor.
std::vector<ComplexF> couple_null(HalfInt j1, const std::vector<ComplexF>& x1, HalfInt j2,
                                  const std::vector<ComplexF>& x2, HalfInt j3);

// Product law for null spinors built from one common two-spinor: returns the
// coupled j1+j2 components, which are proportional to xi^{(j1+j2)}. Verifies
// the inputs are null spinors with a common projective source.
std::vector<ComplexF> null_product(HalfInt j1, const std::vector<ComplexF>& x1, HalfInt j2,
                                   const std::vector<ComplexF>& x2);

NullVector cartan_map(const TwoSpinor& psi);

// direction = +-i (b x b*)/(b . b*), canonicalized.
Pole pole_from_conjugate_pair(const NullVector& b);

// Projective root on the Riemann sphere; infinite == true ignores t.
struct ProjRoot {
    ComplexF t{0.0, 0.0};
    bool infinite = false;
    static ProjRoot inf() { return ProjRoot{ComplexF(0, 0), true}; }
    static ProjRoot at(ComplexF v) { return ProjRoot{v, false}; }
};

// Antipodal image t -> -1/conj(t) (0 <-> infinity).
ProjRoot antipode(const ProjRoot& r);

// Chordal distance on the Riemann sphere, in [0, 2/...] normalized to
// |t1-t2| / sqrt((1+|t1|^2)(1+|t2|^2)).
double chordal_distance(const ProjRoot& a, const ProjRoot& b);

// direction prop. to (2 Re t, -2 Im t, -(1-|t|^2)) / (1+|t|^2); t=inf -> z-axis.
Pole pole_from_root(const ProjRoot& t);

}  // namespace harmonia
