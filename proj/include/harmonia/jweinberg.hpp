#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "harmonia/numcore.hpp"
#include "harmonia/scalar.hpp"
#include "harmonia/spinor.hpp"

namespace harmonia {

using Matrix = Eigen::MatrixXcd;

// Standard angular momentum matrices, basis ascending in m = -j..j with Jz
// diagonal and real ladder elements.
struct SpinMatrices {
    HalfInt j;
    Matrix Jx, Jy, Jz;
    int dim() const { return j.twice + 1; }
};

SpinMatrices spin_matrices(HalfInt j);

// Exact expansion coefficients of the pi-rotation:
// sum_k c_k(pi) (n.J)^k reproduces (-1)^m on integral-spin eigenvalues and
// i(-1)^{m-1/2} on half-odd ones. Entries for parity-forbidden k are zero.
struct CkTable {
    HalfInt j;
    std::vector<Ext> c;  // c[k], k = 0..2j

    // The matrix the table expands: e^{-i pi n.J} for integral j and its
    // conjugate-phase counterpart e^{+i pi n.J} for half-odd j.
    Matrix evaluate(const SpinMatrices& S, const std::array<double, 3>& n) const;
};

CkTable ck_pi(HalfInt j);

// Spatial Joos-Weinberg tensor: the symmetric matrix-valued coefficient array
// of the degree-2j polynomial r_{i_1}..r_{i_2j} t^{i_1..i_2j}
// = e^{i pi j} r^{2j} e^{-i pi rhat.J}.
struct JwTensor {
    HalfInt j;
    // Symmetric-component value for the exponent triple (p,q,s), p+q+s = 2j.
    std::map<std::array<int, 3>, Matrix> components;

    // Full contraction with 2j copies of r (multinomial-weighted sum).
    Matrix contract(const std::array<double, 3>& r) const;
};

JwTensor jw_spatial_tensor(HalfInt j, int max_twice_j = 8);

struct NullSandwichReport {
    double trace_residual = 0;     // max |xibar J..J xi| / scale, n <= 2j-2
    double tensor_residual = 0;    // (a.r)^{2j} vs rho_j xibar (r..t) xi
    double harmonic_residual = 0;  // (a.r)^{2j} vs e^{-i pi j} C^m_{2j}(r) xi_m
    int samples = 0;
    bool ok = false;
};

// Sandwich normalization rho_j = (-i/sqrt 2)^{2j} = e^{-i pi j} 2^{-j}:
// (a.r)^{2j} = rho_j * xibar (r_i...t^{i...}) xi for the null spinor pair.
ComplexF jw_normalization(HalfInt j);

NullSandwichReport null_sandwich_check(HalfInt j, const TwoSpinor& psi, int samples = 20,
                                       unsigned seed = 0, double tol = 1e-10);

}  // namespace harmonia
