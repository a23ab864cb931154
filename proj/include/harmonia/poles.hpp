#pragma once

#include <string>
#include <vector>

#include "harmonia/harmonic.hpp"
#include "harmonia/poly.hpp"
#include "harmonia/spinor.hpp"

namespace harmonia {

struct RootEntry {
    ProjRoot root;
    int multiplicity = 1;
};

struct ProjectiveRootSet {
    std::vector<RootEntry> roots;
    int total_multiplicity() const {
        int s = 0;
        for (const auto& r : roots) s += r.multiplicity;
        return s;
    }
};

struct PoleDecomposition {
    double C = 0;
    std::vector<Pole> poles;
    TernaryPolyF G;  // degree L-2 (zero for L < 2)
    struct Diagnostics {
        double coeff_residual = 0;       // |Phi - C prod - r^2 G| / |Phi|
        double harmonic_residual = 0;    // |Delta Phi| / |Phi| of the input used
        double reality_residual = 0;
        double c_imag_residual = 0;      // imaginary part dropped from C
    } diagnostics;
};

struct PoleOptions {
    bool project = false;    // apply harmonic_projection before the pipeline
    double tol = 1e-10;
    unsigned seed = 0;
};

// Exact monomial deflation followed by Aberth-Ehrlich iteration; clusters
// nearby roots into multiplicities and polishes each cluster on the
// appropriate derivative.
ProjectiveRootSet find_projective_roots(const BinaryFormF& B);

struct RootPair {
    ProjRoot a, b;  // b tracks -1/conj(a) within the pairing tolerance
    int multiplicity = 1;
};

// Perfect matching of the root multiset under t <-> -1/conj(t); throws
// (listing offenders) if the input is not conjugate-closed.
std::vector<RootPair> pair_conjugate_roots(const ProjectiveRootSet& rs);

PoleDecomposition maxwell_poles(const TernaryPolyF& phi, const PoleOptions& options = {});
PoleDecomposition maxwell_poles(const HarmonicNormalForm& nf, const PoleOptions& options = {});

// Product prod_i (r . p_i)^{mult_i} as a polynomial.
TernaryPolyF pole_product(const std::vector<Pole>& poles);

struct TraceResidual {
    TernaryPolyF sigma6;      // sum over pairs (p_i.p_j)(r.p_k)(r.p_l)
    double sigma3 = 0;        // sum over pairings (p_i.p_j)(p_k.p_l)
    TernaryPolyF trace_terms; // r^2 Sigma6/(n+4) - r^4 Sigma3/((n+4)(n+2)), n=3
    std::string notes;        // bookkeeping conventions for the residual term
};

// Rank-4 detracer data for exactly four poles (multiplicity-expanded).
TraceResidual rank4_trace_residual(const std::vector<Pole>& poles);

struct VerificationReport {
    double coeff_residual = 0;
    double max_eval_residual = 0;   // at random null-cone points
    double max_pole_norm_dev = 0;
    bool ok = false;
    std::string notes;
};

VerificationReport verify_decomposition(const TernaryPolyF& phi, const PoleDecomposition& d,
                                        double tol = 1e-8, unsigned seed = 0);

}  // namespace harmonia
