#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "harmonia/harmonic.hpp"
#include "harmonia/invariants.hpp"
#include "harmonia/jweinberg.hpp"
#include "harmonia/poles.hpp"

namespace py = pybind11;
using namespace harmonia;

namespace {

using Term = std::tuple<int, int, int, ComplexF>;

TernaryPolyF poly_from_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return TernaryPolyF();
    TernaryPolyF f(std::get<0>(terms[0]) + std::get<1>(terms[0]) + std::get<2>(terms[0]));
    for (const auto& [p, q, r, c] : terms) f.add_term(p, q, r, c);
    return f;
}

std::vector<Term> poly_to_terms(const TernaryPolyF& f) {
    std::vector<Term> out;
    for (const auto& [e, c] : f.terms()) out.emplace_back(e[0], e[1], e[2], c);
    return out;
}

HalfInt spin_from_twice(int twice) { return HalfInt::from_twice(twice); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "solid-harmonic pole decomposition and binary invariant theory";

    m.def(
        "wigner_3j",
        [](int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
            return wigner_3j(spin_from_twice(tj1), spin_from_twice(tj2), spin_from_twice(tj3),
                             spin_from_twice(tm1), spin_from_twice(tm2), spin_from_twice(tm3))
                .value();
        },
        py::arg("twice_j1"), py::arg("twice_j2"), py::arg("twice_j3"), py::arg("twice_m1"),
        py::arg("twice_m2"), py::arg("twice_m3"),
        "Wigner 3j symbol; all arguments are doubled (2j, 2m).");

    m.def(
        "solid_harmonic",
        [](int L, int M) { return poly_to_terms(solid_harmonic(L, M)); }, py::arg("L"),
        py::arg("M"), "Solid harmonic C^L_M as a list of (p, q, r, coeff) monomials.");

    m.def(
        "harmonic_projection",
        [](const std::vector<Term>& terms) {
            return poly_to_terms(harmonic_projection(poly_from_terms(terms)));
        },
        py::arg("terms"));

    m.def(
        "gauss_decompose",
        [](const std::vector<Term>& terms) {
            std::vector<std::vector<Term>> out;
            for (const auto& p : gauss_decompose(poly_from_terms(terms)))
                out.push_back(poly_to_terms(p));
            return out;
        },
        py::arg("terms"));

    m.def(
        "restrict_to_conic",
        [](const std::vector<Term>& terms) {
            BinaryFormF B = restrict_to_conic(poly_from_terms(terms));
            return B.coeffs();
        },
        py::arg("terms"), "Cartan-map restriction; returns b_0..b_{2n}.");

    m.def(
        "harmonic_from_conic",
        [](const std::vector<ComplexF>& b) {
            return poly_to_terms(harmonic_from_conic(BinaryFormF(b)));
        },
        py::arg("coeffs"), "Unique harmonic polynomial with the given cone restriction.");

    m.def(
        "maxwell_poles",
        [](const std::vector<Term>& terms, bool project, double tol, unsigned seed) {
            PoleOptions opts;
            opts.project = project;
            opts.tol = tol;
            opts.seed = seed;
            PoleDecomposition d = maxwell_poles(poly_from_terms(terms), opts);
            py::dict out;
            out["C"] = d.C;
            py::list poles;
            for (const auto& p : d.poles)
                poles.append(py::make_tuple(p.dir[0], p.dir[1], p.dir[2], p.multiplicity));
            out["poles"] = poles;
            out["G"] = poly_to_terms(d.G);
            py::dict diag;
            diag["coeff_residual"] = d.diagnostics.coeff_residual;
            diag["harmonic_residual"] = d.diagnostics.harmonic_residual;
            diag["reality_residual"] = d.diagnostics.reality_residual;
            diag["c_imag_residual"] = d.diagnostics.c_imag_residual;
            out["diagnostics"] = diag;
            return out;
        },
        py::arg("terms"), py::arg("project") = false, py::arg("tol") = 1e-10,
        py::arg("seed") = 0);

    m.def(
        "verify_decomposition",
        [](const std::vector<Term>& terms, double C,
           const std::vector<std::tuple<double, double, double, int>>& poles,
           const std::vector<Term>& G, double tol, unsigned seed) {
            PoleDecomposition d;
            d.C = C;
            for (const auto& [x, y, z, mult] : poles)
                d.poles.push_back(Pole{{x, y, z}, mult});
            d.G = poly_from_terms(G);
            VerificationReport rep = verify_decomposition(poly_from_terms(terms), d, tol, seed);
            py::dict out;
            out["ok"] = rep.ok;
            out["coeff_residual"] = rep.coeff_residual;
            out["max_eval_residual"] = rep.max_eval_residual;
            out["max_pole_norm_dev"] = rep.max_pole_norm_dev;
            out["notes"] = rep.notes;
            return out;
        },
        py::arg("terms"), py::arg("C"), py::arg("poles"), py::arg("G"), py::arg("tol") = 1e-8,
        py::arg("seed") = 0);

    m.def(
        "transvectant",
        [](const std::vector<ComplexF>& f, const std::vector<ComplexF>& g, int r) {
            return transvectant(BinaryFormF(f), BinaryFormF(g), r).coeffs();
        },
        py::arg("f"), py::arg("g"), py::arg("r"));

    m.def(
        "polar",
        [](const std::vector<ComplexF>& f, const std::vector<ComplexF>& g) {
            return polar(BinaryFormF(f), BinaryFormF(g)).coeffs();
        },
        py::arg("f"), py::arg("g"));

    m.def(
        "apolar",
        [](const std::vector<ComplexF>& f, const std::vector<ComplexF>& g, double tol) {
            return apolar(BinaryFormF(f), BinaryFormF(g), tol);
        },
        py::arg("f"), py::arg("g"), py::arg("tol") = 1e-10);

    m.def(
        "hessian",
        [](const std::vector<ComplexF>& f) { return hessian(BinaryFormF(f)).coeffs(); },
        py::arg("f"));

    m.def(
        "joint_invariant",
        [](const std::vector<ComplexF>& f, const std::vector<ComplexF>& g) {
            return joint_invariant(BinaryFormF(f), BinaryFormF(g));
        },
        py::arg("f"), py::arg("g"));

    m.def(
        "clebsch_upsilon",
        [](const std::vector<Term>& terms) {
            return poly_to_terms(clebsch_upsilon(poly_from_terms(terms)));
        },
        py::arg("terms"));

    m.def(
        "quartic_resolvent",
        [](const std::vector<ComplexF>& b) {
            auto res = quartic_resolvent(BinaryFormF(b));
            py::dict out;
            out["I"] = res.I;
            out["J"] = res.J;
            out["lambda"] = std::vector<ComplexF>(res.lambda.begin(), res.lambda.end());
            out["repeated"] = res.repeated;
            out["repeated_lambda"] = res.repeated_lambda;
            return out;
        },
        py::arg("coeffs"));

    m.def(
        "ck_pi",
        [](int twice_j) {
            CkTable T = ck_pi(spin_from_twice(twice_j));
            py::dict out;
            for (std::size_t k = 0; k < T.c.size(); ++k)
                if (!T.c[k].is_zero() || k == 0) out[py::int_(k)] = T.c[k].to_complex();
            return out;
        },
        py::arg("twice_j"), "Exact pi-rotation expansion coefficients c_k, keyed by k.");

    m.def(
        "jw_contract",
        [](int twice_j, const std::array<double, 3>& r) {
            Matrix M = jw_spatial_tensor(spin_from_twice(twice_j)).contract(r);
            std::vector<std::vector<ComplexF>> out(M.rows(), std::vector<ComplexF>(M.cols()));
            for (int a = 0; a < M.rows(); ++a)
                for (int b = 0; b < M.cols(); ++b) out[a][b] = M(a, b);
            return out;
        },
        py::arg("twice_j"), py::arg("r"),
        "r_i..r_j t^{i..j} as a dense (2j+1) x (2j+1) matrix.");

    m.def(
        "null_sandwich_check",
        [](int twice_j, ComplexF xi, ComplexF eta, int samples, unsigned seed, double tol) {
            auto rep = null_sandwich_check(spin_from_twice(twice_j), TwoSpinor{xi, eta},
                                           samples, seed, tol);
            py::dict out;
            out["trace_residual"] = rep.trace_residual;
            out["tensor_residual"] = rep.tensor_residual;
            out["harmonic_residual"] = rep.harmonic_residual;
            out["samples"] = rep.samples;
            out["ok"] = rep.ok;
            return out;
        },
        py::arg("twice_j"), py::arg("xi"), py::arg("eta"), py::arg("samples") = 20,
        py::arg("seed") = 0, py::arg("tol") = 1e-10);
}
