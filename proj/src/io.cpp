#include "harmonia/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace harmonia {

int max_degree() {
    const char* env = std::getenv("HARMONIA_MAX_DEGREE");
    if (!env || !*env) return 64;
    int v = std::atoi(env);
    if (v <= 0) throw std::invalid_argument("HARMONIA_MAX_DEGREE must be a positive integer");
    return v;
}

namespace {

double get_number(const Json& j, const char* key, double fallback = 0.0) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number())
        throw std::invalid_argument(std::string("field '") + key + "' must be a number");
    return j.at(key).get<double>();
}

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
    return j.at(key).get<int>();
}

}  // namespace

HarmonicInput parse_harmonic_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("harmonic file: top level must be an object");
    std::string type = j.value("type", "monomial");
    HarmonicInput in;
    in.real_flag = j.value("real", false);
    if (type == "monomial") {
        int n = get_int(j, "degree");
        if (n < 0 || n > max_degree())
            throw std::invalid_argument("harmonic file: degree out of range");
        TernaryPolyF f(n);
        if (!j.contains("terms") || !j.at("terms").is_array())
            throw std::invalid_argument("harmonic file: missing 'terms' array");
        for (const auto& t : j.at("terms")) {
            int p = get_int(t, "p"), q = get_int(t, "q"), r = get_int(t, "r");
            if (p < 0 || q < 0 || r < 0 || p + q + r != n)
                throw std::invalid_argument(
                    "harmonic file: term exponents must be nonnegative and sum to the degree");
            f.add_term(p, q, r, ComplexF(get_number(t, "re"), get_number(t, "im")));
        }
        in.poly = f;
    } else if (type == "phi") {
        int L = get_int(j, "L");
        if (L < 0 || L > max_degree())
            throw std::invalid_argument("harmonic file: L out of range");
        HarmonicNormalForm nf(L);
        if (j.contains("coeffs")) {
            if (!j.at("coeffs").is_array())
                throw std::invalid_argument("harmonic file: 'coeffs' must be an array");
            for (const auto& t : j.at("coeffs")) {
                int M = get_int(t, "M");
                if (std::abs(M) > L)
                    throw std::invalid_argument("harmonic file: |M| exceeds L");
                nf.set(M, ComplexF(get_number(t, "re"), get_number(t, "im")));
            }
        }
        in.poly = normal_form_to_poly(nf);
        in.from_phi = true;
    } else {
        throw std::invalid_argument("harmonic file: unknown type '" + type + "'");
    }
    return in;
}

HarmonicInput load_harmonic_file(const std::string& path) {
    return parse_harmonic_json(load_json_file(path));
}

Json harmonic_to_json(const TernaryPolyF& f) {
    Json out;
    out["type"] = "monomial";
    out["degree"] = std::max(f.degree(), 0);
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json t;
        t["p"] = e[0];
        t["q"] = e[1];
        t["r"] = e[2];
        t["re"] = c.real();
        t["im"] = c.imag();
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

BinaryFormF parse_binary_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw std::invalid_argument("binary form: need an object with a 'coeffs' array (b_0..b_d)");
    const auto& arr = j.at("coeffs");
    if (arr.empty()) throw std::invalid_argument("binary form: empty coefficient list");
    if (static_cast<int>(arr.size()) - 1 > max_degree())
        throw std::invalid_argument("binary form: degree out of range");
    std::vector<ComplexF> b;
    for (const auto& t : arr) b.emplace_back(get_number(t, "re"), get_number(t, "im"));
    return BinaryFormF(std::move(b));
}

Json binary_to_json(const BinaryFormF& f, double zero_tol) {
    Json out;
    out["degree"] = f.degree();
    Json coeffs = Json::array();
    for (int k = 0; k <= f.degree(); ++k) {
        ComplexF c = f.b(k);
        if (zero_tol > 0 && std::abs(c) <= zero_tol) c = ComplexF(0, 0);
        Json t;
        t["re"] = c.real();
        t["im"] = c.imag();
        coeffs.push_back(t);
    }
    out["coeffs"] = coeffs;
    return out;
}

Json decomposition_to_json(const PoleDecomposition& d) {
    Json out;
    out["C"] = d.C;
    Json poles = Json::array();
    for (const auto& p : d.poles) {
        Json e;
        e["x"] = p.dir[0];
        e["y"] = p.dir[1];
        e["z"] = p.dir[2];
        e["multiplicity"] = p.multiplicity;
        poles.push_back(e);
    }
    out["poles"] = poles;
    out["G"] = harmonic_to_json(d.G);
    Json diag;
    diag["coeff_residual"] = d.diagnostics.coeff_residual;
    diag["harmonic_residual"] = d.diagnostics.harmonic_residual;
    diag["reality_residual"] = d.diagnostics.reality_residual;
    diag["c_imag_residual"] = d.diagnostics.c_imag_residual;
    out["diagnostics"] = diag;
    return out;
}

PoleDecomposition parse_decomposition_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("decomposition file: must be an object");
    PoleDecomposition d;
    d.C = get_number(j, "C");
    if (!j.contains("poles") || !j.at("poles").is_array())
        throw std::invalid_argument("decomposition file: missing 'poles' array");
    for (const auto& e : j.at("poles")) {
        Pole p;
        p.dir = {get_number(e, "x"), get_number(e, "y"), get_number(e, "z")};
        p.multiplicity = e.contains("multiplicity") ? get_int(e, "multiplicity") : 1;
        if (p.multiplicity < 1)
            throw std::invalid_argument("decomposition file: multiplicity must be >= 1");
        double n = std::sqrt(p.dir[0] * p.dir[0] + p.dir[1] * p.dir[1] + p.dir[2] * p.dir[2]);
        if (std::abs(n - 1.0) > 1e-6)
            throw std::invalid_argument("decomposition file: poles must be unit vectors");
        d.poles.push_back(p);
    }
    if (j.contains("G")) d.G = parse_harmonic_json(j.at("G")).poly;
    return d;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

void write_output(const Json& j, const std::string& path) {
    std::string text = dump_json(j);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

}  // namespace harmonia
