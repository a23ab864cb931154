#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "harmonia/harmonic.hpp"
#include "harmonia/invariants.hpp"
#include "harmonia/io.hpp"
#include "harmonia/jweinberg.hpp"
#include "harmonia/poles.hpp"

namespace {

using namespace harmonia;

struct CommonOpts {
    std::string input;
    std::string output;
    std::string input2;  // second operand / source file where needed
    std::string format = "json";
    std::string j_label;  // spin label for 'jw', e.g. "2" or "3/2"
    double tol = 1e-10;
    unsigned seed = 0;
    bool project = false;
    int transvect_order = -1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
    auto* in = cmd->add_option("--input,-i", o.input, "input JSON file");
    if (needs_input) in->required();
    cmd->add_option("--output,-o", o.output, "output file (default: stdout)");
    cmd->add_option("--tol", o.tol, "numerical tolerance")->capture_default_str();
    cmd->add_option("--seed", o.seed, "seed for randomized internals")->capture_default_str();
    cmd->add_flag("--project", o.project, "harmonic-project the input first");
    cmd->add_option("--format", o.format, "json or text")->capture_default_str();
}

void emit(const Json& j, const CommonOpts& o, const std::string& text_form) {
    if (o.format == "text") {
        if (o.output.empty()) {
            std::cout << text_form;
        } else {
            std::ofstream out(o.output);
            if (!out) throw std::invalid_argument("cannot open output file: " + o.output);
            out << text_form;
        }
        return;
    }
    write_output(j, o.output);
}

std::string poles_text(const PoleDecomposition& d) {
    std::ostringstream os;
    os.precision(17);
    os << "C = " << d.C << "\n";
    for (const auto& p : d.poles)
        os << "pole (" << p.dir[0] << ", " << p.dir[1] << ", " << p.dir[2]
           << ") multiplicity " << p.multiplicity << "\n";
    os << "residual " << d.diagnostics.coeff_residual << "\n";
    return os.str();
}

HalfInt parse_spin(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return HalfInt(std::stoi(s));
        int num = std::stoi(s.substr(0, slash));
        int den = std::stoi(s.substr(slash + 1));
        if (den != 2) throw std::invalid_argument("");
        return HalfInt::from_twice(num);
    } catch (...) {
        throw std::invalid_argument("spin must look like '2' or '3/2': got '" + s + "'");
    }
}

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1)
        os << "/" << boost::multiprecision::denominator(q);
    return os.str();
}

int run_poles(const CommonOpts& o) {
    auto in = load_harmonic_file(o.input);
    PoleOptions opts;
    opts.project = o.project;
    opts.tol = o.tol;
    opts.seed = o.seed;
    PoleDecomposition d = maxwell_poles(in.poly, opts);
    emit(decomposition_to_json(d), o, poles_text(d));
    return 0;
}

int run_project(const CommonOpts& o) {
    auto in = load_harmonic_file(o.input);
    emit(harmonic_to_json(harmonic_projection(in.poly)), o,
         dump_json(harmonic_to_json(harmonic_projection(in.poly))));
    return 0;
}

int run_gauss(const CommonOpts& o) {
    auto in = load_harmonic_file(o.input);
    auto parts = gauss_decompose(in.poly);
    Json out;
    out["parts"] = Json::array();
    for (const auto& p : parts) out["parts"].push_back(harmonic_to_json(p));
    emit(out, o, dump_json(out));
    return 0;
}

int run_restrict(const CommonOpts& o) {
    auto in = load_harmonic_file(o.input);
    BinaryFormF B = restrict_to_conic(in.poly);
    Json out = binary_to_json(B, o.tol * std::max(1.0, in.poly.coeff_norm()));
    if (B.coeff_norm() <= o.tol * std::max(1.0, in.poly.coeff_norm()))
        out["note"] = "restriction vanishes: input is a multiple of r^2";
    emit(out, o, dump_json(out));
    return 0;
}

int run_reconstruct(const CommonOpts& o) {
    BinaryFormF B = parse_binary_json(load_json_file(o.input));
    if (B.degree() % 2 != 0)
        throw std::invalid_argument("reconstruct: binary degree must be even");
    emit(harmonic_to_json(harmonic_from_conic(B)), o,
         dump_json(harmonic_to_json(harmonic_from_conic(B))));
    return 0;
}

int run_transvect(const CommonOpts& o) {
    Json j = load_json_file(o.input);
    if (!j.contains("f") || !j.contains("g"))
        throw std::invalid_argument("transvect: input must carry binary forms 'f' and 'g'");
    BinaryFormF f = parse_binary_json(j.at("f"));
    BinaryFormF g = parse_binary_json(j.at("g"));
    int r = o.transvect_order >= 0 ? o.transvect_order : j.value("r", 1);
    Json out = binary_to_json(transvectant(f, g, r));
    out["r"] = r;
    emit(out, o, dump_json(out));
    return 0;
}

int run_apolar(const CommonOpts& o) {
    Json j = load_json_file(o.input);
    if (!j.contains("f") || !j.contains("g"))
        throw std::invalid_argument("apolar: input must carry binary forms 'f' and 'g'");
    BinaryFormF f = parse_binary_json(j.at("f"));
    BinaryFormF g = parse_binary_json(j.at("g"));
    Json out;
    out["apolar"] = apolar(f, g, o.tol);
    out["polar_norm"] = polar(f, g).coeff_norm();
    std::ostringstream os;
    os << (out["apolar"].get<bool>() ? "apolar" : "not apolar") << " (polar norm "
       << out["polar_norm"].get<double>() << ")\n";
    emit(out, o, os.str());
    return 0;
}

int run_upsilon(const CommonOpts& o) {
    auto in = load_harmonic_file(o.input);
    TernaryPolyF ups = clebsch_upsilon(o.project ? harmonic_projection(in.poly) : in.poly);
    emit(harmonic_to_json(ups), o, dump_json(harmonic_to_json(ups)));
    return 0;
}

int run_jw(const CommonOpts& o) {
    if (o.j_label.empty()) throw std::invalid_argument("jw: --j is required");
    HalfInt j = parse_spin(o.j_label);
    CkTable T = ck_pi(j);
    Json out;
    out["j"] = o.j_label;
    Json c = Json::object();
    std::ostringstream text;
    for (std::size_t k = 0; k < T.c.size(); ++k) {
        if (T.c[k].is_zero() && k != 0) continue;
        Json e;
        e["re"] = rational_str(T.c[k].re_coord(0));
        e["im"] = rational_str(T.c[k].im_coord(0));
        c["c" + std::to_string(k)] = e;
        text << "c_" << k << " = " << rational_str(T.c[k].re_coord(0));
        if (T.c[k].im_coord(0) != 0)
            text << " + " << rational_str(T.c[k].im_coord(0)) << " i";
        text << "\n";
    }
    out["c"] = c;
    emit(out, o, text.str());
    return 0;
}

int run_verify(const CommonOpts& o) {
    if (o.input2.empty())
        throw std::invalid_argument("verify: --source (original harmonic file) is required");
    PoleDecomposition d = parse_decomposition_json(load_json_file(o.input));
    auto src = load_harmonic_file(o.input2);
    VerificationReport rep = verify_decomposition(src.poly, d, std::max(o.tol, 1e-8), o.seed);
    Json out;
    out["ok"] = rep.ok;
    out["coeff_residual"] = rep.coeff_residual;
    out["max_eval_residual"] = rep.max_eval_residual;
    out["max_pole_norm_dev"] = rep.max_pole_norm_dev;
    out["notes"] = rep.notes;
    std::ostringstream os;
    os << (rep.ok ? "OK" : "FAIL") << " coeff_residual=" << rep.coeff_residual
       << " eval_residual=" << rep.max_eval_residual << "\n"
       << rep.notes << "\n";
    emit(out, o, os.str());
    return rep.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spherical-harmonic pole decomposition and binary invariant utilities"};
    app.require_subcommand(1);

    CommonOpts o;
    auto* poles = app.add_subcommand("poles", "Maxwell pole decomposition of a real harmonic");
    add_common(poles, o);
    auto* project = app.add_subcommand("project", "harmonic projection of a polynomial");
    add_common(project, o);
    auto* gauss = app.add_subcommand("gauss", "full Gauss decomposition");
    add_common(gauss, o);
    auto* restrictc = app.add_subcommand("restrict", "restrict to the null cone (binary form)");
    add_common(restrictc, o);
    auto* reconst = app.add_subcommand("reconstruct", "harmonic from a cone restriction");
    add_common(reconst, o);
    auto* transvect = app.add_subcommand("transvect", "r-th transvectant of two binary forms");
    add_common(transvect, o);
    transvect->add_option("--r", o.transvect_order, "transvectant order");
    auto* apolarc = app.add_subcommand("apolar", "apolarity test for two binary forms");
    add_common(apolarc, o);
    auto* upsilon = app.add_subcommand("upsilon", "Clebsch Upsilon of a harmonic");
    add_common(upsilon, o);
    auto* jw = app.add_subcommand("jw", "pi-rotation expansion coefficients c_k");
    add_common(jw, o, /*needs_input=*/false);
    jw->add_option("--j", o.j_label, "spin, e.g. 2 or 3/2")->required();
    auto* verify = app.add_subcommand("verify", "verify a decomposition against its source");
    add_common(verify, o);
    verify->add_option("--source", o.input2, "original harmonic file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (poles->parsed()) return run_poles(o);
        if (project->parsed()) return run_project(o);
        if (gauss->parsed()) return run_gauss(o);
        if (restrictc->parsed()) return run_restrict(o);
        if (reconst->parsed()) return run_reconstruct(o);
        if (transvect->parsed()) return run_transvect(o);
        if (apolarc->parsed()) return run_apolar(o);
        if (upsilon->parsed()) return run_upsilon(o);
        if (jw->parsed()) return run_jw(o);
        if (verify->parsed()) return run_verify(o);
    } catch (const std::invalid_argument& e) {
        // Parse/validation problems: distinguish file-shape errors from
        // mathematical precondition failures by a conventional prefix.
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        bool parse_issue = msg.find("file") != std::string::npos ||
                           msg.find("JSON") != std::string::npos ||
                           msg.find("field") != std::string::npos ||
                           msg.find("must carry") != std::string::npos ||
                           msg.find("--") != std::string::npos;
        return parse_issue ? 1 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
