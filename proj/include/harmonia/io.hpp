#pragma once

#include <string>

#include <json.hpp>

#include "harmonia/harmonic.hpp"
#include "harmonia/poles.hpp"
#include "harmonia/poly.hpp"

namespace harmonia {

using Json = nlohmann::json;

// Degree cap applied by the parsers; configurable via HARMONIA_MAX_DEGREE.
int max_degree();

// Parsed harmonic/polynomial input file. "monomial" files carry an arbitrary
// homogeneous polynomial; "phi" files carry normal-form coefficients and are
// converted through the solid-harmonic basis.
struct HarmonicInput {
    TernaryPolyF poly;
    bool from_phi = false;
    bool real_flag = false;
};

HarmonicInput parse_harmonic_json(const Json& j);
HarmonicInput load_harmonic_file(const std::string& path);
Json harmonic_to_json(const TernaryPolyF& f);

BinaryFormF parse_binary_json(const Json& j);
Json binary_to_json(const BinaryFormF& f, double zero_tol = 0.0);

Json decomposition_to_json(const PoleDecomposition& d);
PoleDecomposition parse_decomposition_json(const Json& j);

std::string dump_json(const Json& j);
Json load_json_file(const std::string& path);
void write_output(const Json& j, const std::string& path);  // empty path -> stdout

}  // namespace harmonia
