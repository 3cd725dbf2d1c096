#pragma once

#include <string>

#include <json.hpp>

#include "branching/continuation.hpp"

namespace branching {

using json = nlohmann::json;

/// Accepts a number or a two-element [re, im] array.
cplx complex_from_json(const json& j);
json complex_to_json(cplx z);

/// {kind, t[], t_f, rho_norm_sq, a, c, nu}; a, c and nu are checked when present.
SpectralModel model_from_json(const json& j);
json model_to_json(const SpectralModel& model);

/// {"kind": "gaussian" | "eisenstein_product_gl2" | "constant", ...}
Numerator numerator_from_json(const json& j);
json numerator_to_json(const Numerator& numerator);

json correction_to_json(const CorrectionTerm& term);
json continuation_to_json(const ContinuationResult& result);
json trace_to_json(const BranchTrace& trace);

/// "re,im;re,im;..."
WPath parse_path(const std::string& text, const std::string& label = {});
/// "re,im" or "re"
cplx parse_complex(const std::string& text);

json read_json_file(const std::string& path);

/// Serializes with every double printed to 17 significant digits.
std::string dump_json(const json& j, int indent = 2);

}  // namespace branching
