#pragma once

#include <string>

#include "coexkit/bloch.hpp"
#include "coexkit/coexistence.hpp"
#include "coexkit/simsets.hpp"
#include "coexkit/symmetry.hpp"

#include <json.hpp>

namespace coexkit {

using Json = nlohmann::json;

/// Matrix wire format: {"dim": n, "entries": [[[re, im], ...n], ...n]},
/// row-major, re/im parsed as binary64.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Effect files reuse the matrix schema plus a "kind" annotation on output.
Json effect_to_json(const Effect& e);
Effect effect_from_json(const Json& j);

Json witness_to_json(const CoexWitness& w);
CoexWitness witness_from_json(const Json& j);

Json verdict_to_json(const CoexVerdict& v);

Json simprofile_to_json(const SimProfile& p);

/// {"unitary": matrix, "antiunitary": bool, "g_table": [[t, g(t)], ...],
///  "g_default": "identity"|"reverse", "flip": "none"|"all"|"hash"}
Json automorphism_to_json(const AutomorphismSpec& spec);
AutomorphismSpec automorphism_from_json(const Json& j);

std::string tprofile_to_csv(const TProfile& p);
std::string cone_section_to_csv(const ConeSection& s);

Json load_json_file(const std::string& path);
/// Writes via temp file + rename; a failed write never leaves a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

/// Canonical float formatting used in every artifact (shortest round-trip).
std::string format_double(double v);

}  // namespace coexkit
