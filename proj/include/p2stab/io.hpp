#pragma once

// JSON and SVG for the file formats the command-line tool reads and writes.
// Rationals are always strings "p" or "p/q"; objects have sorted keys.

#include "p2stab/geometry.hpp"
#include "p2stab/stability.hpp"
#include "p2stab/walls.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace p2stab {

using json = nlohmann::json;

inline constexpr const char* kToolName = "p2stab";
inline constexpr const char* kToolVersion = "0.1.0";

json header_json(std::uint64_t seed);

Rational rational_from_json(const json& j);
json rational_json(const Rational& q);

json chern_json(const ChernCharacter& c);
ChernCharacter chern_from_json(const json& j);

json dimvec_json(const DimensionVector& d);
DimensionVector dimvec_from_json(const json& j);

json theta_json(const ThetaVector& t);
ThetaVector theta_from_json(const json& j);

json matrix_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what);

json field_json(const Field& f);
Field field_from_json(const json& j);

json module_json(const QuiverRep& rep);
QuiverRep module_from_json(const json& j);

json subspaces_json(const SubspaceTriple& t);
json king_json(const KingResult& k);

/// {"points": [...]} for one configuration or {"configs": [[...], ...]}.
std::vector<PointConfig> points_from_json(const json& j);
json points_json(const PointConfig& z);

json walls_json(const WallDiagram& d);
WallDiagram walls_from_json(const json& j);

json report_json(const WallCrossReport& r);

/// Deterministic 800x800 drawing of a wall diagram. `family` is an optional
/// sampled theta(b) path drawn as an arc with its end labels.
std::string wall_svg(const WallDiagram& d, const std::vector<ThetaVector>& family = {},
                     const std::string& family_label = "");

json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
/// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace p2stab
