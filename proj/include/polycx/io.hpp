#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "polycx/complex.hpp"
#include "polycx/report.hpp"

namespace polycx {

inline constexpr const char* kFormatVersion = "polycx/1";

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Canonical document; `content_digest` covers everything else in it.
nlohmann::json complex_to_json(const PolComplex& cx, bool with_cubes = false);
/// Throws IoError on a wrong format version, a digest mismatch or malformed content.
PolComplex complex_from_json(const nlohmann::json& doc);

/// Writes through a temporary file in the same directory, then renames.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

void write_complex(const std::filesystem::path& path, const PolComplex& cx, bool with_cubes = false);
PolComplex read_complex(const std::filesystem::path& path);

/// Vertices coloured by deficiency: red, blue, green, then gray.
std::string complex_dot(const PolComplex& cx);
/// Crossing graph from the quadrant condition. Full mode only.
std::string crossing_dot(const PolComplex& cx);
/// Carrier graph of the hyperplane of `a`; throws UnknownArc.
std::string hyperplane_dot(const PolComplex& cx, ArcId a);

nlohmann::json report_to_json(const Report& r);
/// Systems at every certified vertex that has any, with their cycle witnesses.
nlohmann::json curvature_to_json(const Enumeration& en);

/// $POLYCX_CACHE_DIR, else ./.polycx-cache.
std::filesystem::path cache_dir();
std::filesystem::path cache_path(const SurfaceSignature& sig, Mode mode, int radius);
std::optional<PolComplex> cache_load(const SurfaceSignature& sig, Mode mode, int radius);
void cache_store(const PolComplex& cx);

}  // namespace polycx
