#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kwalls/charge.hpp"
#include "kwalls/geography.hpp"
#include "kwalls/lattice.hpp"
#include "kwalls/walls.hpp"

// JSON documents and text tables for engine results. Every document carries
// "command" and "surface"; exact values are "p/q" strings and
// decimals appear only in "*_approx" annotations.
namespace kwalls::serialize {

using nlohmann::json;

json surface_json(const SurfaceData& surf);
SurfaceData surface_from_json(const json& j);

json vector_json(const CharVector& v);
CharVector vector_from_json(const json& j);

json wall_json(const Wall& wall, int digits);
Wall wall_from_json(const json& j);

/// The "walls" command document.
json report_json(const ChamberReport& report, int digits);

/// Inverse of report_json; unknown keys are ignored.
ChamberReport report_from_json(const json& j);

struct SurfaceSummary {
    SurfaceData surface;
    ChargeKind kind;
    Rational slope_function_floor;
    Rational higher_rank_floor;
    Rational floor;
    CharVector target;
    std::int64_t moduli_dimension;
    std::int64_t vanishing_max_length;
    bool very_ample;
    FlopCount flops;
    std::optional<StablePairsAmbient> stable_pairs;
};

json surface_info_json(const SurfaceSummary& summary, int digits);

json flops_json(const SurfaceData& surf, ChargeKind kind, const std::vector<FlopRecord>& flops,
                const FlopCount& count, int digits);

json vanishing_json(const SurfaceData& surf, ChargeKind kind, const Rational& length_bound,
                    std::int64_t max_length, bool very_ample);

json destabilizers_json(const SurfaceData& surf, const ChargeParams& params, std::int64_t rank_cap,
                        const CharVector& target, const std::vector<CharVector>& candidates,
                        int digits);

json chi_json(const SurfaceData& surf, const CharVector& v, const CharVector& w, std::int64_t chi);

json bounds_json(const SurfaceData& surf, ChargeKind kind, std::int64_t r, std::int64_t c,
                 const Rational& bg, std::int64_t sharp);

json oracle_json(const ChamberReport& report, std::int64_t rank_cap, std::int64_t margin,
                 const std::vector<Rational>& oracle);

/// Human-readable rendering of any document produced above.
std::string render_text(const json& doc);

/// 800x160 number line of t^2 with the shaded validity floor and one labelled
/// tick per wall. Output depends only on the report.
std::string svg_document(const ChamberReport& report);

/// Writes svg_document to path; throws std::runtime_error on I/O failure.
void render_svg(const ChamberReport& report, const std::string& path);

}  // namespace kwalls::serialize
