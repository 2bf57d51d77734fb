#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glasswing/image.hpp"
#include "glasswing/oracle.hpp"

namespace glasswing {

/// Why an object attack run stopped without success.
enum class ObjectFailure {
    None,
    CapExhausted,           // reached max_alpha without evading
    PerceptibilityExceeded, // candidate passed the perceptibility cap first
    DegenerateRegion,       // keyed mode could not find a usable color key
    NoTargetLabel,          // clean image produced no detection to evade
};

/// Schedule and constraints for the transparency attack. Defaults follow
/// the two modes: global blending starts at 10% and climbs by 10, keyed
/// blending starts at 5% and climbs by 2; both refine downward by 1.
struct ObjectAttackConfig {
    PatchMode mode = PatchMode::Global;
    double start_alpha = 10.0;
    double up_step = 10.0;
    double refine_step = 1.0;
    bool refine = true;
    bool bisect = false; // binary-search refinement instead of linear descent
    double max_alpha = 80.0;
    std::optional<double> perceptibility_cap; // mean_abs_diff bound
    std::uint64_t seed = 0;                   // keyed-mode region selection
    int tolerance = 10;                       // keyed-mode color tolerance
    std::optional<Rgb> color_key;             // overrides seeded region sampling
    std::optional<std::string> target_label;  // skips the initial clean query

    static ObjectAttackConfig global_defaults();
    static ObjectAttackConfig keyed_defaults();
};

struct ObjectTraceEntry {
    double alpha = 0.0;
    bool evaded = false;
    std::string top_label;
};

/// Outcome of one transparency attack run. `queries` always equals both
/// the trace length and the session's query-count delta for the run; the
/// initial clean query (when the target label was not preset) appears in
/// the trace as alpha 0.
struct AttackResult {
    bool success = false;
    double epsilon = 0.0; // minimal evading alpha, when success
    std::uint64_t queries = 0;
    std::vector<ObjectTraceEntry> trace;
    PatchSpec patch;
    RasterImage final_image;
    RasterImage source_image;
    std::string target_label;
    ObjectFailure failure = ObjectFailure::None;
    ObjectAttackConfig config;
};

/// Whole-image transparency attack: scan alpha upward from
/// cfg.start_alpha in cfg.up_step increments until the oracle stops
/// reporting the target label, then (optionally) walk back down in
/// cfg.refine_step decrements while evasion persists. Returns the
/// smallest evading alpha observed.
AttackResult attack_global(const RasterImage& img, OracleSession& session,
                           const ObjectAttackConfig& cfg);

/// Color-keyed variant: picks a random 32x32 window (seeded), keys on its
/// modal color, and runs the same schedule over keyed_whiten_blend.
AttackResult attack_keyed(const RasterImage& img, OracleSession& session,
                          const ObjectAttackConfig& cfg);

/// Re-queries at epsilon - refine_step and confirms it does not evade
/// (true vacuously when that would reach zero). A true result certifies
/// minimality at the refinement resolution.
bool verify_minimality(const AttackResult& result, OracleSession& session);

} // namespace glasswing
