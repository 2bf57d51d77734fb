#include "glasswing/attack_object.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace glasswing {

ObjectAttackConfig ObjectAttackConfig::global_defaults() {
    ObjectAttackConfig cfg;
    cfg.mode = PatchMode::Global;
    cfg.start_alpha = 10.0;
    cfg.up_step = 10.0;
    return cfg;
}

ObjectAttackConfig ObjectAttackConfig::keyed_defaults() {
    ObjectAttackConfig cfg;
    cfg.mode = PatchMode::ColorKeyed;
    cfg.start_alpha = 5.0;
    cfg.up_step = 2.0;
    return cfg;
}

namespace {

constexpr int kRegionWindow = 32;
constexpr int kRegionRetries = 5;
constexpr double kAlphaEps = 1e-9;

// Deterministic bounded draw (multiply-shift; mt19937_64 output is
// standardized, so runs replay across platforms).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

struct KeyChoice {
    Rgb key;
    Mask mask;
};

bool mask_is_degenerate(const RasterImage& img, const Mask& mask) {
    // Unusable if nothing matches, or if every match is already pure white
    // (blending white toward white is the identity).
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (mask.at(x, y) && img.at(x, y) != Rgb{255, 255, 255})
                return false;
        }
    }
    return true;
}

Rgb modal_color(const RasterImage& img, int x0, int y0, int w, int h) {
    std::map<std::uint32_t, int> counts;
    for (int y = y0; y < y0 + h; ++y) {
        for (int x = x0; x < x0 + w; ++x) {
            const Rgb c = img.at(x, y);
            const std::uint32_t packed =
                (std::uint32_t(c.r) << 16) | (std::uint32_t(c.g) << 8) | c.b;
            ++counts[packed];
        }
    }
    // std::map iterates keys ascending, so ties resolve to the smallest
    // packed color deterministically.
    std::uint32_t best_key = 0;
    int best_count = -1;
    for (const auto& [packed, count] : counts) {
        if (count > best_count) {
            best_key = packed;
            best_count = count;
        }
    }
    return Rgb{std::uint8_t(best_key >> 16), std::uint8_t(best_key >> 8),
               std::uint8_t(best_key)};
}

std::optional<KeyChoice> choose_key(const RasterImage& img, const ObjectAttackConfig& cfg) {
    if (cfg.color_key) {
        Mask mask = keyed_whiten_blend(img, *cfg.color_key, cfg.tolerance, 0.0).second;
        if (mask_is_degenerate(img, mask))
            return std::nullopt;
        return KeyChoice{*cfg.color_key, std::move(mask)};
    }

    std::mt19937_64 rng(cfg.seed);
    const int ww = std::min(kRegionWindow, img.width());
    const int wh = std::min(kRegionWindow, img.height());
    for (int attempt = 0; attempt < kRegionRetries; ++attempt) {
        const int x0 = static_cast<int>(bounded(rng, std::uint64_t(img.width() - ww + 1)));
        const int y0 = static_cast<int>(bounded(rng, std::uint64_t(img.height() - wh + 1)));
        const Rgb key = modal_color(img, x0, y0, ww, wh);
        Mask mask = keyed_whiten_blend(img, key, cfg.tolerance, 0.0).second;
        if (!mask_is_degenerate(img, mask))
            return KeyChoice{key, std::move(mask)};
    }
    return std::nullopt;
}

class ScheduleRunner {
public:
    ScheduleRunner(const RasterImage& img, OracleSession& session, ObjectAttackConfig cfg,
                   std::optional<Rgb> key)
        : img_(img), session_(session), cfg_(std::move(cfg)), key_(key) {
        result_.source_image = img;
        result_.config = cfg_;
        result_.patch.mode = cfg_.mode;
        if (key_) {
            result_.patch.color_key = key_;
            result_.patch.tolerance = cfg_.tolerance;
        }
    }

    AttackResult run() {
        if (!resolve_target())
            return finish();

        // coarse upward scan
        std::optional<double> first_evading;
        double last_clean = 0.0; // highest alpha known not to evade
        for (double alpha = cfg_.start_alpha; alpha <= cfg_.max_alpha + kAlphaEps;
             alpha += cfg_.up_step) {
            const auto evaded = probe(alpha);
            if (!evaded) {
                result_.failure = ObjectFailure::PerceptibilityExceeded;
                return finish();
            }
            if (*evaded) {
                first_evading = alpha;
                break;
            }
            last_clean = alpha;
        }
        if (!first_evading) {
            result_.failure = ObjectFailure::CapExhausted;
            return finish();
        }

        double best = *first_evading;
        if (cfg_.refine) {
            best = cfg_.bisect ? refine_bisect(last_clean, *first_evading)
                               : refine_linear(*first_evading);
        }

        result_.success = true;
        result_.epsilon = best;
        result_.patch.alpha_pct = best;
        result_.final_image = candidate(best);
        return finish();
    }

private:
    bool resolve_target() {
        if (cfg_.target_label) {
            result_.target_label = *cfg_.target_label;
            return true;
        }
        const Verdict v = session_.detect(img_);
        const std::string label = top_label(v);
        result_.trace.push_back(ObjectTraceEntry{0.0, false, label});
        if (label.empty()) {
            result_.failure = ObjectFailure::NoTargetLabel;
            return false;
        }
        result_.target_label = label;
        return true;
    }

    RasterImage candidate(double alpha) const {
        if (key_)
            return keyed_whiten_blend(img_, *key_, cfg_.tolerance, alpha).first;
        return whiten_blend(img_, alpha);
    }

    // nullopt means the perceptibility cap blocked the candidate; it was
    // never submitted to the oracle.
    std::optional<bool> probe(double alpha) {
        RasterImage cand = candidate(alpha);
        if (cfg_.perceptibility_cap &&
            mean_abs_diff(img_, cand) > *cfg_.perceptibility_cap + kAlphaEps)
            return std::nullopt;
        const Verdict v = session_.detect(cand);
        const bool evaded = evades_detection(v, result_.target_label);
        result_.trace.push_back(ObjectTraceEntry{alpha, evaded, top_label(v)});
        return evaded;
    }

    double refine_linear(double first_evading) {
        double best = first_evading;
        for (double alpha = first_evading - cfg_.refine_step; alpha > kAlphaEps;
             alpha -= cfg_.refine_step) {
            const auto evaded = probe(alpha);
            if (!evaded || !*evaded)
                break;
            best = alpha;
        }
        return best;
    }

    // Binary search on the refine_step grid between a known clean alpha
    // (or zero) and the first evading alpha.
    double refine_bisect(double lo, double hi) {
        std::int64_t n_lo = 0;
        std::int64_t n_hi =
            static_cast<std::int64_t>(std::llround((hi - lo) / cfg_.refine_step));
        const auto grid = [&](std::int64_t k) { return lo + k * cfg_.refine_step; };

        double best = hi;
        while (n_hi - n_lo > 1) {
            const std::int64_t mid = n_lo + (n_hi - n_lo) / 2;
            const double alpha = grid(mid);
            if (alpha <= kAlphaEps) {
                n_lo = mid;
                continue;
            }
            const auto evaded = probe(alpha);
            if (evaded && *evaded) {
                n_hi = mid;
                best = alpha;
            } else {
                n_lo = mid;
            }
        }
        return best;
    }

    AttackResult finish() {
        result_.queries = result_.trace.size();
        if (!result_.success && result_.final_image.empty())
            result_.final_image = img_;
        return std::move(result_);
    }

    const RasterImage& img_;
    OracleSession& session_;
    ObjectAttackConfig cfg_;
    std::optional<Rgb> key_;
    AttackResult result_;
};

} // namespace

AttackResult attack_global(const RasterImage& img, OracleSession& session,
                           const ObjectAttackConfig& cfg) {
    ObjectAttackConfig effective = cfg;
    effective.mode = PatchMode::Global;
    return ScheduleRunner(img, session, effective, std::nullopt).run();
}

AttackResult attack_keyed(const RasterImage& img, OracleSession& session,
                          const ObjectAttackConfig& cfg) {
    ObjectAttackConfig effective = cfg;
    effective.mode = PatchMode::ColorKeyed;

    const auto choice = choose_key(img, effective);
    if (!choice) {
        AttackResult result;
        result.source_image = img;
        result.final_image = img;
        result.config = effective;
        result.patch.mode = PatchMode::ColorKeyed;
        result.patch.tolerance = effective.tolerance;
        result.failure = ObjectFailure::DegenerateRegion;
        if (effective.target_label)
            result.target_label = *effective.target_label;
        return result;
    }
    return ScheduleRunner(img, session, effective, choice->key).run();
}

bool verify_minimality(const AttackResult& result, OracleSession& session) {
    if (!result.success || !result.config.refine)
        throw ConfigError("verify_minimality needs a successful refined result");

    const double alpha = result.epsilon - result.config.refine_step;
    if (alpha <= kAlphaEps)
        return true; // nothing below to test

    RasterImage cand;
    if (result.patch.mode == PatchMode::ColorKeyed) {
        if (!result.patch.color_key)
            throw ConfigError("keyed result is missing its color key");
        cand = keyed_whiten_blend(result.source_image, *result.patch.color_key,
                                  result.patch.tolerance, alpha)
                   .first;
    } else {
        cand = whiten_blend(result.source_image, alpha);
    }
    const Verdict v = session.detect(cand);
    return !evades_detection(v, result.target_label);
}

} // namespace glasswing
