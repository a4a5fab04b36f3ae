#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cineforge {

// The seven augmentation features plus the separately prompted effective
// light. `textures` and `window` share one descriptor document (the context
// analysis covers both); everywhere a document is keyed, window maps onto
// textures via document_feature().
enum class Feature {
    particles,
    objects,
    textures,
    characters,
    body,
    window,
    lighting,
    effective_light,
};

inline constexpr std::array<Feature, 8> kAllFeatures = {
    Feature::particles, Feature::objects,  Feature::textures, Feature::characters,
    Feature::body,      Feature::window,   Feature::lighting, Feature::effective_light,
};

// The seven distinct analyzer documents (window folded into textures).
inline constexpr std::array<Feature, 7> kDocumentFeatures = {
    Feature::particles, Feature::objects,  Feature::textures,       Feature::characters,
    Feature::body,      Feature::lighting, Feature::effective_light,
};

Feature document_feature(Feature f);
std::string_view feature_name(Feature f);
std::optional<Feature> feature_from_name(std::string_view name);

// Fixed tie-break order for schedule merging.
int feature_order(Feature f);

// Wire key holding the per-segment payload ("atmospheric_particle", ...).
std::string_view payload_key(Feature f);

// ---------------------------------------------------------------------------
// Enum vocabularies (tokens exactly as the analyzer prompts define them)
// ---------------------------------------------------------------------------

enum class ParticleType { Rain, Snow, Dust, Smoke, Fog };
enum class ParticleDensity { Sparse, Moderate, Dense, Torrential };
enum class ObjectPosition { OnTheFloor, InTheAir };
enum class QuantityLabel { AFew, Several, Many, Countless };
enum class MotionPattern { Static, ToUser, AwayFromUser, Chaotic, Falling };
enum class CharacterMotion { Moving, Static };
enum class BrightnessLevel { VeryDark, Dark, Normal, Bright, Overexposed };
enum class ColorMood { VeryCool, Cool, Neutral, Warm, VeryWarm };
enum class EffectiveLightType { Blinking, SearchLight, Explosion };
enum class LightMotion { Static, Sweeping, Random };
enum class LightIntensity { High, Medium, Low };

std::string_view to_token(ParticleType v);
std::string_view to_token(ParticleDensity v);
std::string_view to_token(ObjectPosition v);
std::string_view to_token(QuantityLabel v);
std::string_view to_token(MotionPattern v);
std::string_view to_token(CharacterMotion v);
std::string_view to_token(BrightnessLevel v);
std::string_view to_token(ColorMood v);
std::string_view to_token(EffectiveLightType v);
std::string_view to_token(LightMotion v);
std::string_view to_token(LightIntensity v);

std::optional<ParticleType> particle_type_from_token(std::string_view t);
std::optional<ParticleDensity> particle_density_from_token(std::string_view t);
std::optional<ObjectPosition> object_position_from_token(std::string_view t);
std::optional<QuantityLabel> quantity_label_from_token(std::string_view t);
std::optional<MotionPattern> motion_pattern_from_token(std::string_view t);
std::optional<CharacterMotion> character_motion_from_token(std::string_view t);
std::optional<BrightnessLevel> brightness_level_from_token(std::string_view t);
std::optional<ColorMood> color_mood_from_token(std::string_view t);
std::optional<EffectiveLightType> effective_light_type_from_token(std::string_view t);
std::optional<LightMotion> light_motion_from_token(std::string_view t);
std::optional<LightIntensity> light_intensity_from_token(std::string_view t);

// True for "#RRGGBB" with exactly six hex digits.
bool is_color_hex(std::string_view s);

// ---------------------------------------------------------------------------
// Document types
// ---------------------------------------------------------------------------

// Half-open interval [start, end) in seconds.
struct TimeSegment {
    double start = 0.0;
    double end = 0.0;

    double length() const { return end - start; }
    bool contains(double t) const { return start <= t && t < end; }

    bool operator==(const TimeSegment&) const = default;
};

struct ParticleDescriptor {
    ParticleType type = ParticleType::Rain;
    std::optional<ParticleDensity> density;

    bool operator==(const ParticleDescriptor&) const = default;
};

struct ObjectDescriptor {
    std::string description;
    std::optional<ObjectPosition> position;
    std::optional<QuantityLabel> quantity;
    std::optional<double> size;
    std::optional<MotionPattern> motion;

    // Completeness Rule: description present => every other field present.
    bool complete() const {
        return position.has_value() && quantity.has_value() && size.has_value() &&
               motion.has_value();
    }

    bool operator==(const ObjectDescriptor&) const = default;
};

struct ContextDescriptor {
    std::optional<std::string> overall_scene_context;
    std::optional<std::string> outside_view_context;
    std::vector<std::string> floor_texture_keywords;
    std::vector<std::string> wall_texture_keywords;
    std::vector<std::string> ceiling_texture_keywords;

    bool empty() const {
        return !overall_scene_context && !outside_view_context &&
               floor_texture_keywords.empty() && wall_texture_keywords.empty() &&
               ceiling_texture_keywords.empty();
    }

    bool operator==(const ContextDescriptor&) const = default;
};

struct CharacterDescriptor {
    std::string description;
    std::optional<CharacterMotion> motion;
    std::optional<QuantityLabel> quantity;
    std::optional<double> size;

    bool complete() const {
        return motion.has_value() && quantity.has_value() && size.has_value();
    }

    bool operator==(const CharacterDescriptor&) const = default;
};

struct BodyDescriptor {
    std::string user_character;

    bool operator==(const BodyDescriptor&) const = default;
};

struct LightingDescriptor {
    std::optional<BrightnessLevel> brightness_level;
    std::optional<ColorMood> color_mood;
    std::optional<std::string> dominant_color_hex;

    bool operator==(const LightingDescriptor&) const = default;
};

struct EffectiveLightDescriptor {
    EffectiveLightType type = EffectiveLightType::Blinking;
    std::optional<std::string> color_hex;
    std::optional<LightMotion> motion;
    std::optional<LightIntensity> intensity;

    bool operator==(const EffectiveLightDescriptor&) const = default;
};

using DescriptorPayload =
    std::variant<ParticleDescriptor, ObjectDescriptor, ContextDescriptor, CharacterDescriptor,
                 BodyDescriptor, LightingDescriptor, EffectiveLightDescriptor>;

struct DocumentEntry {
    TimeSegment segment;
    // nullopt = feature absent over this segment (the analyzer's null case).
    std::optional<DescriptorPayload> payload;

    bool operator==(const DocumentEntry&) const = default;
};

struct FeatureDocument {
    // Always a document feature (window requests are stored as textures).
    Feature feature = Feature::particles;
    std::vector<DocumentEntry> segments;

    bool operator==(const FeatureDocument&) const = default;
};

// ---------------------------------------------------------------------------
// Parsing / validation
// ---------------------------------------------------------------------------

enum class ParseMode { strict, lenient };

struct ParseResult {
    FeatureDocument document;
    std::vector<std::string> warnings; // lenient-mode degradations
};

// Parses the analyzer's array-of-segments JSON for one feature.
//
// Strict mode rejects unknown enum tokens (EnumError) and malformed values
// (SchemaError). Lenient mode maps unknown tokens and bad values to absent
// fields with a warning, so drifting analyzer output degrades instead of
// failing the pipeline. end <= start is an IntervalError in both modes.
ParseResult parse_feature_document(std::string_view raw, Feature feature,
                                   ParseMode mode = ParseMode::lenient);

enum class RuleViolationKind { overlap, out_of_range, incomplete };

struct RuleViolation {
    RuleViolationKind kind = RuleViolationKind::overlap;
    std::size_t segment_index = 0;
    std::string message;
};

struct ValidationReport {
    std::vector<RuleViolation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks the segmentation rules the analyzer may violate: overlaps,
// timestamps outside [0, clip_duration], completeness breaches. Strict mode
// throws ValidationFailure when any violation exists; lenient returns the
// report for the timeline compiler to repair.
ValidationReport validate_document(const FeatureDocument& doc, double clip_duration,
                                   ParseMode mode = ParseMode::lenient);

// Canonical serialization (sorted keys, trimmed reals); the output reparses
// to a structurally equal document.
std::string serialize_document(const FeatureDocument& doc);

} // namespace cineforge
