#pragma once

// Synthetic garment silhouettes with a known left outline. Each class follows
// the outline signature the classifier relies on around the default ROIs:
//   shirt: outline moves left through ROI 1 (flared sleeve), torso further right
//   dress: outline moves right through ROI 1 (bodice), skirt further left at ROI 2
//   pants: outline moves right through ROI 1, tapering legs further right at ROI 2

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "closet/config.hpp"
#include "closet/features.hpp"
#include "closet/image.hpp"
#include "closet/label.hpp"

namespace closet::fixtures {

enum class Pattern { Solid, Stripes, Dots };

std::string_view to_string(Pattern p);

struct Fixture {
  Label label = Label::Shirt;
  std::uint64_t seed = 0;
  Pattern pattern = Pattern::Solid;
  image::GrayImage image;         // canonical size, white background
  std::vector<double> boundary;   // continuous left outline column per row, NaN off-garment
};

/// Deterministic in (label, seed, pattern). Without a pattern, one is derived from the seed.
Fixture generate(Label label, std::uint64_t seed, std::optional<Pattern> pattern = std::nullopt);

struct FixtureSample {
  Fixture fixture;
  ImageKind kind;
};

/// Four per class: one solid "template" plus three "photos" (solid, stripes, dots).
std::vector<FixtureSample> training_fixtures();
/// Two dresses, one shirt and two pants with seeds disjoint from training.
std::vector<FixtureSample> holdout_fixtures();

/// Least-squares slope of the ground-truth outline over the ROI rows.
double truth_slope(const Fixture& fx, const features::Roi& roi);
/// Mean ground-truth outline column over the ROI rows.
double truth_mean(const Fixture& fx, const features::Roi& roi);

/// 8-bit grayscale PNG of the fixture image.
void write_image(const Fixture& fx, const std::filesystem::path& path);
/// Text file: '#' header lines, then one "row<TAB>col" line per garment row.
void write_truth(const Fixture& fx, const std::filesystem::path& path);

}  // namespace closet::fixtures
