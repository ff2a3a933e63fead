#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "closet/config.hpp"
#include "closet/features.hpp"
#include "closet/fuzzy.hpp"
#include "closet/label.hpp"

namespace closet::training {

inline constexpr double kM1Lo = -100.0;
inline constexpr double kM1Hi = 100.0;
inline constexpr double kMeanValLo = -1000.0;
inline constexpr double kMeanValHi = 1000.0;
inline constexpr double kItemIsLo = 0.0;
inline constexpr double kItemIsHi = 1.5;
inline constexpr TriangleParams kShirtBand{0.0, 0.25, 0.5};
inline constexpr TriangleParams kDressBand{0.5, 0.75, 1.0};
inline constexpr TriangleParams kPantsBand{1.0, 1.25, 1.5};

/// Lower bound applied to every trained standard deviation.
inline constexpr double kSigmaFloor = 1e-6;

struct LabeledSample {
  Label label = Label::Shirt;
  features::FeatureVector features;
  std::string source;
  ImageKind kind = ImageKind::UserPhoto;
};

struct GaussianStat {
  double mean = 0.0;
  double std = 1.0;
  friend bool operator==(const GaussianStat&, const GaussianStat&) = default;
};

/// Membership parameters for the identify FIS. The meanVal entries hold the
/// Gaussian actually used: center = class mean, sigma = |class mean|.
struct ClassStats {
  GaussianStat m1_shirt;
  GaussianStat m1_dress;
  GaussianStat m1_pants;
  GaussianStat meanval_dress;
  GaussianStat meanval_pants;
  friend bool operator==(const ClassStats&, const ClassStats&) = default;
};

struct StatsReport {
  ClassStats stats;
  std::vector<std::string> warnings;  // floored (degenerate) spreads
};

/// Sample mean and (n-1) standard deviation per class. Throws TrainingError if
/// any class has fewer than two samples.
StatsReport class_stats(std::span<const LabeledSample> samples);

/// Builds the four-rule classifier:
///   m1 is shirt -> shirt
///   m1 is not shirt AND meanVal is dress -> dress
///   m1 is not shirt AND meanVal is pants -> pants
///   m1 is shirt AND meanVal is dress -> dress
fuzzy::MamdaniFis build_identify_fis(const ClassStats& stats, int resolution = kFisResolution);

inline constexpr int kModelFormatVersion = 1;
inline constexpr std::string_view kMeanValConvention = "roi1_minus_roi2";

struct TrainedModel {
  ClassStats stats;
  fuzzy::MamdaniFis identify;
  PipelineConfig pipeline;
  int format_version = kModelFormatVersion;
  friend bool operator==(const TrainedModel&, const TrainedModel&) = default;
};

TrainedModel make_model(const ClassStats& stats, const PipelineConfig& pipeline);

struct TrainingItem {
  std::filesystem::path path;
  Label label = Label::Shirt;
  ImageKind kind = ImageKind::UserPhoto;
};

struct SampleOutcome {
  TrainingItem item;
  std::optional<features::FeatureVector> features;
  std::string error;  // set when the pipeline failed for this image
};

struct TrainingResult {
  TrainedModel model;
  std::vector<SampleOutcome> outcomes;  // input order
  std::vector<std::string> warnings;
};

/// Builds a model from already-extracted features.
TrainingResult train_from_samples(std::span<const LabeledSample> samples,
                                  const PipelineConfig& cfg);

/// Runs the full pipeline on every image (in parallel across images), then
/// trains. Images that fail are reported in `outcomes` and skipped; throws
/// TrainingError if a class is left with fewer than two usable samples.
TrainingResult train(std::span<const TrainingItem> items, const PipelineConfig& cfg);

/// One tab-separated key=value line per image.
void write_training_report(std::ostream& os, const TrainingResult& result);

// --- model file ----------------------------------------------------------

std::string model_to_text(const TrainedModel& model);
/// Parses and re-validates every invariant. Throws ModelError.
TrainedModel model_from_text(std::string_view text);

void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace closet::training
