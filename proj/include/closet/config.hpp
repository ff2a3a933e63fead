#pragma once

#include <array>
#include <string>
#include <string_view>

namespace closet {

inline constexpr int kCanonicalRows = 1536;
inline constexpr int kCanonicalCols = 1024;

inline constexpr double kTemplateSigma = 0.1;
inline constexpr double kPhotoSigma = 0.3;
inline constexpr double kWhiteThreshold = 0.98;
inline constexpr int kBorderMargin = 50;
inline constexpr std::array<int, 3> kRoiRows{400, 800, 1200};
inline constexpr int kRoiHalfWidth = 50;
inline constexpr int kFisResolution = 1001;

/// Which edge-detection sensitivity an image gets.
enum class ImageKind { Template, UserPhoto };

std::string_view to_string(ImageKind kind);
/// Accepts "template" or "photo" (also "userphoto"); throws ConfigError otherwise.
ImageKind parse_image_kind(std::string_view text);

struct TriangleParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  friend bool operator==(const TriangleParams&, const TriangleParams&) = default;
};

/// Everything the features depend on. A trained model stores a copy so that
/// classification reproduces the exact training-time pipeline.
struct PipelineConfig {
  double template_sigma = kTemplateSigma;
  double photo_sigma = kPhotoSigma;
  TriangleParams white{0.1, 1.0, 1.0};
  TriangleParams black{0.0, 0.0, 0.7};
  std::array<int, 3> roi_rows = kRoiRows;
  int roi_half_width = kRoiHalfWidth;
  double white_threshold = kWhiteThreshold;
  int border_margin = kBorderMargin;
  int resolution = kFisResolution;

  double sigma_for(ImageKind kind) const {
    return kind == ImageKind::Template ? template_sigma : photo_sigma;
  }

  /// Throws ConfigError if any field is out of range.
  void validate() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

}  // namespace closet
