#pragma once

#include <array>
#include <vector>

#include "closet/config.hpp"
#include "closet/image.hpp"

namespace closet::features {

/// Horizontal band of rows [center_row - half_width, center_row + half_width].
struct Roi {
  int index = 1;  // 1, 2 or 3
  int center_row = 0;
  int half_width = kRoiHalfWidth;

  int first_row() const { return center_row - half_width; }
  int last_row() const { return center_row + half_width; }
  friend bool operator==(const Roi&, const Roi&) = default;
};

using RoiSet = std::array<Roi, 3>;

/// Builds ROIs 1..3 and checks they fit in `image_rows` and do not overlap.
/// Throws ConfigError otherwise.
RoiSet make_rois(const std::array<int, 3>& centers, int half_width, int image_rows = kCanonicalRows);

struct CurvePoint {
  int row = 0;
  int col = 0;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Leftmost non-white column per row of one ROI. Rows without any non-white
/// pixel are absent.
struct CharacteristicCurve {
  Roi roi;
  std::vector<CurvePoint> points;
};

struct FeatureVector {
  double m1 = 0.0;        // ROI-1 slope, columns per row
  double mean_val = 0.0;  // mean ROI-1 column minus mean ROI-2 column
  std::array<int, 3> valid_rows{0, 0, 0};
  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

struct FeatureExtraction {
  FeatureVector features;
  std::array<CharacteristicCurve, 3> curves;  // ROI 3 is diagnostic only
};

/// Smallest column with value strictly below `white_threshold`, per ROI row.
CharacteristicCurve leftmost_edge(const image::EdgeMap& edge, const Roi& roi,
                                  double white_threshold = kWhiteThreshold);

/// Ordinary least-squares slope of column against row.
/// Throws InsufficientDataError with fewer than two distinct rows.
double fit_slope(const CharacteristicCurve& curve);

/// mean(cols of curve1) - mean(cols of curve2). Positive when the ROI-1
/// outline sits further right (narrower garment) than the ROI-2 outline.
/// Throws InsufficientDataError on an empty curve.
double mean_diff(const CharacteristicCurve& curve1, const CharacteristicCurve& curve2);

FeatureExtraction extract_features(const image::EdgeMap& edge, const RoiSet& rois,
                                   double white_threshold = kWhiteThreshold);

}  // namespace closet::features
