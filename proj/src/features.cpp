#include "closet/features.hpp"

#include "closet/error.hpp"

namespace closet::features {

RoiSet make_rois(const std::array<int, 3>& centers, int half_width, int image_rows) {
  if (half_width < 0) throw ConfigError("ROI half-width must be >= 0");
  RoiSet rois;
  for (int i = 0; i < 3; ++i) {
    rois[i] = Roi{i + 1, centers[i], half_width};
    if (rois[i].first_row() < 0 || rois[i].last_row() >= image_rows) {
      throw ConfigError("ROI " + std::to_string(i + 1) + " rows [" +
                        std::to_string(rois[i].first_row()) + ", " +
                        std::to_string(rois[i].last_row()) + "] outside image of " +
                        std::to_string(image_rows) + " rows");
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (rois[i].first_row() <= rois[j].last_row() && rois[j].first_row() <= rois[i].last_row()) {
        throw ConfigError("ROIs " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                          " overlap");
      }
    }
  }
  return rois;
}

CharacteristicCurve leftmost_edge(const image::EdgeMap& edge, const Roi& roi,
                                  double white_threshold) {
  CharacteristicCurve curve{roi, {}};
  const int first = std::max(roi.first_row(), 0);
  const int last = std::min(roi.last_row(), edge.rows() - 1);
  for (int r = first; r <= last; ++r) {
    const auto row = edge.row(r);
    for (int c = 0; c < edge.cols(); ++c) {
      if (row[c] < white_threshold) {
        curve.points.push_back({r, c});
        break;
      }
    }
  }
  return curve;
}

double fit_slope(const CharacteristicCurve& curve) {
  const auto& pts = curve.points;
  if (pts.size() < 2) {
    throw InsufficientDataError(curve.roi.index, "need at least 2 edge points for a slope, got " +
                                                     std::to_string(pts.size()));
  }
  const double n = static_cast<double>(pts.size());
  double row_mean = 0.0, col_mean = 0.0;
  for (const auto& p : pts) {
    row_mean += p.row;
    col_mean += p.col;
  }
  row_mean /= n;
  col_mean /= n;
  double sxy = 0.0, sxx = 0.0;
  for (const auto& p : pts) {
    const double dr = p.row - row_mean;
    sxy += dr * (p.col - col_mean);
    sxx += dr * dr;
  }
  if (sxx == 0.0) throw InsufficientDataError(curve.roi.index, "all edge points share one row");
  return sxy / sxx;
}

namespace {

double mean_col(const CharacteristicCurve& curve) {
  if (curve.points.empty()) throw InsufficientDataError(curve.roi.index, "no edge points");
  double sum = 0.0;
  for (const auto& p : curve.points) sum += p.col;
  return sum / static_cast<double>(curve.points.size());
}

}  // namespace

double mean_diff(const CharacteristicCurve& curve1, const CharacteristicCurve& curve2) {
  return mean_col(curve1) - mean_col(curve2);
}

FeatureExtraction extract_features(const image::EdgeMap& edge, const RoiSet& rois,
                                   double white_threshold) {
  FeatureExtraction out;
  for (int i = 0; i < 3; ++i) {
    out.curves[i] = leftmost_edge(edge, rois[i], white_threshold);
    out.features.valid_rows[i] = static_cast<int>(out.curves[i].points.size());
  }
  out.features.m1 = fit_slope(out.curves[0]);
  out.features.mean_val = mean_diff(out.curves[0], out.curves[1]);
  return out;
}

}  // namespace closet::features
