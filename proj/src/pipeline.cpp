#include "closet/pipeline.hpp"

#include <cmath>

#include "closet/error.hpp"

namespace closet {

std::string_view to_string(ImageKind kind) {
  return kind == ImageKind::Template ? "template" : "photo";
}

ImageKind parse_image_kind(std::string_view text) {
  if (text == "template") return ImageKind::Template;
  if (text == "photo" || text == "userphoto") return ImageKind::UserPhoto;
  throw ConfigError("unknown image kind '" + std::string(text) + "'");
}

void PipelineConfig::validate() const {
  if (!(template_sigma > 0.0) || !(photo_sigma > 0.0)) throw ConfigError("edge sigma must be > 0");
  if (!(white_threshold > 0.0 && white_threshold < 1.0)) {
    throw ConfigError("white threshold must lie in (0,1)");
  }
  if (border_margin < 0 || 2 * border_margin >= kCanonicalCols) {
    throw ConfigError("border margin out of range");
  }
  if (resolution < 2) throw ConfigError("FIS resolution must be >= 2");
  for (const auto& t : {white, black}) {
    if (!(t.a <= t.b && t.b <= t.c && t.a < t.c) || t.a < 0.0 || t.c > 1.0) {
      throw ConfigError("edge output triangles must be well-formed on [0,1]");
    }
  }
  features::make_rois(roi_rows, roi_half_width);
}

image::EdgeMap prepare_edges(const image::GrayImage& gray, const PipelineConfig& cfg,
                             ImageKind kind) {
  const auto canonical = image::resize_canonical(gray);
  auto edges = image::edge_map(canonical, image::edge_config(cfg, kind));
  return image::whiten_border(std::move(edges), cfg.border_margin);
}

features::FeatureExtraction process_image(const image::GrayImage& gray, const PipelineConfig& cfg,
                                          ImageKind kind) {
  const auto edges = prepare_edges(gray, cfg, kind);
  return features::extract_features(edges, features::make_rois(cfg.roi_rows, cfg.roi_half_width),
                                    cfg.white_threshold);
}

features::FeatureExtraction process_file(const std::filesystem::path& path,
                                         const PipelineConfig& cfg, ImageKind kind) {
  return process_image(image::load_and_gray(path), cfg, kind);
}

}  // namespace closet
