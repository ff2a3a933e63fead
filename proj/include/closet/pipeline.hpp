#pragma once

#include <filesystem>

#include "closet/config.hpp"
#include "closet/features.hpp"
#include "closet/image.hpp"

namespace closet {

/// Canonical resize, edge FIS with the kind's sigma, max normalization and
/// border whitening.
image::EdgeMap prepare_edges(const image::GrayImage& gray, const PipelineConfig& cfg,
                             ImageKind kind);

features::FeatureExtraction process_image(const image::GrayImage& gray, const PipelineConfig& cfg,
                                          ImageKind kind);

features::FeatureExtraction process_file(const std::filesystem::path& path,
                                         const PipelineConfig& cfg, ImageKind kind);

}  // namespace closet
