#pragma once

#include <filesystem>
#include <iosfwd>

#include "closet/features.hpp"
#include "closet/image.hpp"
#include "closet/label.hpp"
#include "closet/training.hpp"

namespace closet {

struct Classification {
  Label label = Label::Dress;
  double score = 0.75;  // itemIs, in [0, 1.5]
  features::FeatureVector features;
  bool indeterminate = false;  // no rule fired; score is the universe midpoint
};

/// [0,0.5) shirt, [0.5,1.0) dress, [1.0,1.5] pants. Values outside the
/// universe fall into the nearest band.
Label label_for_score(double score);

Classification classify_features(const features::FeatureVector& fv,
                                 const training::TrainedModel& model);

Classification classify_image(const image::GrayImage& gray, const training::TrainedModel& model,
                              ImageKind kind);

Classification classify_file(const std::filesystem::path& path,
                             const training::TrainedModel& model, ImageKind kind);

/// Tab-separated key=value record: path, label, score, m1, mean_val, indeterminate.
void write_record(std::ostream& os, const std::string& path, const Classification& c);

}  // namespace closet
