#include "closet/classify.hpp"

#include <array>
#include <ostream>

#include "closet/pipeline.hpp"

namespace closet {

Label label_for_score(double score) {
  if (score < 0.5) return Label::Shirt;
  if (score < 1.0) return Label::Dress;
  return Label::Pants;
}

Classification classify_features(const features::FeatureVector& fv,
                                 const training::TrainedModel& model) {
  const std::array<double, 2> crisp{fv.m1, fv.mean_val};
  const auto result = model.identify.evaluate(crisp);
  return Classification{label_for_score(result.value), result.value, fv, result.indeterminate};
}

Classification classify_image(const image::GrayImage& gray, const training::TrainedModel& model,
                              ImageKind kind) {
  return classify_features(process_image(gray, model.pipeline, kind).features, model);
}

Classification classify_file(const std::filesystem::path& path,
                             const training::TrainedModel& model, ImageKind kind) {
  return classify_image(image::load_and_gray(path), model, kind);
}

void write_record(std::ostream& os, const std::string& path, const Classification& c) {
  os << "path=" << path << "\tlabel=" << to_string(c.label) << "\tscore=" << c.score
     << "\tm1=" << c.features.m1 << "\tmean_val=" << c.features.mean_val
     << "\tindeterminate=" << (c.indeterminate ? 1 : 0) << '\n';
}

}  // namespace closet
