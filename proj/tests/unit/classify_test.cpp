#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "closet/classify.hpp"
#include "closet/fixtures.hpp"
#include "test_util.hpp"

namespace closet {
namespace {

TEST(LabelForScore, HalfOpenBands) {
  EXPECT_EQ(label_for_score(0.0), Label::Shirt);
  EXPECT_EQ(label_for_score(0.4999999), Label::Shirt);
  EXPECT_EQ(label_for_score(0.5), Label::Dress);
  EXPECT_EQ(label_for_score(0.9999999), Label::Dress);
  EXPECT_EQ(label_for_score(1.0), Label::Pants);
  EXPECT_EQ(label_for_score(1.5), Label::Pants);
}

TEST(LabelForScore, TotalOverUniverse) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0, 1.5);
  for (int i = 0; i < 1000; ++i) {
    const double s = u(rng);
    const Label l = label_for_score(s);
    const double lo = l == Label::Shirt ? 0.0 : l == Label::Dress ? 0.5 : 1.0;
    const double hi = l == Label::Pants ? 1.5 : lo + 0.5;
    ASSERT_GE(s, lo);
    ASSERT_TRUE(l == Label::Pants ? s <= hi : s < hi);
  }
}

TEST(Classify, NoRuleFiresIsIndeterminate) {
  training::ClassStats st;
  st.m1_shirt = {0, 1e-6};
  st.m1_dress = {1, 1};
  st.m1_pants = {1, 1};
  st.meanval_dress = {1, 1};
  st.meanval_pants = {-1, 1};
  const auto model = training::make_model(st, PipelineConfig{});
  features::FeatureVector fv;
  fv.m1 = 100;
  fv.mean_val = 1000;
  const auto c = classify_features(fv, model);
  EXPECT_TRUE(c.indeterminate);
  EXPECT_DOUBLE_EQ(c.score, 0.75);
  EXPECT_EQ(c.label, Label::Dress);
}

TEST(Classify, TrainingFixturesLandInTheirBands) {
  const auto& model = test::fixture_model();
  for (const auto& fs : fixtures::training_fixtures()) {
    const auto c = classify_image(fs.fixture.image, model, fs.kind);
    EXPECT_EQ(c.label, fs.fixture.label) << to_string(fs.fixture.label) << fs.fixture.seed;
    EXPECT_FALSE(c.indeterminate);
  }
}

TEST(Classify, HoldoutFixturesAllCorrect) {
  const auto& model = test::fixture_model();
  int correct = 0;
  for (const auto& fs : fixtures::holdout_fixtures()) {
    const auto c = classify_image(fs.fixture.image, model, fs.kind);
    EXPECT_EQ(c.label, fs.fixture.label) << "seed " << fs.fixture.seed << " score " << c.score;
    correct += c.label == fs.fixture.label;
  }
  EXPECT_EQ(correct, 5);
}

TEST(Classify, DeterministicAndStableAcrossModelRoundTrip) {
  const auto& model = test::fixture_model();
  const auto reloaded = training::model_from_text(training::model_to_text(model));
  const auto fx = fixtures::generate(Label::Dress, 77);
  const auto a = classify_image(fx.image, model, ImageKind::UserPhoto);
  const auto b = classify_image(fx.image, model, ImageKind::UserPhoto);
  const auto c = classify_image(fx.image, reloaded, ImageKind::UserPhoto);
  EXPECT_EQ(a.score, b.score);
  EXPECT_EQ(a.score, c.score);
  EXPECT_EQ(a.label, c.label);
}

TEST(Classify, MildBackgroundNoiseKeepsLabel) {
  const auto& model = test::fixture_model();
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-0.01, 0.01);
  for (Label l : kAllLabels) {
    auto fx = fixtures::generate(l, 200 + static_cast<int>(l));
    for (double& v : fx.image.data()) v = std::clamp(v + u(rng), 0.0, 1.0);
    EXPECT_EQ(classify_image(fx.image, model, ImageKind::UserPhoto).label, l) << to_string(l);
  }
}

TEST(Classify, RecordFormat) {
  Classification c;
  c.label = Label::Pants;
  c.score = 1.25;
  c.features.m1 = 0.5;
  c.features.mean_val = -3;
  std::ostringstream os;
  write_record(os, "a.png", c);
  EXPECT_EQ(os.str(), "path=a.png\tlabel=pants\tscore=1.25\tm1=0.5\tmean_val=-3\tindeterminate=0\n");
}

}  // namespace
}  // namespace closet
