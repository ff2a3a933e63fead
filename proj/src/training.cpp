#include "closet/training.hpp"

#include <cmath>
#include <ostream>

#include "closet/error.hpp"
#include "closet/pipeline.hpp"

namespace closet::training {

namespace {

struct Moments {
  double mean;
  double std;
};

Moments sample_moments(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

double floored(double sigma, const std::string& what, std::vector<std::string>& warnings) {
  if (sigma >= kSigmaFloor) return sigma;
  warnings.push_back(what + " spread " + std::to_string(sigma) + " floored to " +
                     std::to_string(kSigmaFloor));
  return kSigmaFloor;
}

}  // namespace

StatsReport class_stats(std::span<const LabeledSample> samples) {
  std::array<std::vector<double>, 3> m1;
  std::array<std::vector<double>, 3> mean_val;
  for (const auto& s : samples) {
    const auto k = static_cast<std::size_t>(s.label);
    m1[k].push_back(s.features.m1);
    mean_val[k].push_back(s.features.mean_val);
  }
  for (Label l : kAllLabels) {
    const auto n = m1[static_cast<std::size_t>(l)].size();
    if (n < 2) {
      throw TrainingError("class " + std::string(to_string(l)) + " has " + std::to_string(n) +
                          " sample" + (n == 1 ? "" : "s") + ", need ≥ 2");
    }
  }

  StatsReport report;
  auto m1_stat = [&](Label l) {
    const auto m = sample_moments(m1[static_cast<std::size_t>(l)]);
    return GaussianStat{m.mean,
                        floored(m.std, "m1 " + std::string(to_string(l)), report.warnings)};
  };
  // meanVal terms are centered on the class mean with sigma equal to its magnitude.
  auto mean_val_stat = [&](Label l) {
    const auto m = sample_moments(mean_val[static_cast<std::size_t>(l)]);
    return GaussianStat{m.mean, floored(std::abs(m.mean), "meanVal " + std::string(to_string(l)),
                                        report.warnings)};
  };
  report.stats.m1_shirt = m1_stat(Label::Shirt);
  report.stats.m1_dress = m1_stat(Label::Dress);
  report.stats.m1_pants = m1_stat(Label::Pants);
  report.stats.meanval_dress = mean_val_stat(Label::Dress);
  report.stats.meanval_pants = mean_val_stat(Label::Pants);
  return report;
}

fuzzy::MamdaniFis build_identify_fis(const ClassStats& stats, int resolution) {
  using fuzzy::MembershipFunction;
  auto gauss = [](const GaussianStat& s) { return MembershipFunction::gaussian(s.mean, s.std); };
  auto tri = [](const TriangleParams& t) { return MembershipFunction::triangular(t.a, t.b, t.c); };

  fuzzy::FuzzyVariable m1("m1", kM1Lo, kM1Hi);
  m1.add_term("shirt", gauss(stats.m1_shirt))
      .add_term("dress", gauss(stats.m1_dress))
      .add_term("pants", gauss(stats.m1_pants));

  fuzzy::FuzzyVariable mean_val("meanVal", kMeanValLo, kMeanValHi);
  mean_val.add_term("dress", gauss(stats.meanval_dress)).add_term("pants", gauss(stats.meanval_pants));

  fuzzy::FuzzyVariable item("itemIs", kItemIsLo, kItemIsHi);
  item.add_term("shirt", tri(kShirtBand)).add_term("dress", tri(kDressBand)).add_term("pants", tri(kPantsBand));

  using fuzzy::Connective;
  std::vector<fuzzy::FuzzyRule> rules{
      {{{"m1", "shirt", false}}, Connective::And, "shirt"},
      {{{"m1", "shirt", true}, {"meanVal", "dress", false}}, Connective::And, "dress"},
      {{{"m1", "shirt", true}, {"meanVal", "pants", false}}, Connective::And, "pants"},
      {{{"m1", "shirt", false}, {"meanVal", "dress", false}}, Connective::And, "dress"},
  };
  return fuzzy::MamdaniFis({m1, mean_val}, item, std::move(rules), resolution);
}

TrainedModel make_model(const ClassStats& stats, const PipelineConfig& pipeline) {
  pipeline.validate();
  return TrainedModel{stats, build_identify_fis(stats, pipeline.resolution), pipeline,
                      kModelFormatVersion};
}

TrainingResult train_from_samples(std::span<const LabeledSample> samples,
                                  const PipelineConfig& cfg) {
  auto report = class_stats(samples);
  TrainingResult result{make_model(report.stats, cfg), {}, std::move(report.warnings)};
  for (const auto& s : samples) {
    result.outcomes.push_back({TrainingItem{s.source, s.label, s.kind}, s.features, {}});
  }
  return result;
}

TrainingResult train(std::span<const TrainingItem> items, const PipelineConfig& cfg) {
  cfg.validate();
  std::vector<SampleOutcome> outcomes(items.size());
  const int n = static_cast<int>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    outcomes[i].item = items[i];
    try {
      outcomes[i].features = process_file(items[i].path, cfg, items[i].kind).features;
    } catch (const std::exception& e) {
      outcomes[i].error = e.what();
    }
  }

  std::vector<LabeledSample> samples;
  for (const auto& o : outcomes) {
    if (o.features) {
      samples.push_back({o.item.label, *o.features, o.item.path.string(), o.item.kind});
    }
  }
  StatsReport report;
  try {
    report = class_stats(samples);
  } catch (const TrainingError& e) {
    std::string msg = e.what();
    for (const auto& o : outcomes) {
      if (!o.error.empty()) msg += "\n  " + o.item.path.string() + ": " + o.error;
    }
    throw TrainingError(msg);
  }
  return TrainingResult{make_model(report.stats, cfg), std::move(outcomes),
                        std::move(report.warnings)};
}

void write_training_report(std::ostream& os, const TrainingResult& result) {
  for (const auto& o : result.outcomes) {
    os << "path=" << o.item.path.string() << "\tlabel=" << to_string(o.item.label)
       << "\tkind=" << to_string(o.item.kind);
    if (o.features) {
      const auto& f = *o.features;
      os << "\tm1=" << f.m1 << "\tmean_val=" << f.mean_val << "\trows1=" << f.valid_rows[0]
         << "\trows2=" << f.valid_rows[1] << "\trows3=" << f.valid_rows[2];
    } else {
      os << "\terror=" << o.error;
    }
    os << '\n';
  }
  for (const auto& w : result.warnings) os << "warning=" << w << '\n';
}

}  // namespace closet::training
