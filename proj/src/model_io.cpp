// Versioned JSON model file. Doubles are written with round-trip precision so
// load(save(m)) == m holds field by field.

#include <fstream>
#include <sstream>

#include "closet/error.hpp"
#include "closet/training.hpp"
#include "json.hpp"

namespace closet::training {

using nlohmann::json;

namespace {

json mf_to_json(const fuzzy::MembershipFunction& mf) {
  if (const auto* g = std::get_if<fuzzy::Gaussian>(&mf.shape())) {
    return {{"type", "gaussian"}, {"params", {g->center, g->sigma}}};
  }
  const auto& t = std::get<fuzzy::Triangular>(mf.shape());
  return {{"type", "triangular"}, {"params", {t.a, t.b, t.c}}};
}

fuzzy::MembershipFunction mf_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  const auto p = j.at("params").get<std::vector<double>>();
  if (type == "gaussian" && p.size() == 2) return fuzzy::MembershipFunction::gaussian(p[0], p[1]);
  if (type == "triangular" && p.size() == 3) {
    return fuzzy::MembershipFunction::triangular(p[0], p[1], p[2]);
  }
  throw ModelError("bad membership function '" + type + "'");
}

json variable_to_json(const fuzzy::FuzzyVariable& v) {
  json terms = json::array();
  for (const auto& t : v.terms()) {
    json jt = mf_to_json(t.mf);
    jt["name"] = t.name;
    terms.push_back(jt);
  }
  return {{"name", v.name()}, {"range", {v.lo(), v.hi()}}, {"terms", terms}};
}

fuzzy::FuzzyVariable variable_from_json(const json& j) {
  const auto range = j.at("range").get<std::vector<double>>();
  if (range.size() != 2) throw ModelError("variable range needs two values");
  fuzzy::FuzzyVariable v(j.at("name").get<std::string>(), range[0], range[1]);
  for (const auto& t : j.at("terms")) v.add_term(t.at("name").get<std::string>(), mf_from_json(t));
  return v;
}

json fis_to_json(const fuzzy::MamdaniFis& fis) {
  json inputs = json::array();
  for (const auto& v : fis.inputs()) inputs.push_back(variable_to_json(v));
  json rules = json::array();
  for (const auto& r : fis.rules()) {
    json ante = json::array();
    for (const auto& c : r.antecedent) {
      ante.push_back({{"variable", c.variable}, {"term", c.term}, {"negated", c.negated}});
    }
    rules.push_back({{"antecedent", ante},
                     {"connective", r.connective == fuzzy::Connective::And ? "and" : "or"},
                     {"consequent", r.consequent}});
  }
  return {{"resolution", fis.resolution()},
          {"inputs", inputs},
          {"output", variable_to_json(fis.output())},
          {"rules", rules}};
}

fuzzy::MamdaniFis fis_from_json(const json& j) {
  std::vector<fuzzy::FuzzyVariable> inputs;
  for (const auto& v : j.at("inputs")) inputs.push_back(variable_from_json(v));
  std::vector<fuzzy::FuzzyRule> rules;
  for (const auto& r : j.at("rules")) {
    fuzzy::FuzzyRule rule;
    for (const auto& c : r.at("antecedent")) {
      rule.antecedent.push_back({c.at("variable").get<std::string>(), c.at("term").get<std::string>(),
                                 c.at("negated").get<bool>()});
    }
    const auto conn = r.at("connective").get<std::string>();
    if (conn != "and" && conn != "or") throw ModelError("unknown connective '" + conn + "'");
    rule.connective = conn == "and" ? fuzzy::Connective::And : fuzzy::Connective::Or;
    rule.consequent = r.at("consequent").get<std::string>();
    rules.push_back(std::move(rule));
  }
  return fuzzy::MamdaniFis(std::move(inputs), variable_from_json(j.at("output")), std::move(rules),
                           j.at("resolution").get<int>());
}

json stat_to_json(const GaussianStat& s) { return {{"mean", s.mean}, {"std", s.std}}; }

GaussianStat stat_from_json(const json& j) {
  return {j.at("mean").get<double>(), j.at("std").get<double>()};
}

json triangle_to_json(const TriangleParams& t) { return json::array({t.a, t.b, t.c}); }

TriangleParams triangle_from_json(const json& j) {
  const auto p = j.get<std::vector<double>>();
  if (p.size() != 3) throw ModelError("triangle needs three values");
  return {p[0], p[1], p[2]};
}

json pipeline_to_json(const PipelineConfig& p) {
  return {{"template_sigma", p.template_sigma},
          {"photo_sigma", p.photo_sigma},
          {"white_triangle", triangle_to_json(p.white)},
          {"black_triangle", triangle_to_json(p.black)},
          {"roi_rows", p.roi_rows},
          {"roi_half_width", p.roi_half_width},
          {"white_threshold", p.white_threshold},
          {"border_margin", p.border_margin},
          {"resolution", p.resolution}};
}

PipelineConfig pipeline_from_json(const json& j) {
  PipelineConfig p;
  p.template_sigma = j.at("template_sigma").get<double>();
  p.photo_sigma = j.at("photo_sigma").get<double>();
  p.white = triangle_from_json(j.at("white_triangle"));
  p.black = triangle_from_json(j.at("black_triangle"));
  const auto rows = j.at("roi_rows").get<std::vector<int>>();
  if (rows.size() != 3) throw ModelError("roi_rows needs three values");
  std::copy(rows.begin(), rows.end(), p.roi_rows.begin());
  p.roi_half_width = j.at("roi_half_width").get<int>();
  p.white_threshold = j.at("white_threshold").get<double>();
  p.border_margin = j.at("border_margin").get<int>();
  p.resolution = j.at("resolution").get<int>();
  return p;
}

void check_structure(const fuzzy::MamdaniFis& fis, const ClassStats& stats,
                     const PipelineConfig& pipeline) {
  const auto& out = fis.output();
  if (out.name() != "itemIs" || out.lo() != kItemIsLo || out.hi() != kItemIsHi) {
    throw ModelError("invalid output universe");
  }
  if (fis.inputs().size() != 2) throw ModelError("identify FIS must have exactly 2 inputs");
  const auto& m1 = fis.inputs()[0];
  const auto& mv = fis.inputs()[1];
  if (m1.name() != "m1" || m1.lo() != kM1Lo || m1.hi() != kM1Hi) {
    throw ModelError("invalid m1 universe");
  }
  if (mv.name() != "meanVal" || mv.lo() != kMeanValLo || mv.hi() != kMeanValHi) {
    throw ModelError("invalid meanVal universe");
  }
  if (fis.rules().size() != 4) throw ModelError("identify FIS must have exactly 4 rules");
  if (fis.resolution() != pipeline.resolution) {
    throw ModelError("FIS resolution differs from pipeline resolution");
  }
  if (!(fis == build_identify_fis(stats, fis.resolution()))) {
    throw ModelError("identify FIS is inconsistent with the stored class statistics");
  }
}

}  // namespace

std::string model_to_text(const TrainedModel& model) {
  const auto& s = model.stats;
  json j = {
      {"format_version", model.format_version},
      {"mean_val_convention", kMeanValConvention},
      {"pipeline", pipeline_to_json(model.pipeline)},
      {"stats",
       {{"m1",
         {{"shirt", stat_to_json(s.m1_shirt)},
          {"dress", stat_to_json(s.m1_dress)},
          {"pants", stat_to_json(s.m1_pants)}}},
        {"mean_val", {{"dress", stat_to_json(s.meanval_dress)}, {"pants", stat_to_json(s.meanval_pants)}}}}},
      {"identify_fis", fis_to_json(model.identify)},
  };
  return j.dump(2) + "\n";
}

TrainedModel model_from_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ModelError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw ModelError("model format version mismatch: file has " + std::to_string(version) +
                       ", expected " + std::to_string(kModelFormatVersion));
    }
    if (j.at("mean_val_convention").get<std::string>() != kMeanValConvention) {
      throw ModelError("unsupported mean_val convention");
    }
    ClassStats stats;
    const auto& js = j.at("stats");
    stats.m1_shirt = stat_from_json(js.at("m1").at("shirt"));
    stats.m1_dress = stat_from_json(js.at("m1").at("dress"));
    stats.m1_pants = stat_from_json(js.at("m1").at("pants"));
    stats.meanval_dress = stat_from_json(js.at("mean_val").at("dress"));
    stats.meanval_pants = stat_from_json(js.at("mean_val").at("pants"));

    auto pipeline = pipeline_from_json(j.at("pipeline"));
    pipeline.validate();
    auto fis = fis_from_json(j.at("identify_fis"));
    check_structure(fis, stats, pipeline);
    return TrainedModel{stats, std::move(fis), pipeline, version};
  } catch (const json::exception& e) {
    throw ModelError(std::string("malformed model file: ") + e.what());
  } catch (const ConfigError& e) {
    throw ModelError(std::string("invalid model: ") + e.what());
  }
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write model file '" + path.string() + "'");
  out << model_to_text(model);
  if (!out.flush()) throw ModelError("failed writing model file '" + path.string() + "'");
}

TrainedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return model_from_text(ss.str());
}

}  // namespace closet::training
