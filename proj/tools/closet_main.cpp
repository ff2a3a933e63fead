#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "closet/commands.hpp"
#include "closet/error.hpp"

namespace {

using closet::cli::CliConfig;

void add_pipeline_flags(CLI::App* cmd, CliConfig& cfg, std::vector<int>& roi_rows) {
  auto& p = cfg.pipeline;
  cmd->add_option("--template-sigma", p.template_sigma, "Edge FIS sigma for template images")
      ->capture_default_str();
  cmd->add_option("--photo-sigma", p.photo_sigma, "Edge FIS sigma for user photos")
      ->capture_default_str();
  cmd->add_option("--roi-rows", roi_rows, "Center rows of ROIs 1, 2, 3 (default 400 800 1200)")
      ->expected(3);
  cmd->add_option("--roi-half-width", p.roi_half_width, "ROI half-width in rows")
      ->capture_default_str();
  cmd->add_option("--white-threshold", p.white_threshold, "Edge values below this are non-white")
      ->capture_default_str();
  cmd->add_option("--border-margin", p.border_margin, "Columns whitened on each side")
      ->capture_default_str();
  cmd->add_option("--resolution", p.resolution, "FIS output universe sample count")
      ->capture_default_str();
}

void add_threads_flag(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all available)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closet: fuzzy garment classifier (shirt / dress / pants)"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string kind_text = "photo";
  std::vector<int> roi_rows;
  int status = 0;

  auto* train = app.add_subcommand("train", "Train a model from a manifest of labeled images");
  std::string manifest, model_out, report_out;
  train->add_option("manifest", manifest, "Lines of '<path> <label> <kind>'")->required();
  train->add_option("-o,--output", model_out, "Model file to write")->required();
  train->add_option("--report", report_out, "Also write the training report here");
  add_pipeline_flags(train, cfg, roi_rows);
  add_threads_flag(train, cfg);

  auto* classify = app.add_subcommand("classify", "Classify images with a trained model");
  std::string model_path;
  std::vector<std::string> images;
  classify->add_option("-m,--model", model_path, "Model file")->required();
  classify->add_option("images", images, "Images to classify")->required();
  classify->add_option("--kind", kind_text, "template or photo")->capture_default_str();
  add_threads_flag(classify, cfg);

  auto* edges = app.add_subcommand("edges", "Write the normalized edge map as a PNG");
  std::string image_in, out_path;
  edges->add_option("image", image_in)->required();
  edges->add_option("-o,--output", out_path, "PNG to write")->required();
  edges->add_option("--kind", kind_text, "template or photo")->capture_default_str();
  add_pipeline_flags(edges, cfg, roi_rows);
  add_threads_flag(edges, cfg);

  auto* feats = app.add_subcommand("features", "Dump ROI curves and features as text");
  feats->add_option("image", image_in)->required();
  feats->add_option("-o,--output", out_path, "Text file (default: stdout)");
  feats->add_option("--kind", kind_text, "template or photo")->capture_default_str();
  add_pipeline_flags(feats, cfg, roi_rows);
  add_threads_flag(feats, cfg);

  auto* genfix = app.add_subcommand("genfix", "Generate a synthetic garment fixture");
  std::string label;
  std::uint64_t seed = 1;
  genfix->add_option("class", label, "shirt, dress or pants")->required();
  genfix->add_option("-o,--output", out_path, "PNG to write (truth goes to <stem>.truth.txt)")
      ->required();
  genfix->add_option("--seed", seed, "Jitter seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (roi_rows.size() == 3) std::copy(roi_rows.begin(), roi_rows.end(), cfg.pipeline.roi_rows.begin());

  closet::ImageKind kind;
  try {
    kind = closet::parse_image_kind(kind_text);
  } catch (const closet::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (*train) {
    std::optional<std::filesystem::path> report;
    if (!report_out.empty()) report = report_out;
    status = closet::cli::cmd_train(manifest, model_out, report, cfg, std::cout, std::cerr);
  } else if (*classify) {
    std::vector<std::filesystem::path> paths(images.begin(), images.end());
    status = closet::cli::cmd_classify(model_path, paths, kind, cfg, std::cout, std::cerr);
  } else if (*edges) {
    status = closet::cli::cmd_edges(image_in, out_path, kind, cfg, std::cerr);
  } else if (*feats) {
    status = closet::cli::cmd_features(image_in, out_path, kind, cfg, std::cout, std::cerr);
  } else if (*genfix) {
    status = closet::cli::cmd_genfix(label, out_path, seed, std::cerr);
  }
  return status;
}
