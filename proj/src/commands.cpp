#include "closet/commands.hpp"

#include <array>
#include <fstream>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "closet/classify.hpp"
#include "closet/error.hpp"
#include "closet/fixtures.hpp"
#include "closet/pipeline.hpp"

namespace closet::cli {

void apply_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int cmd_train(const std::filesystem::path& manifest, const std::filesystem::path& model_out,
              const std::optional<std::filesystem::path>& report_out, const CliConfig& cfg,
              std::ostream& out, std::ostream& err) {
  try {
    apply_threads(cfg.threads);
    const auto items = load_manifest(manifest);
    const auto result = training::train(items, cfg.pipeline);
    training::save_model(result.model, model_out);
    training::write_training_report(out, result);
    if (report_out) {
      std::ofstream rep(*report_out);
      if (!rep) throw Error("cannot write report '" + report_out->string() + "'");
      training::write_training_report(rep, result);
    }
    for (const auto& o : result.outcomes) {
      if (!o.error.empty()) return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_classify(const std::filesystem::path& model_path,
                 const std::vector<std::filesystem::path>& images, ImageKind kind,
                 const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<training::TrainedModel> loaded;
  try {
    loaded = training::load_model(model_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  const auto& model = *loaded;
  apply_threads(cfg.threads);

  const int n = static_cast<int>(images.size());
  std::vector<std::optional<Classification>> results(images.size());
  std::vector<std::string> errors(images.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      results[i] = classify_file(images[i], model, kind);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  int status = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (results[i]) {
      write_record(out, images[i].string(), *results[i]);
    } else {
      err << "error\tpath=" << images[i].string() << "\tmessage=" << errors[i] << '\n';
      status = 1;
    }
  }
  return status;
}

int cmd_edges(const std::filesystem::path& image, const std::filesystem::path& png_out,
              ImageKind kind, const CliConfig& cfg, std::ostream& err) {
  try {
    cfg.pipeline.validate();
    apply_threads(cfg.threads);
    const auto edges = prepare_edges(image::load_and_gray(image), cfg.pipeline, kind);
    image::write_png(edges, png_out);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int cmd_features(const std::filesystem::path& image, const std::filesystem::path& txt_out,
                 ImageKind kind, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.pipeline.validate();
    apply_threads(cfg.threads);
    std::ofstream file;
    std::ostream* os = &out;
    if (!txt_out.empty() && txt_out != "-") {
      file.open(txt_out);
      if (!file) throw Error("cannot write '" + txt_out.string() + "'");
      os = &file;
    }
    const auto edges = prepare_edges(image::load_and_gray(image), cfg.pipeline, kind);
    const auto rois = features::make_rois(cfg.pipeline.roi_rows, cfg.pipeline.roi_half_width);
    *os << "# roi\trow\tcol\n";
    std::array<features::CharacteristicCurve, 3> curves;
    for (int i = 0; i < 3; ++i) {
      curves[i] = features::leftmost_edge(edges, rois[i], cfg.pipeline.white_threshold);
      for (const auto& p : curves[i].points) *os << rois[i].index << '\t' << p.row << '\t' << p.col << '\n';
    }
    const double m1 = features::fit_slope(curves[0]);
    const double mean_val = features::mean_diff(curves[0], curves[1]);
    *os << "m1=" << m1 << "\tmean_val=" << mean_val << "\trows1=" << curves[0].points.size()
        << "\trows2=" << curves[1].points.size() << "\trows3=" << curves[2].points.size() << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

std::filesystem::path truth_path_for(const std::filesystem::path& png_out) {
  auto p = png_out;
  p.replace_extension(".truth.txt");
  return p;
}

int cmd_genfix(const std::string& label, const std::filesystem::path& png_out, std::uint64_t seed,
               std::ostream& err) {
  const auto parsed = parse_label(label);
  if (!parsed) {
    err << "error: unknown class '" << label << "' (expected shirt, dress or pants)\n";
    return 2;
  }
  try {
    const auto fx = fixtures::generate(*parsed, seed);
    fixtures::write_image(fx, png_out);
    fixtures::write_truth(fx, truth_path_for(png_out));
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace closet::cli
