#pragma once

// Subcommand bodies for the `closet` tool. They take explicit streams and
// return the process exit status so tests can drive them in-process.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "closet/config.hpp"
#include "closet/training.hpp"

namespace closet::cli {

struct CliConfig {
  PipelineConfig pipeline;
  int threads = 0;  // 0: OpenMP default (available parallelism)
};

/// Sets the OpenMP thread count when `threads` > 0.
void apply_threads(int threads);

/// Manifest: one image per line, "<path> <label> <kind>", '#' comments and
/// blank lines ignored. Relative paths resolve against `base_dir`.
/// Throws ConfigError naming the offending line.
std::vector<training::TrainingItem> parse_manifest(std::istream& in,
                                                   const std::filesystem::path& base_dir);
std::vector<training::TrainingItem> load_manifest(const std::filesystem::path& path);

int cmd_train(const std::filesystem::path& manifest, const std::filesystem::path& model_out,
              const std::optional<std::filesystem::path>& report_out, const CliConfig& cfg,
              std::ostream& out, std::ostream& err);

/// Uses the pipeline stored in the model; only `cfg.threads` applies.
int cmd_classify(const std::filesystem::path& model_path,
                 const std::vector<std::filesystem::path>& images, ImageKind kind,
                 const CliConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_edges(const std::filesystem::path& image, const std::filesystem::path& png_out,
              ImageKind kind, const CliConfig& cfg, std::ostream& err);

/// Writes curves and features to `txt_out`, or to `out` when it is empty or "-".
int cmd_features(const std::filesystem::path& image, const std::filesystem::path& txt_out,
                 ImageKind kind, const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Writes the fixture PNG to `png_out` and its ground-truth outline next to it
/// (same path with extension ".truth.txt").
int cmd_genfix(const std::string& label, const std::filesystem::path& png_out, std::uint64_t seed,
               std::ostream& err);

std::filesystem::path truth_path_for(const std::filesystem::path& png_out);

}  // namespace closet::cli
