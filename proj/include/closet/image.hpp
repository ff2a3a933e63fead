#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "closet/config.hpp"
#include "closet/fuzzy.hpp"

namespace closet::image {

/// Row-major real matrix. The tag keeps intensity images, gradient fields and
/// edge maps from being mixed up.
template <class Tag>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(int r, int c) { return data_[index(r, c)]; }
  double operator()(int r, int c) const { return data_[index(r, c)]; }

  std::span<double> row(int r) { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }
  std::span<const double> row(int r) const {
    return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

struct GrayTag {};
struct GradientTag {};
struct EdgeTag {};

/// Intensities in [0,1], 0 black and 1 white.
using GrayImage = Grid<GrayTag>;
/// Signed first differences in [-1,1].
using GradientField = Grid<GradientTag>;
/// Edge-FIS output; after normalization 1 means no edge (white).
using EdgeMap = Grid<EdgeTag>;

struct GradientPair {
  GradientField ix;
  GradientField iy;
};

struct EdgeFisConfig {
  double sigma = kTemplateSigma;
  TriangleParams white{0.1, 1.0, 1.0};
  TriangleParams black{0.0, 0.0, 0.7};
  int resolution = kFisResolution;
};

EdgeFisConfig edge_config(const PipelineConfig& cfg, ImageKind kind);

// --- I/O ----------------------------------------------------------------

/// Decodes an 8-bit PNG or JPEG and converts to luminance
/// 0.299 R + 0.587 G + 0.114 B scaled to [0,1]. Throws ImageError.
GrayImage load_and_gray(const std::filesystem::path& path);

/// Same, for an in-memory encoded image.
GrayImage decode_and_gray(std::span<const unsigned char> bytes);

/// Interleaved 8-bit RGB to luminance in [0,1].
GrayImage rgb_to_gray(std::span<const unsigned char> rgb, int rows, int cols);

/// Writes values in [0,1] as an 8-bit grayscale PNG (1.0 -> 255). Throws ImageError.
template <class Tag>
void write_png(const Grid<Tag>& img, const std::filesystem::path& path);

void write_png_gray8(std::span<const unsigned char> pixels, int rows, int cols,
                     const std::filesystem::path& path);
void write_png_rgb8(std::span<const unsigned char> pixels, int rows, int cols,
                    const std::filesystem::path& path);

std::vector<unsigned char> to_gray8(std::span<const double> values);

template <class Tag>
void write_png(const Grid<Tag>& img, const std::filesystem::path& path) {
  write_png_gray8(to_gray8(img.data()), img.rows(), img.cols(), path);
}

// --- geometry and gradients ----------------------------------------------

/// Bilinear resampling with pixel-center alignment.
GrayImage resize_bilinear(const GrayImage& img, int rows, int cols);
/// 1536 rows x 1024 cols; canonical-size inputs are returned unchanged.
GrayImage resize_canonical(const GrayImage& img);

/// Backward first differences with replicate padding:
/// ix(r,c) = I(r,c) - I(r,c-1), iy(r,c) = I(r,c) - I(r-1,c), zero on the first column/row.
GradientPair gradients(const GrayImage& img);

// --- edge FIS ------------------------------------------------------------

/// Inputs Ix, Iy on [-1,1] with a single Gaussian "zero" term each; output on
/// [0,1] with triangular "white" and "black" terms; two rules:
///   Ix is zero AND Iy is zero -> white
///   Ix is not zero OR Iy is not zero -> black
fuzzy::MamdaniFis build_edge_fis(const EdgeFisConfig& cfg);

/// Raw per-pixel FIS output (before max normalization). OpenMP row-parallel.
EdgeMap edge_response(const GrayImage& img, const fuzzy::MamdaniFis& fis);
EdgeMap edge_response(const GrayImage& img, const EdgeFisConfig& cfg);

/// Serial reference: one full FIS evaluation per pixel, no caching.
EdgeMap edge_response_reference(const GrayImage& img, const fuzzy::MamdaniFis& fis);

/// Divides by the map maximum so that white is exactly 1. Throws ImageError if
/// the maximum is not positive.
EdgeMap normalize_edges(EdgeMap raw);

/// edge_response followed by normalize_edges.
EdgeMap edge_map(const GrayImage& img, const EdgeFisConfig& cfg);

/// Sets the first and last `margin` columns to 1. Throws ConfigError if
/// 2*margin >= cols or margin < 0.
EdgeMap whiten_border(EdgeMap edge, int margin = kBorderMargin);

}  // namespace closet::image
