#include <algorithm>
#include <cmath>

#include "closet/error.hpp"
#include "closet/image.hpp"

namespace closet::image {

EdgeFisConfig edge_config(const PipelineConfig& cfg, ImageKind kind) {
  return EdgeFisConfig{cfg.sigma_for(kind), cfg.white, cfg.black, cfg.resolution};
}

GrayImage resize_bilinear(const GrayImage& img, int rows, int cols) {
  if (img.empty() || rows <= 0 || cols <= 0) throw ImageError("resize needs non-empty dimensions");
  if (img.rows() == rows && img.cols() == cols) return img;

  // Source coordinate of each destination pixel center, clamped to the image.
  auto axis = [](int src, int dst, int i, int& i0, int& i1, double& t) {
    double x = (i + 0.5) * static_cast<double>(src) / dst - 0.5;
    x = std::clamp(x, 0.0, static_cast<double>(src - 1));
    i0 = static_cast<int>(std::floor(x));
    i1 = std::min(i0 + 1, src - 1);
    t = x - i0;
  };

  GrayImage out(rows, cols);
  std::vector<int> c0(cols), c1(cols);
  std::vector<double> ct(cols);
  for (int c = 0; c < cols; ++c) axis(img.cols(), cols, c, c0[c], c1[c], ct[c]);
  for (int r = 0; r < rows; ++r) {
    int r0 = 0, r1 = 0;
    double rt = 0.0;
    axis(img.rows(), rows, r, r0, r1, rt);
    for (int c = 0; c < cols; ++c) {
      const double top = img(r0, c0[c]) * (1.0 - ct[c]) + img(r0, c1[c]) * ct[c];
      const double bottom = img(r1, c0[c]) * (1.0 - ct[c]) + img(r1, c1[c]) * ct[c];
      out(r, c) = std::clamp(top * (1.0 - rt) + bottom * rt, 0.0, 1.0);
    }
  }
  return out;
}

GrayImage resize_canonical(const GrayImage& img) {
  return resize_bilinear(img, kCanonicalRows, kCanonicalCols);
}

GradientPair gradients(const GrayImage& img) {
  GradientPair g{GradientField(img.rows(), img.cols()), GradientField(img.rows(), img.cols())};
  for (int r = 0; r < img.rows(); ++r) {
    for (int c = 0; c < img.cols(); ++c) {
      g.ix(r, c) = c == 0 ? 0.0 : img(r, c) - img(r, c - 1);
      g.iy(r, c) = r == 0 ? 0.0 : img(r, c) - img(r - 1, c);
    }
  }
  return g;
}

fuzzy::MamdaniFis build_edge_fis(const EdgeFisConfig& cfg) {
  using fuzzy::MembershipFunction;
  const auto zero = MembershipFunction::gaussian(0.0, cfg.sigma);
  fuzzy::FuzzyVariable ix("Ix", -1.0, 1.0);
  ix.add_term("zero", zero);
  fuzzy::FuzzyVariable iy("Iy", -1.0, 1.0);
  iy.add_term("zero", zero);

  fuzzy::FuzzyVariable out("output", 0.0, 1.0);
  out.add_term("white", MembershipFunction::triangular(cfg.white.a, cfg.white.b, cfg.white.c));
  out.add_term("black", MembershipFunction::triangular(cfg.black.a, cfg.black.b, cfg.black.c));

  std::vector<fuzzy::FuzzyRule> rules{
      {{{"Ix", "zero", false}, {"Iy", "zero", false}}, fuzzy::Connective::And, "white"},
      {{{"Ix", "zero", true}, {"Iy", "zero", true}}, fuzzy::Connective::Or, "black"},
  };
  return fuzzy::MamdaniFis({ix, iy}, out, std::move(rules), cfg.resolution);
}

EdgeMap normalize_edges(EdgeMap raw) {
  if (raw.empty()) throw ImageError("empty edge map");
  const double peak = *std::max_element(raw.data().begin(), raw.data().end());
  if (!(peak > 0.0)) throw ImageError("degenerate image: edge map maximum is zero");
  for (double& v : raw.data()) v = std::clamp(v / peak, 0.0, 1.0);
  return raw;
}

EdgeMap edge_response(const GrayImage& img, const EdgeFisConfig& cfg) {
  return edge_response(img, build_edge_fis(cfg));
}

EdgeMap edge_map(const GrayImage& img, const EdgeFisConfig& cfg) {
  return normalize_edges(edge_response(img, cfg));
}

EdgeMap whiten_border(EdgeMap edge, int margin) {
  if (margin < 0 || 2 * margin >= edge.cols()) {
    throw ConfigError("border margin " + std::to_string(margin) + " too large for width " +
                      std::to_string(edge.cols()));
  }
  for (int r = 0; r < edge.rows(); ++r) {
    auto row = edge.row(r);
    std::fill(row.begin(), row.begin() + margin, 1.0);
    std::fill(row.end() - margin, row.end(), 1.0);
  }
  return edge;
}

}  // namespace closet::image
