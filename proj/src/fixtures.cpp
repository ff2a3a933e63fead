#include "closet/fixtures.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <random>
#include <utility>

#include "closet/error.hpp"

namespace closet::fixtures {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// mt19937_64 output is fully specified, unlike the std distributions, so the
// fixtures are byte-identical across standard libraries.
class Jitter {
 public:
  explicit Jitter(std::uint64_t seed) : engine_(seed ^ 0x5DEECE66Dull) {}
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double between(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

struct Knot {
  double row;
  double col;
};

// Piecewise-linear outline through knots sorted by row; NaN outside.
std::vector<double> outline(const std::vector<Knot>& knots, int rows) {
  std::vector<double> b(rows, kNaN);
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const auto& p = knots[k];
    const auto& q = knots[k + 1];
    const int r0 = static_cast<int>(std::ceil(p.row));
    const int r1 = static_cast<int>(std::floor(q.row));
    for (int r = std::max(r0, 0); r <= std::min(r1, rows - 1); ++r) {
      const double t = (r - p.row) / (q.row - p.row);
      b[r] = p.col + t * (q.col - p.col);
    }
  }
  return b;
}

struct Shape {
  std::vector<Knot> knots;
  int crotch_row = -1;  // pants only: legs separate below this row
  int hem_row = -1;
};

Shape shirt_shape(Jitter& j) {
  const double top = j.between(130, 150);
  const double slope = j.between(-0.9, -0.5);
  const double c320 = j.between(230, 260);
  const double c480 = c320 + 160 * slope;
  const double cuff = j.between(520, 540);
  const double torso = j.between(380, 410);
  const double torso_slope = j.between(-0.02, 0.02);
  const double bottom = j.between(1000, 1040);
  return {{{top, j.between(400, 410)},
           {320, c320},
           {480, c480},
           {cuff, c480 - 5},
           {cuff + 1, torso + torso_slope * (cuff + 1 - 800)},
           {bottom, torso + torso_slope * (bottom - 800)}}};
}

Shape dress_shape(Jitter& j) {
  const double top = j.between(100, 120);
  const double slope = j.between(0.2, 0.45);
  const double c320 = j.between(320, 350);
  const double c480 = c320 + 160 * slope;
  const double waist = c480 + 3;
  const double hem = j.between(1380, 1420);
  return {{{top, j.between(380, 390)},
           {320, c320},
           {480, c480},
           {500, waist},
           {900, waist - j.between(150, 190)},
           {hem, waist - j.between(230, 270)}}};
}

Shape pants_shape(Jitter& j) {
  const double top = j.between(150, 170);
  const double slope = j.between(0.1, 0.3);
  const double c320 = j.between(270, 300);
  const double c480 = c320 + 160 * slope;
  const double hem = j.between(1450, 1480);
  Shape s{{{top, c320 - 10},
           {320, c320},
           {480, c480},
           {560, c480 + 8},
           {900, c480 + j.between(30, 40)},
           {hem, c480 + j.between(45, 55)}}};
  s.crotch_row = 560;
  s.hem_row = static_cast<int>(hem);
  return s;
}

double pattern_value(Pattern p, double base, int r, int c) {
  switch (p) {
    case Pattern::Solid: return base;
    case Pattern::Stripes: return (r / 24) % 2 ? base + 0.3 : base;
    case Pattern::Dots: {
      const int dr = r % 40 - 20;
      const int dc = c % 40 - 20;
      return dr * dr + dc * dc < 64 ? base + 0.35 : base;
    }
  }
  return base;
}

}  // namespace

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::Solid: return "solid";
    case Pattern::Stripes: return "stripes";
    case Pattern::Dots: return "dots";
  }
  return "?";
}

Fixture generate(Label label, std::uint64_t seed, std::optional<Pattern> pattern) {
  Jitter j(seed * 3 + static_cast<std::uint64_t>(label));
  Shape shape;
  switch (label) {
    case Label::Shirt: shape = shirt_shape(j); break;
    case Label::Dress: shape = dress_shape(j); break;
    case Label::Pants: shape = pants_shape(j); break;
  }
  const double base = j.between(0.2, 0.45);

  Fixture fx;
  fx.label = label;
  fx.seed = seed;
  fx.pattern = pattern.value_or(static_cast<Pattern>(seed % 3));
  fx.boundary = outline(shape.knots, kCanonicalRows);
  fx.image = image::GrayImage(kCanonicalRows, kCanonicalCols, 1.0);

  const double center = 0.5 * (kCanonicalCols - 1);
  for (int r = 0; r < kCanonicalRows; ++r) {
    if (std::isnan(fx.boundary[r])) continue;
    const int left = static_cast<int>(std::lround(fx.boundary[r]));
    const int right = kCanonicalCols - 1 - left;
    double gap = -1.0;
    if (shape.crotch_row >= 0 && r > shape.crotch_row) {
      gap = 3.0 + 27.0 * (r - shape.crotch_row) / (shape.hem_row - shape.crotch_row);
    }
    auto row = fx.image.row(r);
    for (int c = left; c <= right; ++c) {
      if (gap >= 0.0 && std::abs(c - center) < gap) continue;
      row[c] = pattern_value(fx.pattern, base, r, c);
    }
  }
  return fx;
}

std::vector<FixtureSample> training_fixtures() {
  std::vector<FixtureSample> out;
  for (Label label : kAllLabels) {
    out.push_back({generate(label, 1, Pattern::Solid), ImageKind::Template});
    out.push_back({generate(label, 2, Pattern::Solid), ImageKind::UserPhoto});
    out.push_back({generate(label, 3, Pattern::Stripes), ImageKind::UserPhoto});
    out.push_back({generate(label, 4, Pattern::Dots), ImageKind::UserPhoto});
  }
  return out;
}

std::vector<FixtureSample> holdout_fixtures() {
  return {{generate(Label::Dress, 101), ImageKind::UserPhoto},
          {generate(Label::Dress, 102), ImageKind::UserPhoto},
          {generate(Label::Shirt, 103), ImageKind::UserPhoto},
          {generate(Label::Pants, 104), ImageKind::UserPhoto},
          {generate(Label::Pants, 105), ImageKind::UserPhoto}};
}

double truth_slope(const Fixture& fx, const features::Roi& roi) {
  double n = 0, sr = 0, sc = 0;
  for (int r = roi.first_row(); r <= roi.last_row(); ++r) {
    if (std::isnan(fx.boundary[r])) continue;
    n += 1;
    sr += r;
    sc += fx.boundary[r];
  }
  if (n < 2) throw InsufficientDataError(roi.index, "fixture outline misses the ROI");
  const double rm = sr / n, cm = sc / n;
  double sxy = 0, sxx = 0;
  for (int r = roi.first_row(); r <= roi.last_row(); ++r) {
    if (std::isnan(fx.boundary[r])) continue;
    sxy += (r - rm) * (fx.boundary[r] - cm);
    sxx += (r - rm) * (r - rm);
  }
  return sxy / sxx;
}

double truth_mean(const Fixture& fx, const features::Roi& roi) {
  double n = 0, sum = 0;
  for (int r = roi.first_row(); r <= roi.last_row(); ++r) {
    if (std::isnan(fx.boundary[r])) continue;
    n += 1;
    sum += fx.boundary[r];
  }
  if (n == 0) throw InsufficientDataError(roi.index, "fixture outline misses the ROI");
  return sum / n;
}

void write_image(const Fixture& fx, const std::filesystem::path& path) {
  image::write_png(fx.image, path);
}

void write_truth(const Fixture& fx, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << "# label " << to_string(fx.label) << "\n# seed " << fx.seed << "\n# pattern "
      << to_string(fx.pattern) << "\n# row\tcol\n";
  out << std::setprecision(17);
  for (int r = 0; r < static_cast<int>(fx.boundary.size()); ++r) {
    if (!std::isnan(fx.boundary[r])) out << r << '\t' << fx.boundary[r] << '\n';
  }
  if (!out.flush()) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace closet::fixtures
