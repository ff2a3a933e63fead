#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include <jpeglib.h>

#include "closet/error.hpp"
#include "closet/image.hpp"
#include "test_util.hpp"

namespace closet::image {
namespace {

using test::TempDir;

void write_jpeg_rgb(const std::filesystem::path& path, int rows, int cols, unsigned char r,
                    unsigned char g, unsigned char b) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  ASSERT_NE(f, nullptr);
  jpeg_compress_struct cinfo;
  jpeg_error_mgr jerr;
  cinfo.err = jpeg_std_error(&jerr);
  jpeg_create_compress(&cinfo);
  jpeg_stdio_dest(&cinfo, f);
  cinfo.image_width = cols;
  cinfo.image_height = rows;
  cinfo.input_components = 3;
  cinfo.in_color_space = JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, 100, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  std::vector<unsigned char> row(static_cast<std::size_t>(cols) * 3);
  for (int c = 0; c < cols; ++c) {
    row[3 * c] = r;
    row[3 * c + 1] = g;
    row[3 * c + 2] = b;
  }
  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW p = row.data();
    jpeg_write_scanlines(&cinfo, &p, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);
  std::fclose(f);
}

TEST(Luminance, PrimaryExamples) {
  const std::vector<unsigned char> px{255, 255, 255, 0, 0, 0, 255, 0, 0};
  const auto g = rgb_to_gray(px, 1, 3);
  EXPECT_DOUBLE_EQ(g(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(g(0, 1), 0.0);
  EXPECT_NEAR(g(0, 2), 0.299, 1e-12);
}

TEST(LoadAndGray, PngRgbAndGrayRoundTrip) {
  TempDir dir;
  const std::vector<unsigned char> rgb{255, 255, 255, 255, 0, 0, 0, 0, 0, 0, 255, 0};
  write_png_rgb8(rgb, 2, 2, dir / "rgb.png");
  const auto img = load_and_gray(dir / "rgb.png");
  ASSERT_EQ(img.rows(), 2);
  ASSERT_EQ(img.cols(), 2);
  EXPECT_DOUBLE_EQ(img(0, 0), 1.0);
  EXPECT_NEAR(img(0, 1), 0.299, 1e-12);
  EXPECT_DOUBLE_EQ(img(1, 0), 0.0);
  EXPECT_NEAR(img(1, 1), 0.587, 1e-12);

  const std::vector<unsigned char> gray{0, 51, 255};
  write_png_gray8(gray, 1, 3, dir / "gray.png");
  const auto g = load_and_gray(dir / "gray.png");
  EXPECT_DOUBLE_EQ(g(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(g(0, 1), 0.2);
  EXPECT_DOUBLE_EQ(g(0, 2), 1.0);
}

TEST(LoadAndGray, Jpeg) {
  TempDir dir;
  write_jpeg_rgb(dir / "white.jpg", 16, 16, 255, 255, 255);
  write_jpeg_rgb(dir / "red.jpg", 16, 16, 255, 0, 0);
  const auto white = load_and_gray(dir / "white.jpg");
  EXPECT_EQ(white.rows(), 16);
  EXPECT_NEAR(white(8, 8), 1.0, 2.0 / 255);
  // JPEG chroma quantization moves a saturated red a little.
  EXPECT_NEAR(load_and_gray(dir / "red.jpg")(8, 8), 0.299, 0.02);
}

TEST(LoadAndGray, Errors) {
  TempDir dir;
  EXPECT_THROW(load_and_gray(dir / "missing.png"), ImageError);
  {
    std::ofstream(dir / "junk.png") << "definitely not an image";
  }
  EXPECT_THROW(load_and_gray(dir / "junk.png"), ImageError);
  {
    // PNG signature followed by garbage
    std::ofstream f(dir / "trunc.png", std::ios::binary);
    f << "\x89PNG\r\n\x1a\n" << "garbage";
  }
  EXPECT_THROW(load_and_gray(dir / "trunc.png"), ImageError);
  {
    std::ofstream f(dir / "trunc.jpg", std::ios::binary);
    f << "\xFF\xD8\xFF\xE0" << "garbage";
  }
  EXPECT_THROW(load_and_gray(dir / "trunc.jpg"), ImageError);
}

TEST(Resize, CanonicalIsIdentity) {
  std::mt19937_64 rng(3);
  const auto img = test::random_image(rng, kCanonicalRows, kCanonicalCols);
  EXPECT_EQ(resize_canonical(img), img);
}

TEST(Resize, ConstantStaysConstant) {
  const GrayImage img(37, 53, 0.42);
  const auto out = resize_canonical(img);
  ASSERT_EQ(out.rows(), kCanonicalRows);
  ASSERT_EQ(out.cols(), kCanonicalCols);
  for (double v : out.data()) ASSERT_NEAR(v, 0.42, 1e-12);
}

TEST(Resize, CheckerboardMatchesBilinearOracle) {
  GrayImage img(2, 2);
  img(0, 0) = 0;
  img(0, 1) = 1;
  img(1, 0) = 1;
  img(1, 1) = 0;
  const auto out = resize_bilinear(img, 8, 8);
  // Closed form on the unit square: f(x,y) = x(1-y) + (1-x)y with source
  // coordinates x = (c+0.5)*2/8 - 0.5 clamped to [0,1].
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const double x = std::clamp((c + 0.5) / 4 - 0.5, 0.0, 1.0);
      const double y = std::clamp((r + 0.5) / 4 - 0.5, 0.0, 1.0);
      EXPECT_NEAR(out(r, c), x * (1 - y) + (1 - x) * y, 1e-12);
      if (r >= 2 && r <= 5 && c >= 2 && c <= 5) {
        EXPECT_GT(out(r, c), 0.0);
        EXPECT_LT(out(r, c), 1.0);
      }
    }
  }
}

TEST(Gradients, Examples) {
  GrayImage row(1, 4);
  row(0, 2) = 1;
  row(0, 3) = 1;
  const auto g = gradients(row);
  EXPECT_EQ(g.ix.data(), (std::vector<double>{0, 0, 1, 0}));

  const auto flat = gradients(GrayImage(5, 5, 0.3));
  for (double v : flat.ix.data()) EXPECT_EQ(v, 0.0);
  for (double v : flat.iy.data()) EXPECT_EQ(v, 0.0);

  const auto step = gradients(test::vertical_step(6, 6, 3, 0.0, 1.0));
  for (double v : step.iy.data()) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(step.ix(4, 3), 1.0);
}

TEST(Gradients, RandomizedRangeAndLinearity) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 100; ++i) {
    const auto img = test::random_image(rng, 7, 9);
    const double alpha = u(rng);
    GrayImage scaled = img;
    for (double& v : scaled.data()) v *= alpha;
    const auto g = gradients(img);
    const auto gs = gradients(scaled);
    for (std::size_t k = 0; k < g.ix.data().size(); ++k) {
      ASSERT_GE(g.ix.data()[k], -1.0);
      ASSERT_LE(g.ix.data()[k], 1.0);
      ASSERT_NEAR(gs.ix.data()[k], alpha * g.ix.data()[k], 1e-12);
      ASSERT_NEAR(gs.iy.data()[k], alpha * g.iy.data()[k], 1e-12);
    }
  }
}

TEST(EdgeMap, ConstantImageIsAllWhite) {
  const GrayImage img(20, 30, 0.6);
  const auto raw = edge_response(img, EdgeFisConfig{0.1});
  EXPECT_NEAR(raw(5, 5), 0.7, 1e-3);  // centroid of the white triangle (0.1,1,1)
  const auto norm = normalize_edges(raw);
  for (double v : norm.data()) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(EdgeMap, StepEdgeReachesBlackCentroid) {
  const auto img = test::vertical_step(10, 40, 20, 0.0, 1.0);
  const auto raw = edge_response(img, EdgeFisConfig{0.1});
  EXPECT_NEAR(raw(5, 20), 0.2333, 1e-3);
  const auto norm = normalize_edges(raw);
  EXPECT_DOUBLE_EQ(norm(5, 0), 1.0);
  EXPECT_DOUBLE_EQ(norm(5, 30), 1.0);
  EXPECT_LT(norm(5, 20), 0.5);
}

TEST(EdgeMap, SmallerSigmaIsMoreSensitive) {
  const auto img = test::vertical_step(8, 16, 8, 0.5, 0.6);
  const double tight = edge_response(img, EdgeFisConfig{0.1})(4, 8);
  const double loose = edge_response(img, EdgeFisConfig{0.3})(4, 8);
  EXPECT_LT(tight, loose);
}

TEST(EdgeMap, DegenerateMapThrows) {
  EXPECT_THROW(normalize_edges(EdgeMap(3, 3, 0.0)), ImageError);
}

TEST(WhitenBorder, Examples) {
  const auto out = whiten_border(EdgeMap(kCanonicalRows, kCanonicalCols, 0.0), 50);
  for (int r : {0, 700, kCanonicalRows - 1}) {
    for (int c = 0; c < kCanonicalCols; ++c) {
      const bool border = c < 50 || c >= 974;
      ASSERT_EQ(out(r, c), border ? 1.0 : 0.0) << "col " << c;
    }
  }
  const EdgeMap some(4, 10, 0.3);
  EXPECT_EQ(whiten_border(some, 0), some);
  const EdgeMap white(4, 10, 1.0);
  EXPECT_EQ(whiten_border(white, 3), white);
  EXPECT_THROW(whiten_border(some, 5), ConfigError);
  EXPECT_THROW(whiten_border(some, -1), ConfigError);
}

TEST(EdgeMap, RandomizedRangeAndShape) {
  std::mt19937_64 rng(21);
  const auto fis = build_edge_fis(EdgeFisConfig{0.3});
  for (int i = 0; i < 100; ++i) {
    const auto img = test::random_image(rng, 6 + i % 5, 8 + i % 3);
    const auto e = normalize_edges(edge_response(img, fis));
    ASSERT_EQ(e.rows(), img.rows());
    ASSERT_EQ(e.cols(), img.cols());
    double peak = 0;
    for (double v : e.data()) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
      peak = std::max(peak, v);
    }
    ASSERT_DOUBLE_EQ(peak, 1.0);
  }
}

TEST(EdgeMap, MirrorSymmetryWithinOneColumn) {
  // Left/right symmetric block on white: dark pixels of the mirrored map must
  // match the original within one column (backward-difference asymmetry).
  GrayImage img(40, 60, 1.0);
  for (int r = 10; r < 30; ++r) {
    const int half = 8 + (r - 10) / 2;
    for (int c = 30 - half; c < 30 + half; ++c) img(r, c) = 0.3;
  }
  GrayImage mirrored(40, 60);
  for (int r = 0; r < 40; ++r) {
    for (int c = 0; c < 60; ++c) mirrored(r, c) = img(r, 59 - c);
  }
  ASSERT_EQ(mirrored, img);

  const EdgeFisConfig cfg{0.1};
  const auto e = edge_map(img, cfg);
  const auto gm = gradients(mirrored);
  const auto g = gradients(img);
  for (int r = 0; r < 40; ++r) {
    for (int c = 1; c < 60; ++c) ASSERT_DOUBLE_EQ(gm.ix(r, 59 - c + 1), -g.ix(r, c));
  }
  auto dark = [](const EdgeMap& m, int r, int c) { return c >= 0 && c < m.cols() && m(r, c) < 0.98; };
  for (int r = 0; r < 40; ++r) {
    for (int c = 0; c < 60; ++c) {
      if (!dark(e, r, c)) continue;
      const int mc = 59 - c;
      ASSERT_TRUE(dark(e, r, mc - 1) || dark(e, r, mc) || dark(e, r, mc + 1)) << r << "," << c;
    }
  }
}

}  // namespace
}  // namespace closet::image
