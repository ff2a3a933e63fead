#include <png.h>

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>

// jpeglib.h needs size_t and FILE declared first
#include <jpeglib.h>

#include "closet/error.hpp"
#include "closet/image.hpp"

namespace closet::image {

namespace {

bool is_png(std::span<const unsigned char> bytes) {
  static constexpr unsigned char sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  return bytes.size() >= 8 && std::memcmp(bytes.data(), sig, 8) == 0;
}

bool is_jpeg(std::span<const unsigned char> bytes) {
  return bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF;
}

GrayImage gray8_to_gray(std::span<const unsigned char> px, int rows, int cols) {
  GrayImage img(rows, cols);
  auto& d = img.data();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = px[i] / 255.0;
  return img;
}

GrayImage decode_png(std::span<const unsigned char> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw ImageError(std::string("PNG decode failed: ") + image.message);
  }
  if (image.width == 0 || image.height == 0) {
    png_image_free(&image);
    throw ImageError("PNG has zero dimension");
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<unsigned char> buf(PNG_IMAGE_SIZE(image));
  png_color white{255, 255, 255};
  if (!png_image_finish_read(&image, &white, buf.data(), 0, nullptr)) {
    throw ImageError(std::string("PNG decode failed: ") + image.message);
  }
  const int rows = static_cast<int>(image.height);
  const int cols = static_cast<int>(image.width);
  return color ? rgb_to_gray(buf, rows, cols) : gray8_to_gray(buf, rows, cols);
}

struct JpegErrorManager {
  jpeg_error_mgr base;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

GrayImage decode_jpeg(std::span<const unsigned char> bytes) {
  jpeg_decompress_struct cinfo;
  JpegErrorManager err;
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = jpeg_error_exit;
  // Everything that must survive a longjmp lives here, outside the setjmp scope.
  std::vector<unsigned char> pixels;
  int rows = 0;
  int cols = 0;
  int channels = 0;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw ImageError(std::string("JPEG decode failed: ") + err.message);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = cinfo.jpeg_color_space == JCS_GRAYSCALE ? JCS_GRAYSCALE : JCS_RGB;
  jpeg_start_decompress(&cinfo);
  rows = static_cast<int>(cinfo.output_height);
  cols = static_cast<int>(cinfo.output_width);
  channels = cinfo.output_components;
  pixels.resize(static_cast<std::size_t>(rows) * cols * channels);
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = pixels.data() + static_cast<std::size_t>(cinfo.output_scanline) * cols * channels;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  if (rows == 0 || cols == 0) throw ImageError("JPEG has zero dimension");
  return channels == 1 ? gray8_to_gray(pixels, rows, cols) : rgb_to_gray(pixels, rows, cols);
}

}  // namespace

GrayImage rgb_to_gray(std::span<const unsigned char> rgb, int rows, int cols) {
  GrayImage img(rows, cols);
  auto& d = img.data();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double lum = 0.299 * rgb[3 * i] + 0.587 * rgb[3 * i + 1] + 0.114 * rgb[3 * i + 2];
    d[i] = std::min(1.0, lum / 255.0);
  }
  return img;
}

GrayImage decode_and_gray(std::span<const unsigned char> bytes) {
  if (is_png(bytes)) return decode_png(bytes);
  if (is_jpeg(bytes)) return decode_jpeg(bytes);
  throw ImageError("unsupported image format (expected PNG or JPEG)");
}

GrayImage load_and_gray(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageError("cannot open image '" + path.string() + "'");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  try {
    return decode_and_gray(bytes);
  } catch (const ImageError& e) {
    throw ImageError(path.string() + ": " + e.what());
  }
}

std::vector<unsigned char> to_gray8(std::span<const double> values) {
  std::vector<unsigned char> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = std::clamp(values[i], 0.0, 1.0);
    out[i] = static_cast<unsigned char>(std::lround(v * 255.0));
  }
  return out;
}

namespace {

void write_png_impl(std::span<const unsigned char> pixels, int rows, int cols, png_uint_32 format,
                    const std::filesystem::path& path) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(cols);
  image.height = static_cast<png_uint_32>(rows);
  image.format = format;
  if (pixels.size() < PNG_IMAGE_SIZE(image)) throw ImageError("pixel buffer too small");
  if (!png_image_write_to_file(&image, path.c_str(), 0, pixels.data(), 0, nullptr)) {
    throw ImageError("cannot write PNG '" + path.string() + "': " + image.message);
  }
}

}  // namespace

void write_png_gray8(std::span<const unsigned char> pixels, int rows, int cols,
                     const std::filesystem::path& path) {
  write_png_impl(pixels, rows, cols, PNG_FORMAT_GRAY, path);
}

void write_png_rgb8(std::span<const unsigned char> pixels, int rows, int cols,
                    const std::filesystem::path& path) {
  write_png_impl(pixels, rows, cols, PNG_FORMAT_RGB, path);
}

}  // namespace closet::image
