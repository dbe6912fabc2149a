#include "fixtures.hpp"

#include <algorithm>
#include <atomic>

#include "stegacrypt/image_io.hpp"

namespace stegacrypt::testing {

Bytes Rng::bytes(std::size_t n) {
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(engine_());
  return out;
}

RandomSource seeded_random(std::uint64_t seed) {
  auto engine = std::make_shared<std::mt19937_64>(seed);
  return [engine](std::span<std::uint8_t> out) {
    for (auto& b : out) b = static_cast<std::uint8_t>((*engine)());
  };
}

Image make_cover(std::uint32_t width, std::uint32_t height, std::uint8_t channels,
                 CoverPattern pattern, std::uint64_t seed) {
  Image img(width, height, channels);
  std::mt19937_64 engine(seed);
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) {
      for (std::uint8_t c = 0; c < channels; ++c) {
        std::uint8_t v = 0;
        switch (pattern) {
          case CoverPattern::Noise: v = static_cast<std::uint8_t>(engine()); break;
          case CoverPattern::Gradient: v = static_cast<std::uint8_t>((x * 255 / width + y * 7 + c * 85) & 0xFF); break;
          case CoverPattern::Flat: v = static_cast<std::uint8_t>(128 + c); break;
        }
        if (c == 3) v = static_cast<std::uint8_t>(engine());  // arbitrary alpha, including 0
        img.at(x, y, c) = v;
      }
    }
  }
  return img;
}

namespace {

void put16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

Bytes encode_bmp(const Image& image, bool top_down) {
  const bool alpha = image.has_alpha();
  const std::uint16_t bpp = alpha ? 32 : 24;
  const std::uint32_t dib = alpha ? 56 : 40;
  const std::uint32_t stride = ((bpp * image.width() + 31) / 32) * 4;
  const std::uint32_t offset = 14 + dib;
  const std::uint32_t data_size = stride * image.height();

  Bytes out;
  out.push_back('B');
  out.push_back('M');
  put32(out, offset + data_size);
  put32(out, 0);
  put32(out, offset);
  put32(out, dib);
  put32(out, image.width());
  const auto h = static_cast<std::int32_t>(image.height());
  put32(out, static_cast<std::uint32_t>(top_down ? -h : h));
  put16(out, 1);
  put16(out, bpp);
  put32(out, alpha ? 3 : 0);
  put32(out, data_size);
  put32(out, 2835);
  put32(out, 2835);
  put32(out, 0);
  put32(out, 0);
  if (alpha) {
    put32(out, 0x00FF0000);
    put32(out, 0x0000FF00);
    put32(out, 0x000000FF);
    put32(out, 0xFF000000);
  }
  for (std::uint32_t row = 0; row < image.height(); ++row) {
    const std::uint32_t y = top_down ? row : image.height() - 1 - row;
    const std::size_t start = out.size();
    for (std::uint32_t x = 0; x < image.width(); ++x) {
      out.push_back(image.at(x, y, 2));
      out.push_back(image.at(x, y, 1));
      out.push_back(image.at(x, y, 0));
      if (alpha) out.push_back(image.at(x, y, 3));
    }
    out.resize(start + stride, 0);
  }
  return out;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("stegacrypt-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ignored;
  std::filesystem::remove_all(path_, ignored);
}

std::vector<Bytes> sample_records() {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(STEGACRYPT_TEST_DATA "/records")) {
    files.push_back(entry.path());
  }
  std::ranges::sort(files);
  std::vector<Bytes> records;
  for (const auto& f : files) records.push_back(read_file(f));
  return records;
}

}  // namespace stegacrypt::testing
