#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "stegacrypt/bytes.hpp"
#include "stegacrypt/envelope.hpp"
#include "stegacrypt/image.hpp"

namespace stegacrypt::testing {

/// Seeded generator so failures reproduce.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x5EC0DE) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  Bytes bytes(std::size_t n);
  template <std::size_t N>
  std::array<std::uint8_t, N> array() {
    std::array<std::uint8_t, N> out{};
    for (auto& b : out) b = static_cast<std::uint8_t>(engine_());
    return out;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Deterministic RandomSource for reproducible envelopes.
RandomSource seeded_random(std::uint64_t seed);

enum class CoverPattern { Noise, Gradient, Flat };

Image make_cover(std::uint32_t width, std::uint32_t height, std::uint8_t channels,
                 CoverPattern pattern = CoverPattern::Noise, std::uint64_t seed = 1);

/// Minimal uncompressed BMP writer (24-bit, or 32-bit with an alpha mask).
Bytes encode_bmp(const Image& image, bool top_down = false);

/// Creates a unique directory under the system temp dir; removes it on exit.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

/// Plain-text patient records shipped under tests/data/records.
std::vector<Bytes> sample_records();

}  // namespace stegacrypt::testing
