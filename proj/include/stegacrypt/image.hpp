#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "stegacrypt/bytes.hpp"

namespace stegacrypt {

/// 8-bit RGB or RGBA raster, row-major, channels interleaved.
class Image {
 public:
  /// Zero-filled image. Throws Error(InvalidImage) for empty dimensions or a
  /// channel count other than 3 or 4.
  Image(std::uint32_t width, std::uint32_t height, std::uint8_t channels);
  /// Throws Error(InvalidImage) if `samples` does not hold width*height*channels values.
  Image(std::uint32_t width, std::uint32_t height, std::uint8_t channels, Bytes samples);

  std::uint32_t width() const { return width_; }
  std::uint32_t height() const { return height_; }
  std::uint8_t channels() const { return channels_; }
  bool has_alpha() const { return channels_ == 4; }
  std::size_t pixel_count() const { return std::size_t{width_} * height_; }

  std::span<const std::uint8_t> samples() const { return samples_; }
  std::span<std::uint8_t> samples() { return samples_; }

  std::uint8_t at(std::uint32_t x, std::uint32_t y, std::uint8_t channel) const {
    return samples_[(std::size_t{y} * width_ + x) * channels_ + channel];
  }
  std::uint8_t& at(std::uint32_t x, std::uint32_t y, std::uint8_t channel) {
    return samples_[(std::size_t{y} * width_ + x) * channels_ + channel];
  }

  bool same_shape(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::uint8_t channels_;
  Bytes samples_;
};

}  // namespace stegacrypt
