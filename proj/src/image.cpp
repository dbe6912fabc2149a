#include "stegacrypt/image.hpp"

#include <string>

#include "stegacrypt/error.hpp"

namespace stegacrypt {
namespace {

std::size_t checked_size(std::uint32_t width, std::uint32_t height, std::uint8_t channels) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::InvalidImage, "image dimensions must be at least 1x1");
  }
  if (channels != 3 && channels != 4) {
    throw Error(ErrorCode::InvalidImage,
                "image must have 3 (RGB) or 4 (RGBA) channels, got " + std::to_string(channels));
  }
  return std::size_t{width} * height * channels;
}

}  // namespace

Image::Image(std::uint32_t width, std::uint32_t height, std::uint8_t channels)
    : width_(width),
      height_(height),
      channels_(channels),
      samples_(checked_size(width, height, channels), 0) {}

Image::Image(std::uint32_t width, std::uint32_t height, std::uint8_t channels, Bytes samples)
    : width_(width), height_(height), channels_(channels), samples_(std::move(samples)) {
  const std::size_t expected = checked_size(width, height, channels);
  if (samples_.size() != expected) {
    throw Error(ErrorCode::InvalidImage, "expected " + std::to_string(expected) +
                                             " samples, got " + std::to_string(samples_.size()));
  }
}

}  // namespace stegacrypt
