#pragma once

// Distortion between two images of identical shape. MSE pools all carrier
// samples (R, G and B of every pixel; alpha excluded) into one mean; PSNR
// uses a fixed peak of 255.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "stegacrypt/image.hpp"

namespace stegacrypt {

struct MetricsReport {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity when mse == 0
  std::uint64_t samples_compared = 0;
  int max_abs_diff = 0;
};

/// Throws Error(ShapeMismatch).
double mse(const Image& a, const Image& b);
double psnr(const Image& a, const Image& b);
double psnr_from_mse(double mse);

MetricsReport compare_images(const Image& reference, const Image& test);

/// "key: value" lines; an infinite PSNR prints as "inf".
std::string to_text(const MetricsReport& report);
/// An infinite PSNR is emitted as null.
nlohmann::json to_json(const MetricsReport& report);

}  // namespace stegacrypt
