#include "stegacrypt/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <sstream>

#include "stegacrypt/error.hpp"
#include "stegacrypt/lsb.hpp"

namespace stegacrypt {
namespace {

constexpr double kPeak = 255.0;

std::string shape_of(const Image& img) {
  return std::to_string(img.width()) + "x" + std::to_string(img.height()) + "x" +
         std::to_string(img.channels());
}

}  // namespace

MetricsReport compare_images(const Image& reference, const Image& test) {
  if (!reference.same_shape(test)) {
    throw Error(ErrorCode::ShapeMismatch,
                "image shapes differ: " + shape_of(reference) + " vs " + shape_of(test));
  }
  const auto a = reference.samples();
  const auto b = test.samples();
  const std::size_t channels = reference.channels();
  std::uint64_t sum_sq = 0;
  int max_diff = 0;
  for (std::size_t pixel = 0; pixel < reference.pixel_count(); ++pixel) {
    for (std::size_t c = 0; c < lsb::kCarrierChannels; ++c) {
      const std::size_t i = pixel * channels + c;
      const int d = std::abs(int{a[i]} - int{b[i]});
      sum_sq += static_cast<std::uint64_t>(d * d);
      max_diff = std::max(max_diff, d);
    }
  }
  MetricsReport report;
  report.samples_compared = reference.pixel_count() * lsb::kCarrierChannels;
  report.mse = static_cast<double>(sum_sq) / static_cast<double>(report.samples_compared);
  report.psnr_db = psnr_from_mse(report.mse);
  report.max_abs_diff = max_diff;
  return report;
}

double mse(const Image& a, const Image& b) { return compare_images(a, b).mse; }

double psnr(const Image& a, const Image& b) { return compare_images(a, b).psnr_db; }

double psnr_from_mse(double mse) {
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(kPeak * kPeak / mse);
}

std::string to_text(const MetricsReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << "mse: " << report.mse << '\n';
  out << "psnr_db: ";
  if (std::isinf(report.psnr_db)) {
    out << "inf";
  } else {
    out << std::setprecision(4) << report.psnr_db;
  }
  out << '\n'
      << "samples_compared: " << report.samples_compared << '\n'
      << "max_abs_diff: " << report.max_abs_diff << '\n';
  return out.str();
}

nlohmann::json to_json(const MetricsReport& report) {
  nlohmann::json j;
  j["mse"] = report.mse;
  j["psnr_db"] = std::isinf(report.psnr_db) ? nlohmann::json(nullptr) : nlohmann::json(report.psnr_db);
  j["samples_compared"] = report.samples_compared;
  j["max_abs_diff"] = report.max_abs_diff;
  return j;
}

}  // namespace stegacrypt
