#pragma once

// End-to-end flow: secure = seal -> encode -> embed, retrieve = extract ->
// decode -> open. Also a side-by-side comparison of the combined method with
// each layer on its own.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "stegacrypt/bytes.hpp"
#include "stegacrypt/envelope.hpp"
#include "stegacrypt/image.hpp"
#include "stegacrypt/metrics.hpp"

namespace stegacrypt {

struct SecureResult {
  Image stego;
  MetricsReport metrics;       // cover vs stego
  std::size_t payload_octets;  // encoded envelope
  std::size_t frame_octets;    // payload + frame header
  std::size_t capacity;        // largest payload the cover accepts
  double capacity_used_fraction;
};

/// Throws CapacityError when the envelope does not fit, plus anything seal throws.
SecureResult secure(ByteView record, const Secret& secret, const Image& cover,
                    const RandomSource& random = system_random());

/// Errors stay distinguishable by layer: NoFrameFound/TruncatedFrame from the
/// image, BadMagic/BadVersion/MalformedEnvelope/CrcMismatch from the envelope,
/// BadPadding/KeyModeMismatch for a wrong secret.
Bytes retrieve(const Image& stego, const Secret& secret);

/// Empty cell = not applicable.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct CompareRow {
  std::string property;
  Cell combined;
  Cell des_only;
  Cell lsb_only;
};

struct CompareOptions {
  /// Where each configuration writes its artifact. Empty: a fresh temporary
  /// directory that is removed afterwards.
  std::filesystem::path work_dir;
  /// Timings keep the fastest of this many runs.
  int repetitions = 3;
};

struct CompareReport {
  std::vector<CompareRow> rows;
  std::vector<std::string> notes;

  const CompareRow* find(std::string_view property) const;
};

inline constexpr std::string_view kRowLayers = "security layers";
inline constexpr std::string_view kRowKeys = "keys required";
inline constexpr std::string_view kRowRounds = "DES rounds per block";
inline constexpr std::string_view kRowThroughput = "throughput (KiB/s)";
inline constexpr std::string_view kRowPsnr = "PSNR (dB)";
inline constexpr std::string_view kRowReliability = "reliability rating";
inline constexpr std::string_view kRowSpeedRating = "speed rating";

/// Runs the combined method, 3DES alone (envelope written to a file) and LSB
/// alone (raw record embedded) on the same inputs.
CompareReport compare_report(ByteView record, const Secret& secret, const Image& cover,
                             const CompareOptions& options = {});

std::string to_text(const CompareReport& report);
nlohmann::json to_json(const CompareReport& report);

}  // namespace stegacrypt
