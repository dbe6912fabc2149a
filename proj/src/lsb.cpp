#include "stegacrypt/lsb.hpp"

#include <algorithm>
#include <string>

#include "stegacrypt/error.hpp"

namespace stegacrypt::lsb {
namespace {

// Maps a carrier index onto the interleaved sample array, skipping alpha.
class CarrierCursor {
 public:
  explicit CarrierCursor(const Image& image) : channels_(image.channels()) {}

  std::size_t sample_index(std::size_t carrier) const {
    return (carrier / kCarrierChannels) * channels_ + carrier % kCarrierChannels;
  }

 private:
  std::size_t channels_;
};

Bytes read_octets(const Image& image, std::size_t first_octet, std::size_t count) {
  const CarrierCursor cursor(image);
  const auto samples = image.samples();
  Bytes out(count, 0);
  std::size_t carrier = first_octet * 8;
  for (std::uint8_t& octet : out) {
    for (int bit = 0; bit < 8; ++bit, ++carrier) {
      octet = static_cast<std::uint8_t>((octet << 1) | (samples[cursor.sample_index(carrier)] & 1u));
    }
  }
  return out;
}

}  // namespace

std::size_t carrier_samples(const Image& image) { return image.pixel_count() * kCarrierChannels; }

std::size_t capacity(const Image& cover) {
  const std::size_t octets = carrier_samples(cover) / 8;
  return octets > kFrameHeaderSize ? octets - kFrameHeaderSize : 0;
}

Bytes build_frame(ByteView payload) {
  Bytes frame(kFrameHeaderSize + payload.size());
  std::copy(kFrameMagic.begin(), kFrameMagic.end(), frame.begin());
  frame[4] = kFrameVersion;
  store_be32(static_cast<std::uint32_t>(payload.size()), &frame[5]);
  std::copy(payload.begin(), payload.end(), frame.begin() + kFrameHeaderSize);
  return frame;
}

Image embed(const Image& cover, ByteView payload) {
  const std::size_t available = capacity(cover);
  if (payload.size() > available) throw CapacityError(payload.size(), available);

  const Bytes frame = build_frame(payload);
  Image stego = cover;
  const CarrierCursor cursor(stego);
  auto samples = stego.samples();
  std::size_t carrier = 0;
  for (std::uint8_t octet : frame) {
    for (int shift = 7; shift >= 0; --shift, ++carrier) {
      std::uint8_t& sample = samples[cursor.sample_index(carrier)];
      sample = static_cast<std::uint8_t>((sample & 0xFE) | ((octet >> shift) & 1u));
    }
  }
  return stego;
}

Bytes extract(const Image& stego) {
  const std::size_t octets = carrier_samples(stego) / 8;
  if (octets < kFrameHeaderSize) {
    throw Error(ErrorCode::NoFrameFound, "no embedded payload found: image too small to hold a frame");
  }
  const Bytes header = read_octets(stego, 0, kFrameHeaderSize);
  if (!std::equal(kFrameMagic.begin(), kFrameMagic.end(), header.begin())) {
    throw Error(ErrorCode::NoFrameFound, "no embedded payload found (frame magic absent)");
  }
  if (header[4] != kFrameVersion) {
    throw Error(ErrorCode::NoFrameFound,
                "no embedded payload found: unsupported frame version " + std::to_string(header[4]));
  }
  const std::size_t length = load_be32(&header[5]);
  if (length > octets - kFrameHeaderSize) {
    throw Error(ErrorCode::TruncatedFrame,
                "embedded frame declares " + std::to_string(length) + " octets but the image holds only " +
                    std::to_string(octets - kFrameHeaderSize) + " (cropped or corrupted image)");
  }
  return read_octets(stego, kFrameHeaderSize, length);
}

}  // namespace stegacrypt::lsb
