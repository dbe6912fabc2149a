#pragma once

// Least-significant-bit embedding of a framed payload.
//
// The frame is "SGF1", a version octet (0x01), a 4-octet big-endian payload
// length and the payload itself. Its bits, most significant bit of each octet
// first, replace the LSBs of the carrier samples in row-major pixel order,
// R then G then B within a pixel, one bit per sample. Alpha never carries
// data. Extraction needs only the stego image.

#include <array>
#include <cstddef>
#include <cstdint>

#include "stegacrypt/bytes.hpp"
#include "stegacrypt/image.hpp"

namespace stegacrypt::lsb {

inline constexpr std::array<std::uint8_t, 4> kFrameMagic = {'S', 'G', 'F', '1'};
inline constexpr std::uint8_t kFrameVersion = 0x01;
inline constexpr std::size_t kFrameHeaderSize = 9;
inline constexpr std::uint8_t kCarrierChannels = 3;

/// Number of samples that can carry payload bits (alpha excluded).
std::size_t carrier_samples(const Image& image);

/// Largest payload, in octets, that `embed` accepts for this cover.
std::size_t capacity(const Image& cover);

Bytes build_frame(ByteView payload);

/// Throws CapacityError when the payload exceeds capacity(cover).
Image embed(const Image& cover, ByteView payload);

/// Throws Error(NoFrameFound) when the LSBs do not start with a frame and
/// Error(TruncatedFrame) when the declared length runs past the image.
Bytes extract(const Image& stego);

}  // namespace stegacrypt::lsb
