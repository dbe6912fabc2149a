#pragma once

// Single DES on 64-bit blocks: key schedule and the 16-round Feistel network.
//
// Bits are numbered as in the DES standard: bit 1 is the most significant bit
// of the first octet. Blocks and keys are serialized big-endian, so the first
// octet of a message is the most significant octet of the block value.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

#include "stegacrypt/bytes.hpp"

namespace stegacrypt {

/// A 64-bit cipher block.
struct Block {
  std::uint64_t value = 0;

  static Block load(const std::uint8_t* in) { return Block{load_be64(in)}; }
  void store(std::uint8_t* out) const { store_be64(value, out); }

  friend Block operator^(Block a, Block b) { return Block{a.value ^ b.value}; }
  friend Block operator~(Block a) { return Block{~a.value}; }
  friend auto operator<=>(const Block&, const Block&) = default;
};

/// Eight octets of DES key material. The low bit of each octet is a parity
/// bit; it is never checked and never influences the cipher.
class DesKey {
 public:
  static constexpr std::size_t kSize = 8;

  DesKey() = default;
  explicit DesKey(const std::array<std::uint8_t, kSize>& bytes) : bytes_(bytes) {}

  /// Throws Error(WrongKeyLength) unless `bytes` holds exactly 8 octets.
  static DesKey from_bytes(ByteView bytes);

  const std::array<std::uint8_t, kSize>& bytes() const { return bytes_; }
  std::uint64_t value() const { return load_be64(bytes_.data()); }

  /// The 56 key bits with the parity bits cleared.
  std::uint64_t effective_bits() const { return value() & 0xFEFEFEFEFEFEFEFEull; }

  friend bool operator==(const DesKey&, const DesKey&) = default;

 private:
  std::array<std::uint8_t, kSize> bytes_{};
};

namespace des {

inline constexpr std::size_t kBlockSize = 8;
inline constexpr std::size_t kRounds = 16;

/// Sixteen 48-bit round keys, right-aligned in 64-bit words, in encryption order.
using RoundKeySchedule = std::array<std::uint64_t, kRounds>;

RoundKeySchedule key_schedule(const DesKey& key);

Block encrypt_block(Block block, const DesKey& key);
Block decrypt_block(Block block, const DesKey& key);

// Variants over a precomputed schedule; decryption walks it backwards.
Block encrypt_block(Block block, const RoundKeySchedule& schedule);
Block decrypt_block(Block block, const RoundKeySchedule& schedule);

/// Number of Feistel rounds this thread has executed since the last reset.
std::uint64_t rounds_executed() noexcept;
void reset_round_counter() noexcept;

}  // namespace des
}  // namespace stegacrypt
