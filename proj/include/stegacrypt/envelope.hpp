#pragma once

// Self-describing encrypted container for one record.
//
// Wire format (all integers big-endian), 38 + ct_len octets:
//
//   offset  size    field
//   0       4       magic "SGE1" (53 47 45 31)
//   4       1       version, 0x01
//   5       1       flags; bit 0 set = key derived from a passphrase
//   6       16      salt (all zero in raw-key mode)
//   22      8       CBC IV
//   30      4       ct_len, a positive multiple of 8
//   34      4       CRC-32 (IEEE) of the ciphertext
//   38      ct_len  3DES-CBC ciphertext, PKCS#7 padded
//
// The CRC detects corruption; it is not a MAC and gives no authenticity.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>

#include "stegacrypt/bytes.hpp"
#include "stegacrypt/triple_des.hpp"

namespace stegacrypt {

inline constexpr std::array<std::uint8_t, 4> kEnvelopeMagic = {'S', 'G', 'E', '1'};
inline constexpr std::uint8_t kEnvelopeVersion = 0x01;
inline constexpr std::size_t kEnvelopeHeaderSize = 38;
inline constexpr std::size_t kMinEnvelopeSize = kEnvelopeHeaderSize + des::kBlockSize;
inline constexpr std::uint8_t kFlagPassphrase = 0x01;
inline constexpr std::size_t kSaltSize = 16;
/// PBKDF2-HMAC-SHA256 iterations; fixed by envelope version 1.
inline constexpr std::uint32_t kKdfIterations = 100'000;
inline constexpr std::uint64_t kMaxPlaintextSize = (std::uint64_t{1} << 32) - 64;

using Salt = std::array<std::uint8_t, kSaltSize>;

/// Fills its argument with random octets. Must be cryptographically secure
/// outside of tests.
using RandomSource = std::function<void(std::span<std::uint8_t>)>;

/// OpenSSL's CSPRNG.
RandomSource system_random();

/// Either 24 octets of raw 3DES key material or a non-empty passphrase.
class Secret {
 public:
  /// Throws Error(WrongKeyLength) unless `material` is 24 octets.
  static Secret raw_key(ByteView material);
  /// Throws Error(EmptyPassphrase) for "".
  static Secret passphrase(std::string text);

  bool is_passphrase() const { return std::holds_alternative<std::string>(value_); }
  const Bytes& key_material() const { return std::get<Bytes>(value_); }
  const std::string& passphrase_text() const { return std::get<std::string>(value_); }

 private:
  explicit Secret(std::variant<Bytes, std::string> value) : value_(std::move(value)) {}

  std::variant<Bytes, std::string> value_;
};

struct Envelope {
  std::uint8_t flags = 0;
  Salt salt{};
  tdes::Iv iv{};
  std::uint32_t crc32 = 0;
  Bytes ciphertext;

  bool passphrase_derived() const { return (flags & kFlagPassphrase) != 0; }
  std::size_t encoded_size() const { return kEnvelopeHeaderSize + ciphertext.size(); }

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

/// CRC-32 with the IEEE 802.3 polynomial (zlib/PNG flavour).
std::uint32_t crc32(ByteView data);

/// 24 octets of 3DES key material from PBKDF2-HMAC-SHA256 with kKdfIterations.
/// Throws Error(EmptyPassphrase).
Bytes derive_key(std::string_view passphrase, const Salt& salt);

/// Throws Error(PlaintextTooLarge) past kMaxPlaintextSize.
void check_plaintext_size(std::uint64_t size);

Envelope seal(ByteView plaintext, const Secret& secret,
              const RandomSource& random = system_random());

/// Throws CrcMismatch (checked before decrypting), KeyModeMismatch when the
/// secret kind differs from the one recorded in the flags, or BadPadding for a
/// wrong secret.
Bytes open(const Envelope& envelope, const Secret& secret);

Bytes encode(const Envelope& envelope);

/// Strict parser. Throws BadMagic, BadVersion, MalformedEnvelope (short
/// input, length mismatch, unknown flags, non-zero salt in raw-key mode) or
/// CrcMismatch.
Envelope decode(ByteView data);

namespace detail {
Bytes pbkdf2_hmac_sha256(std::string_view passphrase, ByteView salt, std::uint32_t iterations,
                         std::size_t length);
}

}  // namespace stegacrypt
