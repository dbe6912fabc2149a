#pragma once

// Three-key 3DES in encrypt-decrypt-encrypt order, and a CBC byte-stream
// cipher with PKCS#7 padding built on top of it.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stegacrypt/bytes.hpp"
#include "stegacrypt/des.hpp"

namespace stegacrypt {

/// The 24-octet 3DES secret split into its three DES keys. 168 key bits are
/// carried, but meet-in-the-middle attacks bound the effective strength at
/// roughly 112 bits.
struct TdesKey {
  DesKey k1;
  DesKey k2;
  DesKey k3;

  friend bool operator==(const TdesKey&, const TdesKey&) = default;
};

namespace tdes {

inline constexpr std::size_t kKeyMaterialSize = 24;
inline constexpr std::size_t kIvSize = 8;
inline constexpr std::size_t kRoundsPerBlock = 3 * des::kRounds;

using Iv = std::array<std::uint8_t, kIvSize>;

/// k1 = octets 0..7, k2 = 8..15, k3 = 16..23. Throws Error(WrongKeyLength).
TdesKey split_key(ByteView material);

/// E(k3, D(k2, E(k1, block))).
Block encrypt_block(Block block, const TdesKey& key);
/// D(k1, E(k2, D(k3, block))).
Block decrypt_block(Block block, const TdesKey& key);

/// CBC over PKCS#7-padded plaintext. The output is always 8 * (len/8 + 1)
/// octets long; an empty input yields one block of pure padding.
Bytes encrypt_stream(ByteView plaintext, const TdesKey& key, const Iv& iv);

/// Inverse of encrypt_stream. Throws Error(BadCiphertextLength) when the
/// input is empty or not block-aligned and Error(BadPadding) when the final
/// block does not carry valid padding, which usually means a wrong key.
Bytes decrypt_stream(ByteView ciphertext, const TdesKey& key, const Iv& iv);

bool is_weak_key(const DesKey& key);
bool is_semi_weak_key(const DesKey& key);

/// Human-readable warnings for keys that silently reduce 3DES strength:
/// weak or semi-weak component keys, and k1 == k2 or k2 == k3 (either
/// collapses EDE to single DES). Parity bits are ignored. Empty if none apply.
std::vector<std::string> key_warnings(const TdesKey& key);

}  // namespace tdes
}  // namespace stegacrypt
