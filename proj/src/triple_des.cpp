#include "stegacrypt/triple_des.hpp"

#include <algorithm>

#include "stegacrypt/error.hpp"

namespace stegacrypt::tdes {
namespace {

struct Schedules {
  des::RoundKeySchedule k1;
  des::RoundKeySchedule k2;
  des::RoundKeySchedule k3;

  explicit Schedules(const TdesKey& key)
      : k1(des::key_schedule(key.k1)),
        k2(des::key_schedule(key.k2)),
        k3(des::key_schedule(key.k3)) {}

  Block encrypt(Block b) const {
    return des::encrypt_block(des::decrypt_block(des::encrypt_block(b, k1), k2), k3);
  }
  Block decrypt(Block b) const {
    return des::decrypt_block(des::encrypt_block(des::decrypt_block(b, k3), k2), k1);
  }
};

// Values with parity bits cleared.
constexpr std::array<std::uint64_t, 4> kWeakKeys = {
    0x0000000000000000ull,
    0xFEFEFEFEFEFEFEFEull,
    0xE0E0E0E0F0F0F0F0ull,
    0x1E1E1E1E0E0E0E0Eull,
};

constexpr std::array<std::uint64_t, 12> kSemiWeakKeys = {
    0x001E001E000E000Eull, 0x1E001E000E000E00ull,  //
    0x00E000E000F000F0ull, 0xE000E000F000F000ull,  //
    0x00FE00FE00FE00FEull, 0xFE00FE00FE00FE00ull,  //
    0x1EE01EE00EF00EF0ull, 0xE01EE01EF00EF00Eull,  //
    0x1EFE1EFE0EFE0EFEull, 0xFE1EFE1EFE0EFE0Eull,  //
    0xE0FEE0FEF0FEF0FEull, 0xFEE0FEE0FEF0FEF0ull,
};

}  // namespace

TdesKey split_key(ByteView material) {
  if (material.size() != kKeyMaterialSize) {
    throw Error(ErrorCode::WrongKeyLength,
                "3DES key material must be 24 octets, got " + std::to_string(material.size()));
  }
  return TdesKey{DesKey::from_bytes(material.subspan(0, 8)),
                 DesKey::from_bytes(material.subspan(8, 8)),
                 DesKey::from_bytes(material.subspan(16, 8))};
}

Block encrypt_block(Block block, const TdesKey& key) { return Schedules(key).encrypt(block); }

Block decrypt_block(Block block, const TdesKey& key) { return Schedules(key).decrypt(block); }

Bytes encrypt_stream(ByteView plaintext, const TdesKey& key, const Iv& iv) {
  const Schedules schedules(key);
  const std::size_t pad = des::kBlockSize - plaintext.size() % des::kBlockSize;
  Bytes out(plaintext.begin(), plaintext.end());
  out.insert(out.end(), pad, static_cast<std::uint8_t>(pad));

  Block chain = Block::load(iv.data());
  for (std::size_t offset = 0; offset < out.size(); offset += des::kBlockSize) {
    chain = schedules.encrypt(Block::load(&out[offset]) ^ chain);
    chain.store(&out[offset]);
  }
  return out;
}

Bytes decrypt_stream(ByteView ciphertext, const TdesKey& key, const Iv& iv) {
  if (ciphertext.empty() || ciphertext.size() % des::kBlockSize != 0) {
    throw Error(ErrorCode::BadCiphertextLength,
                "ciphertext length " + std::to_string(ciphertext.size()) +
                    " is not a positive multiple of 8");
  }
  const Schedules schedules(key);
  Bytes out(ciphertext.size());
  Block chain = Block::load(iv.data());
  for (std::size_t offset = 0; offset < ciphertext.size(); offset += des::kBlockSize) {
    const Block in = Block::load(&ciphertext[offset]);
    (schedules.decrypt(in) ^ chain).store(&out[offset]);
    chain = in;
  }

  const std::uint8_t pad = out.back();
  const bool pad_ok = pad >= 1 && pad <= des::kBlockSize &&
                      std::all_of(out.end() - pad, out.end(), [pad](std::uint8_t b) { return b == pad; });
  if (!pad_ok) {
    throw Error(ErrorCode::BadPadding, "invalid padding after decryption (wrong key or corrupted data)");
  }
  out.resize(out.size() - pad);
  return out;
}

bool is_weak_key(const DesKey& key) {
  return std::ranges::find(kWeakKeys, key.effective_bits()) != kWeakKeys.end();
}

bool is_semi_weak_key(const DesKey& key) {
  return std::ranges::find(kSemiWeakKeys, key.effective_bits()) != kSemiWeakKeys.end();
}

std::vector<std::string> key_warnings(const TdesKey& key) {
  std::vector<std::string> warnings;
  const std::array<const DesKey*, 3> parts = {&key.k1, &key.k2, &key.k3};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string name = "k" + std::to_string(i + 1);
    if (is_weak_key(*parts[i])) warnings.push_back(name + " is a weak DES key");
    if (is_semi_weak_key(*parts[i])) warnings.push_back(name + " is a semi-weak DES key");
  }
  if (key.k1.effective_bits() == key.k2.effective_bits()) {
    warnings.push_back("k1 equals k2: encryption degenerates to single DES under k3");
  }
  if (key.k2.effective_bits() == key.k3.effective_bits()) {
    warnings.push_back("k2 equals k3: encryption degenerates to single DES under k1");
  }
  return warnings;
}

}  // namespace stegacrypt::tdes
