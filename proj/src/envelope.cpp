#include "stegacrypt/envelope.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>
#include <zlib.h>

#include <algorithm>
#include <limits>

#include "stegacrypt/error.hpp"

namespace stegacrypt {

RandomSource system_random() {
  return [](std::span<std::uint8_t> out) {
    if (out.empty()) return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
      throw std::runtime_error("RAND_bytes failed");
    }
  };
}

Secret Secret::raw_key(ByteView material) {
  if (material.size() != tdes::kKeyMaterialSize) {
    throw Error(ErrorCode::WrongKeyLength,
                "raw key must be 24 octets (48 hex digits), got " + std::to_string(material.size()));
  }
  return Secret(Bytes(material.begin(), material.end()));
}

Secret Secret::passphrase(std::string text) {
  if (text.empty()) throw Error(ErrorCode::EmptyPassphrase, "passphrase must not be empty");
  return Secret(std::move(text));
}

std::uint32_t crc32(ByteView data) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large inputs in slices.
  while (!data.empty()) {
    const std::size_t n = std::min<std::size_t>(data.size(), std::numeric_limits<uInt>::max());
    crc = ::crc32(crc, data.data(), static_cast<uInt>(n));
    data = data.subspan(n);
  }
  return static_cast<std::uint32_t>(crc);
}

namespace detail {

Bytes pbkdf2_hmac_sha256(std::string_view passphrase, ByteView salt, std::uint32_t iterations,
                         std::size_t length) {
  Bytes out(length);
  if (PKCS5_PBKDF2_HMAC(passphrase.data(), static_cast<int>(passphrase.size()), salt.data(),
                        static_cast<int>(salt.size()), static_cast<int>(iterations), EVP_sha256(),
                        static_cast<int>(length), out.data()) != 1) {
    throw std::runtime_error("PKCS5_PBKDF2_HMAC failed");
  }
  return out;
}

}  // namespace detail

Bytes derive_key(std::string_view passphrase, const Salt& salt) {
  if (passphrase.empty()) throw Error(ErrorCode::EmptyPassphrase, "passphrase must not be empty");
  return detail::pbkdf2_hmac_sha256(passphrase, salt, kKdfIterations, tdes::kKeyMaterialSize);
}

void check_plaintext_size(std::uint64_t size) {
  if (size > kMaxPlaintextSize) {
    throw Error(ErrorCode::PlaintextTooLarge,
                "plaintext of " + std::to_string(size) + " octets exceeds the envelope limit");
  }
}

namespace {

TdesKey resolve_key(const Secret& secret, const Salt& salt) {
  if (secret.is_passphrase()) return tdes::split_key(derive_key(secret.passphrase_text(), salt));
  return tdes::split_key(secret.key_material());
}

}  // namespace

Envelope seal(ByteView plaintext, const Secret& secret, const RandomSource& random) {
  check_plaintext_size(plaintext.size());
  Envelope env;
  if (secret.is_passphrase()) {
    env.flags = kFlagPassphrase;
    random(env.salt);
  }
  random(env.iv);
  env.ciphertext = tdes::encrypt_stream(plaintext, resolve_key(secret, env.salt), env.iv);
  env.crc32 = crc32(env.ciphertext);
  return env;
}

Bytes open(const Envelope& envelope, const Secret& secret) {
  if (crc32(envelope.ciphertext) != envelope.crc32) {
    throw Error(ErrorCode::CrcMismatch, "envelope checksum mismatch: ciphertext is corrupted");
  }
  if (envelope.passphrase_derived() != secret.is_passphrase()) {
    throw Error(ErrorCode::KeyModeMismatch,
                envelope.passphrase_derived()
                    ? "envelope was sealed with a passphrase, but a raw key was supplied"
                    : "envelope was sealed with a raw key, but a passphrase was supplied");
  }
  return tdes::decrypt_stream(envelope.ciphertext, resolve_key(secret, envelope.salt), envelope.iv);
}

Bytes encode(const Envelope& envelope) {
  Bytes out(envelope.encoded_size());
  std::uint8_t* p = out.data();
  std::copy(kEnvelopeMagic.begin(), kEnvelopeMagic.end(), p);
  p[4] = kEnvelopeVersion;
  p[5] = envelope.flags;
  std::copy(envelope.salt.begin(), envelope.salt.end(), p + 6);
  std::copy(envelope.iv.begin(), envelope.iv.end(), p + 22);
  store_be32(static_cast<std::uint32_t>(envelope.ciphertext.size()), p + 30);
  store_be32(envelope.crc32, p + 34);
  std::copy(envelope.ciphertext.begin(), envelope.ciphertext.end(), p + kEnvelopeHeaderSize);
  return out;
}

Envelope decode(ByteView data) {
  if (data.size() < kEnvelopeMagic.size() ||
      !std::equal(kEnvelopeMagic.begin(), kEnvelopeMagic.end(), data.begin())) {
    throw Error(ErrorCode::BadMagic, "payload is not an envelope (magic mismatch)");
  }
  if (data.size() < 5 || data[4] != kEnvelopeVersion) {
    throw Error(ErrorCode::BadVersion, data.size() < 5 ? "envelope truncated before version"
                                                       : "unsupported envelope version " +
                                                             std::to_string(data[4]));
  }
  if (data.size() < kEnvelopeHeaderSize) {
    throw Error(ErrorCode::MalformedEnvelope,
                "envelope truncated: " + std::to_string(data.size()) + " octets");
  }

  Envelope env;
  env.flags = data[5];
  std::copy_n(data.begin() + 6, kSaltSize, env.salt.begin());
  std::copy_n(data.begin() + 22, tdes::kIvSize, env.iv.begin());
  const std::uint32_t ct_len = load_be32(&data[30]);
  env.crc32 = load_be32(&data[34]);

  if ((env.flags & ~kFlagPassphrase) != 0) {
    throw Error(ErrorCode::MalformedEnvelope, "envelope has unknown flag bits set");
  }
  if (!env.passphrase_derived() &&
      std::ranges::any_of(env.salt, [](std::uint8_t b) { return b != 0; })) {
    throw Error(ErrorCode::MalformedEnvelope, "raw-key envelope carries a non-zero salt");
  }
  if (ct_len == 0 || ct_len % des::kBlockSize != 0) {
    throw Error(ErrorCode::MalformedEnvelope,
                "ciphertext length " + std::to_string(ct_len) + " is not a positive multiple of 8");
  }
  if (data.size() - kEnvelopeHeaderSize != ct_len) {
    throw Error(ErrorCode::MalformedEnvelope,
                "envelope length mismatch: header says " + std::to_string(ct_len) +
                    " ciphertext octets, " + std::to_string(data.size() - kEnvelopeHeaderSize) +
                    " present");
  }
  env.ciphertext.assign(data.begin() + kEnvelopeHeaderSize, data.end());
  if (crc32(env.ciphertext) != env.crc32) {
    throw Error(ErrorCode::CrcMismatch, "envelope checksum mismatch: ciphertext is corrupted");
  }
  return env;
}

}  // namespace stegacrypt
