#define OPENSSL_SUPPRESS_DEPRECATED
#include "reference_des.hpp"

#include <openssl/des.h>

namespace stegacrypt::testing {
namespace {

DES_key_schedule schedule_for(const Octets8& key) {
  DES_cblock block;
  for (int i = 0; i < 8; ++i) block[i] = key[i];
  DES_key_schedule schedule;
  DES_set_key_unchecked(&block, &schedule);
  return schedule;
}

Octets8 run(const Octets8& in, DES_key_schedule* a, DES_key_schedule* b, DES_key_schedule* c,
            int encrypt) {
  DES_cblock input;
  DES_cblock output;
  for (int i = 0; i < 8; ++i) input[i] = in[i];
  if (b == nullptr) {
    DES_ecb_encrypt(&input, &output, a, encrypt);
  } else {
    DES_ecb3_encrypt(&input, &output, a, b, c, encrypt);
  }
  Octets8 out{};
  for (int i = 0; i < 8; ++i) out[i] = output[i];
  return out;
}

}  // namespace

Octets8 reference_des_encrypt(const Octets8& key, const Octets8& block) {
  auto s = schedule_for(key);
  return run(block, &s, nullptr, nullptr, DES_ENCRYPT);
}

Octets8 reference_des_decrypt(const Octets8& key, const Octets8& block) {
  auto s = schedule_for(key);
  return run(block, &s, nullptr, nullptr, DES_DECRYPT);
}

Octets8 reference_tdes_encrypt(const Octets8& k1, const Octets8& k2, const Octets8& k3,
                               const Octets8& block) {
  auto s1 = schedule_for(k1);
  auto s2 = schedule_for(k2);
  auto s3 = schedule_for(k3);
  return run(block, &s1, &s2, &s3, DES_ENCRYPT);
}

Octets8 reference_tdes_decrypt(const Octets8& k1, const Octets8& k2, const Octets8& k3,
                               const Octets8& block) {
  auto s1 = schedule_for(k1);
  auto s2 = schedule_for(k2);
  auto s3 = schedule_for(k3);
  return run(block, &s1, &s2, &s3, DES_DECRYPT);
}

}  // namespace stegacrypt::testing
