#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

#include "fixtures.hpp"
#include "reference_des.hpp"
#include "stegacrypt/des.hpp"
#include "stegacrypt/des_tables.hpp"
#include "stegacrypt/error.hpp"

using namespace stegacrypt;
using stegacrypt::testing::Octets8;
using stegacrypt::testing::Rng;

namespace {

DesKey key_of(std::uint64_t v) {
  std::array<std::uint8_t, 8> raw{};
  store_be64(v, raw.data());
  return DesKey(raw);
}

Octets8 octets(std::uint64_t v) {
  Octets8 out{};
  store_be64(v, out.data());
  return out;
}

template <std::size_t N>
bool is_permutation_of_1_to(const std::array<std::uint8_t, N>& table, int n) {
  std::vector<int> seen(table.begin(), table.end());
  std::ranges::sort(seen);
  std::vector<int> want(n);
  std::iota(want.begin(), want.end(), 1);
  return seen == want;
}

}  // namespace

TEST_SUITE("des tables") {
  TEST_CASE("every S-box row is a permutation of 0..15") {
    for (const auto& box : des::tables::kSBoxes) {
      for (const auto& row : box) {
        std::array<std::uint8_t, 16> sorted = row;
        std::ranges::sort(sorted);
        for (int i = 0; i < 16; ++i) CHECK(sorted[i] == i);
      }
    }
  }

  TEST_CASE("IP, FP and P are permutations and FP inverts IP") {
    CHECK(is_permutation_of_1_to(des::tables::kInitialPermutation, 64));
    CHECK(is_permutation_of_1_to(des::tables::kFinalPermutation, 64));
    CHECK(is_permutation_of_1_to(des::tables::kPermutation, 32));
    for (int i = 0; i < 64; ++i) {
      const int through_ip = des::tables::kInitialPermutation[i];
      CHECK(des::tables::kFinalPermutation[through_ip - 1] == i + 1);
    }
  }

  TEST_CASE("expansion duplicates the edge bits of each nibble") {
    std::vector<int> counts(33, 0);
    for (auto pos : des::tables::kExpansion) ++counts[pos];
    for (int bit = 1; bit <= 32; ++bit) {
      const bool edge = bit % 4 == 0 || bit % 4 == 1;
      CHECK(counts[bit] == (edge ? 2 : 1));
    }
  }

  TEST_CASE("PC-1 drops exactly the parity bits and PC-2 drops eight of 56") {
    std::set<int> pc1(des::tables::kPermutedChoice1.begin(), des::tables::kPermutedChoice1.end());
    CHECK(pc1.size() == 56);
    for (int p : pc1) CHECK(p % 8 != 0);
    std::set<int> pc2(des::tables::kPermutedChoice2.begin(), des::tables::kPermutedChoice2.end());
    CHECK(pc2.size() == 48);
    CHECK(*pc2.begin() >= 1);
    CHECK(*pc2.rbegin() <= 56);
    for (int dropped : {9, 18, 22, 25, 35, 38, 43, 54}) CHECK(pc2.count(dropped) == 0);
  }

  TEST_CASE("rotations bring each half back to its start") {
    const int total = std::accumulate(des::tables::kRotations.begin(), des::tables::kRotations.end(), 0);
    CHECK(total == 28);
  }
}

TEST_SUITE("des key schedule") {
  TEST_CASE("keys differing only in parity bits share a schedule") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t k = rng.u64();
      const std::uint64_t parity_noise = rng.u64() & 0x0101010101010101ull;
      CHECK(des::key_schedule(key_of(k)) == des::key_schedule(key_of(k ^ parity_noise)));
    }
  }

  TEST_CASE("all-zero key yields sixteen zero round keys") {
    const auto schedule = des::key_schedule(key_of(0));
    for (auto rk : schedule) CHECK(rk == 0);
  }

  TEST_CASE("classroom key 133457799BBCDFF1 round keys") {
    // First and last subkeys of the widely published worked example.
    const auto schedule = des::key_schedule(key_of(0x133457799BBCDFF1ull));
    CHECK(schedule[0] == 0x1B02EFFC7072ull);
    CHECK(schedule[15] == 0xCB3D8B0E17F5ull);
    for (auto rk : schedule) CHECK(rk < (std::uint64_t{1} << 48));
  }

  TEST_CASE("DesKey::from_bytes enforces eight octets") {
    CHECK_THROWS_AS(DesKey::from_bytes(Bytes(7)), Error);
    CHECK_THROWS_AS(DesKey::from_bytes(Bytes(9)), Error);
    CHECK(DesKey::from_bytes(Bytes(8, 0x42)).value() == 0x4242424242424242ull);
  }
}

TEST_SUITE("des block cipher") {
  TEST_CASE("known-answer vectors") {
    // Pinned from an independent implementation (OpenSSL and Python's
    // cryptography package agree).
    const Block ct = des::encrypt_block(Block{0x0123456789ABCDEFull}, key_of(0x133457799BBCDFF1ull));
    CHECK(ct.value == 0x85E813540F0AB405ull);
    CHECK(des::decrypt_block(ct, key_of(0x133457799BBCDFF1ull)).value == 0x0123456789ABCDEFull);

    // "Now is t" under 0123456789ABCDEF.
    CHECK(des::encrypt_block(Block{0x4E6F772069732074ull}, key_of(0x0123456789ABCDEFull)).value ==
          0x3FA40E8A984D4815ull);
  }

  TEST_CASE("matches the OpenSSL reference on random keys and blocks") {
    Rng rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::uint64_t k = rng.u64();
      const std::uint64_t b = rng.u64();
      const Block ours = des::encrypt_block(Block{b}, key_of(k));
      CHECK(octets(ours.value) == testing::reference_des_encrypt(octets(k), octets(b)));
      CHECK(octets(des::decrypt_block(Block{b}, key_of(k)).value) ==
            testing::reference_des_decrypt(octets(k), octets(b)));
    }
  }

  TEST_CASE("decrypt inverts encrypt over 10^4 random pairs") {
    Rng rng(31);
    int failures = 0;
    for (int trial = 0; trial < 10'000; ++trial) {
      const DesKey k = key_of(rng.u64());
      const Block b{rng.u64()};
      failures += des::decrypt_block(des::encrypt_block(b, k), k) != b;
    }
    CHECK(failures == 0);
  }

  TEST_CASE("all-zero key roundtrips") {
    Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
      const Block b{rng.u64()};
      CHECK(des::decrypt_block(des::encrypt_block(b, key_of(0)), key_of(0)) == b);
    }
  }

  TEST_CASE("complementation property") {
    Rng rng(41);
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::uint64_t k = rng.u64();
      const Block b{rng.u64()};
      failures += ~des::encrypt_block(b, key_of(k)) != des::encrypt_block(~b, key_of(~k));
    }
    CHECK(failures == 0);
  }

  TEST_CASE("single-bit plaintext flips avalanche") {
    Rng rng(51);
    long total = 0;
    constexpr int kTrials = 1000;
    for (int trial = 0; trial < kTrials; ++trial) {
      const DesKey k = key_of(rng.u64());
      const Block b{rng.u64()};
      const Block flipped{b.value ^ (std::uint64_t{1} << rng.below(64))};
      total += std::popcount((des::encrypt_block(b, k) ^ des::encrypt_block(flipped, k)).value);
    }
    const double mean = static_cast<double>(total) / kTrials;
    CHECK(mean >= 24.0);
    CHECK(mean <= 40.0);
  }

  TEST_CASE("no ciphertext collisions over 10^4 blocks under one key") {
    Rng rng(61);
    const auto schedule = des::key_schedule(key_of(rng.u64()));
    std::unordered_set<std::uint64_t> plains;
    std::unordered_set<std::uint64_t> ciphers;
    while (plains.size() < 10'000) {
      const std::uint64_t b = rng.u64();
      if (plains.insert(b).second) ciphers.insert(des::encrypt_block(Block{b}, schedule).value);
    }
    CHECK(ciphers.size() == plains.size());
  }

  TEST_CASE("parity bits never change ciphertext") {
    Rng rng(71);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t k = rng.u64();
      const Block b{rng.u64()};
      const int parity_bit = 8 * static_cast<int>(rng.below(8));
      CHECK(des::encrypt_block(b, key_of(k)) == des::encrypt_block(b, key_of(k ^ (1ull << parity_bit))));
    }
  }

  TEST_CASE("round counter counts sixteen rounds per block") {
    des::reset_round_counter();
    des::encrypt_block(Block{1}, key_of(2));
    CHECK(des::rounds_executed() == 16);
    des::decrypt_block(Block{1}, key_of(2));
    CHECK(des::rounds_executed() == 32);
    des::reset_round_counter();
    CHECK(des::rounds_executed() == 0);
  }

  TEST_CASE("block serialization is big-endian") {
    const std::array<std::uint8_t, 8> raw = {0x01, 0x23, 0x45, 0x67, 0x89, 0xAB, 0xCD, 0xEF};
    const Block b = Block::load(raw.data());
    CHECK(b.value == 0x0123456789ABCDEFull);
    std::array<std::uint8_t, 8> back{};
    b.store(back.data());
    CHECK(back == raw);
  }
}
