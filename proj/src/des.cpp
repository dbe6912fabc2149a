#include "stegacrypt/des.hpp"

#include <span>

#include "stegacrypt/des_tables.hpp"
#include "stegacrypt/error.hpp"

namespace stegacrypt {

DesKey DesKey::from_bytes(ByteView bytes) {
  if (bytes.size() != kSize) {
    throw Error(ErrorCode::WrongKeyLength,
                "DES key must be 8 octets, got " + std::to_string(bytes.size()));
  }
  std::array<std::uint8_t, kSize> raw{};
  std::copy(bytes.begin(), bytes.end(), raw.begin());
  return DesKey(raw);
}

namespace des {
namespace {

thread_local std::uint64_t t_rounds = 0;

// Output bit i (1-based, MSB first) is input bit table[i-1] of an
// `in_width`-bit value.
constexpr std::uint64_t permute(std::uint64_t in, int in_width,
                                std::span<const std::uint8_t> table) {
  std::uint64_t out = 0;
  for (std::uint8_t pos : table) {
    out = (out << 1) | ((in >> (in_width - pos)) & 1u);
  }
  return out;
}

// S-box lookup fused with the P permutation: kSpBoxes[box][six_bits] is the
// 32-bit contribution of that box to the round-function output.
using SpBoxes = std::array<std::array<std::uint32_t, 64>, 8>;

constexpr SpBoxes make_sp_boxes() {
  SpBoxes sp{};
  for (int box = 0; box < 8; ++box) {
    for (int input = 0; input < 64; ++input) {
      const int row = ((input >> 4) & 0x2) | (input & 0x1);
      const int column = (input >> 1) & 0xF;
      const std::uint64_t nibble = tables::kSBoxes[box][row][column];
      const std::uint64_t placed = nibble << (28 - 4 * box);
      sp[box][input] = static_cast<std::uint32_t>(permute(placed, 32, tables::kPermutation));
    }
  }
  return sp;
}

constexpr SpBoxes kSpBoxes = make_sp_boxes();

std::uint32_t feistel(std::uint32_t half, std::uint64_t round_key) {
  const std::uint64_t mixed = permute(half, 32, tables::kExpansion) ^ round_key;
  std::uint32_t out = 0;
  for (int box = 0; box < 8; ++box) {
    out |= kSpBoxes[box][(mixed >> (42 - 6 * box)) & 0x3F];
  }
  return out;
}

template <typename KeyOrder>
Block crypt(Block block, const RoundKeySchedule& schedule, KeyOrder key_at) {
  const std::uint64_t permuted = permute(block.value, 64, tables::kInitialPermutation);
  std::uint32_t left = static_cast<std::uint32_t>(permuted >> 32);
  std::uint32_t right = static_cast<std::uint32_t>(permuted);
  for (std::size_t round = 0; round < kRounds; ++round) {
    const std::uint32_t next = left ^ feistel(right, schedule[key_at(round)]);
    left = right;
    right = next;
    ++t_rounds;
  }
  // The halves are swapped once more before the final permutation.
  const std::uint64_t preoutput = (std::uint64_t{right} << 32) | left;
  return Block{permute(preoutput, 64, tables::kFinalPermutation)};
}

std::uint32_t rotate28(std::uint32_t half, int count) {
  return ((half << count) | (half >> (28 - count))) & 0x0FFFFFFF;
}

}  // namespace

RoundKeySchedule key_schedule(const DesKey& key) {
  const std::uint64_t selected = permute(key.value(), 64, tables::kPermutedChoice1);
  std::uint32_t c = static_cast<std::uint32_t>(selected >> 28) & 0x0FFFFFFF;
  std::uint32_t d = static_cast<std::uint32_t>(selected) & 0x0FFFFFFF;
  RoundKeySchedule schedule{};
  for (std::size_t round = 0; round < kRounds; ++round) {
    c = rotate28(c, tables::kRotations[round]);
    d = rotate28(d, tables::kRotations[round]);
    const std::uint64_t cd = (std::uint64_t{c} << 28) | d;
    schedule[round] = permute(cd, 56, tables::kPermutedChoice2);
  }
  return schedule;
}

Block encrypt_block(Block block, const RoundKeySchedule& schedule) {
  return crypt(block, schedule, [](std::size_t round) { return round; });
}

Block decrypt_block(Block block, const RoundKeySchedule& schedule) {
  return crypt(block, schedule, [](std::size_t round) { return kRounds - 1 - round; });
}

Block encrypt_block(Block block, const DesKey& key) {
  return encrypt_block(block, key_schedule(key));
}

Block decrypt_block(Block block, const DesKey& key) {
  return decrypt_block(block, key_schedule(key));
}

std::uint64_t rounds_executed() noexcept { return t_rounds; }

void reset_round_counter() noexcept { t_rounds = 0; }

}  // namespace des
}  // namespace stegacrypt
