#include <doctest.h>

#include "fixtures.hpp"
#include "stegacrypt/error.hpp"
#include "stegacrypt/lsb.hpp"
#include "stegacrypt/metrics.hpp"

using namespace stegacrypt;
using namespace stegacrypt::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

// Carrier-only LSB invariants between a cover and its stego image.
void check_lsb_only(const Image& cover, const Image& stego) {
  REQUIRE(cover.same_shape(stego));
  const auto c = cover.samples();
  const auto s = stego.samples();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (cover.has_alpha() && i % 4 == 3) {
      REQUIRE(c[i] == s[i]);
    } else {
      REQUIRE((c[i] >> 1) == (s[i] >> 1));
    }
  }
}

}  // namespace

TEST_SUITE("lsb capacity") {
  TEST_CASE("capacity formula") {
    CHECK(lsb::capacity(Image(512, 512, 3)) == 98'295);
    CHECK(lsb::capacity(Image(1, 1, 3)) == 0);
    CHECK(lsb::capacity(Image(100, 100, 4)) == 3'741);
    CHECK(lsb::capacity(Image(100, 100, 3)) == 3'741);
    CHECK(lsb::capacity(Image(16, 16, 3)) == 87);
    CHECK(lsb::capacity(Image(5, 5, 3)) == 0);  // 75 bits = 9 octets, all header
    CHECK(lsb::capacity(Image(6, 5, 3)) == 2);
  }
}

TEST_SUITE("lsb embed and extract") {
  TEST_CASE("bits land MSB-first in R, G, B order") {
    // Frame bits 6..8 are 1, 1, 0 ("S" = 01010011, "G" = 01000111), so
    // pixel 2 carries them.
    Image cover = make_cover(8, 8, 3, CoverPattern::Flat);
    cover.at(2, 0, 0) = 254;
    cover.at(2, 0, 1) = 1;
    cover.at(2, 0, 2) = 255;
    const Image stego = lsb::embed(cover, as_bytes("x"));
    CHECK(stego.at(2, 0, 0) == 255);
    CHECK(stego.at(2, 0, 1) == 1);
    CHECK(stego.at(2, 0, 2) == 254);

    // First eight carrier LSBs spell 'S'.
    int first = 0;
    for (int k = 0; k < 8; ++k) first = (first << 1) | (stego.samples()[k] & 1);
    CHECK(first == 'S');
  }

  TEST_CASE("alpha is skipped when walking carriers") {
    const Image cover = make_cover(8, 8, 4, CoverPattern::Noise, 3);
    const Image stego = lsb::embed(cover, as_bytes("alpha"));
    int first = 0;
    for (int k = 0; k < 8; ++k) {
      const std::size_t sample = (k / 3) * 4 + k % 3;
      first = (first << 1) | (stego.samples()[sample] & 1);
    }
    CHECK(first == 'S');
    check_lsb_only(cover, stego);
  }

  TEST_CASE("roundtrip at 1%, 50% and 100% of capacity") {
    Rng rng(2);
    for (std::uint8_t channels : {std::uint8_t{3}, std::uint8_t{4}}) {
      const Image cover = make_cover(120, 80, channels, CoverPattern::Noise, 9);
      const std::size_t cap = lsb::capacity(cover);
      for (std::size_t n : {cap / 100, cap / 2, cap}) {
        const Bytes payload = rng.bytes(n);
        const Image stego = lsb::embed(cover, payload);
        CHECK(lsb::extract(stego) == payload);
        check_lsb_only(cover, stego);
      }
    }
  }

  TEST_CASE("capacity + 1 is rejected with both sizes") {
    const Image cover = make_cover(40, 40, 3);
    const std::size_t cap = lsb::capacity(cover);
    try {
      lsb::embed(cover, Bytes(cap + 1));
      FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
      CHECK(e.code() == ErrorCode::PayloadTooLarge);
      CHECK(e.required() == cap + 1);
      CHECK(e.available() == cap);
    }
    CHECK(lsb::extract(lsb::embed(cover, Bytes(cap, 0xEE))) == Bytes(cap, 0xEE));
  }

  TEST_CASE("exhaustive size sweep on a 64x64 cover") {
    Rng rng(3);
    const Image cover = make_cover(64, 64, 3, CoverPattern::Gradient);
    const std::size_t cap = lsb::capacity(cover);
    for (int step = 0; step < 256; ++step) {
      const std::size_t n = step == 255 ? cap : step * cap / 255;
      const Bytes payload = rng.bytes(n);
      const Image stego = lsb::embed(cover, payload);
      REQUIRE(lsb::extract(stego) == payload);
      check_lsb_only(cover, stego);
      REQUIRE(mse(cover, stego) <= 1.0);
      // Samples past the last frame bit are untouched.
      const std::size_t used = (n + lsb::kFrameHeaderSize) * 8;
      for (std::size_t i = used; i < cover.samples().size(); ++i) {
        REQUIRE(cover.samples()[i] == stego.samples()[i]);
      }
    }
  }

  TEST_CASE("embedding is deterministic and leaves the cover alone") {
    Rng rng(4);
    const Image cover = make_cover(30, 30, 3);
    const Image copy = cover;
    const Bytes payload = rng.bytes(100);
    CHECK(lsb::embed(cover, payload) == lsb::embed(cover, payload));
    CHECK(cover == copy);
  }

  TEST_CASE("plain covers carry no frame") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      CHECK(code_of([&] { lsb::extract(make_cover(50, 50, 3, CoverPattern::Noise, seed)); }) ==
            ErrorCode::NoFrameFound);
    }
    CHECK(code_of([] { lsb::extract(Image(1, 1, 3)); }) == ErrorCode::NoFrameFound);
    CHECK(code_of([] { lsb::extract(make_cover(40, 40, 3, CoverPattern::Flat)); }) == ErrorCode::NoFrameFound);
  }

  TEST_CASE("unknown frame version") {
    Image stego = lsb::embed(make_cover(20, 20, 3), as_bytes("abc"));
    // Bit 39 is the LSB of the version octet (carrier 39 = pixel 13, G).
    stego.samples()[39] ^= 1;
    CHECK(code_of([&] { lsb::extract(stego); }) == ErrorCode::NoFrameFound);
  }

  TEST_CASE("cropping yields TruncatedFrame or NoFrameFound") {
    Rng rng(5);
    const Image cover = make_cover(64, 64, 3);
    const Image stego = lsb::embed(cover, rng.bytes(lsb::capacity(cover) - 10));
    for (std::uint32_t rows : {1u, 2u, 10u, 32u, 63u}) {
      Bytes top(stego.samples().begin(), stego.samples().begin() + std::size_t{rows} * 64 * 3);
      const Image cropped(64, rows, 3, std::move(top));
      const ErrorCode code = code_of([&] { lsb::extract(cropped); });
      CHECK((code == ErrorCode::TruncatedFrame || code == ErrorCode::NoFrameFound));
    }
  }

  TEST_CASE("a corrupted length field is a truncated frame") {
    Image stego = lsb::embed(make_cover(20, 20, 3), as_bytes("abc"));
    stego.samples()[40] |= 1;  // most significant length bit
    CHECK(code_of([&] { lsb::extract(stego); }) == ErrorCode::TruncatedFrame);
  }

  TEST_CASE("build_frame layout") {
    const Bytes frame = lsb::build_frame(as_bytes("hi"));
    CHECK(to_hex(frame) == "53474631010000000268" "69");
  }
}
