#include "stegacrypt/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>

#include "stegacrypt/error.hpp"

namespace stegacrypt {
namespace {

constexpr std::uint8_t kPngSignature[] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};

bool starts_with(ByteView data, std::initializer_list<std::uint8_t> prefix, std::size_t at = 0) {
  return data.size() >= at + prefix.size() && std::equal(prefix.begin(), prefix.end(), data.begin() + at);
}

// Releases libpng's simplified-API state on every exit path.
struct PngImage {
  png_image image{};
  PngImage() { image.version = PNG_IMAGE_VERSION; }
  ~PngImage() { png_image_free(&image); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;
};

Image decode_png(ByteView data) {
  PngImage png;
  if (!png_image_begin_read_from_memory(&png.image, data.data(), data.size())) {
    throw Error(ErrorCode::InvalidImage, std::string("corrupt PNG: ") + png.image.message);
  }
  const bool alpha = (png.image.format & PNG_FORMAT_FLAG_ALPHA) != 0;
  png.image.format = alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;
  Bytes samples(PNG_IMAGE_SIZE(png.image));
  if (!png_image_finish_read(&png.image, nullptr, samples.data(), 0, nullptr)) {
    throw Error(ErrorCode::InvalidImage, std::string("corrupt PNG: ") + png.image.message);
  }
  return Image(png.image.width, png.image.height, alpha ? 4 : 3, std::move(samples));
}

std::uint16_t le16(ByteView d, std::size_t at) {
  return static_cast<std::uint16_t>(d[at] | (d[at + 1] << 8));
}

std::uint32_t le32(ByteView d, std::size_t at) {
  return std::uint32_t{d[at]} | (std::uint32_t{d[at + 1]} << 8) | (std::uint32_t{d[at + 2]} << 16) |
         (std::uint32_t{d[at + 3]} << 24);
}

[[noreturn]] void bad_bmp(const std::string& why) {
  throw Error(ErrorCode::InvalidImage, "corrupt BMP: " + why);
}

[[noreturn]] void unsupported_bmp(const std::string& why) {
  throw Error(ErrorCode::UnsupportedFormat, "unsupported BMP variant: " + why);
}

// Uncompressed 24-bit BGR, 32-bit BGRX, or 32-bit bitfields in the standard
// 8:8:8(:8) layout.
Image decode_bmp(ByteView d) {
  constexpr std::size_t kFileHeader = 14;
  if (d.size() < kFileHeader + 40) bad_bmp("file too short for headers");
  const std::uint32_t pixel_offset = le32(d, 10);
  const std::uint32_t dib_size = le32(d, 14);
  if (dib_size < 40 || kFileHeader + dib_size > d.size()) bad_bmp("bad info header size");

  const auto width = static_cast<std::int32_t>(le32(d, 18));
  const auto raw_height = static_cast<std::int32_t>(le32(d, 22));
  const std::uint16_t planes = le16(d, 26);
  const std::uint16_t bpp = le16(d, 28);
  const std::uint32_t compression = le32(d, 30);
  if (planes != 1) bad_bmp("plane count must be 1");
  if (width <= 0 || raw_height == 0 || raw_height == INT32_MIN) bad_bmp("bad dimensions");
  const bool bottom_up = raw_height > 0;
  const auto height = static_cast<std::uint32_t>(bottom_up ? raw_height : -raw_height);

  constexpr std::uint32_t kBiRgb = 0, kBiBitfields = 3, kBiAlphaBitfields = 6;
  std::uint8_t channels = 3;
  if (bpp == 24) {
    if (compression != kBiRgb) unsupported_bmp("compressed 24-bit data");
  } else if (bpp == 32) {
    if (compression == kBiBitfields || compression == kBiAlphaBitfields) {
      // Masks live inside V4/V5 headers, or directly after a 40-byte header.
      const std::size_t at = kFileHeader + 40;
      const bool has_alpha_mask = dib_size >= 56 || compression == kBiAlphaBitfields;
      if (at + (has_alpha_mask ? 16 : 12) > d.size()) bad_bmp("missing colour masks");
      const std::uint32_t alpha_mask = has_alpha_mask ? le32(d, at + 12) : 0;
      if (le32(d, at) != 0x00FF0000 || le32(d, at + 4) != 0x0000FF00 || le32(d, at + 8) != 0x000000FF ||
          (alpha_mask != 0 && alpha_mask != 0xFF000000)) {
        unsupported_bmp("non-standard colour masks");
      }
      if (alpha_mask != 0) channels = 4;
    } else if (compression != kBiRgb) {
      unsupported_bmp("compressed 32-bit data");
    }
  } else {
    unsupported_bmp(std::to_string(bpp) + " bits per pixel (need 24 or 32)");
  }

  const std::size_t stride = ((std::size_t{bpp} * static_cast<std::uint32_t>(width) + 31) / 32) * 4;
  if (pixel_offset > d.size() || (d.size() - pixel_offset) / stride < height) {
    bad_bmp("pixel data truncated");
  }

  Image img(static_cast<std::uint32_t>(width), height, channels);
  const std::size_t bytes_per_pixel = bpp / 8;
  for (std::uint32_t y = 0; y < height; ++y) {
    const std::uint32_t src_row = bottom_up ? height - 1 - y : y;
    const std::uint8_t* row = d.data() + pixel_offset + src_row * stride;
    for (std::uint32_t x = 0; x < img.width(); ++x) {
      const std::uint8_t* px = row + x * bytes_per_pixel;
      img.at(x, y, 0) = px[2];
      img.at(x, y, 1) = px[1];
      img.at(x, y, 2) = px[0];
      if (channels == 4) img.at(x, y, 3) = px[3];
    }
  }
  return img;
}

}  // namespace

ImageFormat sniff_format(ByteView data) {
  if (data.size() >= sizeof(kPngSignature) &&
      std::equal(std::begin(kPngSignature), std::end(kPngSignature), data.begin())) {
    return ImageFormat::Png;
  }
  if (starts_with(data, {'B', 'M'})) return ImageFormat::Bmp;
  if (starts_with(data, {0xFF, 0xD8, 0xFF})) return ImageFormat::Jpeg;
  if (starts_with(data, {'G', 'I', 'F', '8'})) return ImageFormat::Gif;
  if (starts_with(data, {'R', 'I', 'F', 'F'}) && starts_with(data, {'W', 'E', 'B', 'P'}, 8)) {
    return ImageFormat::Webp;
  }
  return ImageFormat::Unknown;
}

const char* to_string(ImageFormat format) {
  switch (format) {
    case ImageFormat::Png: return "PNG";
    case ImageFormat::Bmp: return "BMP";
    case ImageFormat::Jpeg: return "JPEG";
    case ImageFormat::Gif: return "GIF";
    case ImageFormat::Webp: return "WebP";
    case ImageFormat::Unknown: break;
  }
  return "unknown";
}

Image decode_image(ByteView data) {
  const ImageFormat format = sniff_format(data);
  switch (format) {
    case ImageFormat::Png: return decode_png(data);
    case ImageFormat::Bmp: return decode_bmp(data);
    case ImageFormat::Jpeg:
    case ImageFormat::Webp:
      throw Error(ErrorCode::LossyFormat,
                  std::string("cover is a lossy format (") + to_string(format) +
                      "); lossy recompression destroys least-significant bits, use PNG or BMP");
    case ImageFormat::Gif:
      throw Error(ErrorCode::UnsupportedFormat, "GIF is palette-based; use PNG or BMP");
    case ImageFormat::Unknown: break;
  }
  throw Error(ErrorCode::UnsupportedFormat, "unrecognized image format; use PNG or BMP");
}

Bytes encode_png(const Image& image) {
  PngImage png;
  png.image.width = image.width();
  png.image.height = image.height();
  png.image.format = image.has_alpha() ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&png.image, nullptr, &size, 0, image.samples().data(), 0, nullptr)) {
    throw Error(ErrorCode::Io, std::string("PNG encoding failed: ") + png.image.message);
  }
  Bytes out(size);
  if (!png_image_write_to_memory(&png.image, out.data(), &size, 0, image.samples().data(), 0, nullptr)) {
    throw Error(ErrorCode::Io, std::string("PNG encoding failed: ") + png.image.message);
  }
  out.resize(size);
  return out;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  Bytes data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorCode::Io, "error reading " + path.string());
  return data;
}

void write_file(const std::filesystem::path& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::Io, "error writing " + path.string());
}

Image load_image(const std::filesystem::path& path) { return decode_image(read_file(path)); }

void save_png(const Image& image, const std::filesystem::path& path) {
  write_file(path, encode_png(image));
}

}  // namespace stegacrypt
