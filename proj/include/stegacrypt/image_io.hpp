#pragma once

// Image and file I/O. Covers may be PNG or BMP; stego images are always
// written as PNG. Lossy formats are refused because recompression destroys
// the least-significant bits that carry the payload.

#include <filesystem>

#include "stegacrypt/bytes.hpp"
#include "stegacrypt/image.hpp"

namespace stegacrypt {

enum class ImageFormat { Png, Bmp, Jpeg, Gif, Webp, Unknown };

ImageFormat sniff_format(ByteView data);
const char* to_string(ImageFormat format);

/// Decodes PNG (any colour type, converted to 8-bit RGB or RGBA) or
/// uncompressed 24/32-bit BMP. Throws LossyFormat for JPEG/WebP,
/// UnsupportedFormat for anything else and InvalidImage for corrupt data.
Image decode_image(ByteView data);

Bytes encode_png(const Image& image);

Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, ByteView data);

Image load_image(const std::filesystem::path& path);
void save_png(const Image& image, const std::filesystem::path& path);

}  // namespace stegacrypt
