#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stegacrypt {

// Every failure the library reports. The CLI maps each code onto exactly one
// exit status (see cli.hpp).
enum class ErrorCode {
  // caller mistakes
  WrongKeyLength,
  InvalidHex,
  EmptyPassphrase,
  ShapeMismatch,
  // capacity
  PlaintextTooLarge,
  PayloadTooLarge,
  // integrity of the transport (stego frame or envelope framing)
  NoFrameFound,
  TruncatedFrame,
  BadMagic,
  BadVersion,
  MalformedEnvelope,
  CrcMismatch,
  BadCiphertextLength,
  // authentication: wrong secret
  BadPadding,
  KeyModeMismatch,
  // files and image formats
  InvalidImage,
  UnsupportedFormat,
  LossyFormat,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// PayloadTooLarge with the octet counts that did not fit.
class CapacityError : public Error {
 public:
  CapacityError(std::size_t required, std::size_t available);

  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

}  // namespace stegacrypt
