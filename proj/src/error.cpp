#include "stegacrypt/error.hpp"

namespace stegacrypt {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::WrongKeyLength: return "WrongKeyLength";
    case ErrorCode::InvalidHex: return "InvalidHex";
    case ErrorCode::EmptyPassphrase: return "EmptyPassphrase";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::PlaintextTooLarge: return "PlaintextTooLarge";
    case ErrorCode::PayloadTooLarge: return "PayloadTooLarge";
    case ErrorCode::NoFrameFound: return "NoFrameFound";
    case ErrorCode::TruncatedFrame: return "TruncatedFrame";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::BadVersion: return "BadVersion";
    case ErrorCode::MalformedEnvelope: return "MalformedEnvelope";
    case ErrorCode::CrcMismatch: return "CrcMismatch";
    case ErrorCode::BadCiphertextLength: return "BadCiphertextLength";
    case ErrorCode::BadPadding: return "BadPadding";
    case ErrorCode::KeyModeMismatch: return "KeyModeMismatch";
    case ErrorCode::InvalidImage: return "InvalidImage";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::LossyFormat: return "LossyFormat";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

CapacityError::CapacityError(std::size_t required, std::size_t available)
    : Error(ErrorCode::PayloadTooLarge,
            "payload needs " + std::to_string(required) + " octets but the cover holds only " +
                std::to_string(available) + " octets"),
      required_(required),
      available_(available) {}

}  // namespace stegacrypt
