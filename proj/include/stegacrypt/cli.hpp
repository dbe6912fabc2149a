#pragma once

#include <iosfwd>

#include "stegacrypt/error.hpp"

namespace stegacrypt::cli {

// Stable process exit codes.
enum class ExitStatus : int {
  Success = 0,
  Usage = 1,           // bad flags, bad key hex, empty passphrase, image shape mismatch
  Capacity = 2,        // record does not fit the cover
  Integrity = 3,       // no frame, truncated frame, damaged envelope, CRC mismatch
  Authentication = 4,  // wrong key or passphrase
  Io = 5,              // unreadable files, lossy or unsupported image formats
};

inline constexpr const char* kPassphraseEnv = "STEGACRYPT_PASSPHRASE";

ExitStatus exit_status_for(ErrorCode code);

/// Runs one command line. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stegacrypt::cli
