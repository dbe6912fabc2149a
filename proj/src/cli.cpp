#include "stegacrypt/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "stegacrypt/envelope.hpp"
#include "stegacrypt/image_io.hpp"
#include "stegacrypt/lsb.hpp"
#include "stegacrypt/metrics.hpp"
#include "stegacrypt/pipeline.hpp"
#include "stegacrypt/triple_des.hpp"

namespace stegacrypt::cli {

ExitStatus exit_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::WrongKeyLength:
    case ErrorCode::InvalidHex:
    case ErrorCode::EmptyPassphrase:
    case ErrorCode::ShapeMismatch:
      return ExitStatus::Usage;
    case ErrorCode::PlaintextTooLarge:
    case ErrorCode::PayloadTooLarge:
      return ExitStatus::Capacity;
    case ErrorCode::NoFrameFound:
    case ErrorCode::TruncatedFrame:
    case ErrorCode::BadMagic:
    case ErrorCode::BadVersion:
    case ErrorCode::MalformedEnvelope:
    case ErrorCode::CrcMismatch:
    case ErrorCode::BadCiphertextLength:
      return ExitStatus::Integrity;
    case ErrorCode::BadPadding:
    case ErrorCode::KeyModeMismatch:
      return ExitStatus::Authentication;
    case ErrorCode::InvalidImage:
    case ErrorCode::UnsupportedFormat:
    case ErrorCode::LossyFormat:
    case ErrorCode::Io:
      return ExitStatus::Io;
  }
  return ExitStatus::Io;
}

namespace {

const char* layer_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoFrameFound:
    case ErrorCode::TruncatedFrame:
    case ErrorCode::PayloadTooLarge:
      return "steganography layer";
    case ErrorCode::BadMagic:
    case ErrorCode::BadVersion:
    case ErrorCode::MalformedEnvelope:
    case ErrorCode::CrcMismatch:
    case ErrorCode::BadCiphertextLength:
    case ErrorCode::PlaintextTooLarge:
      return "envelope layer";
    case ErrorCode::BadPadding:
    case ErrorCode::KeyModeMismatch:
    case ErrorCode::WrongKeyLength:
    case ErrorCode::EmptyPassphrase:
    case ErrorCode::InvalidHex:
      return "cryptography layer";
    default:
      return "input";
  }
}

const char* category_of(ExitStatus status) {
  switch (status) {
    case ExitStatus::Success: return "success";
    case ExitStatus::Usage: return "usage error";
    case ExitStatus::Capacity: return "capacity error";
    case ExitStatus::Integrity: return "integrity error";
    case ExitStatus::Authentication: return "authentication error";
    case ExitStatus::Io: return "I/O error";
  }
  return "error";
}

struct SecretFlags {
  std::string passphrase;
  std::string key_hex;
  CLI::Option* passphrase_opt = nullptr;
  CLI::Option* key_hex_opt = nullptr;

  void attach(CLI::App* cmd) {
    passphrase_opt = cmd->add_option("--passphrase", passphrase,
                                     std::string("Passphrase for key derivation (or set ") +
                                         kPassphraseEnv + ")");
    key_hex_opt = cmd->add_option("--key-hex", key_hex, "Raw 3DES key: 48 hex digits (24 octets)");
    passphrase_opt->excludes(key_hex_opt);
  }

  Secret resolve(std::ostream& err) const {
    if (key_hex_opt->count() > 0) {
      Secret secret = Secret::raw_key(from_hex(key_hex));
      for (const std::string& w : tdes::key_warnings(tdes::split_key(secret.key_material()))) {
        err << "warning: " << w << '\n';
      }
      return secret;
    }
    if (passphrase_opt->count() > 0) return Secret::passphrase(passphrase);
    if (const char* env = std::getenv(kPassphraseEnv); env != nullptr) {
      return Secret::passphrase(env);
    }
    throw Error(ErrorCode::EmptyPassphrase,
                std::string("a secret is required: pass --passphrase, --key-hex or set ") + kPassphraseEnv);
  }
};

std::string fixed(double v, int precision) {
  if (std::isinf(v)) return "inf";
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << v;
  return s.str();
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int secure(const std::string& in, const std::string& cover_path, const std::string& out_path,
             const SecretFlags& flags, bool json) {
    const Secret secret = flags.resolve(err_);
    const Bytes record = read_file(in);
    const Image cover = load_image(cover_path);
    const SecureResult result = stegacrypt::secure(record, secret, cover);
    save_png(result.stego, out_path);
    if (json) {
      out_ << nlohmann::json{{"stego", out_path},
                             {"record_octets", record.size()},
                             {"payload_octets", result.payload_octets},
                             {"frame_octets", result.frame_octets},
                             {"capacity", result.capacity},
                             {"capacity_used_fraction", result.capacity_used_fraction},
                             {"metrics", to_json(result.metrics)}}
                  .dump(2)
           << '\n';
    } else {
      out_ << "stego image: " << out_path << '\n'
           << "record: " << record.size() << " octets\n"
           << "payload: " << result.payload_octets << " octets (frame " << result.frame_octets << ")\n"
           << "capacity: " << result.capacity << " octets ("
           << fixed(100.0 * result.capacity_used_fraction, 2) << "% used)\n"
           << to_text(result.metrics);
    }
    return 0;
  }

  int retrieve(const std::string& in, const std::string& out_path, const SecretFlags& flags, bool json) {
    const Secret secret = flags.resolve(err_);
    const Image stego = load_image(in);
    const Bytes record = stegacrypt::retrieve(stego, secret);
    write_file(out_path, record);
    if (json) {
      out_ << nlohmann::json{{"record", out_path}, {"octets", record.size()}}.dump(2) << '\n';
    } else {
      out_ << "record: " << out_path << " (" << record.size() << " octets)\n";
    }
    return 0;
  }

  int capacity(const std::string& cover_path, bool json) {
    const Image cover = load_image(cover_path);
    const std::size_t octets = lsb::capacity(cover);
    if (json) {
      out_ << nlohmann::json{{"capacity", octets},
                             {"width", cover.width()},
                             {"height", cover.height()},
                             {"channels", cover.channels()}}
                  .dump(2)
           << '\n';
    } else {
      out_ << octets << '\n';
    }
    return 0;
  }

  int metrics(const std::string& cover_path, const std::string& stego_path, bool json) {
    const MetricsReport report = compare_images(load_image(cover_path), load_image(stego_path));
    if (json) {
      out_ << to_json(report).dump(2) << '\n';
    } else {
      out_ << to_text(report);
    }
    return 0;
  }

  int compare(const std::string& in, const std::string& cover_path, const SecretFlags& flags,
              const CompareOptions& options, bool json) {
    const Secret secret = flags.resolve(err_);
    const Bytes record = read_file(in);
    const Image cover = load_image(cover_path);
    const CompareReport report = compare_report(record, secret, cover, options);
    if (json) {
      out_ << to_json(report).dump(2) << '\n';
    } else {
      out_ << to_text(report);
    }
    return 0;
  }

  // Reads the frame and envelope headers; needs no secret.
  int inspect(const std::string& in, bool json) {
    const Image stego = load_image(in);
    const Bytes payload = lsb::extract(stego);
    const Envelope env = decode(payload);
    const std::size_t capacity = lsb::capacity(stego);
    if (json) {
      out_ << nlohmann::json{{"frame_payload_octets", payload.size()},
                             {"capacity", capacity},
                             {"envelope_version", kEnvelopeVersion},
                             {"key_mode", env.passphrase_derived() ? "passphrase" : "raw-key"},
                             {"salt", to_hex(env.salt)},
                             {"iv", to_hex(env.iv)},
                             {"ciphertext_octets", env.ciphertext.size()},
                             {"crc32", env.crc32},
                             {"crc_ok", true}}
                  .dump(2)
           << '\n';
    } else {
      std::ostringstream crc;
      crc << std::hex << std::setw(8) << std::setfill('0') << env.crc32;
      out_ << "frame payload: " << payload.size() << " octets (capacity " << capacity << ")\n"
           << "envelope version: " << int{kEnvelopeVersion} << '\n'
           << "key mode: " << (env.passphrase_derived() ? "passphrase" : "raw-key") << '\n'
           << "salt: " << to_hex(env.salt) << '\n'
           << "iv: " << to_hex(env.iv) << '\n'
           << "ciphertext: " << env.ciphertext.size() << " octets\n"
           << "crc32: " << crc.str() << " (ok)\n";
    }
    return 0;
  }

  int fail(const Error& e, bool json) {
    const ExitStatus status = exit_status_for(e.code());
    err_ << "error: " << category_of(status) << " (" << layer_of(e.code()) << "): " << e.what() << '\n';
    if (json) {
      nlohmann::json j{{"error", to_string(e.code())},
                       {"category", category_of(status)},
                       {"layer", layer_of(e.code())},
                       {"message", e.what()},
                       {"exit_code", static_cast<int>(status)}};
      if (const auto* cap = dynamic_cast<const CapacityError*>(&e)) {
        j["required_octets"] = cap->required();
        j["available_octets"] = cap->available();
      }
      out_ << j.dump(2) << '\n';
    }
    return static_cast<int>(status);
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Encrypt records with 3DES and hide them in the LSBs of a lossless image"};
  app.name("stegacrypt");
  app.require_subcommand(1);
  app.footer(std::string("Exit codes: 0 ok, 1 usage, 2 capacity, 3 integrity, 4 wrong key, 5 I/O or format.\n") +
             "The passphrase may be supplied through " + kPassphraseEnv + "; --passphrase takes precedence.");

  bool json = false;
  std::string in, out_path, cover, stego;
  SecretFlags secret_flags;
  CompareOptions compare_options;
  std::string work_dir;

  CLI::App* secure = app.add_subcommand("secure", "Encrypt a record and embed it in a cover image");
  secure->add_option("--in", in, "Record to secure")->required();
  secure->add_option("--cover", cover, "Lossless cover image (PNG or BMP)")->required();
  secure->add_option("--out", out_path, "Stego image to write (PNG)")->required();
  secret_flags.attach(secure);
  secure->add_flag("--json", json, "Machine-readable output");

  SecretFlags retrieve_flags;
  CLI::App* retrieve = app.add_subcommand("retrieve", "Extract and decrypt a record from a stego image");
  retrieve->add_option("--in", in, "Stego image")->required();
  retrieve->add_option("--out", out_path, "Where to write the recovered record")->required();
  retrieve_flags.attach(retrieve);
  retrieve->add_flag("--json", json, "Machine-readable output");

  CLI::App* capacity = app.add_subcommand("capacity", "Print how many payload octets a cover holds");
  capacity->add_option("--cover", cover, "Cover image")->required();
  capacity->add_flag("--json", json, "Machine-readable output");

  CLI::App* metrics = app.add_subcommand("metrics", "Report MSE and PSNR between two images");
  metrics->add_option("--cover", cover, "Reference image")->required();
  metrics->add_option("--stego", stego, "Image to compare")->required();
  metrics->add_flag("--json", json, "Machine-readable output");

  SecretFlags compare_flags;
  CLI::App* compare = app.add_subcommand("compare", "Compare the combined method with 3DES alone and LSB alone");
  compare->add_option("--in", in, "Record")->required();
  compare->add_option("--cover", cover, "Cover image")->required();
  compare_flags.attach(compare);
  compare->add_option("--repetitions", compare_options.repetitions, "Timing repetitions (fastest kept)")
      ->check(CLI::PositiveNumber);
  compare->add_option("--work-dir", work_dir, "Keep the generated artifacts in this directory");
  compare->add_flag("--json", json, "Machine-readable output");

  CLI::App* inspect = app.add_subcommand("inspect", "Show the embedded frame and envelope headers");
  inspect->add_option("--in", in, "Stego image")->required();
  inspect->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitStatus::Usage);
  }

  Runner runner(out, err);
  try {
    if (secure->parsed()) return runner.secure(in, cover, out_path, secret_flags, json);
    if (retrieve->parsed()) return runner.retrieve(in, out_path, retrieve_flags, json);
    if (capacity->parsed()) return runner.capacity(cover, json);
    if (metrics->parsed()) return runner.metrics(cover, stego, json);
    if (compare->parsed()) {
      compare_options.work_dir = work_dir;
      return runner.compare(in, cover, compare_flags, compare_options, json);
    }
    if (inspect->parsed()) return runner.inspect(in, json);
  } catch (const Error& e) {
    return runner.fail(e, json);
  } catch (const std::filesystem::filesystem_error& e) {
    return runner.fail(Error(ErrorCode::Io, e.what()), json);
  }
  return static_cast<int>(ExitStatus::Usage);
}

}  // namespace stegacrypt::cli
