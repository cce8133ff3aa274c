#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "frodo_ue/error.hpp"

// Command implementations behind the frodo-ue binary. Each returns a process exit code and
// writes human-readable output to `out`, diagnostics to `err`.
namespace frodo_ue::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,        // any other error, or a self-check that did not pass
  kUsage = 2,          // bad flags or argument values
  kMalformed = 3,      // envelope or script could not be parsed
  kEpochMismatch = 4,
  kLengthMismatch = 5, // message does not fit the plaintext block
  kUnknownParams = 6,
  kIo = 7,
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

int cmd_params_list(std::ostream& out, std::ostream& err);
int cmd_params_show(const std::string& name, std::ostream& out, std::ostream& err);

struct KeygenArgs {
  std::string params;
  std::uint32_t epoch = 0;
  std::optional<std::string> seed_hex;
  /// Key or public-key file whose public matrix seed is reused. Required for epoch > 0.
  std::optional<std::string> matrix_from;
  std::string key_out;
  std::string pub_out;
};
int cmd_keygen(const KeygenArgs& args, std::ostream& out, std::ostream& err);

int cmd_encrypt(const std::string& key_file, const std::string& message_file, const std::string& out_file,
                const std::optional<std::string>& seed_hex, std::ostream& out, std::ostream& err);
int cmd_decrypt(const std::string& key_file, const std::string& ct_file, const std::string& out_file,
                std::ostream& out, std::ostream& err);
int cmd_token(const std::string& prev_key_file, const std::string& next_pub_file, const std::string& out_file,
              const std::optional<std::string>& seed_hex, std::ostream& out, std::ostream& err);
int cmd_update(const std::string& token_file, const std::string& ct_file, const std::string& out_file,
               const std::optional<std::string>& seed_hex, std::ostream& out, std::ostream& err);

int cmd_verify_bound(const std::string& params, std::uint64_t T, std::ostream& out, std::ostream& err);

struct BenchArgs {
  std::vector<std::uint32_t> levels{640, 976, 1344};
  std::vector<std::string> modes{"aes"};
  std::size_t runs = 100;
  std::optional<std::string> csv_out;
  std::optional<std::string> seed_hex;
};
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

int cmd_game_run(const std::string& script_file, std::ostream& out, std::ostream& err);

int cmd_hybrids_test(const std::string& params, std::size_t samples, const std::optional<std::string>& seed_hex,
                     std::ostream& out, std::ostream& err);

}  // namespace frodo_ue::cli
