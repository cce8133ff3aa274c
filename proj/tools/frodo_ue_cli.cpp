// frodo-ue: key lifecycle, file encryption and update, and the checking harnesses.
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace frodo_ue::cli;
  CLI::App app{"Updatable encryption over FrodoPKE"};
  app.require_subcommand(1);
  int rc = kOk;

  auto* params = app.add_subcommand("params", "List or show registered parameter sets");
  params->require_subcommand(1);
  params->add_subcommand("list", "List parameter sets")->callback([&] { rc = cmd_params_list(std::cout, std::cerr); });
  std::string show_name;
  auto* show = params->add_subcommand("show", "Dump every constant of one parameter set");
  show->add_option("name", show_name, "Parameter set name")->required();
  show->callback([&] { rc = cmd_params_show(show_name, std::cout, std::cerr); });

  KeygenArgs kg;
  auto* keygen = app.add_subcommand("keygen", "Generate an epoch key");
  keygen->add_option("--params", kg.params, "Parameter set")->required();
  keygen->add_option("--epoch", kg.epoch, "Epoch index")->default_val(0);
  keygen->add_option("--seed", kg.seed_hex, "Hex seed for reproducible output (default: system entropy)");
  keygen->add_option("--matrix-from", kg.matrix_from, "Reuse the public matrix of this key or public-key file");
  keygen->add_option("--key-out", kg.key_out, "Secret key file")->required();
  keygen->add_option("--pub-out", kg.pub_out, "Public key file")->required();
  keygen->callback([&] { rc = cmd_keygen(kg, std::cout, std::cerr); });

  std::string key_file, in_file, out_file, token_file, pub_file;
  std::optional<std::string> seed;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a message file under an epoch key");
  encrypt->add_option("--key", key_file)->required();
  encrypt->add_option("--in", in_file, "Message bytes")->required();
  encrypt->add_option("--out", out_file)->required();
  encrypt->add_option("--seed", seed);
  encrypt->callback([&] { rc = cmd_encrypt(key_file, in_file, out_file, seed, std::cout, std::cerr); });

  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  decrypt->add_option("--key", key_file)->required();
  decrypt->add_option("--in", in_file, "Ciphertext file")->required();
  decrypt->add_option("--out", out_file, "Recovered message bytes")->required();
  decrypt->callback([&] { rc = cmd_decrypt(key_file, in_file, out_file, std::cout, std::cerr); });

  auto* token = app.add_subcommand("token", "Derive the update token from epoch e to e+1");
  token->add_option("--prev-key", key_file, "Secret key of epoch e")->required();
  token->add_option("--next-pub", pub_file, "Public key of epoch e+1")->required();
  token->add_option("--out", out_file)->required();
  token->add_option("--seed", seed);
  token->callback([&] { rc = cmd_token(key_file, pub_file, out_file, seed, std::cout, std::cerr); });

  auto* update = app.add_subcommand("update", "Move a ciphertext one epoch forward");
  update->add_option("--token", token_file)->required();
  update->add_option("--in", in_file, "Ciphertext file")->required();
  update->add_option("--out", out_file)->required();
  update->add_option("--seed", seed);
  update->callback([&] { rc = cmd_update(token_file, in_file, out_file, seed, std::cout, std::cerr); });

  std::string vb_params;
  std::uint64_t vb_T = 1;
  auto* verify = app.add_subcommand("verify-bound", "Evaluate the worst-case correctness bound");
  verify->add_option("--params", vb_params)->required();
  verify->add_option("-T,--epochs", vb_T, "Number of updates T")->required();
  verify->callback([&] { rc = cmd_verify_bound(vb_params, vb_T, std::cout, std::cerr); });

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time KG, Enc, Dec, TG and Upd");
  bench->add_option("--levels", ba.levels, "Values of n")->delimiter(',');
  bench->add_option("--modes", ba.modes, "aes and/or shake")->delimiter(',');
  bench->add_option("--runs", ba.runs, "Timed runs per operation")->default_val(100);
  bench->add_option("--out", ba.csv_out, "CSV output path");
  bench->add_option("--seed", ba.seed_hex);
  bench->callback([&] { rc = cmd_bench(ba, std::cout, std::cerr); });

  std::string script;
  auto* game = app.add_subcommand("game-run", "Run a JSON-lines security-game trace");
  game->add_option("--script", script)->required();
  game->callback([&] { rc = cmd_game_run(script, std::cout, std::cerr); });

  std::string hy_params = "toy-16";
  std::size_t hy_samples = 100000;
  auto* hybrids = app.add_subcommand("hybrids-test", "Compare real and hybrid update distributions");
  hybrids->add_option("--params", hy_params)->default_val("toy-16");
  hybrids->add_option("--samples", hy_samples)->default_val(100000);
  hybrids->add_option("--seed", seed);
  hybrids->callback([&] { rc = cmd_hybrids_test(hy_params, hy_samples, seed, std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  return rc;
}
