#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "frodo_ue/bench.hpp"
#include "frodo_ue/envelope.hpp"
#include "frodo_ue/game_script.hpp"
#include "frodo_ue/hybrids.hpp"
#include "frodo_ue/params.hpp"
#include "frodo_ue/ue.hpp"

namespace frodo_ue::cli {
namespace {

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return data;
}

void write_file(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("error while writing '" + path + "'");
}

RngHandle make_rng(const std::optional<std::string>& seed_hex) {
  if (!seed_hex) return RngHandle::from_entropy();
  Bytes seed;
  try {
    seed = hex_decode(*seed_hex);
  } catch (const Error& e) {
    throw UsageError(std::string("--seed: ") + e.what());
  }
  return RngHandle(seed);
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const MalformedEnvelope& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const game::ScriptError& e) {
    err << "malformed script: " << e.what() << "\n";
    return kMalformed;
  } catch (const EpochMismatch& e) {
    err << "epoch mismatch: " << e.what() << "\n";
    return kEpochMismatch;
  } catch (const LengthMismatch& e) {
    err << "length mismatch: " << e.what() << "\n";
    return kLengthMismatch;
  } catch (const UnknownParamSet& e) {
    err << e.what() << "\n";
    return kUnknownParams;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

void require_same_params(const ParamSet& a, const ParamSet& b, const char* what) {
  if (a.id != b.id) throw MalformedEnvelope(std::string(what) + ": parameter sets differ (" + a.name + " vs " + b.name + ")");
}

}  // namespace

int cmd_params_list(std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-18s %6s %3s %2s %5s %4s %4s %3s %5s\n", "name", "id", "D", "B", "n", "m", "nb",
                  "s", "mode");
    out << buf;
    for (const auto& p : registered_paramsets()) {
      std::snprintf(buf, sizeof buf, "%-18s 0x%04x %3u %2u %5u %4u %4u %3u %5s\n", p.name.c_str(), p.id, p.D, p.B,
                    p.n, p.m_bar, p.n_bar, p.s, std::string(to_string(p.gen_mode)).c_str());
      out << buf;
    }
    return kOk;
  });
}

int cmd_params_show(const std::string& name, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << dump_paramset(load_paramset(name));
    return kOk;
  });
}

int cmd_keygen(const KeygenArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ParamSet& p = load_paramset(args.params);
    RngHandle rng = make_rng(args.seed_hex);
    pke::PublicParams pub;
    if (args.matrix_from) {
      const Bytes file = read_file(*args.matrix_from);
      const auto h = envelope::read_header(file);
      Bytes seed;
      ParamSet fp;
      if (h.kind == envelope::Kind::EpochKey) {
        auto k = envelope::read_epoch_key(file);
        seed = std::move(k.a_seed);
        fp = k.params;
      } else if (h.kind == envelope::Kind::PublicKey) {
        auto k = envelope::read_public_key(file);
        seed = std::move(k.a_seed);
        fp = k.params;
      } else {
        throw MalformedEnvelope("--matrix-from needs a key or public-key file");
      }
      require_same_params(p, fp, "--matrix-from");
      pub = pke::setup_from_seed(std::move(seed), p);
    } else {
      if (args.epoch != 0) throw UsageError("keys past epoch 0 must share the public matrix: pass --matrix-from");
      pub = pke::setup(rng, p);
    }
    const ue::EpochKey key = ue::keygen(rng, p, pub, args.epoch);
    write_file(args.key_out, envelope::write_epoch_key(p, key, pub.a_seed));
    write_file(args.pub_out, envelope::write_public_key(p, key.epoch, key.pk_B, pub.a_seed));
    out << "epoch " << key.epoch << " key for " << p.name << " written to " << args.key_out << " and " << args.pub_out
        << "\n";
    return kOk;
  });
}

int cmd_encrypt(const std::string& key_file, const std::string& message_file, const std::string& out_file,
                const std::optional<std::string>& seed_hex, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto k = envelope::read_epoch_key(read_file(key_file));
    const Bytes msg = read_file(message_file);
    const Bits bits = envelope::message_to_bits(msg, k.params);
    RngHandle rng = make_rng(seed_hex);
    const auto pub = pke::setup_from_seed(k.a_seed, k.params);
    const ue::Ciphertext ct = ue::encrypt(rng, k.params, pub.A, k.key, bits);
    write_file(out_file, envelope::write_ciphertext(k.params, ct));
    out << msg.size() << " bytes encrypted at epoch " << ct.epoch << "\n";
    return kOk;
  });
}

int cmd_decrypt(const std::string& key_file, const std::string& ct_file, const std::string& out_file,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto k = envelope::read_epoch_key(read_file(key_file));
    const auto c = envelope::read_ciphertext(read_file(ct_file));
    require_same_params(k.params, c.params, "decrypt");
    const Bytes msg = envelope::bits_to_message(ue::decrypt(k.params, k.key, c.ct), k.params);
    write_file(out_file, msg);
    out << msg.size() << " bytes recovered from epoch " << c.ct.epoch << "\n";
    return kOk;
  });
}

int cmd_token(const std::string& prev_key_file, const std::string& next_pub_file, const std::string& out_file,
              const std::optional<std::string>& seed_hex, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto prev = envelope::read_epoch_key(read_file(prev_key_file));
    const auto next = envelope::read_public_key(read_file(next_pub_file));
    require_same_params(prev.params, next.params, "token");
    if (prev.a_seed != next.a_seed) throw MalformedEnvelope("token: keys use different public matrices");
    if (next.epoch != prev.key.epoch + 1)
      throw EpochMismatch("next public key is for epoch " + std::to_string(next.epoch) + ", expected " +
                          std::to_string(prev.key.epoch + 1));
    RngHandle rng = make_rng(seed_hex);
    const auto pub = pke::setup_from_seed(prev.a_seed, prev.params);
    const auto tok = ue::token_gen(rng, prev.params, pub.A, prev.key.sk_S, next.pk_B, next.epoch);
    write_file(out_file, envelope::write_token(prev.params, tok));
    out << "token " << prev.key.epoch << " -> " << tok.epoch << " written to " << out_file << "\n";
    return kOk;
  });
}

int cmd_update(const std::string& token_file, const std::string& ct_file, const std::string& out_file,
               const std::optional<std::string>& seed_hex, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto t = envelope::read_token(read_file(token_file));
    const auto c = envelope::read_ciphertext(read_file(ct_file));
    require_same_params(t.params, c.params, "update");
    RngHandle rng = make_rng(seed_hex);
    const ue::Ciphertext next = ue::update(rng, t.params, t.token, c.ct);
    write_file(out_file, envelope::write_ciphertext(t.params, next));
    out << "ciphertext moved from epoch " << c.ct.epoch << " to " << next.epoch << "\n";
    return kOk;
  });
}

int cmd_verify_bound(const std::string& params, std::uint64_t T, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (T == 0) throw UsageError("T must be at least 1");
    const ParamSet& p = load_paramset(params);
    const auto b = correctness_bound(p, T);
    const auto flags = correctness_flags(p, T);
    out << "parameter set: " << p.name << "\n";
    out << "T: " << T << "\n";
    out << "lhs: 2(n^2 D s^3 + n^2 s^3) + nDs + ns^2 = " << b.lhs << "\n";
    out << "rhs: q / (T 2^(B+1)) = " << b.rhs_numerator << " / " << b.rhs_denominator << "\n";
    out << "bound: " << (flags.bound_certified ? "certified" : "not certified") << "\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6g", estimated_noise_stddev(p, T));
    out << "empirical: " << (flags.empirical ? "plausible" : "not plausible") << " (estimated noise sd " << buf
        << ", budget " << (p.q() >> (p.B + 1)) << ")\n";
    return kOk;
  });
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.runs == 0) throw UsageError("--runs must be at least 1");
    std::vector<GenMode> modes;
    for (const auto& m : args.modes) {
      try {
        modes.push_back(gen_mode_from_string(m));
      } catch (const Error&) {
        throw UnknownParamSet("mode " + m);
      }
    }
    for (auto level : args.levels) {
      for (auto mode : modes) (void)paramset_for_level(level, mode);
    }
    RngHandle rng = make_rng(args.seed_hex);
    const auto report = bench::run_bench(args.levels, modes, args.runs, rng);
    out << bench::to_table(report);
    if (args.csv_out) {
      const std::string csv = bench::to_csv(report);
      write_file(*args.csv_out, Bytes(csv.begin(), csv.end()));
    }
    return kOk;
  });
}

int cmd_game_run(const std::string& script_file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Bytes raw = read_file(script_file);
    std::istringstream in(std::string(raw.begin(), raw.end()));
    out << game::format_report(game::run_game_script(in));
    return kOk;
  });
}

int cmd_hybrids_test(const std::string& params, std::size_t samples, const std::optional<std::string>& seed_hex,
                     std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (samples == 0) throw UsageError("--samples must be at least 1");
    const ParamSet& p = load_paramset(params);
    RngHandle rng = make_rng(seed_hex);
    const std::size_t trials = std::min<std::size_t>(samples, 1000);
    const auto r = hybrids::compare_update_distributions(rng, p, samples, trials);
    // The smudging gap (about 5e-4) must stand out from sampling noise, which needs far more
    // draws than the update comparison.
    const std::size_t smudge_samples = std::max<std::size_t>(samples, 10000000);
    const auto s = hybrids::smudging_demo(rng, 1, 1024, smudge_samples);
    char buf[160];
    out << "parameter set: " << p.name << ", samples: " << samples << "\n";
    out << "decrypt after real update:   " << r.real_decrypts << "/" << r.trials << "\n";
    out << "decrypt after hybrid update: " << r.hybrid_decrypts << "/" << r.trials << "\n";
    bool ok = r.real_decrypts == r.trials && r.hybrid_decrypts == r.trials;
    auto line = [&](const char* what, const hybrids::DistanceEstimate& d, const hybrids::DistanceEstimate& base) {
      const bool within = d.value() <= 3 * base.value();
      ok = ok && within;
      std::snprintf(buf, sizeof buf, "%-28s %.6f (baseline %.6f) %s\n", what, d.value(), base.value(),
                    within ? "within 3x baseline" : "ABOVE 3x baseline");
      out << buf;
    };
    line("real vs hybrid, C2[0][0]:", r.real_vs_hybrid_c2, r.baseline_c2);
    line("real vs hybrid, C1[0][0]:", r.real_vs_hybrid_c1, r.baseline_c1);
    const bool smudged = s.estimate <= 1.0 / 512 + s.baseline;
    ok = ok && smudged;
    const std::string label = "smudging e1=1, B2=1024, N=" + std::to_string(smudge_samples) + ":";
    std::snprintf(buf, sizeof buf, "%s %.6f (baseline %.6f, analytic %.6f) %s\n", label.c_str(), s.estimate,
                  s.baseline, s.analytic, smudged ? "ok" : "FAIL");
    out << buf;
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
    return ok ? kOk : kFailure;
  });
}

}  // namespace frodo_ue::cli
