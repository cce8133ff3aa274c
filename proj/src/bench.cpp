#include "frodo_ue/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "frodo_ue/error.hpp"
#include "frodo_ue/frodo_pke.hpp"
#include "frodo_ue/ue.hpp"

namespace frodo_ue::bench {

std::string_view to_string(Op op) {
  switch (op) {
    case Op::KeyGen: return "KG";
    case Op::Enc: return "Enc";
    case Op::Dec: return "Dec";
    case Op::TokenGen: return "TG";
    case Op::Update: return "Upd";
  }
  return "?";
}

const BenchRow& BenchReport::find(std::uint32_t level, GenMode mode, Op op) const {
  for (const auto& r : rows)
    if (r.level == level && r.mode == mode && r.op == op) return r;
  throw Error("no benchmark row for level " + std::to_string(level) + " " + std::string(frodo_ue::to_string(mode)) +
              " " + std::string(to_string(op)));
}

Summary summarize(std::span<const double> seconds) {
  if (seconds.empty()) throw Error("cannot summarize zero runs");
  Summary s;
  for (double x : seconds) s.mean += x;
  s.mean /= static_cast<double>(seconds.size());
  if (seconds.size() > 1) {
    double acc = 0;
    for (double x : seconds) acc += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(acc / static_cast<double>(seconds.size() - 1));
  }
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_once(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Keeps results observable so the calls are not elided.
template <class T>
void keep(const T& v) {
  asm volatile("" : : "r"(&v) : "memory");
}

}  // namespace

BenchReport run_bench(std::span<const std::uint32_t> levels, std::span<const GenMode> modes, std::size_t runs,
                      RngHandle& rng) {
  if (runs == 0) throw Error("benchmark needs at least one run");
  BenchReport report;
  for (std::uint32_t level : levels) {
    for (GenMode mode : modes) {
      const ParamSet& p = paramset_for_level(level, mode);
      const auto pub = pke::setup(rng, p);
      const ue::EpochKey k0 = ue::keygen(rng, p, pub, 0);
      const ue::EpochKey k1 = ue::keygen(rng, p, pub, 1);
      const Bits m = random_message(rng, p);
      const ue::Ciphertext ct = ue::encrypt(rng, p, pub.A, k0, m);
      const ue::UpdateToken tok = ue::token_gen(rng, p, pub.A, k0.sk_S, k1.pk_B, 1);

      for (Op op : kAllOps) {
        auto call = [&] {
          switch (op) {
            case Op::KeyGen: keep(ue::keygen(rng, p, pub, 0)); break;
            case Op::Enc: keep(ue::encrypt(rng, p, pub.A, k0, m)); break;
            case Op::Dec: keep(ue::decrypt(p, k0, ct)); break;
            case Op::TokenGen: keep(ue::token_gen(rng, p, pub.A, k0.sk_S, k1.pk_B, 1)); break;
            case Op::Update: keep(ue::update(rng, p, tok, ct)); break;
          }
        };
        call();  // warm-up
        std::vector<double> samples;
        samples.reserve(runs);
        for (std::size_t i = 0; i < runs; ++i) samples.push_back(time_once(call));
        const Summary s = summarize(samples);
        report.rows.push_back({level, mode, op, runs, s.mean, s.std});
      }
    }
  }
  return report;
}

std::string to_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "level,mode,op,runs,mean_s,std_s\n";
  char buf[64];
  for (const auto& r : report.rows) {
    out << r.level << ',' << frodo_ue::to_string(r.mode) << ',' << to_string(r.op) << ',' << r.runs << ',';
    std::snprintf(buf, sizeof buf, "%.9g,%.9g", r.mean_s, r.std_s);
    out << buf << '\n';
  }
  return out.str();
}

std::string to_table(const BenchReport& report) {
  std::ostringstream out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-12s %-6s", "level", "mode");
  out << buf;
  for (Op op : kAllOps) {
    std::snprintf(buf, sizeof buf, " %22s", (std::string(to_string(op)) + " mean/std (s)").c_str());
    out << buf;
  }
  out << '\n';
  std::vector<std::pair<std::uint32_t, GenMode>> seen;
  for (const auto& r : report.rows) {
    const std::pair key{r.level, r.mode};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    std::snprintf(buf, sizeof buf, "%-12s %-6s", ("frodo-" + std::to_string(r.level)).c_str(),
                  std::string(frodo_ue::to_string(r.mode)).c_str());
    out << buf;
    for (Op op : kAllOps) {
      const BenchRow& row = report.find(r.level, r.mode, op);
      std::snprintf(buf, sizeof buf, " %11.6f/%-10.6f", row.mean_s, row.std_s);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace frodo_ue::bench
