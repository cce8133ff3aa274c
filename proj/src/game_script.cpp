#include "frodo_ue/game_script.hpp"

#include <map>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frodo_ue/envelope.hpp"
#include "frodo_ue/security_game.hpp"

namespace frodo_ue::game {
namespace {

using nlohmann::json;

std::string set_string(const EpochSet& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

class Runner {
 public:
  ScriptReport run(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      try {
        step(json::parse(line));
      } catch (const json::exception& e) {
        throw ScriptError("line " + std::to_string(lineno) + ": " + e.what());
      } catch (const ScriptError& e) {
        throw ScriptError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (!state_) throw ScriptError("script has no setup record");
    report_.leakage = state_->leakage();
    report_.starred = state_->starred_sets();
    report_.twf = state_->trivial_win();
    report_.b = state_->bit();
    const std::uint8_t answer = report_.adversary_bit.value_or(0);
    report_.returned_bit = report_.twf ? coin_->bit() : answer;
    return std::move(report_);
  }

 private:
  static const json& arg(const json& args, const char* key) {
    if (!args.contains(key)) throw ScriptError(std::string("missing argument '") + key + "'");
    return args.at(key);
  }

  const ue::Ciphertext& handle(const json& args) {
    const std::string name = arg(args, "ct").get<std::string>();
    auto it = handles_.find(name);
    if (it == handles_.end()) throw ScriptError("unknown ciphertext handle '" + name + "'");
    return it->second;
  }

  std::string name(const ue::Ciphertext& ct) {
    const std::string n = "c" + std::to_string(handles_.size() + 1);
    handles_.emplace(n, ct);
    return n + " (epoch " + std::to_string(ct.epoch) + ")";
  }

  Bits message(const json& args) {
    const Bytes raw = hex_decode(arg(args, "msg").get<std::string>());
    return envelope::message_to_bits(raw, state_->params());
  }

  void emit(const std::string& op, const std::string& out) { report_.lines.push_back(op + " -> " + out); }

  void step(const json& rec) {
    const std::string op = rec.at("op").get<std::string>();
    const json args = rec.contains("args") ? rec.at("args") : json::object();
    if (op == "setup") {
      if (state_) throw ScriptError("setup given twice");
      const ParamSet p = load_paramset(arg(args, "params").get<std::string>());
      RngHandle rng = args.contains("seed") ? RngHandle(hex_decode(args.at("seed").get<std::string>()))
                                            : RngHandle::from_entropy();
      const auto b = static_cast<std::uint8_t>(arg(args, "b").get<int>() & 1);
      const CcMode cc = cc_mode_from_string(args.value("cc", std::string("uni")));
      auto pub = pke::setup(rng, p);
      coin_ = std::make_unique<RngHandle>(rng.derive("game-script/coin"));
      state_ = std::make_unique<GameState>(rng.derive("game-script/oracles"), p, std::move(pub), b, cc);
      emit("setup", p.name + " b=" + std::to_string(b) + " cc=" + std::string(to_string(cc)));
      return;
    }
    if (!state_) throw ScriptError("first record must be setup");
    if (report_.adversary_bit) throw ScriptError("no oracle calls allowed after guess");
    GameState& g = *state_;
    if (op == "enc") {
      emit("enc", name(g.enc(message(args))));
    } else if (op == "next") {
      g.next();
      emit("next", "epoch " + std::to_string(g.epoch()));
    } else if (op == "upd") {
      auto ct = g.upd(handle(args));
      emit("upd", ct ? name(*ct) : "bottom");
    } else if (op == "corr") {
      const std::string inp = arg(args, "inp").get<std::string>();
      if (inp != "key" && inp != "token") throw ScriptError("corr inp must be key or token");
      const auto e = arg(args, "epoch").get<ue::Epoch>();
      auto got = g.corr(inp == "key" ? CorrInput::Key : CorrInput::Token, e);
      emit("corr", got ? inp + " " + std::to_string(e) : "bottom");
    } else if (op == "chall") {
      auto ct = g.chall(message(args), handle(args));
      emit("chall", ct ? name(*ct) : "bottom");
    } else if (op == "updc") {
      auto ct = g.upd_challenge();
      emit("updc", ct ? name(*ct) : "bottom");
    } else if (op == "dec") {
      auto m = g.dec(handle(args));
      emit("dec", m ? hex_encode(envelope::bits_to_message(*m, g.params())) : "bottom");
    } else if (op == "guess") {
      report_.adversary_bit = static_cast<std::uint8_t>(arg(args, "bit").get<int>() & 1);
      emit("guess", std::to_string(*report_.adversary_bit));
    } else {
      throw ScriptError("unknown op '" + op + "'");
    }
  }

  std::unique_ptr<GameState> state_;
  std::unique_ptr<RngHandle> coin_;
  std::map<std::string, ue::Ciphertext> handles_;
  ScriptReport report_;
};

}  // namespace

ScriptReport run_game_script(std::istream& in) { return Runner{}.run(in); }

std::string format_report(const ScriptReport& r) {
  std::ostringstream out;
  for (const auto& l : r.lines) out << l << "\n";
  out << "K  = " << set_string(r.leakage.K) << "\n";
  out << "T  = " << set_string(r.leakage.T) << "\n";
  out << "C  = " << set_string(r.leakage.C) << "\n";
  out << "K* = " << set_string(r.starred.K) << "\n";
  out << "T* = " << set_string(r.starred.T) << "\n";
  out << "C* = " << set_string(r.starred.C) << "\n";
  out << "twf = " << (r.twf ? 1 : 0) << "\n";
  out << "b = " << int{r.b} << ", returned b' = " << int{r.returned_bit};
  if (r.twf)
    out << " (coin flip)";
  else if (!r.adversary_bit)
    out << " (no guess, defaulted to 0)";
  out << "\nverdict: " << (r.twf ? "trivial win, answer replaced" : r.returned_bit == r.b ? "adversary wins" : "adversary loses")
      << "\n";
  return out.str();
}

}  // namespace frodo_ue::game
