#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eprgame/game.hpp"

namespace eprgame::config {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Angle tokens: a number (radians), a number with "deg" suffix, or the
// shorthands pi, -pi, pi/2, -pi/2, pi/4, -pi/4.
inline double parse_angle(const std::string& token) {
  static const std::map<std::string, double> named = {
      {"pi", epr::kPi},           {"-pi", -epr::kPi},
      {"pi/2", epr::kPi / 2.0},   {"-pi/2", -epr::kPi / 2.0},
      {"pi/4", epr::kPi / 4.0},   {"-pi/4", -epr::kPi / 4.0}};
  if (const auto it = named.find(token); it != named.end()) return it->second;

  std::string body = token;
  double scale = 1.0;
  if (body.size() > 3 && body.substr(body.size() - 3) == "deg") {
    body = body.substr(0, body.size() - 3);
    scale = epr::kPi / 180.0;
  }
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(body, &pos);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse angle token '" + token + "'");
  }
  if (pos != body.size()) {
    throw ConfigError("trailing characters in angle token '" + token + "'");
  }
  return scale * value;
}

inline double parse_number(const std::string& token, const std::string& key) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &pos);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse number for key '" + key + "': '" + token + "'");
  }
  if (pos != token.size()) {
    throw ConfigError("trailing characters for key '" + key + "': '" + token + "'");
  }
  return value;
}

inline std::vector<std::string> split(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

/// Named presets from the worked examples.
inline game_theory::GameSetup preset(std::string_view name) {
  game_theory::GameSetup setup;
  setup.params = game_theory::embedding_solver().config(0.0);
  if (name == "pd-paper") {
    setup.payoffs = game_theory::PayoffMatrix{3.0, 0.0, 4.0, 2.0};
  } else if (name == "sh-paper") {
    setup.payoffs = game_theory::PayoffMatrix{10.0, 0.0, 8.0, 7.0};
  } else {
    throw ConfigError("unknown preset '" + std::string(name) +
                      "' (expected pd-paper or sh-paper)");
  }
  return setup;
}

/// Parses the flat sectioned key-value config format:
///
///   [payoffs]          # required: g00 g01 g10 g11; optional h## must be G^T
///   g00 = 3
///   [alice]            # optional; defaults to the canonical embedding
///   angles = 0 0 0     # Euler triple
///   directions = 0 pi
///   [bob]              # same keys as [alice]
///   [game]
///   gamma = pi/2       # entanglement angle
///
/// '#' starts a comment; angles take an optional "deg" suffix.
inline game_theory::GameSetup parse(std::istream& in) {
  game_theory::GameSetup setup;
  setup.params = game_theory::embedding_solver().config(0.0);

  bool have_payoffs[4] = {false, false, false, false};
  double h[4];
  bool have_h[4] = {false, false, false, false};

  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header" + where);
      section = detail::trim(line.substr(1, line.size() - 2));
      if (section != "payoffs" && section != "alice" && section != "bob" &&
          section != "game") {
        throw ConfigError("unknown section '" + section + "'" + where);
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'" + where);
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (section.empty()) throw ConfigError("key outside any section" + where);

    if (section == "payoffs") {
      static const std::map<std::string, int> gkeys = {
          {"g00", 0}, {"g01", 1}, {"g10", 2}, {"g11", 3}};
      static const std::map<std::string, int> hkeys = {
          {"h00", 0}, {"h01", 1}, {"h10", 2}, {"h11", 3}};
      if (const auto it = gkeys.find(key); it != gkeys.end()) {
        double* slots[4] = {&setup.payoffs.g00, &setup.payoffs.g01,
                            &setup.payoffs.g10, &setup.payoffs.g11};
        *slots[it->second] = detail::parse_number(value, key);
        have_payoffs[it->second] = true;
      } else if (const auto ih = hkeys.find(key); ih != hkeys.end()) {
        h[ih->second] = detail::parse_number(value, key);
        have_h[ih->second] = true;
      } else {
        throw ConfigError("unknown payoff key '" + key + "'" + where);
      }
    } else if (section == "alice" || section == "bob") {
      epr::PlayerParams& p = (section == "alice") ? setup.params.alice : setup.params.bob;
      epr::DirectionPair& d =
          (section == "alice") ? setup.params.alice_dirs : setup.params.bob_dirs;
      const auto tokens = detail::split(value);
      if (key == "angles") {
        if (tokens.size() != 3) throw ConfigError("angles needs 3 values" + where);
        p.e1 = detail::parse_angle(tokens[0]);
        p.e2 = detail::parse_angle(tokens[1]);
        p.e3 = detail::parse_angle(tokens[2]);
      } else if (key == "directions") {
        if (tokens.size() != 2) throw ConfigError("directions needs 2 values" + where);
        d.k1 = detail::parse_angle(tokens[0]);
        d.k2 = detail::parse_angle(tokens[1]);
      } else {
        throw ConfigError("unknown key '" + key + "' in [" + section + "]" + where);
      }
    } else {  // game
      if (key == "gamma") {
        setup.params.gamma = detail::parse_angle(value);
      } else {
        throw ConfigError("unknown key '" + key + "' in [game]" + where);
      }
    }
  }

  for (bool b : have_payoffs) {
    if (!b) throw ConfigError("payoff matrix incomplete: need g00, g01, g10, g11");
  }
  // Optional Bob entries must describe the transposed matrix (symmetric game).
  const double g[4] = {setup.payoffs.g00, setup.payoffs.g01, setup.payoffs.g10,
                       setup.payoffs.g11};
  const int transpose[4] = {0, 2, 1, 3};
  for (int k = 0; k < 4; ++k) {
    if (have_h[k] && h[k] != g[transpose[k]]) {
      throw ConfigError("asymmetric game rejected: h-entries must equal the "
                        "transpose of the g-matrix");
    }
  }
  ga::require_entanglement_range(setup.params.gamma);
  return setup;
}

inline game_theory::GameSetup load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse(in);
}

}  // namespace eprgame::config
