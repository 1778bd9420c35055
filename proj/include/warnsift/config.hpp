#pragma once

// Flat key=value configuration mirroring ModelConfig. Blank lines and lines
// starting with '#' are ignored; unknown keys are errors.

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "warnsift/model.hpp"

namespace warnsift {

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T v{};
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || p != end) throw Error("config: bad value for '" + key + "': " + text);
  return v;
}

template <class T>
std::string format_number(T v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

/// Accessors for every config key, in the order they are written.
struct ConfigField {
  const char* key;
  std::function<void(ModelConfig&, const std::string&)> set;
  std::function<std::string(const ModelConfig&)> get;
};

template <class T>
ConfigField number_field(const char* key, T ModelConfig::*m) {
  return {key, [key, m](ModelConfig& c, const std::string& v) { c.*m = parse_number<T>(key, v); },
          [m](const ModelConfig& c) { return format_number(c.*m); }};
}

template <class T>
ConfigField length_field(const char* key, T ChannelLengths::*m) {
  return {key, [key, m](ModelConfig& c, const std::string& v) { c.lengths.*m = parse_number<T>(key, v); },
          [m](const ModelConfig& c) { return format_number(c.lengths.*m); }};
}

inline const std::vector<ConfigField>& config_fields() {
  static const std::vector<ConfigField> fields = {
      number_field("vocab_size", &ModelConfig::vocab_size),
      number_field("embed_dim", &ModelConfig::embed_dim),
      number_field("hidden_dim", &ModelConfig::hidden_dim),
      number_field("attr_dim", &ModelConfig::attr_dim),
      length_field("len_function", &ChannelLengths::function),
      length_field("len_field", &ChannelLengths::field),
      length_field("len_slice", &ChannelLengths::slice),
      length_field("len_message", &ChannelLengths::message),
      {"truncation",
       [](ModelConfig& c, const std::string& v) {
         if (v == "head") c.truncation = Truncation::Head;
         else if (v == "tail") c.truncation = Truncation::Tail;
         else throw Error("config: truncation must be head or tail, got " + v);
       },
       [](const ModelConfig& c) { return std::string(c.truncation == Truncation::Head ? "head" : "tail"); }},
      number_field("focal_alpha", &ModelConfig::focal_alpha),
      number_field("focal_gamma", &ModelConfig::focal_gamma),
      number_field("learning_rate", &ModelConfig::learning_rate),
      number_field("batch_size", &ModelConfig::batch_size),
      number_field("threshold", &ModelConfig::threshold),
      number_field("patience", &ModelConfig::patience),
      number_field("decay_factor", &ModelConfig::decay_factor),
      number_field("max_epochs", &ModelConfig::max_epochs),
      number_field("seed", &ModelConfig::seed),
  };
  return fields;
}

}  // namespace detail

/// Starts from the defaults and applies each key=value line.
inline ModelConfig parse_config(std::string_view text) {
  ModelConfig cfg;
  std::map<std::string, const detail::ConfigField*> by_key;
  for (const auto& f : detail::config_fields()) by_key[f.key] = &f;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("config: expected key=value", lineno, ParseError::Position::Line);
    const auto key = detail::trim(std::string_view(t).substr(0, eq));
    const auto value = detail::trim(std::string_view(t).substr(eq + 1));
    auto it = by_key.find(key);
    if (it == by_key.end()) throw ParseError("config: unknown key '" + key + "'", lineno, ParseError::Position::Line);
    it->second->set(cfg, value);
  }
  cfg.validate();
  return cfg;
}

inline ModelConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

/// Every key, one per line, with values that parse back exactly.
inline std::string format_config(const ModelConfig& cfg) {
  std::string out;
  for (const auto& f : detail::config_fields()) out += std::string(f.key) + "=" + f.get(cfg) + "\n";
  return out;
}

}  // namespace warnsift
