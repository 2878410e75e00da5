// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The wavedof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wavedof/serialize.hpp"

#ifndef WAVEDOF_VERSION_STRING
#define WAVEDOF_VERSION_STRING "0.0.0"
#endif

namespace wavedof {

namespace {

constexpr std::array<std::string_view, 8> kKeys = {
    "f0", "half_bw", "radius", "obs_time", "wave_speed", "noise_var", "p_max", "gamma"};

double ChannelConfig::*field_for(std::string_view key) {
  if (key == "f0") return &ChannelConfig::f0;
  if (key == "half_bw") return &ChannelConfig::half_bw;
  if (key == "radius") return &ChannelConfig::radius;
  if (key == "obs_time") return &ChannelConfig::obs_time;
  if (key == "wave_speed") return &ChannelConfig::wave_speed;
  if (key == "noise_var") return &ChannelConfig::noise_var;
  if (key == "p_max") return &ChannelConfig::p_max;
  if (key == "gamma") return &ChannelConfig::gamma;
  throw ParseError("unknown config key '" + std::string(key) + "'");
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_with(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

}  // namespace

const char* version() { return WAVEDOF_VERSION_STRING; }

std::span<const std::string_view> config_keys() { return kKeys; }

void set_config_field(ChannelConfig& cfg, std::string_view key, double value) {
  cfg.*field_for(key) = value;
}

double get_config_field(const ChannelConfig& cfg, std::string_view key) {
  return cfg.*field_for(key);
}

ChannelConfig parse_config_text(std::string_view text, ChannelConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view raw = trim(line.substr(eq + 1));
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
      throw ParseError("config line " + std::to_string(line_no) + ": '" + std::string(raw) +
                       "' is not a number");
    }
    try {
      set_config_field(base, key, value);
    } catch (const ParseError& e) {
      throw ParseError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

ChannelConfig load_config_file(const std::string& path, ChannelConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), base);
}

std::string config_to_text(const ChannelConfig& cfg) {
  std::string out;
  for (auto key : kKeys) {
    out += std::string(key) + " = " + format_exact_number(get_config_field(cfg, key)) + "\n";
  }
  return out;
}

std::string format_csv_number(double v) { return format_with("%.9g", v); }

std::string format_exact_number(double v) { return format_with("%.17g", v); }

}  // namespace wavedof
