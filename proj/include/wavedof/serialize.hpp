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

#ifndef WAVEDOF_SERIALIZE_HPP
#define WAVEDOF_SERIALIZE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wavedof/channel.hpp"
#include "wavedof/dofcore.hpp"
#include "wavedof/verify.hpp"

namespace wavedof {

/// Malformed input text (config files, CSV, JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* version();

// Config files are flat "key = value" text; '#' starts a comment. Keys are
// the ChannelConfig field names.
std::span<const std::string_view> config_keys();
void set_config_field(ChannelConfig& cfg, std::string_view key, double value);
double get_config_field(const ChannelConfig& cfg, std::string_view key);
ChannelConfig parse_config_text(std::string_view text, ChannelConfig base = {});
ChannelConfig load_config_file(const std::string& path, ChannelConfig base = {});
std::string config_to_text(const ChannelConfig& cfg);

/// Fixed-notation helpers shared by every CSV writer.
std::string format_csv_number(double v);   // 9 significant digits
std::string format_exact_number(double v); // 17 significant digits

std::string report_to_json(const DofReport& report, std::uint64_t seed);
std::string report_to_csv(const DofReport& report, std::uint64_t seed);

struct ParsedReportCsv {
  DofReport report;
  std::uint64_t seed = 0;
};
ParsedReportCsv parse_report_csv(std::string_view text);

std::string scatterers_to_json(const ScattererSet& s);
ScattererSet scatterers_from_json(std::string_view text);
std::string modal_spectrum_to_json(const ModalSpectrum& ms);
ModalSpectrum modal_spectrum_from_json(std::string_view text);

std::string campaign_to_json(const CampaignResult& result);
/// Human-readable table, one line per check.
std::string campaign_summary(const CampaignResult& result);

}  // namespace wavedof

#endif  // WAVEDOF_SERIALIZE_HPP
