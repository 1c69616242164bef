// SPDX-License-Identifier: Apache-2.0
//
// croqam - conjugate-root OQAM multicarrier waveform simulation library
// Copyright (C) 2026 The croqam authors
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
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "croqam/psd.hpp"
#include "croqam/ser.hpp"

namespace croqam::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Thrown for malformed configuration documents or command lines.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Resolved key-value settings grouped by section. Every key known to the
/// schema is present; values are kept as text and parsed on access.
class Settings {
 public:
  /// Schema defaults for every section and key.
  static Settings defaults();
  /// Defaults overlaid with an INI document; unknown sections or keys throw.
  static Settings from_file(const std::filesystem::path& path);
  static Settings from_string(const std::string& ini);

  void set(const std::string& section, const std::string& key, const std::string& value);
  const std::string& text(const std::string& section, const std::string& key) const;

  int integer(const std::string& section, const std::string& key) const;
  std::uint64_t u64(const std::string& section, const std::string& key) const;
  double real(const std::string& section, const std::string& key) const;
  bool boolean(const std::string& section, const std::string& key) const;
  std::vector<std::string> list(const std::string& section, const std::string& key) const;
  /// Comma list of numbers or inclusive ranges "start:stop:step".
  std::vector<double> grid(const std::string& section, const std::string& key) const;

  /// INI text in schema order (the manifest format).
  std::string to_ini() const;

 private:
  void overlay(const std::string& ini, const std::string& origin);
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> sections_;
};

/// Command-line overrides applied on top of the file settings.
struct Overrides {
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> workers;
};

void apply(Settings& settings, const std::string& command, const Overrides& overrides);

std::filesystem::path output_dir(const Settings& settings);
void write_manifest(const Settings& settings, const std::filesystem::path& dir);

/// CSV number format: shortest text that round-trips exactly.
std::string format_number(double value);

int cmd_verify(const Settings& settings, std::ostream& log);
int cmd_ser(const Settings& settings, std::ostream& log);
int cmd_psd(const Settings& settings, std::ostream& log);
int cmd_filter_dump(const Settings& settings, std::ostream& log);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace croqam::cli
