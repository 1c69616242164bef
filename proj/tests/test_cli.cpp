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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

using namespace croqam;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / fs::path("croqam_cli_" + std::to_string(::getpid()) + "_" +
                                                std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "croqam");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string read(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::map<std::string, std::string> csv_files(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".csv") out[e.path().filename().string()] = read(e.path());
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

const char* kSmallSystem =
    "[gfdm]\nsubcarriers = 16\nsubsymbols = 5\ncp_length = 8\npdp_length = 8\n";

}  // namespace

TEST_SUITE("cli_runner") {

TEST_CASE("settings: defaults, overlay and validation") {
  const auto s = cli::Settings::from_string("[ser]\ntrials = 7\nsnr_db = 0:4:2, 7\n; comment\n");
  CHECK(s.integer("ser", "trials") == 7);
  CHECK(s.grid("ser", "snr_db") == std::vector<double>{0.0, 2.0, 4.0, 7.0});
  CHECK(s.integer("gfdm", "subcarriers") == 64);
  CHECK(s.list("ser", "configs").size() == 6);
  CHECK_THROWS_AS(cli::Settings::from_string("[ser]\ntrails = 7\n"), cli::ConfigError);
  CHECK_THROWS_AS(cli::Settings::from_string("[sers]\ntrials = 7\n"), cli::ConfigError);
  CHECK_THROWS_AS(cli::Settings::from_string("trials = 7\n"), cli::ConfigError);
  CHECK_THROWS_AS(cli::Settings::from_string("[ser]\ntrials = 1\ntrials = 2\n"), cli::ConfigError);
  const auto bad = cli::Settings::from_string("[ser]\ntrials = many\nsnr_db = 4:0:1\ntheory = maybe\n");
  CHECK_THROWS_AS(bad.integer("ser", "trials"), cli::ConfigError);
  CHECK_THROWS_AS(bad.grid("ser", "snr_db"), cli::ConfigError);
  CHECK_THROWS_AS(bad.boolean("ser", "theory"), cli::ConfigError);
  // manifest text parses back to the same settings
  CHECK(cli::Settings::from_string(s.to_ini()).to_ini() == s.to_ini());
  CHECK(cli::format_number(0.1) == "0.1");
  CHECK(cli::format_number(-0.0) == "0");
  CHECK(std::stod(cli::format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("usage errors exit with code 2") {
  TempDir t;
  CHECK(run_cli({}).code == cli::kUsageError);
  CHECK(run_cli({"frobnicate"}).code == cli::kUsageError);
  const auto missing = run_cli({"verify", "--config", (t.path / "nope.cfg").string()});
  CHECK(missing.code == cli::kUsageError);
  CHECK(missing.err.find("nope.cfg") != std::string::npos);
  write(t.path / "bad.cfg", "[verify]\nbogus = 1\n");
  const auto bad = run_cli({"verify", "--config", (t.path / "bad.cfg").string(), "--out", t.path.string()});
  CHECK(bad.code == cli::kUsageError);
  CHECK(bad.err.find("bogus") != std::string::npos);
  CHECK(run_cli({"ser", "--trials", "0", "--out", t.path.string()}).code == cli::kUsageError);
  write(t.path / "ids.cfg", "[ser]\nconfigs = QAM-MF\ntrials = 1\n");
  CHECK(run_cli({"ser", "--config", (t.path / "ids.cfg").string(), "--out", (t.path / "o").string()}).code ==
        cli::kUsageError);
  CHECK(run_cli({"verify", "--help"}).code == cli::kOk);
}

TEST_CASE("verify: defaults pass, mismatched pair is flagged") {
  TempDir t;
  const auto ok = run_cli({"verify", "--out", t.path.string()});
  CHECK(ok.code == cli::kOk);
  const auto ortho = parse_csv(read(t.path / "orthogonality.csv"));
  REQUIRE(ortho.size() == 5);
  CHECK(ortho[0] == std::vector<std::string>{"filter", "alpha", "phase_mode", "max_violation"});
  const auto modems = parse_csv(read(t.path / "modems.csv"));
  REQUIRE(modems.size() == 4);
  CHECK(modems[0][0] == "K");
  CHECK(modems[1][2] == "RC");
  CHECK(std::abs(std::stod(modems[1][6]) - 0.8) < 0.1);
  CHECK(fs::exists(t.path / "manifest.cfg"));

  TempDir m;
  write(m.path / "mis.cfg", "[verify]\northogonality = CRRC:1:CONVENTIONAL, CRRC:1:CR\nmodems = CROQAM-MF\npayloads = 2\n");
  const auto bad = run_cli({"verify", "--config", (m.path / "mis.cfg").string(), "--out", (m.path / "o").string()});
  CHECK(bad.code == cli::kCheckFailed);
  CHECK(bad.out.find("FAIL orthogonality CRRC:1:CONVENTIONAL") != std::string::npos);
  const auto checks = parse_csv(read(m.path / "o" / "checks.csv"));
  CHECK(checks[1][4] == "FAIL");
  CHECK(checks[2][4] == "PASS");
}

TEST_CASE("ser: file set, determinism across runs and workers, manifest round trip") {
  TempDir t;
  write(t.path / "s.cfg", std::string(kSmallSystem) + "[ser]\nsnr_db = 0:20:10\ntrials = 12\n");
  const std::string cfg = (t.path / "s.cfg").string();
  const fs::path a = t.path / "a";
  const fs::path b = t.path / "b";
  const fs::path c = t.path / "c";
  REQUIRE(run_cli({"ser", "--config", cfg, "--out", a.string(), "--workers", "1"}).code == cli::kOk);
  REQUIRE(run_cli({"ser", "--config", cfg, "--out", b.string(), "--workers", "8"}).code == cli::kOk);
  const auto fa = csv_files(a);
  CHECK(fa.size() == 6 + 6 + 2);
  CHECK(fa.count("ser_CROQAM-MF-TRSTC-theory.csv") == 1);
  CHECK(fa == csv_files(b));
  const auto rows = parse_csv(fa.at("ser_QAM-ZF.csv"));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"config_id", "snr_db", "ser", "errors", "decisions", "trials", "flag"});
  CHECK(rows[1][4] == "960");
  CHECK(parse_csv(fa.at("ser_all.csv")).size() == 1 + 12 * 3);
  CHECK(parse_csv(fa.at("ser_QAM-ZF-theory.csv"))[1][6] == "theory");

  // manifest carries the resolved settings, including the worker override
  REQUIRE(run_cli({"ser", "--config", (b / "manifest.cfg").string(), "--out", c.string()}).code == cli::kOk);
  CHECK(csv_files(c) == fa);
  CHECK(cli::Settings::from_file(b / "manifest.cfg").integer("run", "workers") == 8);

  // a different seed changes the results
  REQUIRE(run_cli({"ser", "--config", cfg, "--out", c.string(), "--seed", "99"}).code == cli::kOk);
  CHECK(csv_files(c).at("ser_QAM-ZF.csv") != fa.at("ser_QAM-ZF.csv"));
  // a manifest written for another subcommand is refused
  CHECK(run_cli({"psd", "--config", (a / "manifest.cfg").string(), "--out", c.string()}).code == cli::kUsageError);
}

TEST_CASE("psd: outputs, guard effect and window errors") {
  TempDir t;
  write(t.path / "g1.cfg", "[psd]\nblocks = 100\nguard_subsymbols = 1\n");
  write(t.path / "g0.cfg", "[psd]\nblocks = 100\nguard_subsymbols = 0\n");
  REQUIRE(run_cli({"psd", "--config", (t.path / "g1.cfg").string(), "--out", (t.path / "g1").string()}).code ==
          cli::kOk);
  REQUIRE(run_cli({"psd", "--config", (t.path / "g0.cfg").string(), "--out", (t.path / "g0").string()}).code ==
          cli::kOk);
  const auto files = csv_files(t.path / "g1");
  CHECK(files.size() == 3);
  const auto psd = parse_csv(files.at("psd_CROQAM-MF.csv"));
  CHECK(psd[0] == std::vector<std::string>{"config_id", "freq_norm", "psd_db"});
  CHECK(psd.size() == 1 + 1024);
  const auto s1 = parse_csv(files.at("oob_summary.csv"));
  const auto s0 = parse_csv(read(t.path / "g0" / "oob_summary.csv"));
  REQUIRE(s1.size() == 3);
  CHECK(s1[1][0] == "OQAM-MF");
  CHECK(std::stod(s1[2][4]) < std::stod(s1[1][4]));  // CR-OQAM floor below OQAM
  CHECK(s1[2][4] != s0[2][4]);

  write(t.path / "w.cfg", std::string(kSmallSystem) + "[psd]\nblocks = 100\nsegment_len = 100000\noverlap = 0\n");
  const auto w = run_cli({"psd", "--config", (t.path / "w.cfg").string(), "--out", (t.path / "w").string()});
  CHECK(w.code == cli::kUsageError);
  CHECK(w.err.find("segment") != std::string::npos);
}

TEST_CASE("filter-dump: rows, power relation and rolloff validation") {
  TempDir t;
  write(t.path / "f.cfg", "[filter]\nalpha = 0.75\nsubcarriers = 8\nbins_per_subcarrier = 16\n");
  REQUIRE(run_cli({"filter-dump", "--config", (t.path / "f.cfg").string(), "--out", t.path.string()}).code ==
          cli::kOk);
  const auto rrc = parse_csv(read(t.path / "filter_RRC.csv"));
  const auto crrc = parse_csv(read(t.path / "filter_CRRC.csv"));
  REQUIRE(rrc.size() == 1 + 128);
  REQUIRE(crrc.size() == 1 + 128);
  CHECK(rrc[0] == std::vector<std::string>{"bin", "freq_over_F", "re_G", "im_G", "re_g", "im_g"});
  CHECK(rrc[1][0] == "-64");
  CHECK(rrc[128][0] == "63");
  for (std::size_t r = 1; r < rrc.size(); ++r) {
    const double h = std::pow(std::stod(rrc[r][2]), 2);  // |G_RRC|^2 = H
    const double g2 = std::pow(std::stod(crrc[r][2]), 2) + std::pow(std::stod(crrc[r][3]), 2);
    CHECK(std::abs(g2 - h) < 1e-14);
  }
  CHECK(parse_csv(read(t.path / "ici_CRRC.csv")).size() == 1 + 128);

  write(t.path / "bad.cfg", "[filter]\nalpha = 1.5\n");
  const auto bad = run_cli({"filter-dump", "--config", (t.path / "bad.cfg").string(), "--out", t.path.string()});
  CHECK(bad.code == cli::kUsageError);
  CHECK(bad.err.find("1.5") != std::string::npos);
}


TEST_CASE("shipped presets parse and the quick ones run") {
  const fs::path presets = CROQAM_PRESET_DIR;
  for (const char* name : {"fig1.cfg", "fig2b.cfg", "fig2c.cfg", "table1-verify.cfg"}) {
    CAPTURE(name);
    CHECK_NOTHROW(cli::Settings::from_file(presets / name));
  }
  TempDir t;
  const auto cfg = [&](const char* name) { return (presets / name).string(); };
  CHECK(run_cli({"filter-dump", "--config", cfg("fig1.cfg"), "--out", (t.path / "f").string()}).code == 0);
  CHECK(run_cli({"verify", "--config", cfg("table1-verify.cfg"), "--out", (t.path / "v").string()}).code == 0);
  CHECK(run_cli({"ser", "--config", cfg("fig1.cfg"), "--out", (t.path / "s").string()}).code == 2);
}
}  // TEST_SUITE
