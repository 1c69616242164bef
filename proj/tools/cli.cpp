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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "CLI11.hpp"
#include "croqam/channel.hpp"
#include "croqam/gfdm.hpp"
#include "croqam/linear_oqam.hpp"
#include "croqam/qam.hpp"
#include "croqam/rng.hpp"

namespace croqam::cli {

namespace fs = std::filesystem;

namespace {

using Section = std::pair<std::string, std::vector<std::pair<std::string, std::string>>>;

std::vector<Section> schema() {
  return {
      {"run", {{"command", ""}, {"out", "results"}, {"seed", "1"}, {"workers", "1"}}},
      {"gfdm",
       {{"subcarriers", "64"},
        {"subsymbols", "7"},
        {"cp_length", "16"},
        {"pdp_length", "16"},
        {"pdp_span_db", "16"}}},
      {"verify",
       {{"orthogonality", "RRC:0.5:CONVENTIONAL, RRC:1:CONVENTIONAL, CRRC:0.5:CR, CRRC:1:CR"},
        {"orthogonality_bins", "8"},
        {"orthogonality_tolerance", "1e-10"},
        {"modems", "QAM-ZF, OQAM-MF, CROQAM-MF"},
        {"payloads", "100"},
        {"roundtrip_tolerance", "1e-9"},
        {"xi_target_db", "0.8"},
        {"xi_tolerance_db", "0.1"}}},
      {"ser",
       {{"configs", "QAM-ZF, OQAM-MF, CROQAM-MF, QAM-ZF-TRSTC, OQAM-MF-TRSTC, CROQAM-MF-TRSTC"},
        {"snr_db", "0:40:2"},
        {"trials", "1000"},
        {"theory", "true"}}},
      {"psd",
       {{"configs", "OQAM-MF, CROQAM-MF"},
        {"blocks", "400"},
        {"guard_subsymbols", "1"},
        {"guard_tail", "false"},
        {"edge_subcarriers", "8"},
        {"oob_gap", "2"},
        {"segment_len", "1024"},
        {"overlap", "512"}}},
      {"filter",
       {{"alpha", "0.75"}, {"subcarriers", "16"}, {"bins_per_subcarrier", "32"}, {"ici_shift", "1"}}},
  };
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(fmt::format("{}: '{}' is not a valid number", what, text));
  }
  return value;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(value)) {
    throw ConfigError(fmt::format("{}: '{}' is not a finite real number", what, text));
  }
  return value;
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(fmt::format("cannot write {}", path.string()));
  f << content;
  if (!f) throw Error(fmt::format("write to {} failed", path.string()));
}

SystemSetup system_setup(const Settings& s) {
  SystemSetup setup;
  setup.subcarriers = s.integer("gfdm", "subcarriers");
  setup.subsymbols = s.integer("gfdm", "subsymbols");
  setup.cp_length = s.integer("gfdm", "cp_length");
  setup.pdp_length = s.integer("gfdm", "pdp_length");
  setup.pdp_span_db = s.real("gfdm", "pdp_span_db");
  require(setup.subcarriers > 0 && setup.subsymbols > 0, "gfdm.subcarriers and gfdm.subsymbols must be positive");
  require(setup.pdp_length >= 1, "gfdm.pdp_length must be at least 1");
  return setup;
}

std::string csv_field(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

std::string curve_csv(const SerCurve& c, bool header) {
  std::string out = header ? "config_id,snr_db,ser,errors,decisions,trials,flag\n" : "";
  for (std::size_t p = 0; p < c.points(); ++p) {
    out += fmt::format("{},{},{},{},{},{},{}\n", c.config_id, format_number(c.snr_db[p]), format_number(c.ser[p]),
                       format_number(c.errors[p]), c.decisions, c.trials, c.flags[p]);
  }
  return out;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(fmt::format("cannot create output directory {}: {}", dir.string(), ec.message()));
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  return fmt::format("{}", value);
}

// Settings --------------------------------------------------------------------

Settings Settings::defaults() {
  Settings s;
  s.sections_ = schema();
  return s;
}

Settings Settings::from_string(const std::string& ini) {
  Settings s = defaults();
  s.overlay(ini, "config");
  return s;
}

Settings Settings::from_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
  std::stringstream buffer;
  buffer << f.rdbuf();
  Settings s = defaults();
  s.overlay(buffer.str(), path.string());
  return s;
}

void Settings::overlay(const std::string& ini, const std::string& origin) {
  boost::property_tree::ptree tree;
  std::istringstream in(ini);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(fmt::format("{}: {}", origin, e.message()));
  }
  for (const auto& [section, keys] : tree) {
    if (keys.empty()) {
      throw ConfigError(fmt::format("{}: key '{}' outside of a section", origin, section));
    }
    for (const auto& [key, value] : keys) set(section, key, value.get_value<std::string>());
  }
}

void Settings::set(const std::string& section, const std::string& key, const std::string& value) {
  for (auto& [name, keys] : sections_) {
    if (name != section) continue;
    for (auto& [k, v] : keys) {
      if (k == key) {
        v = trim(value);
        return;
      }
    }
    throw ConfigError(fmt::format("unknown key '{}' in section [{}]", key, section));
  }
  throw ConfigError(fmt::format("unknown section [{}]", section));
}

const std::string& Settings::text(const std::string& section, const std::string& key) const {
  for (const auto& [name, keys] : sections_) {
    if (name != section) continue;
    for (const auto& [k, v] : keys) {
      if (k == key) return v;
    }
  }
  throw ConfigError(fmt::format("no setting {}.{}", section, key));
}

int Settings::integer(const std::string& section, const std::string& key) const {
  return parse_number<int>(text(section, key), section + "." + key);
}

std::uint64_t Settings::u64(const std::string& section, const std::string& key) const {
  return parse_number<std::uint64_t>(text(section, key), section + "." + key);
}

double Settings::real(const std::string& section, const std::string& key) const {
  return parse_real(text(section, key), section + "." + key);
}

bool Settings::boolean(const std::string& section, const std::string& key) const {
  const std::string& v = text(section, key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(fmt::format("{}.{}: '{}' is not a boolean", section, key, v));
}

std::vector<std::string> Settings::list(const std::string& section, const std::string& key) const {
  std::vector<std::string> out;
  for (auto& item : split(text(section, key), ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw ConfigError(fmt::format("{}.{} must list at least one entry", section, key));
  return out;
}

std::vector<double> Settings::grid(const std::string& section, const std::string& key) const {
  const std::string what = section + "." + key;
  std::vector<double> out;
  for (const auto& item : list(section, key)) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(parse_real(parts[0], what));
      continue;
    }
    if (parts.size() != 3) throw ConfigError(fmt::format("{}: range '{}' must be start:stop:step", what, item));
    const double start = parse_real(parts[0], what);
    const double stop = parse_real(parts[1], what);
    const double step = parse_real(parts[2], what);
    if (!(step > 0.0) || stop < start) throw ConfigError(fmt::format("{}: invalid range '{}'", what, item));
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 100000) throw ConfigError(fmt::format("{}: range '{}' has too many points", what, item));
    for (long long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  }
  return out;
}

std::string Settings::to_ini() const {
  std::string out;
  for (const auto& [name, keys] : sections_) {
    if (!out.empty()) out += "\n";
    out += fmt::format("[{}]\n", name);
    for (const auto& [k, v] : keys) out += fmt::format("{} = {}\n", k, v);
  }
  return out;
}

void apply(Settings& settings, const std::string& command, const Overrides& o) {
  const std::string& configured = settings.text("run", "command");
  if (!configured.empty() && configured != command) {
    throw ConfigError(fmt::format("config was written for '{}' but '{}' was requested", configured, command));
  }
  settings.set("run", "command", command);
  if (o.out) settings.set("run", "out", *o.out);
  if (o.seed) settings.set("run", "seed", std::to_string(*o.seed));
  if (o.trials) settings.set("ser", "trials", std::to_string(*o.trials));
  if (o.workers) settings.set("run", "workers", std::to_string(*o.workers));
}

fs::path output_dir(const Settings& settings) {
  const std::string& out = settings.text("run", "out");
  if (out.empty()) throw ConfigError("run.out must name an output directory");
  return fs::path(out);
}

void write_manifest(const Settings& settings, const fs::path& dir) {
  ensure_dir(dir);
  write_text(dir / "manifest.cfg", settings.to_ini());
}

// verify ----------------------------------------------------------------------

int cmd_verify(const Settings& s, std::ostream& log) {
  const fs::path dir = output_dir(s);
  const SystemSetup setup = system_setup(s);
  const std::uint64_t seed = s.u64("run", "seed");
  const double ortho_tol = s.real("verify", "orthogonality_tolerance");
  const double rt_tol = s.real("verify", "roundtrip_tolerance");
  const double xi_target = s.real("verify", "xi_target_db");
  const double xi_tol = s.real("verify", "xi_tolerance_db");
  const int payloads = s.integer("verify", "payloads");
  const int bins = s.integer("verify", "orthogonality_bins");
  require(payloads >= 1, "verify.payloads must be at least 1");

  struct Check {
    std::string name, subject;
    double value, tolerance;
    bool pass;
  };
  std::vector<Check> checks;

  std::string ortho_csv = "filter,alpha,phase_mode,max_violation\n";
  for (const auto& entry : s.list("verify", "orthogonality")) {
    const auto parts = split(entry, ':');
    if (parts.size() != 3) {
      throw ConfigError(fmt::format("verify.orthogonality entry '{}' must be FILTER:alpha:PHASE_MODE", entry));
    }
    const FilterFamily family = parse_filter_family(parts[0]);
    const double alpha = parse_real(parts[1], "verify.orthogonality");
    const PhaseMode mode = parse_phase_mode(parts[2]);
    const auto filter = make_filter(family, alpha, make_grid(setup.subcarriers, bins));
    const double v = orthogonality_report(filter, mode);
    ortho_csv += fmt::format("{},{},{},{}\n", to_string(family), format_number(alpha), to_string(mode), format_number(v));
    checks.push_back({"orthogonality", fmt::format("{}:{}:{}", to_string(family), format_number(alpha), to_string(mode)),
                      v, ortho_tol, v < ortho_tol});
  }

  std::string modem_csv = "K,M,filter,alpha,detector,mode,xi_db,max_roundtrip_err,cond_estimate\n";
  const QamMapper& mapper = qam16();
  for (const auto& name : s.list("verify", "modems")) {
    const SerConfigId id = parse_ser_config_id(name);
    require(!id.trstc, fmt::format("verify.modems entry '{}' must be a single-antenna system", name));
    const GfdmModem modem = build_modem(system_config(id.system, setup));
    const GfdmConfig& cfg = modem.config;
    double worst = 0.0;
    for (int p = 0; p < payloads; ++p) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(p), Stream::kPayload));
      const CVector d = mapper.map(mapper.random_indices(rng, modem.n()));
      worst = std::max(worst, (detect(modulate_samples(d, modem), modem) - d).cwiseAbs().maxCoeff());
    }
    modem_csv += fmt::format("{},{},{},{},{},{},{},{},{}\n", cfg.subcarriers, cfg.subsymbols,
                             to_string(cfg.filter.family), format_number(cfg.filter.rolloff), to_string(cfg.detector),
                             to_string(cfg.mode), format_number(modem.xi_db), format_number(worst),
                             csv_field(modem.cond_estimate));
    const std::string subject = to_string(id);
    checks.push_back({"roundtrip", subject, worst, rt_tol, worst < rt_tol});
    if (cfg.detector == Detector::kZF) {
      const double dev = std::abs(modem.xi_db - xi_target);
      checks.push_back({"xi_db", subject, modem.xi_db, xi_tol, dev <= xi_tol});
    }
  }

  ensure_dir(dir);
  write_text(dir / "orthogonality.csv", ortho_csv);
  write_text(dir / "modems.csv", modem_csv);
  std::string check_csv = "check,subject,value,tolerance,status\n";
  bool all = true;
  for (const auto& c : checks) {
    const char* status = c.pass ? "PASS" : "FAIL";
    check_csv += fmt::format("{},{},{},{},{}\n", c.name, c.subject, format_number(c.value), format_number(c.tolerance),
                             status);
    log << fmt::format("{} {} {}: value {} (tolerance {})\n", status, c.name, c.subject, format_number(c.value),
                       format_number(c.tolerance));
    all = all && c.pass;
  }
  write_text(dir / "checks.csv", check_csv);
  return all ? kOk : kCheckFailed;
}

// ser -------------------------------------------------------------------------

int cmd_ser(const Settings& s, std::ostream& log) {
  const fs::path dir = output_dir(s);
  SerOptions opts;
  opts.setup = system_setup(s);
  opts.snr_db = s.grid("ser", "snr_db");
  opts.trials = s.integer("ser", "trials");
  opts.base_seed = s.u64("run", "seed");
  opts.workers = s.integer("run", "workers");
  const bool theory = s.boolean("ser", "theory");
  opts.keep_per_trial = theory;
  require(opts.trials > 0, "ser.trials must be positive");
  std::vector<SerConfigId> ids;
  for (const auto& name : s.list("ser", "configs")) ids.push_back(parse_ser_config_id(name));

  ensure_dir(dir);
  std::string all = "config_id,snr_db,ser,errors,decisions,trials,flag\n";
  std::string oracle = "config_id,snr_db,ser,theory_ser,sigma,z_score\n";
  for (const auto& id : ids) {
    const auto start = std::chrono::steady_clock::now();
    const SerCurve mc = run_ser(id, opts);
    write_text(dir / fmt::format("ser_{}.csv", mc.config_id), curve_csv(mc, true));
    all += curve_csv(mc, false);
    if (theory) {
      const SerCurve th = semi_analytic_ser(id, opts);
      write_text(dir / fmt::format("ser_{}.csv", th.config_id), curve_csv(th, true));
      all += curve_csv(th, false);
      const auto cmp = compare_to_oracle(mc, th);
      for (std::size_t p = 0; p < mc.points(); ++p) {
        oracle += fmt::format("{},{},{},{},{},{}\n", mc.config_id, format_number(mc.snr_db[p]), format_number(mc.ser[p]),
                              format_number(th.ser[p]), format_number(cmp.sigma[p]), format_number(cmp.z_score[p]));
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log << fmt::format("{}: {} trials x {} points in {:.1f} s\n", mc.config_id, opts.trials, mc.points(), secs);
  }
  write_text(dir / "ser_all.csv", all);
  if (theory) write_text(dir / "ser_oracle.csv", oracle);
  return kOk;
}

// psd -------------------------------------------------------------------------

int cmd_psd(const Settings& s, std::ostream& log) {
  const fs::path dir = output_dir(s);
  PsdExperiment base;
  base.setup = system_setup(s);
  base.blocks = s.integer("psd", "blocks");
  base.guard_subsymbols = s.integer("psd", "guard_subsymbols");
  base.guard_tail = s.boolean("psd", "guard_tail");
  base.edge_subcarriers = s.integer("psd", "edge_subcarriers");
  base.oob_gap = s.real("psd", "oob_gap");
  base.segment_len = s.integer("psd", "segment_len");
  base.overlap = s.integer("psd", "overlap");
  base.seed = s.u64("run", "seed");

  std::vector<PsdResult> results;
  for (const auto& name : s.list("psd", "configs")) {
    const SerConfigId id = parse_ser_config_id(name);
    require(!id.trstc, fmt::format("psd.configs entry '{}' must be a single-antenna system", name));
    PsdExperiment exp = base;
    exp.system = id.system;
    results.push_back(run_psd(exp));
  }

  ensure_dir(dir);
  std::string summary = "config_id,guard_subsymbols,edge_subcarriers,inband_db,oob_floor_db,oob_ratio_db\n";
  for (const auto& r : results) {
    std::string csv = "config_id,freq_norm,psd_db\n";
    for (std::size_t i = 0; i < r.psd.freq_norm.size(); ++i) {
      csv += fmt::format("{},{},{}\n", r.config_id, format_number(r.psd.freq_norm[i]),
                         format_number(r.psd.psd_db[static_cast<Eigen::Index>(i)]));
    }
    write_text(dir / fmt::format("psd_{}.csv", r.config_id), csv);
    summary += fmt::format("{},{},{},{},{},{}\n", r.config_id, base.guard_subsymbols, base.edge_subcarriers,
                           format_number(r.inband_db), format_number(r.oob_floor_db), format_number(r.oob_ratio_db));
    log << fmt::format("{}: in-band {:.2f} dB, OOB floor {:.2f} dB, ratio {:.2f} dB\n", r.config_id, r.inband_db,
                       r.oob_floor_db, r.oob_ratio_db);
  }
  write_text(dir / "oob_summary.csv", summary);
  return kOk;
}

// filter-dump -----------------------------------------------------------------

int cmd_filter_dump(const Settings& s, std::ostream& log) {
  const fs::path dir = output_dir(s);
  const double alpha = s.real("filter", "alpha");
  const FilterGrid grid = make_grid(s.integer("filter", "subcarriers"), s.integer("filter", "bins_per_subcarrier"));
  const int shift = s.integer("filter", "ici_shift");
  const PrototypeFilter rrc = make_filter(FilterFamily::kRRC, alpha, grid);
  const PrototypeFilter crrc = make_filter(FilterFamily::kCRRC, alpha, grid);

  ensure_dir(dir);
  const int n = grid.n_bins();
  for (const PrototypeFilter* f : {&rrc, &crrc}) {
    const IciResponse ici = ici_response(*f, shift);
    std::string filter_csv = "bin,freq_over_F,re_G,im_G,re_g,im_g\n";
    std::string ici_csv = "bin,freq_over_F,re_S,im_S,re_s,im_s\n";
    for (int l = -n / 2; l < n - n / 2; ++l) {
      const int i = grid.index(l);
      const cdouble big = f->freq_response[i];
      const cdouble small = f->time_response[i];
      filter_csv += fmt::format("{},{},{},{},{},{}\n", l, format_number(grid.freq_over_F(i)), format_number(big.real()),
                                format_number(big.imag()), format_number(small.real()), format_number(small.imag()));
      const cdouble sb = ici.spectrum[i];
      const cdouble st = ici.time[i];
      ici_csv += fmt::format("{},{},{},{},{},{}\n", l, format_number(grid.freq_over_F(i)), format_number(sb.real()),
                             format_number(sb.imag()), format_number(st.real()), format_number(st.imag()));
    }
    const std::string family = to_string(f->family);
    write_text(dir / fmt::format("filter_{}.csv", family), filter_csv);
    write_text(dir / fmt::format("ici_{}.csv", family), ici_csv);
  }
  log << fmt::format("wrote RRC and CRRC responses (alpha {}, {} bins, ICI shift {}) to {}\n", format_number(alpha), n,
                     shift, dir.string());
  return kOk;
}

// entry point -----------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"croqam: CR-OQAM / GFDM waveform experiments", "croqam"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides overrides;
  std::string out_dir;
  std::uint64_t seed = 0;
  int trials = 0;
  int workers = 0;

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Settings&, std::ostream&);
  };
  const Command commands[] = {
      {"verify", "orthogonality, reconstruction and noise-enhancement checks", cmd_verify},
      {"ser", "Monte-Carlo and semi-analytic symbol error rate sweeps", cmd_ser},
      {"psd", "power spectral density and out-of-band summary", cmd_psd},
      {"filter-dump", "RRC and CRRC frequency, time and ICI responses", cmd_filter_dump},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path, "INI configuration file");
    sub->add_option("--out", out_dir, "output directory (overrides run.out)");
    sub->add_option("--seed", seed, "base seed (overrides run.seed)");
    sub->add_option("--trials", trials, "channel trials per SNR point (overrides ser.trials)")->check(CLI::PositiveNumber);
    sub->add_option("--workers", workers, "worker threads (overrides run.workers)")->check(CLI::PositiveNumber);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  for (std::size_t c = 0; c < subs.size(); ++c) {
    CLI::App* sub = subs[c];
    if (!sub->parsed()) continue;
    if (sub->count("--out")) overrides.out = out_dir;
    if (sub->count("--seed")) overrides.seed = seed;
    if (sub->count("--trials")) overrides.trials = trials;
    if (sub->count("--workers")) overrides.workers = workers;
    Settings settings;
    try {
      settings = config_path.empty() ? Settings::defaults() : Settings::from_file(config_path);
      apply(settings, commands[c].name, overrides);
      write_manifest(settings, output_dir(settings));
    } catch (const Error& e) {
      err << "croqam: " << e.what() << "\n";
      return kUsageError;
    }
    try {
      const int code = commands[c].fn(settings, out);
      if (code == kCheckFailed) err << "croqam: " << commands[c].name << ": one or more checks failed\n";
      return code;
    } catch (const Error& e) {
      err << "croqam " << commands[c].name << ": " << e.what() << "\n";
      return kUsageError;
    }
  }
  return kUsageError;
}

}  // namespace croqam::cli
