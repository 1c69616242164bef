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

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "croqam/channel.hpp"
#include "croqam/filters.hpp"
#include "croqam/gfdm.hpp"
#include "croqam/linear_oqam.hpp"
#include "croqam/psd.hpp"
#include "croqam/qam.hpp"
#include "croqam/rng.hpp"
#include "croqam/ser.hpp"

namespace py = pybind11;
using namespace croqam;
using namespace py::literals;

namespace {

template <typename E, typename Parse>
void bind_enum(py::enum_<E>& e, Parse parse) {
  e.def_static("parse", [parse](std::string_view s) { return parse(s); }, "name"_a)
      .def("__str__", [](E v) { return to_string(v); });
}

SerOptions ser_options(const std::vector<double>& snr_db, int trials, std::uint64_t seed, int workers,
                       const SystemSetup& setup, bool keep_per_trial) {
  SerOptions o;
  o.snr_db = snr_db;
  o.trials = trials;
  o.base_seed = seed;
  o.workers = workers;
  o.setup = setup;
  o.keep_per_trial = keep_per_trial;
  return o;
}

}  // namespace

PYBIND11_MODULE(_croqam, m) {
  m.doc() = "Conjugate-root OQAM, GFDM and TR-STC simulation core";
  py::register_exception<Error>(m, "CroqamError", PyExc_ValueError);

  // prototype_filters
  py::enum_<FilterFamily> family(m, "FilterFamily");
  family.value("RC", FilterFamily::kRC)
      .value("RRC", FilterFamily::kRRC)
      .value("CRRC", FilterFamily::kCRRC)
      .value("RECT", FilterFamily::kRect);
  bind_enum(family, parse_filter_family);

  py::class_<FilterGrid>(m, "FilterGrid")
      .def(py::init(&make_grid), "subcarriers"_a, "bins_per_subcarrier"_a)
      .def_readonly("subcarriers", &FilterGrid::subcarriers)
      .def_readonly("bins_per_subcarrier", &FilterGrid::bins_per_subcarrier)
      .def_property_readonly("n_bins", &FilterGrid::n_bins)
      .def("centered", &FilterGrid::centered, "index"_a)
      .def("freq_over_F", &FilterGrid::freq_over_F, "index"_a);

  py::class_<PrototypeFilter>(m, "PrototypeFilter")
      .def_readonly("family", &PrototypeFilter::family)
      .def_readonly("rolloff", &PrototypeFilter::rolloff)
      .def_readonly("grid", &PrototypeFilter::grid)
      .def_readonly("freq_response", &PrototypeFilter::freq_response)
      .def_readonly("time_response", &PrototypeFilter::time_response)
      .def("at", &PrototypeFilter::at, "centered_bin"_a)
      .def("unit_spectrum", &PrototypeFilter::unit_spectrum);

  m.def(
      "make_filter",
      [](FilterFamily f, double rolloff, int subcarriers, int bins, bool allow_odd) {
        return make_filter(f, rolloff, make_grid(subcarriers, bins), allow_odd ? OddGrid::kAllow : OddGrid::kReject);
      },
      "family"_a, "rolloff"_a, "subcarriers"_a, "bins_per_subcarrier"_a, "allow_odd"_a = false);
  m.def("raised_cosine", &raised_cosine, "f"_a, "rolloff"_a);
  m.def("power_response", &power_response, "filter"_a);
  m.def("nyquist_residual", py::overload_cast<const PrototypeFilter&>(&nyquist_residual), "filter"_a);
  m.def(
      "nyquist_residual_of",
      [](const RVector& r, const FilterGrid& g) { return nyquist_residual(r, g); }, "response"_a, "grid"_a);

  py::class_<IciResponse>(m, "IciResponse")
      .def_readonly("shift", &IciResponse::shift)
      .def_readonly("spectrum", &IciResponse::spectrum)
      .def_readonly("time", &IciResponse::time);
  m.def("ici_response", &ici_response, "filter"_a, "shift"_a);

  // linear_oqam
  py::enum_<PhaseMode> phase(m, "PhaseMode");
  phase.value("CONVENTIONAL", PhaseMode::kConventional).value("CR", PhaseMode::kCR);
  bind_enum(phase, parse_phase_mode);

  py::class_<OqamBurstConfig>(m, "OqamBurstConfig")
      .def(py::init(&make_burst_config), "subcarriers"_a, "symbols"_a, "family"_a, "rolloff"_a,
           "span_periods"_a = kDefaultSpanPeriods)
      .def_readwrite("phase_mode", &OqamBurstConfig::phase_mode)
      .def_readonly("subcarriers", &OqamBurstConfig::subcarriers)
      .def_readonly("symbols", &OqamBurstConfig::symbols)
      .def_readonly("filter", &OqamBurstConfig::filter)
      .def_property_readonly("burst_length", &OqamBurstConfig::burst_length);
  m.def(
      "oqam_modulate", [](const CMatrix& data, const OqamBurstConfig& cfg) { return oqam_modulate({data}, cfg); },
      "data"_a, "config"_a);
  m.def(
      "oqam_demodulate",
      [](const CVector& samples, const OqamBurstConfig& cfg) { return oqam_demodulate(samples, cfg).data; },
      "samples"_a, "config"_a);
  m.def("orthogonality_report", &orthogonality_report, "filter"_a, "mode"_a, "span"_a = 2);

  // gfdm_core
  py::enum_<Detector> detector(m, "Detector");
  detector.value("ZF", Detector::kZF).value("MF", Detector::kMF);
  bind_enum(detector, parse_detector);

  py::enum_<ModulationMode> mode(m, "ModulationMode");
  mode.value("QAM", ModulationMode::kQAM).value("OQAM", ModulationMode::kOQAM).value("CROQAM", ModulationMode::kCROQAM);
  bind_enum(mode, parse_modulation_mode);

  py::class_<GfdmConfig>(m, "GfdmConfig")
      .def(py::init(&make_gfdm_config), "subcarriers"_a, "subsymbols"_a, "family"_a, "rolloff"_a, "detector"_a,
           "mode"_a, "cp_length"_a = 16)
      .def_readonly("subcarriers", &GfdmConfig::subcarriers)
      .def_readonly("subsymbols", &GfdmConfig::subsymbols)
      .def_readonly("filter", &GfdmConfig::filter)
      .def_readonly("detector", &GfdmConfig::detector)
      .def_readonly("mode", &GfdmConfig::mode)
      .def_readonly("cp_length", &GfdmConfig::cp_length)
      .def_property_readonly("n", &GfdmConfig::n)
      .def("__repr__", &describe);

  py::class_<GfdmModem>(m, "GfdmModem")
      .def(py::init(&build_modem), "config"_a)
      .def_readonly("config", &GfdmModem::config)
      .def_readonly("A", &GfdmModem::A)
      .def_readonly("A_zf", &GfdmModem::A_zf)
      .def_readonly("xi_db", &GfdmModem::xi_db)
      .def_readonly("cond_estimate", &GfdmModem::cond_estimate)
      .def_property_readonly("n", &GfdmModem::n)
      .def("modulate", [](const GfdmModem& md, const CVector& d) { return modulate_samples(d, md); }, "payload"_a)
      .def("detect", [](const GfdmModem& md, const CVector& y) { return detect(y, md); }, "y"_a);

  m.def("condition_number", &condition_number, "a"_a);
  m.def("rotate", &rotate, "v"_a, "u"_a);
  m.def("add_cp", &add_cp, "x"_a, "cp_length"_a);
  m.def("remove_cp", &remove_cp, "y"_a, "cp_length"_a);
  m.def("apply_guard_symbols", &apply_guard_symbols, "payload"_a, "n_guard"_a, "config"_a, "tail"_a = false);
  m.def("deactivate_edge_subcarriers", &deactivate_edge_subcarriers, "payload"_a, "per_edge"_a, "config"_a);

  // channel_stc
  py::class_<PowerDelayProfile>(m, "PowerDelayProfile")
      .def(py::init(&make_pdp), "length"_a = 16, "span_db"_a = 16.0)
      .def_readonly("taps", &PowerDelayProfile::taps);
  py::class_<ChannelRealization>(m, "ChannelRealization")
      .def_readonly("taps", &ChannelRealization::taps)
      .def_readonly("freq", &ChannelRealization::freq);
  m.def("draw_channel", &draw_channel, "pdp"_a, "seed"_a, "n_bins"_a);
  m.def("channel_frequency_response", &channel_frequency_response, "taps"_a, "n_bins"_a);
  m.def("transmit", &transmit, "x_with_cp"_a, "taps"_a, "noise_var"_a, "seed"_a, "cp_length"_a);
  m.def("fde_equalize", &fde_equalize, "y"_a, "freq"_a);
  m.def("circ_reverse", &circ_reverse, "v"_a);
  m.def(
      "trstc_encode",
      [](const CVector& x1, const CVector& x2) {
        const StcBlockPair p = trstc_encode(x1, x2);
        return py::make_tuple(p.a1_t1, p.a2_t1, p.a1_t2, p.a2_t2);
      },
      "x1"_a, "x2"_a, "Returns (a1_t1, a2_t1, a1_t2, a2_t2): antenna a, slot t.");
  m.def(
      "trstc_decode",
      [](const CVector& y1, const CVector& y2, const CVector& h1, const CVector& h2) {
        DecodedPair d = trstc_decode(y1, y2, h1, h2);
        return py::make_tuple(d.x1, d.x2);
      },
      "y1"_a, "y2"_a, "h1_freq"_a, "h2_freq"_a);

  // metrics_harness
  m.def(
      "qam16_map",
      [](const std::vector<int>& idx) { return qam16().map(idx); }, "indices"_a);
  m.def(
      "qam16_demap",
      [](const CVector& s) { return qam16().demap(s); }, "symbols"_a);
  m.def(
      "qam16_random",
      [](std::uint64_t seed, int count) {
        Rng rng(seed);
        return qam16().random_indices(rng, count);
      },
      "seed"_a, "count"_a);
  m.def("qam16_ser", py::overload_cast<double>(&qam16_ser), "gamma"_a);
  m.def("qam16_ser_correlated", py::overload_cast<double, double>(&qam16_ser), "gamma"_a, "rho"_a);

  py::enum_<SystemKind>(m, "SystemKind")
      .value("QAM_ZF", SystemKind::kQamZf)
      .value("OQAM_MF", SystemKind::kOqamMf)
      .value("CROQAM_MF", SystemKind::kCroqamMf)
      .def("__str__", [](SystemKind v) { return to_string(v); });

  py::class_<SystemSetup>(m, "SystemSetup")
      .def(py::init<>())
      .def_readwrite("subcarriers", &SystemSetup::subcarriers)
      .def_readwrite("subsymbols", &SystemSetup::subsymbols)
      .def_readwrite("cp_length", &SystemSetup::cp_length)
      .def_readwrite("pdp_length", &SystemSetup::pdp_length)
      .def_readwrite("pdp_span_db", &SystemSetup::pdp_span_db);
  m.def("system_config", &system_config, "system"_a, "setup"_a = SystemSetup{});
  m.def(
      "ser_config_ids", [] {
        std::vector<std::string> out;
        for (const auto& id : all_ser_configs()) out.push_back(to_string(id));
        return out;
      });

  py::class_<SerCurve>(m, "SerCurve")
      .def_readonly("config_id", &SerCurve::config_id)
      .def_readonly("snr_db", &SerCurve::snr_db)
      .def_readonly("ser", &SerCurve::ser)
      .def_readonly("errors", &SerCurve::errors)
      .def_readonly("decisions", &SerCurve::decisions)
      .def_readonly("trials", &SerCurve::trials)
      .def_readonly("theory", &SerCurve::theory)
      .def_readonly("flags", &SerCurve::flags);

  m.def(
      "run_ser",
      [](const std::string& id, const std::vector<double>& snr_db, int trials, std::uint64_t seed, int workers,
         const SystemSetup& setup) {
        py::gil_scoped_release release;
        return run_ser(parse_ser_config_id(id), ser_options(snr_db, trials, seed, workers, setup, false));
      },
      "config_id"_a, "snr_db"_a, "trials"_a, "seed"_a = 1, "workers"_a = 1, "setup"_a = SystemSetup{});
  m.def(
      "semi_analytic_ser",
      [](const std::string& id, const std::vector<double>& snr_db, int trials, std::uint64_t seed, int workers,
         const SystemSetup& setup) {
        py::gil_scoped_release release;
        return semi_analytic_ser(parse_ser_config_id(id), ser_options(snr_db, trials, seed, workers, setup, false));
      },
      "config_id"_a, "snr_db"_a, "trials"_a, "seed"_a = 1, "workers"_a = 1, "setup"_a = SystemSetup{});
  m.def("snr_at_ser", &snr_at_ser, "curve"_a, "target"_a);

  py::class_<PsdEstimate>(m, "PsdEstimate")
      .def_readonly("freq_norm", &PsdEstimate::freq_norm)
      .def_readonly("psd_linear", &PsdEstimate::psd_linear)
      .def_readonly("psd_db", &PsdEstimate::psd_db)
      .def_readonly("segments", &PsdEstimate::segments);
  m.def("welch_psd", &welch_psd, "samples"_a, "segment_len"_a, "overlap"_a, "freq_scale"_a = 1.0);

  py::class_<PsdResult>(m, "PsdResult")
      .def_readonly("config_id", &PsdResult::config_id)
      .def_readonly("psd", &PsdResult::psd)
      .def_readonly("inband_db", &PsdResult::inband_db)
      .def_readonly("oob_floor_db", &PsdResult::oob_floor_db)
      .def_readonly("oob_ratio_db", &PsdResult::oob_ratio_db);
  m.def(
      "run_psd",
      [](SystemKind system, int blocks, int guard_subsymbols, int edge_subcarriers, std::uint64_t seed,
         const SystemSetup& setup) {
        PsdExperiment e;
        e.system = system;
        e.blocks = blocks;
        e.guard_subsymbols = guard_subsymbols;
        e.edge_subcarriers = edge_subcarriers;
        e.seed = seed;
        e.setup = setup;
        py::gil_scoped_release release;
        return run_psd(e);
      },
      "system"_a, "blocks"_a = 400, "guard_subsymbols"_a = 1, "edge_subcarriers"_a = 8, "seed"_a = 1,
      "setup"_a = SystemSetup{});
}
