# SPDX-License-Identifier: Apache-2.0
#
# croqam - conjugate-root OQAM multicarrier waveform simulation library
# Copyright (C) 2026 The croqam authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

import numpy as np
import pytest

import croqam


def test_filter_power_is_nyquist_and_cr_identity():
    rrc = croqam.make_filter(croqam.FilterFamily.RRC, 0.5, 64, 8)
    crrc = croqam.make_filter(croqam.FilterFamily.CRRC, 0.5, 64, 8)
    assert croqam.nyquist_residual_of(croqam.power_response(crrc), crrc.grid) < 1e-12
    assert np.allclose(croqam.power_response(rrc), croqam.power_response(crrc))
    s1 = croqam.ici_response(rrc, 1).time
    s1c = croqam.ici_response(crrc, 1).time
    assert np.max(np.abs(s1c - 1j * s1)) < 1e-10 * np.max(np.abs(s1))


def test_orthogonality_and_mismatch():
    crrc = croqam.make_filter(croqam.FilterFamily.CRRC, 1.0, 64, 8)
    assert croqam.orthogonality_report(crrc, croqam.PhaseMode.CR) < 1e-10
    assert croqam.orthogonality_report(crrc, croqam.PhaseMode.CONVENTIONAL) > 0.1


def test_linear_oqam_round_trip():
    cfg = croqam.OqamBurstConfig(16, 6, croqam.FilterFamily.CRRC, 1.0)
    rng = np.random.default_rng(3)
    data = croqam.qam16_map(list(rng.integers(0, 16, 16 * 6))).reshape(6, 16).T
    back = croqam.oqam_demodulate(croqam.oqam_modulate(data, cfg), cfg)
    assert back.shape == data.shape
    assert np.max(np.abs(back - data)) < 1e-9


@pytest.mark.parametrize("system", [croqam.SystemKind.QAM_ZF, croqam.SystemKind.OQAM_MF, croqam.SystemKind.CROQAM_MF])
def test_gfdm_round_trip(system):
    modem = croqam.GfdmModem(croqam.system_config(system))
    d = croqam.qam16_map(croqam.qam16_random(7, modem.n))
    assert np.max(np.abs(modem.detect(modem.modulate(d)) - d)) < 1e-9
    assert croqam.qam16_demap(d) == croqam.qam16_random(7, modem.n)


def test_noise_enhancement():
    cfg = croqam.GfdmConfig(64, 7, croqam.FilterFamily.RC, 0.5, croqam.Detector.ZF, croqam.ModulationMode.QAM)
    assert abs(croqam.GfdmModem(cfg).xi_db - 0.8) < 0.1


def test_singular_zf_raises():
    cfg = croqam.GfdmConfig(4, 2, croqam.FilterFamily.RC, 0.5, croqam.Detector.ZF, croqam.ModulationMode.QAM)
    with pytest.raises(croqam.CroqamError):
        croqam.GfdmModem(cfg)


def test_trstc_noiseless_chain():
    modem = croqam.GfdmModem(croqam.system_config(croqam.SystemKind.CROQAM_MF))
    n, cp = modem.n, modem.config.cp_length
    pdp = croqam.PowerDelayProfile()
    h1, h2 = croqam.draw_channel(pdp, 11, n), croqam.draw_channel(pdp, 12, n)
    d1 = croqam.qam16_map(croqam.qam16_random(1, n))
    d2 = croqam.qam16_map(croqam.qam16_random(2, n))
    a1t1, a2t1, a1t2, a2t2 = croqam.trstc_encode(modem.modulate(d1), modem.modulate(d2))

    def rx(a1, a2):
        y = croqam.transmit(croqam.add_cp(a1, cp), h1.taps, 0.0, 0, cp)
        y = y + croqam.transmit(croqam.add_cp(a2, cp), h2.taps, 0.0, 0, cp)
        return croqam.remove_cp(y, cp)

    x1, x2 = croqam.trstc_decode(rx(a1t1, a2t1), rx(a1t2, a2t2), h1.freq, h2.freq)
    assert np.max(np.abs(modem.detect(x1) - d1)) < 1e-8
    assert np.max(np.abs(modem.detect(x2) - d2)) < 1e-8


def test_ser_curves_small_system():
    setup = croqam.SystemSetup()
    setup.subcarriers, setup.subsymbols, setup.cp_length, setup.pdp_length = 16, 5, 8, 8
    snr = [0.0, 10.0, 20.0]
    mc = croqam.run_ser("CROQAM-MF", snr, 50, seed=4, workers=2, setup=setup)
    th = croqam.semi_analytic_ser("CROQAM-MF", snr, 50, seed=4, setup=setup)
    assert mc.config_id == "CROQAM-MF" and th.config_id == "CROQAM-MF-theory"
    assert mc.decisions == 50 * 80
    assert mc.ser[0] > mc.ser[-1]
    assert np.allclose(mc.ser, th.ser, rtol=0.3, atol=2e-3)
    again = croqam.run_ser("CROQAM-MF", snr, 50, seed=4, workers=1, setup=setup)
    assert again.ser == mc.ser
    with pytest.raises(croqam.CroqamError):
        croqam.run_ser("NOPE", snr, 10)


def test_qam16_ser_limits():
    assert croqam.qam16_ser(0.0) == pytest.approx(15 / 16)
    assert croqam.qam16_ser_correlated(10.0, 0.0) == pytest.approx(croqam.qam16_ser(10.0), rel=1e-12)


def test_psd_ordering_small():
    oqam = croqam.run_psd(croqam.SystemKind.OQAM_MF, blocks=120)
    cr = croqam.run_psd(croqam.SystemKind.CROQAM_MF, blocks=120)
    assert cr.oob_floor_db < oqam.oob_floor_db
    assert len(cr.psd.freq_norm) == 1024
