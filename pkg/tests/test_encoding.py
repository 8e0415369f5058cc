import math

import numpy as np
import pytest

from cavitychain import dynamics, encoding, model, oracle


def uniform_params(n, **kwargs):
    base = dict(coupling=10.0, hopping=1.0, detuning=0.0)
    base.update(kwargs)
    return model.SystemParams(n_cavities=n, **base)


class TestEncodingScheme:
    def test_defaults_decode_width_to_encode_width(self):
        enc = encoding.scheme(uniform_params(20), k=3)
        assert enc.r == 3
        np.testing.assert_array_equal(enc.encoding_sites, [1, 3, 5])
        np.testing.assert_array_equal(enc.decoding_sites, [16, 18, 20])

    def test_staggered_rejected(self):
        params = model.SystemParams(n_cavities=21, coupling=1.0, hopping=1.0,
                                    pattern=model.STAGGERED, kappa=-0.2)
        with pytest.raises(ValueError):
            encoding.scheme(params, k=2)

    def test_encoding_window_must_fit(self):
        with pytest.raises(ValueError):
            encoding.scheme(uniform_params(5), k=4)

    def test_windows_must_not_overlap(self):
        # k = r = 3 on a 9-site chain: decoding starts at site 5, inside
        # the encoding window 1..5
        with pytest.raises(ValueError):
            encoding.scheme(uniform_params(9), k=3)
        # a 10-site chain starts decoding at site 6 = 2k, exactly disjoint
        encoding.scheme(uniform_params(10), k=3)


class TestEncodedState:
    def test_single_site_matches_atomic_injection(self):
        params = uniform_params(8)
        enc = encoding.scheme(params, k=1)
        state = encoding.encoded_initial_state(enc)
        reference = model.localized_state(8, 1, math.pi / 2)
        np.testing.assert_allclose(state.atom_amps, reference.atom_amps, atol=1e-15)
        np.testing.assert_allclose(state.photon_amps, reference.photon_amps, atol=1e-15)

    def test_two_site_amplitudes(self):
        state = encoding.encoded_initial_state(encoding.scheme(uniform_params(8), k=2))
        assert state.atom_amps[0] == pytest.approx(1 / math.sqrt(2))
        assert state.atom_amps[2] == pytest.approx(-1 / math.sqrt(2))
        assert np.all(state.photon_amps == 0)

    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_unit_norm(self, k):
        state = encoding.encoded_initial_state(encoding.scheme(uniform_params(30), k=k))
        p_atom, p_photon = state.populations()
        assert p_atom.sum() + p_photon.sum() == pytest.approx(1.0, abs=1e-14)

    def test_decoding_targets_are_unit_states(self):
        enc = encoding.scheme(uniform_params(20), k=3)
        atom, photon = encoding.decoding_targets(enc)
        assert np.abs(atom.as_vector()).max() == pytest.approx(1 / math.sqrt(3))
        assert np.vdot(atom.as_vector(), photon.as_vector()) == 0


class TestTransferProbability:
    def test_disjoint_windows_give_zero_at_start(self):
        enc = encoding.scheme(uniform_params(16), k=2)
        p_atom, p_photon = encoding.transfer_probability(enc, 0.0)
        assert p_atom == pytest.approx(0.0, abs=1e-20)
        assert p_photon == pytest.approx(0.0, abs=1e-20)

    def test_bounded_probabilities(self):
        enc = encoding.scheme(uniform_params(14, detuning=1.3), k=2)
        times = np.linspace(0, 40, 400)
        p_atom, p_photon = encoding.transfer_probabilities(enc, times)
        assert np.all((0 <= p_atom) & (p_atom <= 1))
        assert np.all((0 <= p_photon) & (p_photon <= 1))

    def test_matches_oracle_overlap(self):
        rng = np.random.default_rng(5)
        params = uniform_params(12, coupling=float(rng.uniform(1, 12)),
                                detuning=float(rng.uniform(-4, 4)))
        enc = encoding.scheme(params, k=2)
        ham = oracle.build_hamiltonian(params)
        psi0 = encoding.encoded_initial_state(enc)
        target_atom, target_photon = encoding.decoding_targets(enc)
        for t in rng.uniform(0, 30, 6):
            p_atom, p_photon = encoding.transfer_probability(enc, float(t))
            evolved = oracle.evolve(ham, psi0, float(t)).as_vector()
            assert p_atom == pytest.approx(
                abs(np.vdot(target_atom.as_vector(), evolved)) ** 2, abs=1e-9)
            assert p_photon == pytest.approx(
                abs(np.vdot(target_photon.as_vector(), evolved)) ** 2, abs=1e-9)

    def test_single_site_scheme_reduces_to_end_site_populations(self):
        params = uniform_params(9, beta=math.pi / 2)
        enc = encoding.scheme(params, k=1)
        times = np.linspace(0, 18, 60)
        p_atom, p_photon = encoding.transfer_probabilities(enc, times)
        trace = dynamics.populations_uniform(params, times)
        np.testing.assert_allclose(p_atom, trace.p_atom[:, -1], atol=1e-12)
        np.testing.assert_allclose(p_photon, trace.p_photon[:, -1], atol=1e-12)


class TestMaxTransfer:
    def test_two_site_encoding_beats_single_site(self):
        params = uniform_params(60)
        single = encoding.max_transfer_over_time(encoding.scheme(params, k=1))
        double = encoding.max_transfer_over_time(encoding.scheme(params, k=2))
        assert double.p_atom > single.p_atom
        assert double.p_photon > single.p_photon

    def test_doubling_hopping_halves_optimal_time(self):
        slow = uniform_params(24, coupling=10.0, hopping=1.0)
        fast = uniform_params(24, coupling=20.0, hopping=2.0)  # same lambda/xi
        opt_slow = encoding.max_transfer_over_time(encoding.scheme(slow, k=2))
        opt_fast = encoding.max_transfer_over_time(encoding.scheme(fast, k=2))
        assert opt_fast.t_atom == pytest.approx(opt_slow.t_atom / 2, abs=2e-3)
        assert opt_fast.p_atom == pytest.approx(opt_slow.p_atom, abs=1e-6)

    def test_empty_window_rejected(self):
        enc = encoding.scheme(uniform_params(12), k=2)
        with pytest.raises(ValueError):
            encoding.max_transfer_over_time(enc, t_window=(5.0, 5.0))
