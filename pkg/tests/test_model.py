import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cavitychain import model

finite = st.floats(allow_nan=False, allow_infinity=False)


class TestEffectiveCoupling:
    def test_direct_substitution(self):
        assert model.effective_coupling(1.0, 1.0, 10.0) == pytest.approx(0.1)
        assert model.effective_coupling(1.0, 2.0, 4.0) == pytest.approx(0.5)

    def test_zero_coupling(self):
        assert model.effective_coupling(0.0, 7.3, 2.0) == 0.0

    def test_zero_detuning_rejected(self):
        with pytest.raises(ValueError):
            model.effective_coupling(1.0, 1.0, 0.0)


class TestSystemParams:
    def test_valid_uniform(self):
        p = model.SystemParams(n_cavities=5, coupling=1.0, hopping=0.5)
        assert not p.is_staggered

    def test_valid_staggered(self):
        p = model.SystemParams(n_cavities=5, coupling=1.0, hopping=0.5,
                               pattern=model.STAGGERED, kappa=-0.2)
        assert p.is_staggered

    @pytest.mark.parametrize("kwargs", [
        dict(n_cavities=0, coupling=1.0, hopping=1.0),
        dict(n_cavities=5, coupling=-1.0, hopping=1.0),
        dict(n_cavities=5, coupling=1.0, hopping=-0.1),
        dict(n_cavities=5, coupling=1.0, hopping=1.0, beta=2.0),
        dict(n_cavities=5, coupling=1.0, hopping=1.0, beta=-0.1),
        dict(n_cavities=5, coupling=1.0, hopping=1.0, kappa=0.3),
        dict(n_cavities=5, coupling=1.0, hopping=1.0, pattern="ring"),
        dict(n_cavities=4, coupling=1.0, hopping=1.0, pattern=model.STAGGERED, kappa=0.3),
        dict(n_cavities=5, coupling=1.0, hopping=1.0, pattern=model.STAGGERED, kappa=1.0),
        dict(n_cavities=5, coupling=1.0, hopping=1.0, pattern=model.STAGGERED),
    ])
    def test_invalid_rejected(self, kwargs):
        with pytest.raises(ValueError):
            model.SystemParams(**kwargs)

    def test_kappa_zero_staggered_allowed(self):
        model.SystemParams(n_cavities=5, coupling=1.0, hopping=1.0,
                           pattern=model.STAGGERED, kappa=0.0)


class TestJCSpectrum:
    def test_zero_coupling_diagonal(self):
        # positive detuning: the upper level is the atomic one
        p = model.SingleCavityParams(omega_a=5.0, omega_c=1.0, coupling=0.0, n_photons=2)
        pair = model.jc_spectrum(p)
        assert pair.energy_plus == pytest.approx(p.omega_a + 0 * p.omega_c)
        assert pair.energy_minus == pytest.approx(2 * p.omega_c)
        assert pair.mixing_angle == pytest.approx(0.0)

    def test_resonant_two_photon_splitting(self):
        lam = 3.7
        p = model.SingleCavityParams(omega_a=2.0, omega_c=1.0, coupling=lam, n_photons=2)
        pair = model.jc_spectrum(p)
        assert pair.energy_plus - pair.energy_minus == pytest.approx(2 * math.sqrt(2) * lam)

    def test_sector_below_two_photons_rejected(self):
        with pytest.raises(ValueError):
            model.SingleCavityParams(omega_a=1.0, omega_c=1.0, coupling=1.0, n_photons=1)

    @settings(max_examples=60, deadline=None)
    @given(omega_a=st.floats(-10, 10), omega_c=st.floats(-5, 5),
           lam=st.floats(0, 8), n=st.integers(2, 6))
    def test_trace_identity(self, omega_a, omega_c, lam, n):
        p = model.SingleCavityParams(omega_a=omega_a, omega_c=omega_c,
                                     coupling=lam, n_photons=n)
        pair = model.jc_spectrum(p)
        trace = np.trace(model.single_cavity_block(p))
        assert pair.energy_plus + pair.energy_minus == pytest.approx(trace, abs=1e-10)

    @settings(max_examples=60, deadline=None)
    @given(omega_a=st.floats(-10, 10), omega_c=st.floats(-5, 5),
           lam=st.floats(0, 8), n=st.integers(2, 6))
    def test_eigenvectors_diagonalize_block(self, omega_a, omega_c, lam, n):
        p = model.SingleCavityParams(omega_a=omega_a, omega_c=omega_c,
                                     coupling=lam, n_photons=n)
        pair = model.jc_spectrum(p)
        h = model.single_cavity_block(p)
        v_plus, v_minus = model.dressed_vectors(pair)
        assert np.linalg.norm(h @ v_plus - pair.energy_plus * v_plus) < 1e-12 * max(1, abs(pair.energy_plus))
        assert np.linalg.norm(h @ v_minus - pair.energy_minus * v_minus) < 1e-12 * max(1, abs(pair.energy_minus))
        assert abs(np.dot(v_plus, v_minus)) < 1e-12
        assert np.linalg.norm(v_plus) == pytest.approx(1.0, abs=1e-12)


class TestRestrictedState:
    def test_norm_enforced(self):
        with pytest.raises(ValueError):
            model.RestrictedState([0.5, 0.0], [0.0, 0.0])

    def test_immutable(self):
        state = model.localized_state(3, 1, 0.3)
        with pytest.raises(AttributeError):
            state.atom_amps = None
        with pytest.raises(ValueError):
            state.atom_amps[0] = 1.0

    def test_vector_round_trip(self):
        state = model.localized_state(4, 2, 0.7)
        again = model.RestrictedState.from_vector(state.as_vector())
        np.testing.assert_array_equal(again.atom_amps, state.atom_amps)
        np.testing.assert_array_equal(again.photon_amps, state.photon_amps)


class TestInitialState:
    def _params(self, beta):
        return model.SystemParams(n_cavities=4, coupling=1.0, hopping=1.0, beta=beta)

    def test_pure_photon_injection(self):
        state = model.initial_state(self._params(0.0))
        assert state.photon_amps[0] == 1.0
        assert np.all(state.atom_amps == 0)

    def test_pure_atom_injection(self):
        state = model.initial_state(self._params(math.pi / 2))
        assert state.atom_amps[0] == pytest.approx(1.0)
        assert abs(state.photon_amps[0]) < 1e-16

    def test_balanced_injection(self):
        state = model.initial_state(self._params(math.pi / 4))
        assert state.atom_amps[0] == pytest.approx(1 / math.sqrt(2))
        assert state.photon_amps[0] == pytest.approx(1 / math.sqrt(2))

    @settings(max_examples=50, deadline=None)
    @given(beta=st.floats(0, math.pi / 2))
    def test_unit_norm_for_every_beta(self, beta):
        state = model.initial_state(self._params(beta))
        p_atom, p_photon = state.populations()
        assert p_atom.sum() + p_photon.sum() == pytest.approx(1.0, abs=1e-15)

    def test_site_out_of_range(self):
        with pytest.raises(ValueError):
            model.localized_state(3, 4, 0.0)
