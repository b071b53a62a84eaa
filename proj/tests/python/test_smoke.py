"""Smoke tests for the python bindings."""

import cmath
import math

import numpy as np
import pytest

import qps


def test_kinematics_identities():
    n = 7
    v = qps.position_translation_op(n)
    u = qps.momentum_phase_op(n)
    f = qps.finite_fourier(n)
    eye = np.eye(n)
    assert np.allclose(np.linalg.matrix_power(v, n), eye, atol=1e-12)
    assert np.allclose(np.linalg.matrix_power(u, n), eye, atol=1e-12)
    assert np.allclose(np.linalg.matrix_power(f, 4), eye, atol=1e-12)
    assert np.allclose(f.conj().T @ v @ f, u, atol=1e-12)


def test_weyl_phase_and_residual():
    assert qps.weyl_relation_residual(5, 2, 3) < 1e-12
    assert abs(qps.weyl_phase(5, 2, 3) - cmath.exp(2.4j * math.pi)) < 1e-12


def test_wigner_transform_roundtrip():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    a = 0.5 * (a + a.conj().T)
    values = qps.ww_transform(a)
    assert np.abs(values.imag).max() < 1e-10
    back = qps.ww_inverse(values)
    assert np.abs(back - a).max() < 1e-10


def test_wigner_negativity_of_mixed_state():
    assert qps.wigner_negativity(np.eye(3) / 3.0) == pytest.approx(0.0, abs=1e-12)


def test_coherent_machinery():
    z = 1.0 + 0.5j
    state = qps.coherent_state(64, z)
    assert np.linalg.norm(state) == pytest.approx(1.0, abs=1e-10)
    d = qps.displacement(64, z)
    vac = np.zeros(64, complex)
    vac[0] = 1.0
    assert np.abs(d @ vac - state).max() < 1e-8
    assert qps.coherent_overlap(z, z) == pytest.approx(1.0)


def test_weak_value_qubit_formula():
    theta, phi = 1.1, 0.6
    alpha = np.array([1.0, 0.0], complex)
    beta = np.array([math.cos(theta / 2), cmath.exp(-1j * phi) * math.sin(theta / 2)])
    sx = np.array([[0, 1], [1, 0]], complex)
    w = qps.weak_value(alpha, beta, sx)
    assert w == pytest.approx(math.tan(theta / 2) * cmath.exp(1j * phi), abs=1e-12)


def test_coherent_pointer_shift_orders():
    eps = 1e-3
    rep = qps.coherent_pointer_shift(2j, 1j, eps)
    assert rep["p"]["predicted"] == pytest.approx(eps * 2 * math.sqrt(2), abs=1e-15)
    assert rep["p"]["order_residual"] < 5 * eps * eps


def test_classical_limit():
    q = (0, 0, 0, 1, 0, 0)
    p = (0, 0, 0, 0, 1, 0)
    moyal, poisson, max_diff = qps.classical_limit_check(q, p)
    assert max_diff < 1e-6
    assert poisson[0, 0] == pytest.approx(1.0)


def test_geometry_phase_identity():
    rng = np.random.default_rng(3)

    def ray():
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        return v / np.linalg.norm(v)

    for _ in range(20):
        a0, a1, b = ray(), ray(), ray()
        theta = qps.bargmann_invariant(a0, a1, b)
        omega = qps.solid_angle(a0, a1, b)
        assert math.remainder(theta + omega / 2, 2 * math.pi) == pytest.approx(0.0, abs=1e-9)


def test_dso_cuo_dimensions():
    rng = np.random.default_rng(5)
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    dso, cuo = qps.operator_space_dims(psi)
    assert (dso, cuo) == (10, 6)


def test_modular_crt():
    rep = qps.crt_relabel_check(2, 3)
    assert rep["orbit_length"] == 6
    assert rep["single_line_cover"]
    assert rep["conjugation_residual"] < 1e-12
    counter = qps.crt_relabel_check(2, 2)
    assert counter["orbit_length"] == 2
    assert counter["conjugation_residual"] is None


def test_modular_spin_algebra():
    s1, s2, s3 = qps.modular_spin_ops(16, 1.0)
    r1 = qps.restrict_to_slits(s1, 16, 1.0)
    r2 = qps.restrict_to_slits(s2, 16, 1.0)
    r3 = qps.restrict_to_slits(s3, 16, 1.0)
    assert np.abs(r1 @ r2 - r2 @ r1 - 2j * r3).max() < 1e-12


def test_cat_experiment():
    p_even = qps.cat_click_probability(10.0, 0.0, math.pi / 2)
    p_odd = qps.cat_click_probability(10.0, math.pi, math.pi / 2)
    assert abs(p_even - 0.93) <= 0.02
    assert abs(p_odd - 0.35) <= 0.02


def test_phase_game_statistics():
    mean, stderr = qps.qubit_phase_game(math.pi / 3, 100000, seed=42)
    assert abs(mean - 0.5) < 4 * stderr


def test_error_paths():
    with pytest.raises(ValueError):
        qps.ww_transform(np.eye(4))  # even dimension
    with pytest.raises(RuntimeError):
        qps.weak_value(
            np.array([1, 0], complex), np.array([0, 1], complex),
            np.array([[1, 0], [0, -1]], complex))
