import math

import numpy as np
import pytest

import qgabor


def test_quaternion_algebra():
    i = qgabor.Quaternion(0, 1, 0, 0)
    j = qgabor.Quaternion(0, 0, 1, 0)
    k = i * j
    assert (k.w, k.x, k.y, k.z) == (0, 0, 0, 1)
    q = qgabor.Quaternion(1, 1, 1, 1)
    assert abs(q) == pytest.approx(2.0)
    assert (q.conj() * q).scalar_part() == pytest.approx(4.0)


def test_qft_round_trip():
    grid = qgabor.square_grid(32, -4.0, 4.0)
    rng = np.random.default_rng(5)
    f = qgabor.QField(grid, rng.standard_normal((32, 32, 4)))
    back = qgabor.qft_inverse(qgabor.qft_forward(f), grid.x1_min, grid.x2_min)
    assert np.max(np.abs(back.to_numpy() - f.to_numpy())) < 1e-12


def test_gaussian_spectrum_and_uncertainty():
    grid = qgabor.square_grid(256, -6.0, 6.0)
    w = qgabor.sample_window("gaussian", 1.0, grid)
    assert w.norm_sq() == pytest.approx(0.5, abs=1e-10)
    spec = qgabor.qft_forward(w).to_numpy()
    assert spec[0, 0, 0] == pytest.approx(1.0, abs=1e-8)  # DC bin of exp(-pi w^2)

    rep = qgabor.uncertainty(w)
    for p in rep["products"]:
        assert p == pytest.approx(1.0 / (4.0 * math.pi), abs=1e-6)


def test_box_system_is_onb():
    bounds = qgabor.optimal_frame_bounds("box", 2.0, 2.0, r=8, s=8, trunc=3)
    assert bounds["A"] == pytest.approx(1.0, abs=1e-12)
    assert bounds["B"] == pytest.approx(1.0, abs=1e-12)
    assert qgabor.frame_decision("box", 2.0, 2.0)["verdict"] == "onb"


def test_gaussian_is_not_a_frame_at_critical_density():
    zero = qgabor.gaussian_zak_critical_value(1.0, trunc=8)
    assert zero["abs_value"] <= 1e-13
    assert zero["paired_cancellation"]
    decision = qgabor.frame_decision("gaussian", 1.0, 1.0)
    assert decision["verdict"] == "not_frame"
    assert decision["B"] == pytest.approx(1.3932, abs=1e-3)


def test_gabor_empirical_bounds_box():
    grid = qgabor.square_grid(32, 0.0, 1.0)
    box = qgabor.sample_window("box", 1.0, grid)
    est = qgabor.gabor_frame_bounds(box, 1.0, 1.0, n_range=15, trials=3, seed=9)
    assert est["A"] == pytest.approx(1.0, abs=1e-6)
    assert est["B"] == pytest.approx(1.0, abs=1e-6)


def test_qf2_file_round_trip(tmp_path):
    grid = qgabor.square_grid(8, 0.0, 1.0)
    rng = np.random.default_rng(11)
    f = qgabor.QField(grid, rng.standard_normal((8, 8, 4)))
    path = str(tmp_path / "f.qf2")
    qgabor.write_qf2(path, f)
    back = qgabor.read_qf2(path)
    assert back.grid == grid
    assert np.array_equal(back.to_numpy(), f.to_numpy())
