import math

import numpy as np
import pytest

from dmdkit.errors import DataError
from dmdkit.preprocess import (
    AugmentationSpec,
    StandardizationParams,
    apply_standardization,
    augment_derivatives,
    destandardize,
    standardize,
)
from dmdkit.timeseries import TimeSeriesFrame


def make_frame(values, names=None, dt=0.1, t0=0.0):
    values = np.asarray(values, dtype=float)
    if values.ndim == 1:
        values = values[:, None]
    names = names or tuple(f"c{j}" for j in range(values.shape[1]))
    return TimeSeriesFrame(channel_names=names, t0=t0, dt=dt, values=values)


class TestStandardize:
    def test_three_point_channel(self):
        # oracle: population convention computed directly from its definition
        data = np.array([1.0, 2.0, 3.0])
        mean = data.mean()
        std = math.sqrt(((data - mean) ** 2).mean())
        out, params = standardize(make_frame(data))
        assert params.mean[0] == pytest.approx(mean)
        assert params.std[0] == pytest.approx(std)  # sqrt(2/3)
        np.testing.assert_allclose(
            out.values[:, 0], (data - mean) / std, rtol=1e-15
        )
        np.testing.assert_allclose(
            out.values[:, 0],
            [-math.sqrt(1.5), 0.0, math.sqrt(1.5)],
            atol=1e-12,
        )

    def test_output_is_zero_mean_unit_variance(self):
        rng = np.random.default_rng(11)
        out, _ = standardize(make_frame(rng.normal(3.0, 7.0, size=(200, 4))))
        assert np.abs(out.values.mean(axis=0)).max() < 1e-12
        assert np.abs(out.values.var(axis=0) - 1.0).max() < 1e-9

    def test_idempotent_up_to_params(self):
        rng = np.random.default_rng(12)
        once, _ = standardize(make_frame(rng.normal(size=(100, 3))))
        twice, params = standardize(once)
        assert np.abs(params.mean).max() < 1e-12
        assert np.abs(params.std - 1.0).max() < 1e-9
        np.testing.assert_allclose(twice.values, once.values, atol=1e-12)

    def test_constant_channel_named_in_error(self):
        frame = make_frame(
            np.column_stack([np.arange(4.0), np.full(4, 5.0)]),
            names=("ok", "rudder"),
        )
        with pytest.raises(DataError, match="'rudder'"):
            standardize(frame)


class TestDestandardize:
    def test_round_trip(self):
        rng = np.random.default_rng(13)
        frame = make_frame(rng.normal(5.0, 2.0, size=(50, 3)))
        out, params = standardize(frame)
        back = destandardize(out, params)
        np.testing.assert_allclose(back.values, frame.values, rtol=1e-12)

    def test_zeros_map_to_mean(self):
        params = StandardizationParams(("a",), np.array([3.0]), np.array([2.0]))
        frame = make_frame(np.zeros(4), names=("a",))
        assert np.all(destandardize(frame, params).values == 3.0)

    def test_unit_values_scale(self):
        params = StandardizationParams(("a",), np.array([0.0]), np.array([2.0]))
        frame = make_frame(np.ones(4), names=("a",))
        assert np.all(destandardize(frame, params).values == 2.0)

    def test_channel_mismatch(self):
        params = StandardizationParams(("a",), np.array([0.0]), np.array([1.0]))
        frame = make_frame(np.ones(4), names=("b",))
        with pytest.raises(DataError, match="different channels"):
            destandardize(frame, params)
        with pytest.raises(DataError, match="different channels"):
            apply_standardization(frame, params)


class TestDerivativeStencils:
    def test_ramp_is_exact_everywhere(self):
        dt = 0.3
        t = np.arange(30) * dt
        out = augment_derivatives(make_frame(t, names=("f",), dt=dt))
        np.testing.assert_allclose(out.channel("f_d1"), 1.0, atol=1e-12)
        np.testing.assert_allclose(out.channel("f_d2"), 0.0, atol=1e-11)

    def test_quartic_interior_matches_analytic(self):
        dt = 0.1
        t = np.arange(40) * dt
        out = augment_derivatives(make_frame(t**4, names=("f",), dt=dt))
        np.testing.assert_allclose(
            out.channel("f_d1")[2:-2], 4 * t[2:-2] ** 3, atol=1e-9
        )
        np.testing.assert_allclose(
            out.channel("f_d2")[2:-2], 12 * t[2:-2] ** 2, atol=1e-9
        )

    def test_polynomials_deg4_exact_at_all_rows(self):
        # both stencil families must be exact on degree <= 4, including
        # the one-sided boundary rows
        rng = np.random.default_rng(5)
        dt = 0.05
        t = np.arange(25) * dt
        for _ in range(10):
            coeffs = rng.uniform(-2, 2, size=5)
            p = np.polynomial.Polynomial(coeffs)
            out = augment_derivatives(make_frame(p(t), names=("f",), dt=dt))
            np.testing.assert_allclose(
                out.channel("f_d1"), p.deriv(1)(t), atol=1e-9
            )
            np.testing.assert_allclose(
                out.channel("f_d2"), p.deriv(2)(t), atol=1e-9
            )

    def test_sine_interior_error_bound(self):
        dt = 0.01
        t = np.arange(500) * dt
        out = augment_derivatives(make_frame(np.sin(t), names=("f",), dt=dt))
        err = np.abs(out.channel("f_d1")[2:-2] - np.cos(t[2:-2]))
        assert err.max() < 1e-8

    def test_convergence_order_is_four(self):
        def interior_error(dt):
            t = np.arange(round(2.0 / dt)) * dt
            out = augment_derivatives(
                make_frame(np.sin(t), names=("f",), dt=dt),
                AugmentationSpec(max_derivative_order=1),
            )
            return np.abs(out.channel("f_d1")[2:-2] - np.cos(t[2:-2])).max()

        e1, e2 = interior_error(0.02), interior_error(0.01)
        exponent = math.log2(e1 / e2)
        assert 3.5 <= exponent <= 4.5

    def test_channel_layout(self):
        frame = make_frame(np.random.default_rng(0).normal(size=(10, 2)),
                           names=("a", "b"))
        out = augment_derivatives(frame, AugmentationSpec(2))
        assert out.channel_names == ("a", "b", "a_d1", "b_d1", "a_d2", "b_d2")
        assert out.n_steps == frame.n_steps
        out1 = augment_derivatives(frame, AugmentationSpec(1))
        assert out1.channel_names == ("a", "b", "a_d1", "b_d1")
        out0 = augment_derivatives(frame, AugmentationSpec(0))
        assert out0.channel_names == ("a", "b")

    def test_too_short_frames_rejected(self):
        f4 = make_frame(np.arange(4.0))
        with pytest.raises(DataError, match="at least 6"):
            augment_derivatives(f4, AugmentationSpec(2))
        with pytest.raises(DataError, match="at least 5"):
            augment_derivatives(f4, AugmentationSpec(1))
        f5 = make_frame(np.arange(5.0))
        assert augment_derivatives(f5, AugmentationSpec(1)).n_channels == 2

    def test_unsupported_order_rejected(self):
        with pytest.raises(DataError, match="0, 1 or 2"):
            AugmentationSpec(max_derivative_order=3)
        with pytest.raises(DataError, match="4th-order"):
            AugmentationSpec(stencil_order=2)


def test_pipeline_order_gives_unit_variance_everywhere():
    # derivatives first, then joint standardization: every augmented
    # channel entering the fit has unit variance
    rng = np.random.default_rng(21)
    t = np.arange(300) * 0.02
    values = np.column_stack(
        [np.sin(1.3 * t + 0.2), np.cos(2.1 * t), np.sin(0.4 * t + 1.0)]
    ) + 0.01 * rng.normal(size=(300, 3))
    aug = augment_derivatives(make_frame(values, dt=0.02))
    out, _ = standardize(aug)
    assert out.n_channels == 9
    assert np.abs(out.values.var(axis=0) - 1.0).max() < 1e-9
    assert np.abs(out.values.mean(axis=0)).max() < 1e-12
