import math

import numpy as np
import pytest

from hgc.groups import (annulus_integral, ball_volume, build_group,
                        norm_constants, radial_integral)


@pytest.mark.parametrize('dim', [1, 2, 3])
def test_ball_volume_euclidean(dim):
    expected = math.pi**(dim / 2) / math.gamma(1 + dim / 2)
    assert ball_volume(build_group(f'euclidean:{dim}')) == pytest.approx(
        expected, rel=1e-12)


def test_ball_volume_heisenberg():
    group = build_group('heisenberg:1')
    # Monte Carlo estimate of |{x^4 + y^4 + t^2 <= 1}| inside [-1, 1]^3
    rng = np.random.default_rng(0)
    x = rng.uniform(-1.0, 1.0, size=(200000, 3))
    estimate = 8.0 * np.mean(group.norm(x) <= 1.0)
    assert ball_volume(group) == pytest.approx(estimate, rel=0.02)


def test_annulus_integral():
    line = build_group('euclidean:1')
    assert annulus_integral(line, -2.0, 1.0) == pytest.approx(2.0, rel=1e-8)
    with pytest.raises(ValueError):
        annulus_integral(line, -1.0, 1.0)
    with pytest.raises(ValueError):
        annulus_integral(line, -2.0, 0.0)

    group = build_group('heisenberg:1')
    p = -5.0
    scaled = [
        annulus_integral(group, p, r) / r**(p + 4.0)
        for r in (0.5, 1.0, 2.0, 4.0)
    ]
    assert (max(scaled) - min(scaled)) / max(scaled) < 1e-3


def test_radial_integral():
    plane = build_group('euclidean:2')
    value = radial_integral(plane, lambda rho: math.exp(-math.pi * rho**2))
    assert value == pytest.approx(1.0, rel=1e-8)
    ring = radial_integral(plane, lambda rho: 1.0, r_min=1.0, r_max=2.0)
    assert ring == pytest.approx(3.0 * math.pi, rel=1e-10)


def test_norm_constants():
    constants = norm_constants(build_group('euclidean:1'), max_samples=4096)
    assert constants.C_triangle == pytest.approx(1.0, abs=1e-9)
    assert 0.5 <= constants.c_halfnorm < 0.52
    assert constants.history[0][0] == 512
    assert constants.samples == constants.history[-1][0]

    constants = norm_constants(build_group('heisenberg:1'), max_samples=2048)
    assert constants.C_triangle > 0.5
    assert 0.0 < constants.c_halfnorm <= 1.0
    assert len(constants.history) >= 2
