from unittest.mock import patch

import numpy as np
import pytest
import ray

from hgc.utils import parallel_map


def square(x):
    return x * x


class Scaled:

    def __init__(self, factor):
        self.factor = factor

    def __call__(self, x):
        return self.factor * np.asarray(x)


@pytest.fixture
def init_ray():
    if ray.is_initialized():
        ray.shutdown()
    ray.init(num_cpus=2, local_mode=True)
    yield
    ray.shutdown()


def test_serial_without_ray():
    with patch('ray.is_initialized', return_value=False):
        assert parallel_map(square, range(5)) == [0, 1, 4, 9, 16]
    assert parallel_map(square, []) == []


def test_ray_tasks(init_ray):
    assert parallel_map(square, [1, 2, 3]) == [1, 4, 9]
    assert parallel_map(square, [3]) == [9]


def test_ray_callable_instance(init_ray):
    results = parallel_map(Scaled(2.0), [np.arange(3), np.ones(2)])
    np.testing.assert_allclose(results[0], [0.0, 2.0, 4.0])
    np.testing.assert_allclose(results[1], [2.0, 2.0])
