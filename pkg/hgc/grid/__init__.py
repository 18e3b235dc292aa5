# Copyright (c) SI-Analytics. All rights reserved.
from .convolution import group_convolve, translate_sum
from .cutoff import CutoffProfile, smooth_step
from .derivatives import (MAX_DERIVATIVE_ORDER, apply_vector_field,
                          partial_derivative, spectral_derivative)
from .diagnostics import (MOMENT_TOL, SchwartzSeminormReport, boundary_mass,
                          is_moment_free, moments, origin_derivatives,
                          schwartz_seminorms, vanishes_at_origin)
from .division import (coordinate_division, field_residual,
                       vector_field_division)
from .fourier import dft, frequencies, idft, is_power_of_two
from .grid import Grid, GridFunction, sample
from .interpolate import (Interpolator, dilate_function, interpolate,
                          resample)
from .io import load_grid_function, save_csv_slice, save_grid_function

__all__ = [
    'group_convolve', 'translate_sum', 'CutoffProfile', 'smooth_step',
    'MAX_DERIVATIVE_ORDER', 'apply_vector_field', 'partial_derivative',
    'spectral_derivative', 'MOMENT_TOL', 'SchwartzSeminormReport',
    'boundary_mass', 'is_moment_free', 'moments', 'origin_derivatives',
    'schwartz_seminorms', 'vanishes_at_origin', 'coordinate_division',
    'field_residual', 'vector_field_division', 'dft', 'frequencies', 'idft',
    'is_power_of_two',
    'Grid', 'GridFunction', 'sample', 'Interpolator', 'dilate_function',
    'interpolate', 'resample', 'load_grid_function', 'save_csv_slice',
    'save_grid_function'
]
