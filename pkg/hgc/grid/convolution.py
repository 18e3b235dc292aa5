# Copyright (c) SI-Analytics. All rights reserved.
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, Union

import numpy as np
from scipy import fft, ndimage

from hgc.groups import HomogeneousGroup
from hgc.utils import GridError, get_root_logger, parallel_map
from .grid import Grid, GridFunction
from .interpolate import SNAP_TOL, Interpolator, fractional_index

OUTSIDE_MASS_WARNING = 0.2
TILE_SIZE = 4096
NODE_TILE = 256
CHUNK_ENTRIES = 1 << 20
PAD = 2
METHODS = ('auto', 'direct', 'layered')

Target = Union[GridFunction, Callable[[np.ndarray], np.ndarray]]


class _TileSum:
    """Per-tile kernel of the direct translate sum, picklable for ray."""

    def __init__(self, group, shifts, weights, target, side, chunk):
        self.group = group
        self.shifts = shifts
        self.weights = weights
        self.target = target
        self.side = side
        self.chunk = chunk

    def __call__(self, points: np.ndarray):
        total = np.zeros(len(points), dtype=complex)
        outside = 0.0
        interp = self.target if isinstance(self.target, Interpolator) else None
        for start in range(0, len(self.shifts), self.chunk):
            shifts = self.shifts[None, start:start + self.chunk]
            weights = self.weights[start:start + self.chunk]
            if self.side == 'right':
                args = self.group.multiply(points[:, None], shifts)
            else:
                args = self.group.multiply(shifts, points[:, None])
            total += self.target(args) @ weights
            if interp is not None:
                missed = ~interp.inside(fractional_index(interp.grid, args))
                outside += float(np.abs(weights) @ missed.sum(axis=0))
        return total, outside


def _snap(value: float) -> float:
    nearest = round(value)
    return float(nearest) if abs(value - nearest) < SNAP_TOL else value


def _spline_taps(frac: float, order: int):
    """Offsets and weights of the B-spline stencil at ``q + frac``."""
    if order == 1:
        return (0, 1), (1.0 - frac, frac)
    t = frac
    return (-1, 0, 1, 2), ((1.0 - t)**3 / 6.0,
                           (4.0 - 6.0 * t**2 + 3.0 * t**3) / 6.0,
                           (1.0 + 3.0 * t + 3.0 * t**2 - 3.0 * t**3) / 6.0,
                           t**3 / 6.0)


@dataclass
class _Layout:
    """Axis bookkeeping of the layered path.

    Arrays are stored with the base axes first and the central axes last.
    ``points`` are the output points of the base layer with zero central
    coordinates; ``central_nodes`` are the dilated central quadrature
    nodes per central axis.
    """
    base: Tuple[int, ...]
    central: Tuple[int, ...]
    sizes: Tuple[int, ...]
    steps: Tuple[float, ...]
    padded: Tuple[int, ...]
    points: np.ndarray
    central_nodes: List[np.ndarray]

    @property
    def freqs(self) -> List[np.ndarray]:
        return [fft.fftfreq(p) for p in self.padded]


class _LayerSum:
    """Per-tile kernel of the layered translate sum, picklable for ray.

    For a base node ``u_B`` the base-layer argument ``x_B - delta(u_B)`` is
    the output grid moved by one offset, so the interpolation stencil is
    shared by every output point and reduces to shifted slices of
    ``spectrum``. The central argument is ``x_C + a(x_B, u_B) - delta(u_C)``
    and enters as a phase.
    """

    def __init__(self, group, layout, spectrum, nodes, weights, magnitude,
                 side, order):
        self.group = group
        self.layout = layout
        self.spectrum = spectrum
        self.nodes = nodes
        self.weights = weights
        self.magnitude = magnitude
        self.side = side
        self.order = order

    def _shifted(self, node: np.ndarray):
        lay = self.layout
        block = self.spectrum
        region = []
        for axis, b in enumerate(lay.base):
            n = lay.sizes[b]
            delta = _snap(-node[axis] / lay.steps[b])
            lo = max(0, math.ceil(-delta))
            hi = min(n - 1, math.floor(n - 1 - delta))
            if lo > hi:
                return None, None
            q = math.floor(delta)
            offsets, taps = _spline_taps(delta - q, self.order)
            index = [slice(None)] * block.ndim
            parts = []
            for offset, tap in zip(offsets, taps):
                start = lo + q + offset + PAD
                index[axis] = slice(start, start + hi - lo + 1)
                parts.append(tap * block[tuple(index)])
            block = sum(parts)
            region.append(slice(lo, hi + 1))
        return tuple(region), block

    def _offsets(self, points: np.ndarray, node: np.ndarray) -> np.ndarray:
        lay = self.layout
        y = np.zeros(points.shape[-1])
        y[list(lay.base)] = node
        shift = self.group.inverse(y)
        if self.side == 'right':
            args = self.group.multiply(points, shift)
        else:
            args = self.group.multiply(shift, points)
        return args[..., list(lay.central)]

    def __call__(self, indices: np.ndarray):
        lay = self.layout
        nc = len(lay.central)
        acc = np.zeros(
            tuple(lay.sizes[b] for b in lay.base) + lay.padded, dtype=complex)
        inside = 0.0
        freqs = lay.freqs
        for j in indices:
            region, block = self._shifted(self.nodes[j])
            if region is None:
                continue
            mass = self.magnitude[j]
            if not nc:
                acc[region] += block * self.weights[j]
                inside += float(mass) * block.size
                continue
            offsets = self._offsets(lay.points[region], self.nodes[j])
            lead = offsets.shape[:-1]
            phase = 0.0
            count = 1.0
            for c, (axis, freq) in enumerate(zip(lay.central, freqs)):
                a = offsets[..., c] / lay.steps[axis]
                shape = (1, ) * c + (-1, ) + (1, ) * (nc - c - 1)
                phase = phase + a.reshape(lead + (1, ) * nc) * \
                    freq.reshape((1, ) * len(lead) + shape)
                # output samples whose central argument stays in the box
                delta = a[..., None] - lay.central_nodes[c] / lay.steps[axis]
                n = lay.sizes[axis]
                low = np.maximum(0, np.ceil(-delta - SNAP_TOL))
                high = np.minimum(n - 1, np.floor(n - 1 - delta + SNAP_TOL))
                hits = np.clip(high - low + 1, 0, None)
                count = count * hits.reshape(lead + shape)
            acc[region] += block * np.exp(2j * np.pi * phase) * self.weights[j]
            inside += float(np.sum(count * mass))
        return acc, inside


def _central_reach(group, points, nodes, layout, side) -> np.ndarray:
    """Largest ``|a(x_B, u_B)|`` per central axis over all pairs."""
    flat = points.reshape(-1, points.shape[-1])
    y = np.zeros((len(nodes), flat.shape[-1]))
    y[:, list(layout.base)] = nodes
    shifts = group.inverse(y)
    reach = np.zeros(len(layout.central))
    chunk = max(1, CHUNK_ENTRIES // len(flat))
    for start in range(0, len(shifts), chunk):
        s = shifts[None, start:start + chunk]
        if side == 'right':
            args = group.multiply(flat[:, None], s)
        else:
            args = group.multiply(s, flat[:, None])
        reach = np.maximum(
            reach,
            np.abs(args[..., list(layout.central)]).max(axis=(0, 1)))
    return reach


def _layered_sum(group: HomogeneousGroup, weights: GridFunction,
                 target: GridFunction, side: str, scale: float, order: int,
                 atol: float, central: Tuple[int, ...]):
    """Translate sum on the target grid for laws of step at most two.

    The target is interpolated along the base axes with the spline
    stencil of ``order`` and trigonometrically along the central axes,
    which are zero-padded far enough that no translate wraps around.

    Returns:
        tuple[GridFunction, float]: The sums and the fraction of the
        quadrature mass that fell outside the box.
    """
    if order not in (1, 3):
        raise GridError(f'interpolation order must be 1 or 3, got {order}')
    grid, wgrid = target.grid, weights.grid
    dim = group.dim
    base = tuple(i for i in range(dim) if i not in central)
    perm = base + central
    nb, nc = len(base), len(central)
    exps = group.exponents
    axes, waxes = grid.axes(), wgrid.axes()

    w = np.transpose(weights.values, perm)
    magnitude = np.abs(w)
    w = np.where(magnitude > atol * magnitude.max(), w, 0.0)
    w = w * wgrid.cell_volume
    num_nodes = int(np.prod(w.shape[:nb]))
    magnitude = np.abs(w).reshape((num_nodes, ) + w.shape[nb:])
    active = np.flatnonzero(magnitude.reshape(num_nodes, -1).max(axis=1))
    if not len(active):
        return GridFunction(grid, np.zeros(grid.shape, dtype=complex)), 0.0

    mesh = np.meshgrid(*[axes[b] for b in base], indexing='ij')
    points = np.zeros(mesh[0].shape + (dim, ))
    for axis, b in enumerate(base):
        points[..., b] = mesh[axis]
    wmesh = np.meshgrid(
        *[waxes[b] * scale**exps[b] for b in base], indexing='ij')
    nodes = np.stack([m.reshape(-1) for m in wmesh], axis=-1)
    central_nodes = [waxes[c] * scale**exps[c] for c in central]

    layout = _Layout(base, central, grid.sizes, grid.steps, (), points,
                     central_nodes)
    if nc:
        reach = _central_reach(group, points, nodes[active], layout, side)
        layout.padded = tuple(
            fft.next_fast_len(grid.sizes[c] + math.ceil(
                (r + np.abs(u).max()) / grid.steps[c]) + 1)
            for c, r, u in zip(central, reach, central_nodes))

    coeffs = np.transpose(target.values, perm).astype(complex)
    if order == 3:
        for axis in range(nb):
            coeffs = (
                ndimage.spline_filter1d(
                    coeffs.real, 3, axis=axis, mode='mirror') +
                1j * ndimage.spline_filter1d(
                    coeffs.imag, 3, axis=axis, mode='mirror'))
    coeffs = np.pad(coeffs, [(PAD, PAD)] * nb + [(0, 0)] * nc, mode='reflect')
    spec_w = w.astype(complex)
    if nc:
        coeffs = np.pad(coeffs, [(0, 0)] * nb + [
            (0, p - grid.sizes[c]) for p, c in zip(layout.padded, central)
        ])
        coeffs = fft.fftn(coeffs, axes=tuple(range(nb, dim)))
        for c, (axis, freq) in enumerate(zip(central, layout.freqs)):
            phase = np.exp(-2j * np.pi * np.outer(
                central_nodes[c] / grid.steps[axis], freq))
            spec_w = np.moveaxis(
                np.tensordot(spec_w, phase, axes=([nb + c], [0])), -1, nb + c)
    spec_w = spec_w.reshape((num_nodes, ) + layout.padded)

    kernel = _LayerSum(group, layout, coeffs, nodes, spec_w, magnitude, side,
                       order)
    tiles = [
        active[start:start + NODE_TILE]
        for start in range(0, len(active), NODE_TILE)
    ]
    results = parallel_map(kernel, tiles)
    acc = sum(r[0] for r in results)
    inside = sum(r[1] for r in results)
    if nc:
        acc = fft.ifftn(acc, axes=tuple(range(nb, dim)))
        acc = acc[(slice(None), ) * nb +
                  tuple(slice(0, grid.sizes[c]) for c in central)]
    values = np.transpose(acc, np.argsort(perm))
    total = grid.num_points * float(magnitude.sum())
    return GridFunction(grid, values), 1.0 - inside / total


def _warn_outside(fraction: float) -> None:
    if fraction > OUTSIDE_MASS_WARNING:
        get_root_logger().warning(
            f'{fraction:.1%} of the quadrature mass of a translate sum '
            'fell outside the grid box')


def translate_sum(group: HomogeneousGroup,
                  weights: GridFunction,
                  target: Target,
                  side: str = 'right',
                  scale: float = 1.0,
                  order: int = 1,
                  atol: float = 0.0,
                  out_grid: Optional[Grid] = None,
                  method: str = 'auto') -> GridFunction:
    """Quadrature of a weighted average of translates.

    With ``y = delta_scale(u)``::

        side='right':  F(x) = int w(u) target(x y^{-1}) du
        side='left':   F(x) = int w(u) target(y^{-1} x) du

    ``u`` runs over the grid of ``weights`` with its cell volume; weights
    with ``|w| <= atol * max|w|`` are skipped. A :class:`GridFunction`
    target vanishes outside its box; a callable target is evaluated
    directly.

    Two paths compute the sum. ``'direct'`` interpolates the target at
    every pair of output point and node. ``'layered'`` needs a grid
    target sampled on ``out_grid`` and a law of step at most two (see
    :meth:`~hgc.groups.GroupLaw.central_coordinates`): it interpolates
    along the uncorrected axes with a stencil shared by all output points
    and moves along the central axes by phases of a zero-padded DFT, so
    a translate sum costs one pass over the base-layer node pairs.
    ``'auto'`` takes the layered path whenever it applies.

    Args:
        group (HomogeneousGroup): The group.
        weights (GridFunction): The weight ``w``.
        target (GridFunction | Callable): The translated function.
        side (str): ``'right'`` or ``'left'``, see above.
        scale (float): Dilation applied to the quadrature nodes.
        order (int): Interpolation order for grid targets.
        atol (float): Relative skip tolerance for small weights.
        out_grid (Grid, optional): Output grid. Defaults to the grid of a
            grid target, else the grid of ``weights``.
        method (str): ``'auto'``, ``'direct'`` or ``'layered'``.

    Returns:
        GridFunction: The sums ``F`` on ``out_grid``.
    """
    if side not in ('left', 'right'):
        raise GridError(f'side must be "left" or "right", got {side}')
    if method not in METHODS:
        raise GridError(f'method must be one of {METHODS}, got {method}')
    if weights.grid.dim != group.dim:
        raise GridError(f'{weights.grid.dim}-dim grid for a {group.dim}-dim '
                        'group')
    if isinstance(target, GridFunction):
        if target.grid.dim != group.dim:
            raise GridError(f'{target.grid.dim}-dim target for a '
                            f'{group.dim}-dim group')
        out_grid = out_grid or target.grid
    else:
        out_grid = out_grid or weights.grid

    values = weights.values.reshape(-1)
    magnitude = np.abs(values)
    peak = magnitude.max() if magnitude.size else 0.0
    if peak == 0.0:
        return GridFunction(out_grid, np.zeros(out_grid.shape))

    central = group.law.central_coordinates()
    layered = isinstance(target, GridFunction) and central is not None \
        and out_grid == target.grid
    if method == 'layered' and not layered:
        raise GridError('the layered path needs a grid target sampled on the '
                        'output grid and a law of step at most two')
    if layered and method != 'direct':
        out, fraction = _layered_sum(group, weights, target, side, scale,
                                     order, atol, central)
        _warn_outside(fraction)
        return out

    keep = magnitude > atol * peak
    nodes = weights.grid.flat_points()[keep]
    shifts = group.inverse(group.dilate(nodes, scale))
    w = values[keep] * weights.grid.cell_volume

    points = out_grid.flat_points()
    chunk = max(1, CHUNK_ENTRIES // min(TILE_SIZE, len(points)))
    evaluator = Interpolator(target, order) if isinstance(
        target, GridFunction) else target
    kernel = _TileSum(group, shifts, w, evaluator, side, chunk)
    tiles = [
        points[start:start + TILE_SIZE]
        for start in range(0, len(points), TILE_SIZE)
    ]
    results = parallel_map(kernel, tiles)
    total = np.concatenate([r[0] for r in results]).reshape(out_grid.shape)

    if isinstance(target, GridFunction):
        outside = sum(r[1] for r in results)
        _warn_outside(outside / (len(points) * float(np.abs(w).sum())))
    return GridFunction(out_grid, total)


def group_convolve(group: HomogeneousGroup,
                   f: GridFunction,
                   h: GridFunction,
                   interpolate: str = 'left',
                   order: int = 1,
                   atol: float = 0.0,
                   method: str = 'auto') -> GridFunction:
    """Group convolution ``(f * h)(x) = int f(x y^{-1}) h(y) dy``.

    The Haar measure is the Lebesgue measure. ``interpolate`` names the
    factor evaluated off-grid: ``'left'`` sums ``h(y) f(x y^{-1})``,
    ``'right'`` sums ``f(z) h(z^{-1} x)`` after ``z = x y^{-1}``.
    ``method`` selects the path of :func:`translate_sum`.

    Raises:
        GridError: If the grids differ or do not match the group.
    """
    if f.grid != h.grid:
        raise GridError('convolution factors live on different grids')
    if interpolate == 'left':
        return translate_sum(
            group, h, f, 'right', order=order, atol=atol, method=method)
    if interpolate == 'right':
        return translate_sum(
            group, f, h, 'left', order=order, atol=atol, method=method)
    raise GridError(f'interpolate must be "left" or "right", got '
                    f'{interpolate}')
