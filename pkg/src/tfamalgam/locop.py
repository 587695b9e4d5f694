"""Localization operators: application, weak pairing, kernels, and Schur bounds.

An operator with phase-space symbol a and windows (phi1, phi2) acts as

    A f = synthesis(a . stft(f, phi1), phi2),

equivalently as the integral operator with kernel

    K(x, y) = sum_{j,k} a(t_j, w_k) M_{w_k} T_{t_j} phi2(x)
                          conj(M_{w_k} T_{t_j} phi1(y)) * cell.

The two routes are the same quadrature re-associated, so they agree to
round-off; the kernel route feeds the Schur-type bounds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import (
    Grid1D,
    SampledSignal,
    SampledSymbol,
    as_exponent,
    make_signal,
    make_symbol,
)
from .norms import lp_norm
from .transforms import dft_centered, stft, synthesis

_POWER_ITER_CAP = 5000


def _check_operator_shapes(a: SampledSymbol, phi1: SampledSignal, phi2: SampledSignal):
    if phi1.grid != phi2.grid:
        raise ValueError("both windows must live on the same grid")
    grid = phi1.grid
    if a.w_grid != grid.dual:
        raise ValueError("symbol frequency lattice does not match the window grid")
    if a.x_grid.L != grid.L or grid.m % a.x_grid.m:
        raise ValueError("symbol time axis is not a sublattice of the window grid")
    return grid


def apply_locop(
    a: SampledSymbol,
    phi1: SampledSignal,
    phi2: SampledSignal,
    f: SampledSignal,
) -> SampledSignal:
    """Apply the localization operator with symbol ``a`` and windows (phi1, phi2)."""
    grid = _check_operator_shapes(a, phi1, phi2)
    if f.grid != grid:
        raise ValueError("input signal grid does not match the windows")
    stride = grid.m // a.x_grid.m
    from .transforms import StftPlan

    plan = StftPlan(grid, stride) if stride > 1 else None
    V = stft(f, phi1, plan)
    weighted = make_symbol(a.x_grid, a.w_grid, a.samples * V.samples)
    return synthesis(weighted, phi2)


def weak_pairing(
    a: SampledSymbol,
    phi1: SampledSignal,
    phi2: SampledSignal,
    f: SampledSignal,
    g: SampledSignal,
) -> complex:
    """Phase-space quadrature of a * V_{phi1} f * conj(V_{phi2} g).

    Equals <A f, g> exactly (same sum re-associated).
    """
    grid = _check_operator_shapes(a, phi1, phi2)
    if f.grid != grid or g.grid != grid:
        raise ValueError("signal grids do not match the windows")
    stride = grid.m // a.x_grid.m
    from .transforms import StftPlan

    plan = StftPlan(grid, stride) if stride > 1 else None
    v1 = stft(f, phi1, plan).samples
    v2 = stft(g, phi2, plan).samples
    return complex(a.cell * np.sum(a.samples * v1 * np.conj(v2)))


@dataclass(frozen=True)
class KernelMatrix:
    """Dense integral kernel K(x_j, y_k) of a localization operator."""

    grid: Grid1D
    entries: np.ndarray
    provenance: str = ""

    def __post_init__(self):
        n = self.grid.N
        if self.entries.shape != (n, n):
            raise ValueError(f"kernel must be {n} x {n}, got {self.entries.shape}")


def kernel_action(K: KernelMatrix, f: SampledSignal) -> SampledSignal:
    """Integral-operator action out(x) = h * sum_y K(x, y) f(y)."""
    if f.grid != K.grid:
        raise ValueError("signal grid does not match the kernel grid")
    return make_signal(K.grid, K.grid.h * (K.entries @ f.samples))


def build_kernel(a: SampledSymbol, phi1: SampledSignal, phi2: SampledSignal) -> KernelMatrix:
    """Assemble the dense kernel via a partial Fourier transform in frequency.

    Summing the frequency axis first turns the double phase-space sum into
    one pass over time positions, at O(N^3) total cost; the result matches
    the direct double sum to round-off.
    """
    grid = _check_operator_shapes(a, phi1, phi2)
    n = grid.N
    stride = grid.m // a.x_grid.m
    # FT of a in its second variable, landing on the signal lattice
    a2 = dft_centered(a.samples, a.w_grid.m)
    idx = np.arange(n)
    diff = (idx[None, :] - idx[:, None] + n // 2) % n  # value index of y - x
    K = np.zeros((n, n), dtype=np.complex128)
    p1c = np.conj(phi1.samples)
    p2 = phi2.samples
    for j in range(a.x_grid.N):
        shift = j * stride - n // 2
        w2 = np.roll(p2, shift)
        w1c = np.roll(p1c, shift)
        K += a2[j, diff] * (w2[:, None] * w1c[None, :])
    K *= a.x_grid.h
    return KernelMatrix(grid, K, provenance=f"stride={stride}")


def build_kernel_direct(a: SampledSymbol, phi1: SampledSignal, phi2: SampledSignal) -> KernelMatrix:
    """Reference kernel via the literal double phase-space sum (small grids only)."""
    grid = _check_operator_shapes(a, phi1, phi2)
    n = grid.N
    stride = grid.m // a.x_grid.m
    cell = a.cell
    omegas = a.w_grid.points
    x = grid.points
    K = np.zeros((n, n), dtype=np.complex128)
    p1c = np.conj(phi1.samples)
    p2 = phi2.samples
    phases = np.exp(2j * np.pi * np.outer(x, omegas))  # e^{2 pi i w x}
    for j in range(a.x_grid.N):
        shift = j * stride - n // 2
        w2 = np.roll(p2, shift)
        w1c = np.roll(p1c, shift)
        mod2 = phases * (w2[:, None] * a.samples[j][None, :])  # (x, w)
        row = mod2 @ np.conj(phases).T  # sum over w of e^{2pi i w (x-y)} a phi2
        K += cell * row * w1c[None, :]
    return KernelMatrix(grid, K, provenance=f"direct stride={stride}")


@dataclass(frozen=True)
class SchurReport:
    """Classical and amalgam Schur quantities of an integral kernel.

    c_sup_y / c_sup_x are the sup-column / sup-row integrals of |K|; the two
    amalgam quantities are the cube-blocked refinements controlling the
    endpoint amalgam spaces W(L^1, L^inf) and W(L^inf, L^1).
    """

    c_sup_y: float
    c_sup_x: float
    amalgam_a: float
    amalgam_b: float


def schur_report(K: KernelMatrix) -> SchurReport:
    grid = K.grid
    h = grid.h
    absk = np.abs(K.entries)
    c_sup_y = float(h * absk.sum(axis=0).max())
    c_sup_x = float(h * absk.sum(axis=1).max())
    blocks = absk.reshape(grid.L, grid.m, grid.L, grid.m)
    # column integrals over an x-cube, then sup over y within each y-cube
    col = h * blocks.sum(axis=1)            # (x-cube, y-cube, y-in-cube)
    amalgam_a = float(col.max(axis=2).sum(axis=1).max())
    # row integrals over a y-cube, then sup over x within each x-cube
    row = h * blocks.sum(axis=3)            # (x-cube, x-in-cube, y-cube)
    amalgam_b = float(row.max(axis=1).sum(axis=0).max())
    return SchurReport(c_sup_y, c_sup_x, amalgam_a, amalgam_b)


def opnorm_l2(K: KernelMatrix, tol: float = 1e-8, max_iter: int = _POWER_ITER_CAP) -> float:
    """Largest singular value of the scaled matrix h*K by deterministic power iteration."""
    M = K.grid.h * K.entries
    B = M.conj().T @ M
    n = B.shape[0]
    v = np.ones(n) / np.sqrt(n)
    prev = np.inf
    for iteration in range(1, max_iter + 1):
        w = B @ v
        norm_w = float(np.linalg.norm(w))
        if norm_w == 0.0:
            return 0.0
        est = np.sqrt(norm_w)
        if abs(est - prev) <= tol * max(est, 1e-300):
            return float(est)
        prev = est
        v = w / norm_w
    raise RuntimeError(
        f"power iteration did not converge to rel. tol {tol:g} in {max_iter} iterations"
    )


@dataclass(frozen=True)
class LrBounds:
    """Bracket for the L^r operator norm: probe lower bound, Schur upper bound."""

    lower: float
    upper: float
    best_probe: int


def opnorm_lr_bounds(K: KernelMatrix, r, probes) -> LrBounds:
    """Bracket the L^r -> L^r norm of the kernel operator.

    Upper bound: interpolated Schur bound c_sup_y^(1/r) * c_sup_x^(1/r');
    at r = 1 this is the sup-column-integral, at r = inf the sup-row-integral.
    Lower bound: the best Rayleigh-type ratio over the supplied probes.
    """
    probes = list(probes)
    if not probes:
        raise ValueError("need at least one probe signal")
    r = as_exponent(r)
    rep = schur_report(K)
    inv_r = r.reciprocal
    upper = rep.c_sup_y**inv_r * rep.c_sup_x ** (1.0 - inv_r)
    lower = 0.0
    best = -1
    for i, p in enumerate(probes):
        denom = lp_norm(p, r)
        if denom == 0.0:
            raise ValueError(f"probe {i} is identically zero")
        ratio = lp_norm(kernel_action(K, p), r) / denom
        if ratio > lower:
            lower, best = ratio, i
    if lower > upper * (1.0 + 1e-9):
        raise RuntimeError(
            f"probe ratio {lower:.6e} exceeds the Schur upper bound {upper:.6e}"
        )
    return LrBounds(float(lower), float(upper), best)
