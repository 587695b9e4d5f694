"""Test-function families: Gaussians, chirps, bumps, and the sharpness symbol.

These are the one-parameter families whose norm growth (or decay) in the
parameter drives every scaling-law experiment: dilated Gaussians, quadratic
chirps carried by a compactly supported bump, and the separable phase-space
symbol h(x) (F^{-1} h_lam)(w).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .grid import (
    Grid1D,
    SampledSymbol,
    as_exponent,
    make_symbol,
    max_alias_free_lambda,
    sample,
)
from .transforms import inverse_fourier

__all__ = [
    "WindowSpec",
    "gaussian_family",
    "chirped_gaussian",
    "chirp_family",
    "bump",
    "indicator",
    "custom_window",
    "sharpness_symbol",
    "max_alias_free_lambda",
    "predicted_exponent",
]


@dataclass(frozen=True)
class WindowSpec:
    """Analytic descriptor of a test function with a pointwise evaluator."""

    kind: str
    evaluator: Callable[[np.ndarray], np.ndarray]
    label: str = ""
    compact_support: bool = False
    support_radius: float | None = None
    unit_at_zero: bool = False
    nonnegative: bool = False
    in_m1: bool = True
    chirp_rate: float | None = None
    params: tuple = field(default=())


def gaussian_family(lam: float) -> WindowSpec:
    """Dilated Gaussian e^{-pi lam t^2}, lam > 0."""
    if lam <= 0:
        raise ValueError("lam must be positive")
    return WindowSpec(
        kind="gaussian",
        evaluator=lambda t: np.exp(-np.pi * lam * np.asarray(t, dtype=float) ** 2),
        label=f"gaussian(lam={lam:g})",
        unit_at_zero=True,
        nonnegative=True,
        params=(lam,),
    )


def chirped_gaussian(a: float, b: float) -> WindowSpec:
    """Complex Gaussian e^{-pi (a + i b) t^2}, a > 0."""
    if a <= 0:
        raise ValueError("a must be positive")
    coeff = a + 1j * b
    return WindowSpec(
        kind="chirped_gaussian",
        evaluator=lambda t: np.exp(-np.pi * coeff * np.asarray(t, dtype=float) ** 2),
        label=f"chirped_gaussian(a={a:g}, b={b:g})",
        unit_at_zero=True,
        nonnegative=(b == 0),
        chirp_rate=b if b else None,
        params=(a, b),
    )


def chirp_family(profile: WindowSpec, lam: float) -> WindowSpec:
    """Quadratic chirp profile(t) e^{-i pi lam t^2}; |h_lam| = |profile|."""
    base = profile.evaluator
    return WindowSpec(
        kind="chirp",
        evaluator=lambda t: base(t) * np.exp(-1j * np.pi * lam * np.asarray(t, dtype=float) ** 2),
        label=f"chirp(lam={lam:g}, profile={profile.label})",
        compact_support=profile.compact_support,
        support_radius=profile.support_radius,
        unit_at_zero=profile.unit_at_zero,
        nonnegative=False,
        chirp_rate=lam,
        params=(lam,) + profile.params,
    )


def bump(center: float = 0.0, radius: float = 1.0) -> WindowSpec:
    """C^inf bump supported in [center-radius, center+radius], value 1 at center."""
    if radius <= 0:
        raise ValueError("radius must be positive")

    def evaluate(t):
        u = (np.asarray(t, dtype=float) - center) / radius
        out = np.zeros_like(u)
        inside = np.abs(u) < 1.0
        ui = u[inside]
        out[inside] = np.exp(1.0 - 1.0 / (1.0 - ui * ui))
        return out

    return WindowSpec(
        kind="bump",
        evaluator=evaluate,
        label=f"bump(center={center:g}, radius={radius:g})",
        compact_support=True,
        support_radius=abs(center) + radius,
        unit_at_zero=(center == 0.0),
        nonnegative=True,
        params=(center, radius),
    )


def indicator(left: float, right: float) -> WindowSpec:
    """Sharp cutoff of the half-open interval [left, right)."""
    if not right > left:
        raise ValueError("need right > left")
    return WindowSpec(
        kind="indicator",
        evaluator=lambda t: ((np.asarray(t) >= left) & (np.asarray(t) < right)).astype(float),
        label=f"indicator[{left:g},{right:g})",
        compact_support=True,
        support_radius=max(abs(left), abs(right)),
        unit_at_zero=(left <= 0.0 < right),
        nonnegative=True,
        in_m1=False,
        params=(left, right),
    )


def custom_window(evaluator, label: str = "custom", **flags) -> WindowSpec:
    """Wrap an arbitrary pointwise evaluator as a WindowSpec."""
    return WindowSpec(kind="custom", evaluator=evaluator, label=label, **flags)


def sharpness_symbol(profile: WindowSpec, lam: float, grid: Grid1D, enforce_guard: bool = True) -> SampledSymbol:
    """Separable phase-space symbol profile(x) * (F^{-1} chirp)(w).

    This is the extremal symbol family of the localization-operator sharpness
    argument: its W(L^p, L^q) norm decays like lam^{1/q - 1/2} while the
    operator it generates retains unit-size output near the origin.
    """
    radius = profile.support_radius
    if radius is None:
        raise ValueError("profile must have a known support radius")
    if enforce_guard and abs(lam) > max_alias_free_lambda(grid, radius):
        raise ValueError(
            f"lam={lam} exceeds the alias-free bound "
            f"{max_alias_free_lambda(grid, radius):g} on grid (L={grid.L}, m={grid.m})"
        )
    h_sig = sample(profile, grid)
    h_lam = sample(chirp_family(profile, lam), grid)
    freq_factor = inverse_fourier(h_lam)
    return make_symbol(grid, grid.dual, np.outer(h_sig.samples, freq_factor.samples))


_CLAIMS = {
    "chirp-ft": ("q",),
    "gaussian-amalgam": ("p",),
    "stft-amalgam": ("q",),
    "locop-lower": ("r",),
    "locop-sharpness-ratio": ("q", "r"),
}


def predicted_exponent(claim: str, p=None, q=None, r=None) -> float:
    """Dimension-1 scaling exponent predicted for a named claim.

    chirp-ft:               ||FT of chirp||_q           ~ lam^(1/q - 1/2)
    gaussian-amalgam:       ||gaussian_lam||_W(Lp,Lq)   ~ lam^(-1/(2p))
    stft-amalgam:           ||V_phi gaussian_lam||_W    ~ lam^(-1/(2q'))
    locop-lower:            ||chi A f||_r               ~ lam^(-1/r)
    locop-sharpness-ratio:  operator sharpness ratio    ~ lam^(1/2 - 1/q - 1/r)
    """
    if claim not in _CLAIMS:
        raise ValueError(f"unknown claim id {claim!r}; known: {sorted(_CLAIMS)}")
    need = _CLAIMS[claim]
    given = {"p": p, "q": q, "r": r}
    for name in need:
        if given[name] is None:
            raise ValueError(f"claim {claim!r} needs exponent {name!r}")
    inv = {k: as_exponent(v).reciprocal for k, v in given.items() if v is not None}
    if claim == "chirp-ft":
        return inv["q"] - 0.5
    if claim == "gaussian-amalgam":
        return -0.5 * inv["p"]
    if claim == "stft-amalgam":
        return -0.5 * (1.0 - inv["q"])
    if claim == "locop-lower":
        return -inv["r"]
    return 0.5 - inv["q"] - inv["r"]
