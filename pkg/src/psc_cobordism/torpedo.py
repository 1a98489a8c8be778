"""Sampled torpedo profiles and the scalar curvature of rotationally
symmetric metrics ``dr^2 + f(r)^2 g_{S^{k-1}}``.

This is the only floating-point part of the package: the profile is
transcendental, so it is sampled on a uniform grid and its defining
inequalities are certified at the samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

TOL = 1e-6


class ProfileError(ValueError):
    """A profile cannot be built or evaluated on the requested grid."""


@dataclass(frozen=True)
class ProfileSample:
    r: float
    f: float
    df: float
    ddf: float


@dataclass(frozen=True)
class TorpedoProfile:
    k: int
    delta: float
    samples: tuple[ProfileSample, ...]
    R: float
    cap_end: float = 0.0  # f = delta*sin(r/delta) on [0, cap_end]
    flat_start: float = 0.0  # f = delta on [flat_start, R]

    def cap_samples(self) -> list[ProfileSample]:
        return [s for s in self.samples if 0 < s.r <= self.cap_end]

    def flat_samples(self) -> list[ProfileSample]:
        return [s for s in self.samples if s.r >= self.flat_start]


def _cap_angle(k: int) -> float:
    # The blend keeps scal >= (k-1)(k-2)/delta^2 as long as
    # (k-2)(1 - cos(eps)) <= 1; take half of that margin.
    eps = 0.1
    while (k - 2) * (1 - math.cos(eps)) > 0.5:
        eps /= 2
    return eps


def make_torpedo(k: int, delta, grid_points: int) -> TorpedoProfile:
    """Torpedo profile of radius ``delta`` for R^k.

    ``f = delta*sin(r/delta)`` up to ``r0 = delta*(pi/2 - eps)``; after that
    ``f'`` decreases linearly to 0 (so ``f`` is a concave quadratic, C^1 at
    both joins) and ``f = delta`` from then on.
    """
    if k < 2:
        raise ProfileError(f"torpedo needs k >= 2, got {k}")
    if grid_points < 16:
        raise ProfileError(f"need at least 16 grid points, got {grid_points}")
    delta = float(delta)
    if not delta > 0:
        raise ProfileError(f"delta must be positive, got {delta}")

    eps = _cap_angle(k)
    r0 = delta * (math.pi / 2 - eps)
    slope0 = math.sin(eps)
    blend = 2 * delta * (1 - math.cos(eps)) / slope0
    r1 = r0 + blend
    R = r1 + delta

    def profile(r: float) -> ProfileSample:
        if r <= r0:
            return ProfileSample(
                r, delta * math.sin(r / delta), math.cos(r / delta),
                -math.sin(r / delta) / delta,
            )
        if r < r1:
            h = r - r0
            df = slope0 * (1 - h / blend)
            f = delta * math.cos(eps) + slope0 * (h - h * h / (2 * blend))
            return ProfileSample(r, min(f, delta), df, -slope0 / blend)
        return ProfileSample(r, delta, 0.0, 0.0)

    step = R / (grid_points - 1)
    samples = tuple(profile(i * step) for i in range(grid_points))
    out = TorpedoProfile(k, delta, samples, R, cap_end=r0, flat_start=r1)
    _certify(out)
    return out


def _certify(p: TorpedoProfile) -> None:
    s = p.samples
    if abs(s[0].f) > TOL or abs(s[0].df - 1) > TOL:
        raise ProfileError("profile must start with f(0)=0, f'(0)=1")
    for x in s:
        if x.df < -TOL or x.df > 1 + TOL or x.ddf > TOL:
            raise ProfileError(f"profile violates 0<=f'<=1, f''<=0 at r={x.r}")
        if x.f < -TOL or x.f > p.delta + TOL:
            raise ProfileError(f"profile leaves [0, delta] at r={x.r}")
    flat = p.flat_samples()
    if len(flat) < 2:
        raise ProfileError("grid too coarse: fewer than two samples on the flat end")
    if any(abs(x.f - p.delta) > TOL or abs(x.df) > TOL for x in flat):
        raise ProfileError("profile is not constant on its final segment")


def profile_from_function(
    k: int,
    f: Callable[[float], float],
    df: Callable[[float], float],
    ddf: Callable[[float], float],
    R: float,
    grid_points: int,
    delta: float = 1.0,
) -> TorpedoProfile:
    """Sample an arbitrary warping function, without certifying torpedo shape."""
    step = R / (grid_points - 1)
    samples = tuple(
        ProfileSample(r, f(r), df(r), ddf(r)) for r in (i * step for i in range(grid_points))
    )
    return TorpedoProfile(k, delta, samples, R, cap_end=R, flat_start=math.inf)


def rotsym_scal(profile: TorpedoProfile) -> tuple[list[tuple[float, float]], float]:
    """Scalar curvature ``(k-1)[-2f''/f + (k-2)(1-f'^2)/f^2]`` at each sample.

    At r = 0 the formula is singular; there the value of the round cap,
    k(k-1)/delta^2, is reported and excluded from the minimum.
    """
    k = profile.k
    out = []
    interior = []
    for x in profile.samples:
        if x.r == 0:
            out.append((0.0, k * (k - 1) / profile.delta**2))
            continue
        if abs(x.f) < 1e-12:
            raise ProfileError(f"singular profile: f = 0 at r = {x.r}")
        scal = (k - 1) * (-2 * x.ddf / x.f + (k - 2) * (1 - x.df**2) / x.f**2)
        out.append((x.r, scal))
        interior.append(scal)
    return out, min(interior) if interior else math.nan
