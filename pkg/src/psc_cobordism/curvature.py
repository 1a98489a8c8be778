"""Scalar curvature of Berger and double-connection metrics on sphere bundles
over projective spaces, and the positivity region of the invariant family.

Everything here is exact: parameters and results are ``Fraction``.
Notation: for the field K with k = dim_R K, the Hopf fibration
S^{kn-1} -> KP^{n-1} has fibre S^{k-1}.

* ``c_n = (n-1)(n-2)``  scalar curvature of the round unit S^{n-1}
* ``b_{k,n}``           scalar curvature of the Fubini-Study KP^{n-1}
* ``a_{k,n}``           the constant |A|^2 of the Hopf submersion
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import DomainError


class FieldKind(enum.Enum):
    R = 1
    C = 2
    H = 4

    @property
    def k(self) -> int:
        return self.value

    @classmethod
    def parse(cls, label: str) -> "FieldKind":
        try:
            return cls[label.strip().upper()]
        except KeyError:
            raise DomainError(f"unknown field {label!r}; expected R, C or H") from None


@dataclass(frozen=True)
class CurvatureConstants:
    kind: FieldKind
    n: int
    c_fiber: Fraction
    b: Fraction
    a: Fraction


@dataclass(frozen=True)
class BergerParams:
    kind: FieldKind
    n: int
    s: Fraction
    t: Fraction

    def __post_init__(self):
        _check_positive_int(n=self.n)
        _check_positive(s=self.s, t=self.t)


@dataclass(frozen=True)
class DoubleConnectionParams:
    """The metric ``s g_{KP^{n-1}} + (Berger metric g_{u,t} on S^{km-1})``."""

    kind: FieldKind
    n: int
    m: int
    s: Fraction
    u: Fraction
    t: Fraction

    def __post_init__(self):
        _check_positive_int(n=self.n, m=self.m)
        _check_positive(s=self.s, u=self.u, t=self.t)

    def scaled(self, lam) -> "DoubleConnectionParams":
        lam = Fraction(lam)
        return DoubleConnectionParams(
            self.kind, self.n, self.m, lam * self.s, lam * self.u, lam * self.t
        )


def _check_positive(**values):
    for name, v in values.items():
        if Fraction(v) <= 0:
            raise DomainError(f"{name} must be positive, got {v}")


def _check_positive_int(**values):
    for name, v in values.items():
        if int(v) != v or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v}")


def sphere_scal(n: int) -> Fraction:
    """c_n = scal of the round unit sphere S^{n-1}."""
    if n < 1:
        raise DomainError(f"sphere_scal needs n >= 1, got {n}")
    return Fraction((n - 1) * (n - 2))


def projective_scal(kind: FieldKind, n: int) -> Fraction:
    """b_{k,n} = scal of KP^{n-1} with the metric making the Hopf map a submersion."""
    if kind is FieldKind.R:
        return sphere_scal(n)
    if kind is FieldKind.C:
        return Fraction(4 * n * (n - 1))
    return Fraction(16 * (n * n - 1))


def hopf_a_norm(kind: FieldKind, n: int) -> Fraction:
    """a_{k,n} = |A|^2 of the Hopf submersion S^{kn-1} -> KP^{n-1}."""
    if kind is FieldKind.R:
        return Fraction(0)
    if kind is FieldKind.C:
        return Fraction(2 * (n - 1))
    return Fraction(12 * (n - 1))


def constants(kind: FieldKind, n: int) -> CurvatureConstants:
    if n < 1:
        raise DomainError(f"constants needs n >= 1, got {n}")
    c = sphere_scal(kind.k)
    b = projective_scal(kind, n)
    a = hopf_a_norm(kind, n)
    # O'Neill on the Hopf fibration: scal(S^{kn-1}) = b + c_k - a
    assert b + c - a == sphere_scal(kind.k * n)
    return CurvatureConstants(kind, n, c, b, a)


def scal_berger(p: BergerParams) -> Fraction:
    """scal(g_{s,t}) = b/s + c_k/t - t a / s^2."""
    cc = constants(p.kind, p.n)
    s, t = Fraction(p.s), Fraction(p.t)
    return cc.b / s + cc.c_fiber / t - t * cc.a / (s * s)


def scal_double_connection(p: DoubleConnectionParams) -> Fraction:
    cn = constants(p.kind, p.n)
    cm = constants(p.kind, p.m)
    s, u, t = Fraction(p.s), Fraction(p.u), Fraction(p.t)
    return (
        cn.b / s
        + cm.b / u
        + cn.c_fiber / t
        - t * cm.a / (u * u)
        - t * cn.a / (s * s)
    )


def global_scaling_check(p: DoubleConnectionParams, lam) -> tuple[Fraction, Fraction]:
    """Compare scal of the metric scaled by ``lam`` with ``scal / lam``.

    Raises AssertionError if they differ, which can only mean a bug here.
    """
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    lhs = scal_double_connection(p.scaled(lam))
    rhs = scal_double_connection(p) / lam
    assert lhs == rhs, f"scaling identity violated: {lhs} != {rhs}"
    return lhs, rhs


def invariant_metric_dimension(kind: FieldKind, n: int, m: int) -> int:
    """Dimension of the space of invariant symmetric bilinear forms on the
    sphere bundle S^{kn-1} x_{S^{k-1}} S^{km-1}."""
    _check_positive_int(n=n, m=m)
    horizontal = (n >= 2) + (m >= 2)
    vertical = 0 if kind is FieldKind.R else 1
    return horizontal + vertical


# -- positivity region -------------------------------------------------------


class RegionStatus(enum.Enum):
    EMPTY = "Empty"
    NONEMPTY = "NonEmpty"
    ALL_OF_QUADRANT = "AllOfQuadrant"


@dataclass(frozen=True)
class RegionProblem:
    """The set of x, y > 0 with ``a_x x^2 + a_y y^2 - (b_x x + b_y y) < c``."""

    a_x: Fraction
    a_y: Fraction
    b_x: Fraction
    b_y: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a_x", "a_y", "b_x", "b_y", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a_x < 0 or self.a_y < 0:
            raise DomainError("quadratic coefficients must be nonnegative")

    def value(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return self.a_x * x * x + self.a_y * y * y - self.b_x * x - self.b_y * y


@dataclass(frozen=True)
class RegionReport:
    status: RegionStatus
    witness: Optional[tuple[Fraction, Fraction]] = None
    convex: bool = True


def region_problem_from(kind: FieldKind, n: int, m: int) -> RegionProblem:
    """Positivity of ``scal(s g + g_{u,1})`` in the coordinates x = 1/s, y = 1/u."""
    cn = constants(kind, n)
    cm = constants(kind, m)
    return RegionProblem(cn.a, cm.a, cn.b, cm.b, cn.c_fiber)


def region_contains(p: RegionProblem, x, y) -> bool:
    x, y = Fraction(x), Fraction(y)
    if x <= 0 or y <= 0:
        raise DomainError("region points must lie in the open positive quadrant")
    return p.value(x, y) < p.c


def _is_all_of_quadrant(p: RegionProblem) -> bool:
    return (
        p.a_x == 0
        and p.a_y == 0
        and p.b_x >= 0
        and p.b_y >= 0
        and p.c >= 0
        and (p.c > 0 or p.b_x > 0 or p.b_y > 0)
    )


def solve_region(p: RegionProblem) -> RegionReport:
    """Decide whether the region is empty and, if not, certify a witness.

    The objective separates as f(x) + g(y) with each summand a*t^2 - b*t.
    Over t > 0 a summand has infimum -b^2/(4a) (attained) when a, b > 0,
    is unbounded below when a = 0 < b, and has infimum 0 (not attained
    unless a = b = 0) when b <= 0.  The region is nonempty iff the sum of
    infima is < c.
    """
    if _is_all_of_quadrant(p):
        w = (Fraction(1), Fraction(1))
        assert region_contains(p, *w)
        return RegionReport(RegionStatus.ALL_OF_QUADRANT, w)

    coords = [(p.a_x, p.b_x), (p.a_y, p.b_y)]
    unbounded = [a == 0 and b > 0 for a, b in coords]
    infimum = sum(
        (-b * b / (4 * a) for a, b in coords if a > 0 and b > 0), Fraction(0)
    )
    if not any(unbounded) and infimum >= p.c:
        return RegionReport(RegionStatus.EMPTY)

    # start from the per-coordinate minimizer, or 1 where none exists
    point = []
    for a, b in coords:
        point.append(b / (2 * a) if a > 0 and b > 0 else Fraction(1))
    free = [not (a > 0 and b > 0) for a, b in coords]
    # coordinates with b <= 0 shrink towards 0; unbounded ones grow
    for _ in range(4096):
        if region_contains(p, *point):
            return RegionReport(RegionStatus.NONEMPTY, (point[0], point[1]))
        for i, (a, b) in enumerate(coords):
            if not free[i]:
                continue
            point[i] = point[i] * 2 if unbounded[i] else point[i] / 2
    raise RuntimeError(f"witness search did not terminate for {p}")


# -- Wu manifold -------------------------------------------------------------


def wu_curvature_bounds() -> tuple[Fraction, Fraction]:
    """Lower bounds on scal for the two connection metrics over CP^1.

    The base CP^1 = KP^1 (K = C, n = 2) has scal b_{2,2} = 8 and the Hopf
    A-tensor has |A|^2 = a_{2,2} = 2.  A torpedo D^3 of radius 1 has scal
    at least that of the round S^2; the S^2-family only has scal >= 0.
    """
    hopf = constants(FieldKind.C, 2)
    disc_bound = hopf.b + sphere_scal(3) - hopf.a
    family_bound = hopf.b - hopf.a
    return disc_bound, family_bound
