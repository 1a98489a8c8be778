"""Characteristic numbers of CP^n, Milnor manifolds H_{ij}, HP^2 and products.

Cohomology rings, Chern and Pontryagin classes are computed in the
truncated-ring engine of :mod:`psc_cobordism.rings`; s-numbers are Newton
power sums in the Pontryagin classes, paired with the fundamental class.

Conventions.  For CP^n, ``x`` is the hyperplane class and ``<x^n, [CP^n]> = 1``.
``H_{ij}`` is the CP^{j-1}-bundle ``P(E)`` over CP^i where E is the complement
of a line with ``c_1 = +x`` in the trivial bundle C^{j+1}; equivalently the
bidegree (1, 1) hypersurface in CP^i x CP^j with its complex orientation.
The Hermitian complement of the tautological line (``c_1 = -x``) is the same
smooth manifold, via conjugation on CP^i, but with orientation changed by
(-1)^i.  With ``y = c_1(O(1))`` on the fibre the ring is
``Z[x, y] / (x^{i+1}, sum_r c_r(E) y^{j-r})``, ``c(E) = 1/(1 + x)``, the
tangent bundle has ``c = (1+x)^{i+1} (1+y)^{j+1} / (1 + x + y)``, and
``<x^i y^{j-1}, [H_{ij}]> = 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .arith import DomainError, binomial, extended_gcd_list, prime_power_classify
from .rings import GradedRing, RingElement, tensor


class NotComplexError(DomainError):
    """Chern classes requested for a manifold with no complex structure here."""


# -- descriptors -------------------------------------------------------------


@dataclass(frozen=True)
class CP:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"CP(n) needs n >= 1, got {self.n}")

    @property
    def dim(self) -> int:
        return 2 * self.n

    def __str__(self) -> str:
        return f"cp{self.n}"


@dataclass(frozen=True)
class MilnorH:
    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 1 or self.i > self.j:
            raise DomainError(f"MilnorH(i, j) needs 0 <= i <= j, j >= 1; got ({self.i}, {self.j})")

    @property
    def dim(self) -> int:
        return 2 * (self.i + self.j - 1)

    def __str__(self) -> str:
        return f"h_{self.i}_{self.j}"


@dataclass(frozen=True)
class HP2:
    @property
    def dim(self) -> int:
        return 8

    def __str__(self) -> str:
        return "hp2"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise DomainError("Product needs at least one factor")

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    def __str__(self) -> str:
        return "*".join(str(f) for f in self.factors)


Manifold = Union[CP, MilnorH, HP2, Product]

_ATOM = re.compile(r"^(?:cp(\d+)|h_(\d+)_(\d+)|hp2)$")


def parse_manifold(text: str) -> Manifold:
    """Parse ``cp4``, ``h_2_3``, ``hp2`` or a ``*``-product of those."""
    parts = [p.strip().lower() for p in text.split("*")]
    atoms = []
    for part in parts:
        m = _ATOM.match(part)
        if not m:
            raise DomainError(f"cannot parse manifold {part!r}")
        if m.group(1) is not None:
            atoms.append(CP(int(m.group(1))))
        elif m.group(2) is not None:
            atoms.append(MilnorH(int(m.group(2)), int(m.group(3))))
        else:
            atoms.append(HP2())
    return atoms[0] if len(atoms) == 1 else Product(tuple(atoms))


# -- rings and classes -------------------------------------------------------


@dataclass(frozen=True)
class CharClassVector:
    kind: str  # "chern" or "pontryagin"
    classes: tuple[RingElement, ...]

    def total(self) -> RingElement:
        out = self.classes[0]
        for c in self.classes[1:]:
            out = out + c
        return out

    def format(self) -> list[str]:
        return [c.format() for c in self.classes]


def _graded(kind: str, total: RingElement) -> CharClassVector:
    step = 2 if kind == "chern" else 4
    top = total.ring.top_degree
    return CharClassVector(kind, tuple(total.homogeneous(step * i) for i in range(top // step + 1)))


@lru_cache(maxsize=None)
def cohomology_ring(d: Manifold) -> GradedRing:
    if isinstance(d, CP):
        return GradedRing(("x",), (2,), (d.n + 1,), {}, (d.n,))
    if isinstance(d, MilnorH):
        i, j = d.i, d.j
        # y^j = -sum_{r>=1} (-x)^r y^{j-r}
        rel = {(r, j - r): (-1) ** (r + 1) for r in range(1, min(i, j) + 1)}
        return GradedRing(("x", "y"), (2, 2), (i + 1, None), {1: (j, rel)}, (i, j - 1))
    if isinstance(d, HP2):
        return GradedRing(("u",), (4,), (3,), {}, (2,))
    ring, _ = tensor(cohomology_ring(f) for f in d.factors)
    return ring


def _embed(elem: RingElement, ring: GradedRing, offset: int) -> RingElement:
    total = ring.nvars
    n = elem.ring.nvars
    return ring.element({(0,) * offset + m + (0,) * (total - offset - n): c for m, c in elem.terms.items()})


def _factor_offsets(d: Product) -> list[int]:
    offsets, off = [], 0
    for f in d.factors:
        offsets.append(off)
        off += cohomology_ring(f).nvars
    return offsets


@lru_cache(maxsize=None)
def _chern_total(d: Manifold) -> RingElement:
    ring = cohomology_ring(d)
    if isinstance(d, CP):
        return ring.element({(a,): binomial(d.n + 1, a) for a in range(d.n + 2)})
    if isinstance(d, MilnorH):
        x, y = ring.gen("x"), ring.gen("y")
        base = ring.element({(a, 0): binomial(d.i + 1, a) for a in range(d.i + 2)})
        fibre = ring.element({(0, b): binomial(d.j + 1, b) for b in range(d.j + 2)})
        return base * fibre * (1 + x + y).inverse()
    if isinstance(d, HP2):
        raise NotComplexError("HP^2 carries no almost complex structure")
    out = ring.one()
    for f, off in zip(d.factors, _factor_offsets(d)):
        out = out * _embed(_chern_total(f), ring, off)
    return out


def chern_total(d: Manifold) -> CharClassVector:
    return _graded("chern", _chern_total(d))


def _conjugate(total: RingElement) -> RingElement:
    # c_i -> (-1)^i c_i, i.e. negate the parts of degree 2 mod 4
    deg = total.ring.monomial_degree
    return RingElement(
        total.ring, {m: (-c if deg(m) % 4 == 2 else c) for m, c in total.terms.items()}
    )


@lru_cache(maxsize=None)
def _pontryagin_total(d: Manifold) -> RingElement:
    ring = cohomology_ring(d)
    if isinstance(d, HP2):
        u = ring.gen("u")
        return 1 + 2 * u + 7 * u * u
    if isinstance(d, Product):
        out = ring.one()
        for f, off in zip(d.factors, _factor_offsets(d)):
            out = out * _embed(_pontryagin_total(f), ring, off)
        return out
    c = _chern_total(d)
    # sum (-1)^i p_i = c * conj(c); undo the signs to get p
    return _conjugate_pontryagin(c * _conjugate(c))


def _conjugate_pontryagin(total: RingElement) -> RingElement:
    deg = total.ring.monomial_degree
    return RingElement(
        total.ring, {m: (-c if deg(m) % 8 == 4 else c) for m, c in total.terms.items()}
    )


def pontryagin_total(d: Manifold) -> CharClassVector:
    return _graded("pontryagin", _pontryagin_total(d))


# -- s-numbers ---------------------------------------------------------------

PPoly = dict  # exponent tuple over (p_1..p_k) -> int


def _pmul(a: PPoly, b: PPoly) -> PPoly:
    out: PPoly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def _padd(a: PPoly, b: PPoly, scale: int = 1) -> PPoly:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + scale * c
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def s_polynomial_in_pontryagin(k: int) -> dict[tuple[int, ...], int]:
    """Power sum of degree k in the Pontryagin roots, written in p_1..p_k.

    Newton: s_m = sum_{i=1}^{m-1} (-1)^{i-1} p_i s_{m-i} + (-1)^{m-1} m p_m.
    """
    if k < 1:
        raise DomainError(f"s-polynomial needs k >= 1, got {k}")

    def p(i: int) -> PPoly:
        return {tuple(1 if j == i - 1 else 0 for j in range(k)): 1}

    s: list[PPoly] = [{}]
    for m in range(1, k + 1):
        acc: PPoly = {}
        for i in range(1, m):
            acc = _padd(acc, _pmul(p(i), s[m - i]), (-1) ** (i - 1))
        acc = _padd(acc, p(m), (-1) ** (m - 1) * m)
        s.append(acc)
    return s[k]


def format_ppoly(poly: dict[tuple[int, ...], int]) -> str:
    terms = []
    for mono in sorted(poly, reverse=True):
        c = poly[mono]
        body = "*".join(
            f"p{i + 1}" if e == 1 else f"p{i + 1}^{e}" for i, e in enumerate(mono) if e
        )
        terms.append(body if c == 1 else f"-{body}" if c == -1 else f"{c}*{body}")
    return " + ".join(terms).replace("+ -", "- ")


def s_class(d: Manifold, k: int) -> RingElement:
    """The degree-4k power-sum class of the Pontryagin roots of ``d``.

    Evaluates :func:`s_polynomial_in_pontryagin` through its defining Newton
    recursion, which needs O(k^2) ring products instead of one product per
    monomial of the expanded polynomial.
    """
    pv = pontryagin_total(d).classes
    ring = cohomology_ring(d)

    def p(i: int) -> RingElement:
        return pv[i] if i < len(pv) else ring.zero()

    s = [ring.zero()]
    for m in range(1, k + 1):
        acc = p(m) * ((-1) ** (m - 1) * m)
        for i in range(1, m):
            if p(i).terms and s[m - i].terms:
                acc = acc + p(i) * s[m - i] * (-1) ** (i - 1)
        s.append(acc)
    return s[k]


def s_class_expanded(d: Manifold, k: int) -> RingElement:
    """Same class as :func:`s_class`, by substituting into the expanded polynomial."""
    pv = pontryagin_total(d).classes
    ring = cohomology_ring(d)
    total = ring.zero()
    for mono, c in s_polynomial_in_pontryagin(k).items():
        term = ring.scalar(c)
        for idx, e in enumerate(mono):
            if e:
                term = term * ((pv[idx + 1] if idx + 1 < len(pv) else ring.zero()) ** e)
        total = total + term
    return total


def s_number(d: Manifold, k: int) -> int:
    if d.dim != 4 * k:
        raise DomainError(f"{d} has dimension {d.dim}, s_{k} needs dimension {4 * k}")
    return s_class(d, k).evaluate()


def signature(d: Manifold) -> int:
    """Hirzebruch signature; implemented through dimension 8."""
    if d.dim not in (0, 4, 8):
        raise DomainError(f"signature is implemented for dimension <= 8, got {d.dim}")
    if d.dim == 0:
        return 1
    p = pontryagin_total(d).classes
    if d.dim == 4:
        value = Fraction(p[1].evaluate(), 3)
    else:
        value = Fraction(7 * p[2].evaluate() - (p[1] * p[1]).evaluate(), 45)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral L-genus {value} for {d}")
    return int(value)


@dataclass(frozen=True)
class CobordismClassInvariants:
    dimension: int
    s_value: int | None
    signature: int | None


def invariants(d: Manifold) -> CobordismClassInvariants:
    s = s_number(d, d.dim // 4) if d.dim % 4 == 0 and d.dim > 0 else None
    sig = signature(d) if d.dim in (0, 4, 8) else None
    return CobordismClassInvariants(d.dim, s, sig)


# -- generators of the torsion-free cobordism ring ---------------------------


def generator_target(k: int) -> int:
    c = prime_power_classify(2 * k + 1)
    return c.p if c.is_prime_power else 1


def generator_pool(k: int) -> list[Manifold]:
    n = 2 * k + 1
    pool: list[Manifold] = [CP(2 * k)]
    pool += [MilnorH(i, n - i) for i in range(2, n) if n - i >= 4 and i <= n - i]
    return pool


def generator_search(k: int) -> list[tuple[int, Manifold]]:
    """Integer combination of the pool whose s_k equals the generator target."""
    if k < 2:
        raise DomainError(f"generator_search needs k >= 2, got {k}")
    pool = generator_pool(k)
    values = [s_number(d, k) for d in pool]
    g, coeffs = extended_gcd_list(values)
    target = generator_target(k)
    if g != target:
        raise ArithmeticError(f"pool for k={k} reaches gcd {g}, target is {target}")
    return [(c, d) for c, d in zip(coeffs, pool) if c]


# -- Omega_8 -----------------------------------------------------------------


@dataclass(frozen=True)
class Omega8Report:
    cp4_coeff: int
    cp2xcp2_coeff: int
    index: int
    invariants: dict


def omega8_report() -> Omega8Report:
    """Write [HP^2] in the basis [CP^4], [CP^2 x CP^2] using (signature, s_2)."""
    cp4, cp22, hp2 = CP(4), Product((CP(2), CP(2))), HP2()
    inv = {str(d): (signature(d), s_number(d, 2)) for d in (cp4, cp22, hp2)}
    (a11, a21), (a12, a22), (r1, r2) = inv["cp4"], inv["cp2*cp2"], inv["hp2"]
    det = a11 * a22 - a12 * a21
    if det == 0:
        raise ArithmeticError("singular invariant matrix for Omega_8 basis")
    a = Fraction(r1 * a22 - a12 * r2, det)
    b = Fraction(a11 * r2 - r1 * a21, det)
    if a.denominator != 1 or b.denominator != 1:
        raise ArithmeticError(f"HP^2 is not an integral combination: ({a}, {b})")
    a, b = int(a), int(b)
    # lattice spanned by CP^4 = (1, 0) and HP^2 = (a, b)
    index = abs(1 * b - 0 * a)
    return Omega8Report(a, b, index, inv)
