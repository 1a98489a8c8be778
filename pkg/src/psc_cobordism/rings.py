"""Truncated graded-commutative rings with integer coefficients.

Only even-degree generators occur (cohomology of CP^n, HP^n and projective
bundles over them), so the rings are honestly commutative. A ring is given by

* generator names and their cohomological degrees,
* per-generator nilpotency ``x^e = 0`` (truncation), and/or
* a monic relation ``y^e = P`` where ``P`` involves lower powers of ``y``
  and other generators (the projective-bundle relation),
* the monomial dual to the fundamental class.

Elements are immutable maps from exponent vectors to nonzero ints, always
in normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from operator import add
from typing import Iterable, Mapping, Optional

Monomial = tuple[int, ...]


@dataclass(eq=False)
class GradedRing:
    names: tuple[str, ...]
    degrees: tuple[int, ...]
    nilpotency: tuple[Optional[int], ...]
    # generator index -> (e, {monomial: coeff}) meaning gen^e = that polynomial
    relations: Mapping[int, tuple[int, Mapping[Monomial, int]]] = field(default_factory=dict)
    top: Optional[Monomial] = None
    _nf_cache: dict = field(default_factory=dict, repr=False)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def top_degree(self) -> int:
        return self.monomial_degree(self.top) if self.top is not None else 0

    def monomial_degree(self, mono: Monomial) -> int:
        if len(mono) == 1:
            return mono[0] * self.degrees[0]
        if len(mono) == 2:
            return mono[0] * self.degrees[0] + mono[1] * self.degrees[1]
        return sum(e * d for e, d in zip(mono, self.degrees))

    def normal_form(self, mono: Monomial) -> dict[Monomial, int]:
        cached = self._nf_cache.get(mono)
        if cached is not None:
            return cached
        result = self._reduce(mono)
        self._nf_cache[mono] = result
        return result

    def _reduce(self, mono: Monomial) -> dict[Monomial, int]:
        for i, e in enumerate(mono):
            cap = self.nilpotency[i]
            if cap is not None and e >= cap:
                return {}
        for i, (e_rel, poly) in self.relations.items():
            if mono[i] >= e_rel:
                rest = list(mono)
                rest[i] -= e_rel
                out: dict[Monomial, int] = {}
                for m, c in poly.items():
                    prod = tuple(a + b for a, b in zip(rest, m))
                    for mm, cc in self.normal_form(prod).items():
                        out[mm] = out.get(mm, 0) + c * cc
                return {m: c for m, c in out.items() if c}
        return {mono: 1}

    # -- constructors --

    def element(self, terms: Mapping[Monomial, int]) -> "RingElement":
        acc: dict[Monomial, int] = {}
        for mono, c in terms.items():
            if not c:
                continue
            for m, cc in self.normal_form(tuple(mono)).items():
                acc[m] = acc.get(m, 0) + c * cc
        return RingElement(self, {m: c for m, c in acc.items() if c})

    def one(self) -> "RingElement":
        return RingElement(self, {(0,) * self.nvars: 1})

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def gen(self, name: str) -> "RingElement":
        i = self.names.index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return self.element({mono: 1})

    def scalar(self, c: int) -> "RingElement":
        return self.element({(0,) * self.nvars: c})


def tensor(rings: Iterable[GradedRing]) -> tuple[GradedRing, list[int]]:
    """Tensor product of rings; also returns each factor's variable offset."""
    names: list[str] = []
    degrees: list[int] = []
    nilp: list[Optional[int]] = []
    relations: dict[int, tuple[int, dict[Monomial, int]]] = {}
    offsets = []
    factors = list(rings)
    total = sum(r.nvars for r in factors)
    top: list[int] = []
    for idx, r in enumerate(factors):
        off = len(names)
        offsets.append(off)
        names.extend(f"{n}{idx}" for n in r.names)
        degrees.extend(r.degrees)
        nilp.extend(r.nilpotency)
        for gi, (e, poly) in r.relations.items():
            relations[off + gi] = (e, {_pad(m, off, total): c for m, c in poly.items()})
        top.extend(r.top if r.top is not None else (0,) * r.nvars)
    ring = GradedRing(tuple(names), tuple(degrees), tuple(nilp), relations, tuple(top))
    return ring, offsets


def _pad(mono: Monomial, offset: int, total: int) -> Monomial:
    return (0,) * offset + tuple(mono) + (0,) * (total - offset - len(mono))


class RingElement:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedRing, terms: dict[Monomial, int]):
        self.ring = ring
        self.terms = terms

    def __repr__(self) -> str:
        return f"RingElement({self.format()})"

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (self.ring.monomial_degree(m), m)):
            c = self.terms[mono]
            factors = []
            for name, e in zip(self.ring.names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError("elements of different rings")
            return other
        if isinstance(other, int):
            return self.ring.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return RingElement(self.ring, {m: c for m, c in acc.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.ring.zero()
            return RingElement(self.ring, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ring = self.ring
        top = ring.top_degree if ring.top is not None else None
        deg = ring.monomial_degree
        right = sorted(((deg(m), m, c) for m, c in other.terms.items()), key=lambda t: t[0])
        # collect unreduced products first; many pairs share a product monomial
        raw: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            d1 = deg(m1)
            for d2, m2, c2 in right:
                # relations are homogeneous: anything above the top degree is 0
                if top is not None and d1 + d2 > top:
                    break
                prod = tuple(map(add, m1, m2))
                raw[prod] = raw.get(prod, 0) + c1 * c2
        nf = ring.normal_form
        acc: dict[Monomial, int] = {}
        for prod, cc in raw.items():
            if not cc:
                continue
            for m, c in nf(prod).items():
                acc[m] = acc.get(m, 0) + cc * c
        return RingElement(ring, {m: c for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.scalar(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def homogeneous(self, degree: int) -> "RingElement":
        deg = self.ring.monomial_degree
        return RingElement(self.ring, {m: c for m, c in self.terms.items() if deg(m) == degree})

    def is_homogeneous(self, degree: int) -> bool:
        return all(self.ring.monomial_degree(m) == degree for m in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def components(self) -> dict[int, "RingElement"]:
        deg = self.ring.monomial_degree
        parts: dict[int, dict[Monomial, int]] = {}
        for m, c in self.terms.items():
            parts.setdefault(deg(m), {})[m] = c
        return {d: RingElement(self.ring, t) for d, t in parts.items()}

    def inverse(self) -> "RingElement":
        """Inverse of a unit ``1 + (positive degree)``.

        Solved degree by degree, ``v_d = -sum_{e>0} self_e v_{d-e}``, which only
        multiplies homogeneous pieces.
        """
        if self.constant_term() != 1:
            raise ValueError("only elements with constant term 1 are inverted")
        if self.ring.top is None:
            return self._inverse_series()
        comps = {d: e for d, e in self.components().items() if d > 0}
        inv: dict[int, RingElement] = {0: self.ring.one()}
        for d in range(1, self.ring.top_degree + 1):
            acc = self.ring.zero()
            for e, piece in comps.items():
                prev = inv.get(d - e)
                if e <= d and prev is not None:
                    acc = acc + piece * prev
            if acc.terms:
                inv[d] = -acc
        out = self.ring.zero()
        for v in inv.values():
            out = out + v
        return out

    def _inverse_series(self) -> "RingElement":
        nil = 1 - self
        result = self.ring.one()
        power = self.ring.one()
        while True:
            power = power * nil
            if not power.terms:
                return result
            result = result + power

    def evaluate(self) -> int:
        """Coefficient of the fundamental-class monomial."""
        return self.terms.get(self.ring.top, 0)
