"""Integer linear algebra and graded bookkeeping.

Smith normal form with unimodular transforms, cokernels of integer maps,
Betti numbers by universal coefficients, semi-characteristics, and Hilbert
series / generator-degree catalogs for polynomial algebras.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .arith import DomainError, prime_power_classify

Matrix = list[list[int]]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, data: Sequence[Sequence[int]]) -> "IntMatrix":
        entries = tuple(tuple(int(v) for v in row) for row in data)
        if not entries or not entries[0]:
            raise DomainError("matrix must be nonempty")
        if any(len(r) != len(entries[0]) for r in entries):
            raise DomainError("matrix rows must have equal length")
        return cls(len(entries), len(entries[0]), entries)

    @classmethod
    def parse(cls, text: str) -> "IntMatrix":
        """Parse ``"1,1;-1,1"`` (rows separated by ';')."""
        try:
            return cls.of([[int(v) for v in row.split(",")] for row in text.split(";")])
        except ValueError as exc:
            raise DomainError(f"cannot parse matrix {text!r}: {exc}") from None

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.of([[int(i == j) for j in range(n)] for i in range(n)])

    def tolist(self) -> Matrix:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DomainError("shape mismatch")
        cols = list(zip(*other.entries))
        return IntMatrix.of([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.entries])

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def format(self) -> str:
        return ";".join(",".join(str(v) for v in r) for r in self.entries)


@dataclass(frozen=True)
class AbelianGroupInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0 or any(t < 2 for t in self.torsion):
            raise DomainError("invalid abelian group invariants")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise DomainError(f"torsion {self.torsion} not in divisibility order")

    def __str__(self) -> str:
        parts = ["Z"] * min(self.free_rank, 1)
        if self.free_rank > 1:
            parts = [f"Z^{self.free_rank}"]
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U A V = D``, U and V unimodular, D diagonal,
    nonnegative, each diagonal entry dividing the next."""
    m, n = A.rows, A.cols
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for M in (D, U):
            M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]

    def add_col(dst, src, q):
        for M in (D, V):
            for r in M:
                r[dst] += q * r[src]

    def neg_row(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = D[t][t]
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    add_row(i, t, -q)
                if D[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    add_col(j, t, -q)
                if D[t][j]:
                    done = False
            if not done:
                continue
            # pivot must divide the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            neg_row(t)
    return IntMatrix.of(U), IntMatrix.of(D), IntMatrix.of(V)


def cokernel_invariants(A: IntMatrix) -> AbelianGroupInvariants:
    """Invariants of Z^rows / image(A)."""
    _, D, _ = smith_normal_form(A)
    diag = D.diagonal()
    rank = sum(1 for d in diag if d)
    return AbelianGroupInvariants(A.rows - rank, tuple(d for d in diag if d > 1))


@dataclass(frozen=True)
class IntegralHomology:
    groups: tuple[AbelianGroupInvariants, ...]

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        if not self.groups:
            raise DomainError("homology needs at least degree 0")

    @property
    def top(self) -> int:
        return len(self.groups) - 1

    @classmethod
    def from_ranks(cls, ranks: Sequence[int], torsion: dict[int, Sequence[int]] | None = None):
        torsion = torsion or {}
        return cls(tuple(AbelianGroupInvariants(r, tuple(torsion.get(k, ()))) for k, r in enumerate(ranks)))


def wu_homology() -> IntegralHomology:
    """H_*(SU(3)/SO(3); Z): Z in degrees 0 and 5, Z/2 in degree 2."""
    h2 = cokernel_invariants(wu_mayer_vietoris_matrix())
    return IntegralHomology.from_ranks([1, 0, h2.free_rank, 0, 0, 1], {2: h2.torsion})


def wu_mayer_vietoris_matrix() -> IntMatrix:
    """H_2(N) -> H_2(W) + H_2(W) in the bases (b_+, b_-) and (u, u)."""
    return IntMatrix.of([[1, 1], [-1, 1]])


def sphere_homology(n: int) -> IntegralHomology:
    return IntegralHomology.from_ranks([1] + [0] * (n - 1) + [1])


Field = Union[str, int]  # "Q" or a prime p


def parse_field(text: str) -> Field:
    t = text.strip().upper()
    if t in ("Q", "QQ"):
        return "Q"
    if t.startswith("F"):
        t = t[1:].lstrip("_")
    try:
        return int(t)
    except ValueError:
        raise DomainError(f"unknown field {text!r}; use Q or F<p>") from None


def betti_over_field(H: IntegralHomology, field: Field) -> list[int]:
    if field == "Q":
        return [g.free_rank for g in H.groups]
    p = int(field)
    if p < 2 or not (c := prime_power_classify(p)).is_prime_power or c.exponent != 1:
        raise DomainError(f"F_{p} is not a prime field")
    out = []
    for k, g in enumerate(H.groups):
        tor = sum(1 for t in g.torsion if t % p == 0)
        tor_prev = sum(1 for t in H.groups[k - 1].torsion if t % p == 0) if k else 0
        out.append(g.free_rank + tor + tor_prev)
    return out


def semi_characteristic(H: IntegralHomology, field: Field, m: int) -> int:
    if H.top != 2 * m + 1:
        raise DomainError(f"semi-characteristic with m={m} needs dimension {2 * m + 1}, got {H.top}")
    return sum(betti_over_field(H, field)[: m + 1]) % 2


def lmp_difference(H: IntegralHomology) -> int:
    """kappa(X; Q) - kappa(X; F_2) in Z/2, which equals <w_2 w_{2m-1}, [X]>."""
    if H.top % 2 == 0:
        raise DomainError(f"semi-characteristics need odd dimension, got {H.top}")
    m = (H.top - 1) // 2
    return (semi_characteristic(H, "Q", m) - semi_characteristic(H, 2, m)) % 2


def euler_characteristic(H: IntegralHomology) -> int:
    return sum((-1) ** k * g.free_rank for k, g in enumerate(H.groups))


# -- Hilbert series and generator catalogs -----------------------------------


@dataclass(frozen=True)
class TruncatedPowerSeries:
    coefficients: tuple[int, ...] = field(default_factory=tuple)

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]


def hilbert_series(degrees: Sequence[int], N: int) -> TruncatedPowerSeries:
    """Coefficients of prod_d 1/(1 - t^d) through t^N."""
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    if any(d < 1 for d in degrees):
        raise DomainError("generator degrees must be positive")
    coeffs = [1] + [0] * N
    for d in degrees:
        for n in range(d, N + 1):
            coeffs[n] += coeffs[n - d]
    return TruncatedPowerSeries(tuple(coeffs))


def _is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


def wall_generator_degrees(N: int) -> list[int]:
    """Degrees of the polynomial generators of Wall's algebra up to N."""
    out = {2**r for r in range(2, N.bit_length() + 1) if 2**r <= N}
    for k in range(3, N // 2 + 1):
        if not _is_power_of_two(k):
            out.update(d for d in (2 * k - 1, 2 * k) if d <= N)
    return sorted(out)


def thom_generator_degrees(N: int) -> list[int]:
    """Degrees i <= N of generators of the unoriented cobordism ring: i != 2^r - 1."""
    return [i for i in range(2, N + 1) if not _is_power_of_two(i + 1)]

