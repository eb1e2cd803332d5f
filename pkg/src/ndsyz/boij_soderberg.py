"""Pure Betti tables and greedy Boij–Söderberg decomposition (exact rationals).

Tables here are keyed by ``(i, degree)`` where ``degree = i + j`` is the total
degree of the ``i``-th syzygies.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence

RationalTable = dict[tuple[int, int], Fraction]


class NotDecomposableError(ValueError):
    pass


def _check_sequence(d: Sequence[int]) -> tuple[int, ...]:
    d = tuple(int(x) for x in d)
    if not d or any(b <= a for a, b in zip(d, d[1:])):
        raise ValueError(f"degree sequence must be strictly increasing: {d}")
    return d


def pure_table(d: Sequence[int]) -> RationalTable:
    """Smallest integral table with ``beta_i`` proportional to ``prod_{j != i} 1/|d_j - d_i|``."""
    d = _check_sequence(d)
    raw = []
    for i, di in enumerate(d):
        prod = 1
        for j, dj in enumerate(d):
            if j != i:
                prod *= abs(dj - di)
        raw.append(Fraction(1, prod))
    den = lcm(*(f.denominator for f in raw))
    ints = [int(f * den) for f in raw]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return {(i, di): Fraction(v // g) for i, (di, v) in enumerate(zip(d, ints))}


def from_betti(B) -> RationalTable:
    """Convert a :class:`~ndsyz.betti.BettiTable` (``(i, j)`` keys) to ``(i, degree)`` keys."""
    return {(i, i + j): Fraction(v) for (i, j), v in B.entries.items() if v}


def to_rows(T: Mapping[tuple[int, int], Fraction]) -> dict[tuple[int, int], Fraction]:
    """Back to ``(i, j)`` keys."""
    return {(i, deg - i): v for (i, deg), v in T.items()}


def _clean(T: Mapping[tuple[int, int], Fraction]) -> RationalTable:
    return {k: Fraction(v) for k, v in T.items() if v != 0}


def minimal_degree_sequence(T: RationalTable) -> tuple[int, ...]:
    """``d_i = min{deg : beta_{i,deg} != 0}`` up to the top nonzero column."""
    top = max(i for i, _ in T)
    out = []
    for i in range(top + 1):
        degs = [deg for (ii, deg), v in T.items() if ii == i and v]
        if not degs:
            raise NotDecomposableError(f"column {i} is empty below the top column")
        out.append(min(degs))
    return tuple(out)


@dataclass(frozen=True)
class Summand:
    coefficient: Fraction
    degrees: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"coefficient": str(self.coefficient), "degrees": list(self.degrees)}


def decompose(T: Mapping[tuple[int, int], Fraction]) -> list[Summand]:
    """Peel off ``c * pure(d)`` with ``d`` the minimal degree sequence and ``c`` maximal.

    Raises :class:`NotDecomposableError` when the table leaves the cone.
    """
    rest = _clean(T)
    out: list[Summand] = []
    prev: tuple[int, ...] | None = None
    for step in range(10_000):
        if not rest:
            return out
        if any(v < 0 for v in rest.values()):
            raise NotDecomposableError(f"negative entry after step {step}")
        d = minimal_degree_sequence(rest)
        if any(b <= a for a, b in zip(d, d[1:])):
            raise NotDecomposableError(f"step {step}: minimal degrees {d} are not strictly increasing")
        if prev is not None and not (len(d) <= len(prev) and all(a <= b for a, b in zip(prev, d))):
            raise NotDecomposableError(f"step {step}: {d} does not extend the chain after {prev}")
        P = pure_table(d)
        c = min(rest[k] / v for k, v in P.items())
        if c <= 0:
            raise NotDecomposableError(f"step {step}: no positive multiple of pure{d} fits")
        for k, v in P.items():
            rest[k] = rest[k] - c * v
        rest = _clean(rest)
        out.append(Summand(c, d))
        prev = d
    raise NotDecomposableError("decomposition did not terminate")


def recompose(summands: Sequence[Summand]) -> RationalTable:
    total: dict[tuple[int, int], Fraction] = {}
    for s in summands:
        for k, v in pure_table(s.degrees).items():
            total[k] = total.get(k, Fraction(0)) + s.coefficient * v
    return _clean(total)


def chain_ok(summands: Sequence[Summand]) -> bool:
    """Successive sequences are termwise nondecreasing on their common indices and never longer."""
    for a, b in zip(summands, summands[1:]):
        x, y = a.degrees, b.degrees
        if len(y) > len(x) or any(u > v for u, v in zip(x, y)):
            return False
    return True
