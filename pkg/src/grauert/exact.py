"""Exact rational linear algebra on small vectors and matrices.

Vectors are plain tuples of Fraction; everything here is deterministic and
allocation-light so it can sit under the polytope enumeration loops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Q = Fraction
Vector = tuple[Fraction, ...]
Scalar = Union[int, Fraction]

ZERO = Q(0)
HALF = Q(1, 2)


def vec(*coords: Scalar) -> Vector:
    return tuple(Q(c) for c in coords)


def to_vector(coords: Iterable[Scalar]) -> Vector:
    return tuple(Q(c) for c in coords)


def dot(u: Vector, v: Vector) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Scalar, v: Vector) -> Vector:
    c = Q(c)
    return tuple(c * a for a in v)


def neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


def is_rational_vector(coords: Sequence) -> bool:
    """True when every coordinate is an int or Fraction (no floats)."""
    return all(isinstance(c, (int, Fraction)) for c in coords)


def solve_square(rows: Sequence[Vector], rhs: Vector) -> Optional[Vector]:
    """Solve A x = b exactly for square A; None when A is singular."""
    n = len(rows)
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [a * inv for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def matrix_rank(rows: Sequence[Vector]) -> int:
    """Rank of the row set, by fraction-exact elimination."""
    work = [list(r) for r in rows if any(a != 0 for a in r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(work):
        piv = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [a * inv for a in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
        col += 1
    return rank


def span_basis(rows: Sequence[Vector]) -> tuple[Vector, ...]:
    """A deterministic subset of `rows` forming a basis of their span."""
    basis: list[Vector] = []
    for r in rows:
        if is_zero(r):
            continue
        if matrix_rank(basis + [r]) > len(basis):
            basis.append(r)
    return tuple(basis)


def fraction_isqrt(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if x < 0:
        return None
    pn, pd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Q(pn, pd)
    return None


@dataclass(frozen=True, order=True)
class PiValue:
    """An exact rational multiple of pi.

    Ordering and equality compare the coefficients, which is sound because pi
    is a fixed positive constant.
    """

    coefficient: Fraction

    def __float__(self) -> float:
        return float(self.coefficient) * math.pi

    def __mul__(self, other: Scalar) -> "PiValue":
        return PiValue(self.coefficient * Q(other))

    __rmul__ = __mul__

    def __str__(self) -> str:
        c = self.coefficient
        if c == 0:
            return "0"
        sign = "-" if c < 0 else ""
        c = abs(c)
        num = "pi" if c.numerator == 1 else f"{c.numerator}*pi"
        if c.denominator == 1:
            return sign + num
        return f"{sign}{num}/{c.denominator}"


PI_HALF = PiValue(HALF)


def format_float(x: float) -> str:
    """12 significant digits, the package-wide float printing convention."""
    return f"{x:.12g}"
