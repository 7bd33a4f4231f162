"""Restricted root systems with exact rational coordinates.

Families A, B, C, D, BC (any rank) and E6, E7, E8, F4, G2 are built in fixed
canonical frames: A_r lives in the sum-zero hyperplane of r+1 coordinates, the
B/C/D/BC families use r coordinates, G2 uses the sum-zero hyperplane of 3
coordinates, F4 and the E series use the standard orthonormal-frame tables
(E6 and E7 are carved out of E8 in 8 coordinates). All arithmetic is exact; a
root system is a canonically sorted tuple of (vector, multiplicity) pairs, so
identical inputs always produce identical objects.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional

from .errors import DataFormatError, ParameterError, UnsupportedRankError
from .exact import Q, Vector, dot, is_zero, matrix_rank, neg, scale, sub, to_vector

SCHEMA_VERSION = "1"

REDUCED_FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
FAMILIES = REDUCED_FAMILIES + ("BC",)

_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}


@dataclass(frozen=True)
class RootSystem:
    """A finite set of roots with multiplicities in a fixed ambient frame."""

    family: str
    rank: int
    ambient_dim: int
    roots: tuple[tuple[Vector, int], ...]

    def vectors(self) -> tuple[Vector, ...]:
        return tuple(v for v, _ in self.roots)

    def mult(self, v: Vector) -> int:
        for w, m in self.roots:
            if w == v:
                return m
        raise KeyError(v)

    def positive(self) -> tuple[tuple[Vector, int], ...]:
        """Roots whose first nonzero coordinate is positive (lex-positive)."""
        out = []
        for v, m in self.roots:
            lead = next((c for c in v if c != 0), None)
            if lead is not None and lead > 0:
                out.append((v, m))
        return tuple(out)

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)


def _pairs(r: int) -> Iterable[Vector]:
    for i, j in itertools.combinations(range(r), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [Q(0)] * r
                v[i], v[j] = Q(si), Q(sj)
                yield tuple(v)


def _axes(r: int, length: int) -> Iterable[Vector]:
    for i in range(r):
        for s in (1, -1):
            v = [Q(0)] * r
            v[i] = Q(s * length)
            yield tuple(v)


def _roots_a(r: int) -> list[Vector]:
    out = []
    for i, j in itertools.permutations(range(r + 1), 2):
        v = [Q(0)] * (r + 1)
        v[i], v[j] = Q(1), Q(-1)
        out.append(tuple(v))
    return out


def _roots_g2() -> list[Vector]:
    out = []
    for i, j in itertools.permutations(range(3), 2):
        v = [Q(0)] * 3
        v[i], v[j] = Q(1), Q(-1)
        out.append(tuple(v))
    for i in range(3):
        for s in (1, -1):
            v = [Q(-s)] * 3
            v[i] = Q(2 * s)
            out.append(tuple(v))
    return out


def _roots_f4() -> list[Vector]:
    out = list(_axes(4, 1)) + list(_pairs(4))
    for signs in itertools.product((1, -1), repeat=4):
        out.append(tuple(Q(s, 2) for s in signs))
    return out


def _roots_e8() -> list[Vector]:
    out = list(_pairs(8))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(tuple(Q(s, 2) for s in signs))
    return out


def _roots_e7() -> list[Vector]:
    picked = [v for v in _roots_e8() if v[6] + v[7] == 0]
    return picked


def _roots_e6() -> list[Vector]:
    return [v for v in _roots_e7() if v[5] - v[6] == 0]


@functools.lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the canonical root system, every root with multiplicity 1.

    Deterministic: roots come out in lexicographic order, so two calls with
    the same arguments yield equal (indeed cached identical) objects.
    """
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}")
    fixed = _FIXED_RANK.get(family)
    if fixed is not None and rank != fixed:
        raise ParameterError(f"family {family} has rank {fixed}, got {rank}")
    if fixed is None and rank < 1:
        raise ParameterError(f"rank must be >= 1, got {rank}")

    if family == "A":
        vectors, ambient = _roots_a(rank), rank + 1
    elif family == "B":
        vectors, ambient = list(_axes(rank, 1)) + list(_pairs(rank)), rank
    elif family == "C":
        vectors, ambient = list(_axes(rank, 2)) + list(_pairs(rank)), rank
    elif family == "D":
        if rank < 2:
            raise ParameterError("family D needs rank >= 2")
        vectors, ambient = list(_pairs(rank)), rank
    elif family == "BC":
        vectors = list(_axes(rank, 1)) + list(_axes(rank, 2)) + list(_pairs(rank))
        ambient = rank
    elif family == "G2":
        vectors, ambient = _roots_g2(), 3
    elif family == "F4":
        vectors, ambient = _roots_f4(), 4
    elif family == "E8":
        vectors, ambient = _roots_e8(), 8
    elif family == "E7":
        vectors, ambient = _roots_e7(), 8
    else:  # E6
        vectors, ambient = _roots_e6(), 8

    roots = tuple((v, 1) for v in sorted(set(vectors)))
    return RootSystem(family=family, rank=rank, ambient_dim=ambient, roots=roots)


def root_class(family: str, v: Vector) -> str:
    """Length-class label used to key multiplicity tables.

    A/D/E systems have one class ("all"); B splits into "single" (e_i) and
    "pair" (e_i +- e_j); C into "pair" and "double" (2e_i); BC into "single",
    "pair", "double"; F4 and G2 into "short" and "long".
    """
    n2 = dot(v, v)
    if family in ("A", "D", "E6", "E7", "E8"):
        return "all"
    if family == "B":
        return {Q(1): "single", Q(2): "pair"}[n2]
    if family == "C":
        return {Q(2): "pair", Q(4): "double"}[n2]
    if family == "BC":
        return {Q(1): "single", Q(2): "pair", Q(4): "double"}[n2]
    if family == "F4":
        return {Q(1): "short", Q(2): "long"}[n2]
    if family == "G2":
        return {Q(2): "short", Q(6): "long"}[n2]
    raise ParameterError(f"unknown family {family!r}")


def with_multiplicities(rs: RootSystem, mults: Mapping[str, int]) -> RootSystem:
    """Reassign multiplicities by length class; classes with mult 0 are dropped."""
    out = []
    for v, _ in rs.roots:
        m = mults.get(root_class(rs.family, v))
        if m is None:
            raise ParameterError(
                f"no multiplicity for class {root_class(rs.family, v)!r}"
            )
        if m < 0:
            raise ParameterError("negative multiplicity")
        if m > 0:
            out.append((v, m))
    return replace(rs, roots=tuple(out))


def reflect(v: Vector, beta: Vector) -> Vector:
    """Reflection of v in the hyperplane orthogonal to the root beta."""
    bb = dot(beta, beta)
    if bb == 0:
        raise ValueError("cannot reflect in the zero vector")
    c = 2 * dot(v, beta) / bb
    return sub(v, scale(c, beta))


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of verify_axioms: per-axiom verdicts plus first witnesses."""

    checks: tuple[tuple[str, bool], ...]
    witnesses: tuple[tuple[str, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": dict(self.checks),
            "witnesses": dict(self.witnesses),
        }


def verify_axioms(rs: RootSystem) -> AxiomReport:
    """Exhaustively check the root-system axioms with exact arithmetic.

    Checks: roots nonzero; closure under negation (multiplicity-preserving);
    closure of the whole set under every root reflection (again preserving
    multiplicity); integrality of the Cartan numbers 2(a,b)/(b,b); the roots
    span a subspace of dimension equal to the declared rank; proportional
    roots only occur with ratios +-1, +-2, +-1/2.
    """
    table = dict(rs.roots)
    checks: dict[str, bool] = {}
    witnesses: dict[str, str] = {}

    checks["nonzero"] = all(not is_zero(v) for v in table)

    ok = True
    for v, m in rs.roots:
        if table.get(neg(v)) != m:
            ok, witnesses["negation"] = False, f"-{v} missing or wrong multiplicity"
            break
    checks["negation"] = ok

    ok = True
    for beta, _ in rs.roots:
        for v, m in rs.roots:
            w = reflect(v, beta)
            if table.get(w) != m:
                ok = False
                witnesses["reflection_closure"] = f"s_{beta}({v}) = {w} not a root"
                break
        if not ok:
            break
    checks["reflection_closure"] = ok

    ok = True
    for beta, _ in rs.roots:
        bb = dot(beta, beta)
        for v, _ in rs.roots:
            c = 2 * dot(v, beta) / bb
            if c.denominator != 1:
                ok, witnesses["integrality"] = False, f"2({v},{beta})/({beta},{beta}) = {c}"
                break
        if not ok:
            break
    checks["integrality"] = ok

    span = matrix_rank(list(table))
    checks["span"] = span == rs.rank
    if span != rs.rank:
        witnesses["span"] = f"span dimension {span} != rank {rs.rank}"

    ok = True
    allowed = {Q(1), Q(-1), Q(2), Q(-2), Q(1, 2), Q(-1, 2)}
    for v, w in itertools.combinations(table, 2):
        vw = dot(v, w)
        if vw * vw == dot(v, v) * dot(w, w):  # proportional
            i = next(k for k in range(len(v)) if w[k] != 0)
            ratio = v[i] / w[i]
            if ratio not in allowed:
                ok, witnesses["proportionality"] = False, f"{v} = {ratio} * {w}"
                break
    checks["proportionality"] = ok

    return AxiomReport(tuple(sorted(checks.items())), tuple(sorted(witnesses.items())))


def weyl_orbit(rs: RootSystem, v: Vector) -> tuple[Vector, ...]:
    """Orbit of a vector under the Weyl group, by reflection closure.

    Fixed-point iteration: apply every root reflection until the set stops
    growing. Returns the orbit sorted lexicographically.
    """
    v = to_vector(v)
    if len(v) != rs.ambient_dim:
        raise ValueError("dimension mismatch")
    betas = [b for b, _ in rs.positive()]
    orbit = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for b in betas:
                w = reflect(u, b)
                if w not in orbit:
                    orbit.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(sorted(orbit))


@dataclass(frozen=True)
class WeylElement:
    """An orthogonal matrix of the Weyl group with one generating word.

    The matrix acts on ambient coordinates; `word` lists indices into the
    positive-root tuple whose reflections compose (left to right) to it.
    """

    matrix: tuple[Vector, ...]
    word: tuple[int, ...] = field(default=())

    def apply(self, v: Vector) -> Vector:
        return tuple(dot(row, v) for row in self.matrix)


def _reflection_matrix(beta: Vector, dim: int) -> tuple[Vector, ...]:
    cols = []
    for i in range(dim):
        e = tuple(Q(1) if j == i else Q(0) for j in range(dim))
        cols.append(reflect(e, beta))
    # columns of the image give the matrix transposed; transpose back
    return tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))


def weyl_generators(rs: RootSystem) -> tuple[WeylElement, ...]:
    """Reflections in the positive roots, as explicit matrices."""
    out = []
    for k, (b, _) in enumerate(rs.positive()):
        out.append(WeylElement(_reflection_matrix(b, rs.ambient_dim), (k,)))
    return tuple(out)


def enumerate_weyl(rs: RootSystem, max_rank: int = 3) -> tuple[WeylElement, ...]:
    """The full Weyl group by closure under generator products (rank <= 3).

    The generous bound keeps this out of the exponential regime; higher rank
    raises UnsupportedRankError.
    """
    if rs.rank > max_rank:
        raise UnsupportedRankError(f"Weyl enumeration capped at rank {max_rank}")
    gens = weyl_generators(rs)
    dim = rs.ambient_dim
    ident = tuple(
        tuple(Q(1) if i == j else Q(0) for j in range(dim)) for i in range(dim)
    )
    seen: dict[tuple[Vector, ...], tuple[int, ...]] = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for k, g in enumerate(gens):
                prod = tuple(
                    tuple(
                        sum((m[i][l] * g.matrix[l][j] for l in range(dim)), Q(0))
                        for j in range(dim)
                    )
                    for i in range(dim)
                )
                if prod not in seen:
                    seen[prod] = seen[m] + (k,)
                    nxt.append(prod)
        frontier = nxt
    return tuple(WeylElement(m, w) for m, w in sorted(seen.items()))


# ---------------------------------------------------------------------------
# serialization


def _frac_pair(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def to_json_dict(rs: RootSystem) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "family": rs.family,
        "rank": rs.rank,
        "ambient_dim": rs.ambient_dim,
        "roots": [
            {"coords": [_frac_pair(c) for c in v], "mult": m} for v, m in rs.roots
        ],
    }


def from_json_dict(data: Mapping) -> RootSystem:
    if data.get("schema_version") != SCHEMA_VERSION:
        raise DataFormatError(
            f"root system schema {data.get('schema_version')!r} != {SCHEMA_VERSION!r}"
        )
    try:
        roots = tuple(
            (tuple(Q(n, d) for n, d in entry["coords"]), int(entry["mult"]))
            for entry in data["roots"]
        )
        rs = RootSystem(
            family=data["family"],
            rank=int(data["rank"]),
            ambient_dim=int(data["ambient_dim"]),
            roots=roots,
        )
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DataFormatError(f"malformed root system payload: {exc}") from exc
    return rs


def dumps(rs: RootSystem) -> str:
    return json.dumps(to_json_dict(rs), sort_keys=True, separators=(",", ":"))


def loads(text: str) -> RootSystem:
    return from_json_dict(json.loads(text))
