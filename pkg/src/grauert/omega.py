"""The flat polytope of the maximal complexification, exactly.

The domain attached to a restricted root system is the convex region of the
maximal flat cut out by |alpha(H)| <= pi/2 over all restricted roots. Every
length here is a rational multiple of pi, so facet reduction, vertex
enumeration (rank <= 4), strongly orthogonal cascades, and the cube
description available in the Hermitian case are all computed with exact
rational arithmetic; pi stays symbolic throughout.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .catalog import RestrictedRootDatum
from .errors import GrauertError, ParameterError, UnsupportedRankError
from .exact import (
    PiValue,
    Q,
    Vector,
    add,
    dot,
    fraction_isqrt,
    is_rational_vector,
    is_zero,
    matrix_rank,
    neg,
    scale,
    span_basis,
    sub,
    to_vector,
)

VERTEX_ENUMERATION_MAX_RANK = 4


@dataclass(frozen=True)
class OmegaPolytope:
    """Halfspace and (rank <= 4) vertex description of the flat domain.

    Each halfspace entry is a lex-positive functional a, read as the pair of
    constraints |a(H)| <= pi/2. Vertices are ambient coordinate vectors in
    units of pi (so the vertex (1/4, -1/4) means (pi/4, -pi/4)); they are
    None when enumeration was skipped for rank reasons. In frames whose root
    span is a proper subspace (the A families), the halfspaces do not
    constrain the orthogonal complement and all vertices lie in the span.
    """

    rank: int
    ambient_dim: int
    halfspaces: tuple[Vector, ...]
    vertices: Optional[tuple[Vector, ...]]

    @property
    def vertices_available(self) -> bool:
        return self.vertices is not None

    def contains_exact(self, point_pi: Sequence) -> bool:
        """Closed membership for an exact rational point given in units of pi."""
        y = to_vector(point_pi)
        return all(abs(dot(a, y)) <= Q(1, 2) for a in self.halfspaces)

    def contains(self, point: Sequence[float], tol: float = 0.0) -> bool:
        """Closed membership for a numeric point given in radians."""
        bound = math.pi / 2 + tol
        for a in self.halfspaces:
            value = sum(float(c) * float(x) for c, x in zip(a, point))
            if abs(value) > bound:
                return False
        return True

    def as_dict(self) -> dict:
        return {
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "halfspaces": [
                {"alpha": [[c.numerator, c.denominator] for c in a], "bound": "pi/2"}
                for a in self.halfspaces
            ],
            "vertices": None
            if self.vertices is None
            else [[str(PiValue(c)) for c in v] for v in self.vertices],
            "vertices_available": self.vertices_available,
        }


# ---------------------------------------------------------------------------
# facet selection

# A root's pair of halfspaces is redundant exactly when some other root beta
# (not its negative) has Cartan integer 2(beta,alpha)/(alpha,alpha) of
# absolute value >= 2: then either beta = 2 alpha, or gamma = 2 alpha - beta
# is again a root and alpha = (beta + gamma)/2, so the alpha constraint is an
# average of others. Conversely when every such integer is -1, 0, or 1 the
# dual point (pi/2) alpha / |alpha|^2 saturates only the alpha constraint,
# which is therefore a facet. Net effect: the facets are the maximal-length
# roots.


def facet_roots(vectors: Iterable[Vector]) -> tuple[Vector, ...]:
    """Lex-positive functionals whose halfspaces are facets of the domain."""
    vs = tuple(vectors)
    out = []
    for a in vs:
        lead = next((c for c in a if c != 0), None)
        if lead is None or lead < 0:
            continue
        aa = dot(a, a)
        na = neg(a)
        if any(b != a and b != na and abs(2 * dot(b, a) / aa) >= 2 for b in vs):
            continue
        out.append(a)
    return tuple(sorted(out))


def _canonical_direction(a: Vector) -> Vector:
    lead = next(c for c in a if c != 0)
    return scale(Q(1) / lead if lead > 0 else Q(-1) / lead, a)


def _prune_rows(rows: Iterable[Vector]) -> tuple[Vector, ...]:
    """Drop zero rows; keep only the tightest of any parallel family."""
    best: dict[Vector, Vector] = {}
    for a in rows:
        a = to_vector(a)
        if is_zero(a):
            continue
        direction = _canonical_direction(a)
        kept = best.get(direction)
        if kept is None or dot(a, a) > dot(kept, kept):
            lead = next(c for c in a if c != 0)
            best[direction] = a if lead > 0 else neg(a)
    return tuple(sorted(best.values()))


# ---------------------------------------------------------------------------
# exact vertex enumeration


def _invert(rows: Sequence[Vector]) -> Optional[list[Vector]]:
    r = len(rows)
    aug = [list(rows[i]) + [Q(1) if j == i else Q(0) for j in range(r)] for i in range(r)]
    for col in range(r):
        pivot = next((i for i in range(col, r) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Q(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(r):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [tuple(row[r:]) for row in aug]


def _enumerate_vertices(rows_y: Sequence[Vector], r: int) -> list[Vector]:
    half = Q(1, 2)
    candidates: set[Vector] = set()
    for combo in itertools.combinations(range(len(rows_y)), r):
        inverse = _invert([rows_y[i] for i in combo])
        if inverse is None:
            continue
        # The first sign is pinned to +1/2: the polytope is symmetric, so the
        # negated candidate is added alongside each feasible one.
        for signs in itertools.product((half, -half), repeat=r - 1):
            rhs = (half,) + signs
            y = tuple(dot(row, rhs) for row in inverse)
            candidates.add(y)
    vertices = []
    for y in candidates:
        if all(abs(dot(row, y)) <= half for row in rows_y):
            vertices.append(y)
            vertices.append(neg(y))
    return sorted(set(vertices))


def polytope_from_rows(
    rows: Iterable[Vector],
    basis: Sequence[Vector],
    max_enumeration_rank: int = VERTEX_ENUMERATION_MAX_RANK,
) -> OmegaPolytope:
    """Build the polytope |a(H)| <= pi/2 inside the span of `basis`.

    `rows` are functionals on the ambient frame; `basis` spans the subspace
    the polytope lives in. Vertices are enumerated exactly for rank up to
    max_enumeration_rank and reported in ambient coordinates (units of pi).
    """
    basis = tuple(to_vector(b) for b in basis)
    r = len(basis)
    pruned = _prune_rows(rows)
    rows_y = [tuple(dot(a, b) for b in basis) for a in pruned]
    if matrix_rank(rows_y) < r:
        raise GrauertError("halfspaces do not bound the flat: unbounded polytope")
    ambient = len(basis[0])
    if r > max_enumeration_rank:
        return OmegaPolytope(rank=r, ambient_dim=ambient, halfspaces=pruned, vertices=None)
    vertices_y = _enumerate_vertices(rows_y, r)
    vertices = tuple(
        sorted(
            tuple(sum((y[i] * basis[i][k] for i in range(r)), Q(0)) for k in range(ambient))
            for y in vertices_y
        )
    )
    return OmegaPolytope(rank=r, ambient_dim=ambient, halfspaces=pruned, vertices=vertices)


def omega_polytope(datum: RestrictedRootDatum) -> OmegaPolytope:
    """The flat domain of a catalog space, facets reduced exactly.

    Vertices are enumerated for rank <= 4; above that the halfspace
    description is returned with vertices marked unavailable.
    """
    rs = datum.root_system
    vectors = rs.vectors()
    return polytope_from_rows(facet_roots(vectors), span_basis(vectors))


# ---------------------------------------------------------------------------
# norms, boundary parameters, radii


def sup_norm(datum: RestrictedRootDatum, direction: Sequence):
    """max over roots of |alpha(H)|: exact Fraction for rational H, else float."""
    vectors = datum.root_system.vectors()
    if is_rational_vector(direction):
        h = to_vector(direction)
        return max(abs(dot(a, h)) for a in vectors)
    floats = [float(x) for x in direction]
    return max(
        abs(sum(float(c) * x for c, x in zip(a, floats))) for a in vectors
    )


def boundary_parameter(datum: RestrictedRootDatum, direction: Sequence):
    """sup{s > 0 : sH in the open domain} = (pi/2) / sup_norm(H).

    Exact (a PiValue) for rational directions, float otherwise. Raises for
    directions annihilated by every root (in particular H = 0).
    """
    value = sup_norm(datum, direction)
    if value == 0:
        raise ValueError("direction is annihilated by every restricted root")
    if isinstance(value, Fraction):
        return PiValue(Q(1, 2) / value)
    return (math.pi / 2) / value


def max_tube_radius(datum: RestrictedRootDatum):
    """Largest r with the full radius-r tangent disk bundle inside the domain.

    Equals (pi/2) divided by the largest dual norm of a root, the dual norm
    being taken for the inner product metric_scale * (canonical frame dot).
    Returns an exact PiValue when the dual norm is rational, else a float.
    """
    rs = datum.root_system
    longest = max(dot(v, v) for v in rs.vectors())
    dual_sq = longest / datum.metric_scale
    exact = fraction_isqrt(dual_sq)
    if exact is not None:
        return PiValue(Q(1, 2) / exact)
    return (math.pi / 2) / math.sqrt(float(dual_sq))


# ---------------------------------------------------------------------------
# strongly orthogonal roots and the Hermitian cube


@dataclass(frozen=True)
class StronglyOrthogonalSet:
    """Pairwise strongly orthogonal roots spanning the flat (Hermitian case).

    Strong orthogonality of gamma and delta means neither gamma + delta nor
    gamma - delta is a root; it forces ordinary orthogonality, so the dual
    basis below is a closed form.
    """

    gammas: tuple[Vector, ...]

    def __len__(self) -> int:
        return len(self.gammas)

    def dual_basis(self) -> tuple[Vector, ...]:
        """Vectors H_j with gamma_i(H_j) = 2 delta_ij: H_j = 2 gamma_j/|gamma_j|^2."""
        return tuple(scale(Q(2) / dot(g, g), g) for g in self.gammas)

    def flat_point(self, coefficients: Sequence) -> Vector:
        """H(t) = sum_j t_j H_j for rational t."""
        t = to_vector(coefficients)
        if len(t) != len(self.gammas):
            raise ValueError("coefficient count must match the number of roots")
        duals = self.dual_basis()
        point = tuple(Q(0) for _ in duals[0])
        for tj, hj in zip(t, duals):
            point = add(point, scale(tj, hj))
        return point


def strongly_orthogonal_roots(datum: RestrictedRootDatum) -> StronglyOrthogonalSet:
    """Cascade construction of a maximal strongly orthogonal set.

    Repeatedly takes the lexicographically highest remaining root and
    discards everything not strongly orthogonal to it. Only defined for
    Hermitian spaces, where the result has exactly rank-many members; in the
    C/BC frames it is {2e_1, ..., 2e_r}.
    """
    if not datum.space.hermitian:
        raise ParameterError(f"{datum.space.key} is not Hermitian")
    all_roots = set(datum.root_system.vectors())
    remaining = sorted(all_roots)
    gammas = []
    while remaining:
        g = remaining[-1]  # lex-highest
        gammas.append(g)
        ng = neg(g)
        remaining = [
            b
            for b in remaining
            if b != g
            and b != ng
            and add(g, b) not in all_roots
            and sub(g, b) not in all_roots
        ]
    if len(gammas) != datum.root_system.rank:
        raise GrauertError(
            f"cascade produced {len(gammas)} roots for rank {datum.root_system.rank}"
        )
    for a, b in itertools.combinations(gammas, 2):
        if dot(a, b) != 0:
            raise GrauertError("cascade result is not orthogonal")
    return StronglyOrthogonalSet(tuple(gammas))


def omega_from_gamma(gammas: StronglyOrthogonalSet) -> OmegaPolytope:
    """The cube |gamma_j(H)| <= pi/2: vertices sum_j (+-pi/4) H_j.

    For Hermitian data this equals the full domain polytope; the equality is
    something callers assert, not an assumption made here.
    """
    duals = gammas.dual_basis()
    r = len(duals)
    ambient = len(duals[0])
    vertices = []
    for signs in itertools.product((Q(1, 4), Q(-1, 4)), repeat=r):
        point = tuple(Q(0) for _ in range(ambient))
        for s, hj in zip(signs, duals):
            point = add(point, scale(s, hj))
        vertices.append(point)
    return OmegaPolytope(
        rank=r,
        ambient_dim=ambient,
        halfspaces=tuple(sorted(gammas.gammas)),
        vertices=tuple(sorted(vertices)),
    )
