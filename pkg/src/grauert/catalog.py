"""Catalog of irreducible Riemannian symmetric spaces of noncompact type.

The bundled JSON tables enumerate every family (classical families
parametrized, exceptional spaces fixed) together with the restricted root
system and its multiplicities, the Hermitian flag, the list of totally
geodesic embeddings into Hermitian spaces that drives the classification, and
the expected verdict table. This module loads those files once per data
directory, validates parameters, and exposes typed accessors.

Two-parameter families are stored with p >= q; the swapped order names the
same space and is normalized on lookup.
"""

from __future__ import annotations

import difflib
import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterator, Mapping, Optional

from .errors import DataFormatError, ParameterError, UnknownSpaceError
from .exact import Q, dot, span_basis
from .roots import RootSystem, build_root_system, with_multiplicities

SCHEMA_VERSION = "1"

DATA_FILES = ("catalog.json", "jaffee_pairs.json", "golden_table.json")


# ---------------------------------------------------------------------------
# data loading


def _data_text(name: str, data_dir: Optional[str]) -> str:
    if data_dir is not None:
        return (Path(data_dir) / name).read_text(encoding="utf-8")
    return resources.files("grauert.data").joinpath(name).read_text(encoding="utf-8")


@functools.lru_cache(maxsize=None)
def _load(name: str, data_dir: Optional[str]) -> dict:
    try:
        text = _data_text(name, data_dir)
    except FileNotFoundError:
        where = data_dir or "bundled package data"
        raise DataFormatError(f"{name}: not found in {where}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataFormatError(f"{name}: invalid JSON ({exc})") from None
    if not isinstance(payload, dict):
        raise DataFormatError(f"{name}: top level must be a JSON object")
    version = payload.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DataFormatError(
            f"{name}: schema_version {version!r} not supported (expected {SCHEMA_VERSION!r})"
        )
    return payload


def _dir_key(data_dir) -> Optional[str]:
    return None if data_dir is None else str(Path(data_dir))


# ---------------------------------------------------------------------------
# tiny expression evaluators for the condition / formula vocabulary used in
# the data files


def _eval_linear(coeffs: Mapping[str, int], env: Mapping[str, int]) -> int:
    """Evaluate {"const": c, "p": a, ...} as c + a*p + ... over env."""
    total = 0
    for key, coeff in coeffs.items():
        if key == "const":
            total += coeff
        elif key in env:
            total += coeff * env[key]
        else:
            raise DataFormatError(f"linear form references unknown parameter {key!r}")
    return total


def _eval_rank(expr, env: Mapping[str, int]) -> int:
    if isinstance(expr, int):
        return expr
    if expr in env:
        return env[expr]
    if expr.endswith("-1") and expr[:-2] in env:
        return env[expr[:-2]] - 1
    if expr.endswith("//2") and expr[:-3] in env:
        return env[expr[:-3]] // 2
    raise DataFormatError(f"unsupported rank expression {expr!r}")


def _equalities_hold(clause: str, env: Mapping[str, int]) -> bool:
    """A clause is a comma-joined conjunction of "name==value" atoms."""
    for atom in clause.split(","):
        name, sep, value = atom.partition("==")
        if not sep:
            raise DataFormatError(f"unsupported condition atom {atom!r}")
        if env.get(name.strip()) != int(value):
            return False
    return True


def _condition_holds(cond: str, env: Mapping[str, int]) -> bool:
    """Conditions: "always", "never", or "==" clauses joined by " or "."""
    if cond == "always":
        return True
    if cond == "never":
        return False
    return any(_equalities_hold(clause, env) for clause in cond.split(" or "))


def _case_holds(when: str, env: Mapping[str, int]) -> bool:
    """Case selectors for restricted-root tables."""
    if when == "always":
        return True
    if when == "p>q":
        return env["p"] > env["q"]
    if when == "p==q":
        return env["p"] == env["q"]
    if when == "n_even":
        return env["n"] % 2 == 0
    if when == "n_odd":
        return env["n"] % 2 == 1
    raise DataFormatError(f"unsupported case selector {when!r}")


# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class SpaceDescriptor:
    """One space, fully determined: label, parameters, and derived facts."""

    cartan_label: str
    params: tuple[int, ...]
    param_names: tuple[str, ...]
    display_name: str
    rank: int
    dim: int
    hermitian: bool

    @property
    def env(self) -> dict[str, int]:
        return dict(zip(self.param_names, self.params))

    @property
    def key(self) -> str:
        """Canonical lookup string, e.g. "BDI:p=3,q=2" or "EIII"."""
        if not self.params:
            return self.cartan_label
        assigns = ",".join(f"{n}={v}" for n, v in zip(self.param_names, self.params))
        return f"{self.cartan_label}:{assigns}"

    def __str__(self) -> str:
        return self.key


@dataclass(frozen=True)
class RestrictedRootDatum:
    """Restricted root system with multiplicities, plus the metric factor.

    metric_scale is the constant c with <.,.>_a = c * (Euclidean dot product
    of the canonical frame): for rank one it is chosen so the shortest
    restricted root has unit dual norm (most negative sectional curvature
    normalized), for higher rank it is the factor relating the canonical
    frame to the Killing form restricted to the flat.
    """

    space: SpaceDescriptor
    root_system: RootSystem
    metric_scale: Fraction


def _family_entry(label: str, data_dir: Optional[str]) -> Mapping:
    catalog = _load("catalog.json", data_dir)
    for entry in catalog["spaces"]:
        if entry["label"] == label:
            return entry
    raise UnknownSpaceError(label, _suggestions(label, data_dir))


def labels(data_dir=None) -> tuple[str, ...]:
    """All space labels, in catalog order."""
    catalog = _load("catalog.json", _dir_key(data_dir))
    return tuple(entry["label"] for entry in catalog["spaces"])


def _suggestions(label: str, data_dir: Optional[str]) -> tuple[str, ...]:
    try:
        known = list(labels(data_dir))
    except DataFormatError:
        return ()
    return tuple(difflib.get_close_matches(label, known, n=3, cutoff=0.5))


def _check_constraints(entry: Mapping, env: Mapping[str, int]) -> None:
    label = entry["label"]
    for name, value in env.items():
        if value < 1:
            raise ParameterError(f"{label}: parameter {name}={value} must be >= 1")
    cons = entry.get("constraints", {})
    for name in entry["params"]:
        floor = cons.get(f"{name}_min")
        if floor is not None and env[name] < floor:
            raise ParameterError(f"{label}: needs {name} >= {floor}, got {env[name]}")
    if cons.get("p_ge_q") and env["p"] < env["q"]:
        raise ParameterError(f"{label}: needs p >= q")
    for bad in cons.get("exclude", ()):
        if list(env[name] for name in entry["params"]) == list(bad):
            values = ",".join(str(v) for v in bad)
            raise ParameterError(f"{label}: parameters ({values}) excluded (not irreducible)")


def _display_env(env: Mapping[str, int]) -> dict[str, int]:
    out = dict(env)
    if "n" in env:
        out["nn"] = 2 * env["n"]
        out["odd"] = 2 * env["n"] + 1
        out["even"] = 2 * env["n"]
    return out


def _display_name(entry: Mapping, env: Mapping[str, int]) -> str:
    template = entry["display"]
    for case in entry.get("display_cases", ()):
        if _condition_holds(case["when"], env):
            template = case["template"]
            break
    return template.format(**_display_env(env))


def _restricted_case(entry: Mapping, env: Mapping[str, int]) -> Mapping:
    for case in entry["restricted"]:
        if _case_holds(case["when"], env):
            return case
    raise DataFormatError(f"{entry['label']}: no restricted-root case matches {env}")


def _root_system_for(entry: Mapping, env: Mapping[str, int]) -> RootSystem:
    case = _restricted_case(entry, env)
    rank = _eval_rank(case["rank"], env)
    if rank < 1:
        raise ParameterError(f"{entry['label']}: rank {rank} < 1 for parameters {env}")
    bare = build_root_system(case["family"], rank)
    mults = {name: _eval_linear(coeffs, env) for name, coeffs in case["mults"].items()}
    return with_multiplicities(bare, mults)


def _make_descriptor(entry: Mapping, env: Mapping[str, int], data_dir: Optional[str]) -> SpaceDescriptor:
    return _descriptor_cached(
        entry["label"], tuple(env[name] for name in entry["params"]), data_dir
    )


@functools.lru_cache(maxsize=None)
def _descriptor_cached(label: str, params: tuple[int, ...], data_dir: Optional[str]) -> SpaceDescriptor:
    entry = _family_entry(label, data_dir)
    env = dict(zip(entry["params"], params))
    _check_constraints(entry, env)
    rs = _root_system_for(entry, env)
    total = rs.total_multiplicity()
    if total % 2:
        raise DataFormatError(f"{label}: odd total multiplicity {total}")
    return SpaceDescriptor(
        cartan_label=label,
        params=params,
        param_names=tuple(entry["params"]),
        display_name=_display_name(entry, env),
        rank=rs.rank,
        dim=rs.rank + total // 2,
        hermitian=_condition_holds(entry["hermitian"], env),
    )


def _normalize_env(entry: Mapping, values: Mapping[str, int]) -> dict[str, int]:
    env = dict(values)
    if entry.get("constraints", {}).get("p_ge_q") and env.get("p", 0) < env.get("q", 0):
        env["p"], env["q"] = env["q"], env["p"]
    return env


def descriptor(label: str, data_dir=None, **params: int) -> SpaceDescriptor:
    """Build a descriptor from a label and keyword parameters."""
    key = _dir_key(data_dir)
    entry = _family_entry(label, key)
    expected = tuple(entry["params"])
    if tuple(sorted(params)) != tuple(sorted(expected)):
        raise ParameterError(
            f"{label}: takes parameters {', '.join(expected) or '(none)'}, got {', '.join(sorted(params)) or '(none)'}"
        )
    return _make_descriptor(entry, _normalize_env(entry, params), key)


def _parse_assignments(label: str, text: str, names: tuple[str, ...]) -> dict[str, int]:
    tokens = [t.strip() for t in text.split(",")]
    if any("=" in t for t in tokens):
        values: dict[str, int] = {}
        for token in tokens:
            name, sep, raw = token.partition("=")
            name = name.strip()
            if not sep or name not in names:
                raise ParameterError(f"{label}: unknown parameter assignment {token!r}")
            if name in values:
                raise ParameterError(f"{label}: duplicate parameter {name!r}")
            try:
                values[name] = int(raw)
            except ValueError:
                raise ParameterError(f"{label}: parameter {name!r} must be an integer") from None
        missing = [n for n in names if n not in values]
        if missing:
            raise ParameterError(f"{label}: missing parameter(s) {', '.join(missing)}")
        return values
    if len(tokens) != len(names):
        raise ParameterError(
            f"{label}: expected {len(names)} parameter(s) ({', '.join(names)}), got {len(tokens)}"
        )
    try:
        return {name: int(token) for name, token in zip(names, tokens)}
    except ValueError:
        raise ParameterError(f"{label}: parameters must be integers") from None


def _alias_token(text: str) -> str:
    return "".join(text.split()).lower()


_ALIAS_PARAM_CAP = 12


@functools.lru_cache(maxsize=None)
def _alias_table(data_dir: Optional[str]) -> dict[str, str]:
    """display_name (normalized) -> canonical key, over a modest parameter grid."""
    table: dict[str, str] = {}
    catalog = _load("catalog.json", data_dir)
    for entry in catalog["spaces"]:
        names = tuple(entry["params"])
        if not names:
            grid = [{}]
        elif names == ("n",):
            grid = [{"n": n} for n in range(1, _ALIAS_PARAM_CAP + 1)]
        else:
            grid = [
                {"p": p, "q": q}
                for p in range(1, _ALIAS_PARAM_CAP + 1)
                for q in range(1, p + 1)
            ]
        for env in grid:
            try:
                desc = _make_descriptor(entry, env, data_dir)
            except (ParameterError, DataFormatError):
                continue
            for alias in (desc.display_name, desc.display_name.replace("_0", "")):
                table.setdefault(_alias_token(alias), desc.key)
    return table


def lookup(name: str, data_dir=None) -> SpaceDescriptor:
    """Resolve "LABEL", "LABEL:p=2,q=1", "LABEL:2,1", or a display name.

    Labels are matched case-insensitively when the exact form misses;
    two-parameter families accept either parameter order.
    """
    key = _dir_key(data_dir)
    text = name.strip()
    if not text:
        raise UnknownSpaceError(name)
    head, sep, tail = text.partition(":")
    head = head.strip()
    known = labels(data_dir)
    label = head if head in known else next(
        (k for k in known if k.lower() == head.lower()), None
    )
    if label is not None:
        entry = _family_entry(label, key)
        names = tuple(entry["params"])
        if not sep:
            if names:
                raise ParameterError(
                    f"{label}: requires parameters {', '.join(names)} (e.g. \"{label}:"
                    + ",".join(f"{n}=2" for n in names)
                    + '")'
                )
            return _make_descriptor(entry, {}, key)
        if not names:
            raise ParameterError(f"{label}: takes no parameters")
        values = _parse_assignments(label, tail, names)
        return _make_descriptor(entry, _normalize_env(entry, values), key)
    alias = _alias_table(key).get(_alias_token(text))
    if alias is not None:
        return lookup(alias, data_dir=data_dir)
    raise UnknownSpaceError(text, _suggestions(head, key))


def restricted_datum(space: SpaceDescriptor, data_dir=None) -> RestrictedRootDatum:
    """Root system with multiplicities and the metric normalization factor."""
    return _datum_cached(space, _dir_key(data_dir))


@functools.lru_cache(maxsize=None)
def _datum_cached(space: SpaceDescriptor, key: Optional[str]) -> RestrictedRootDatum:
    entry = _family_entry(space.cartan_label, key)
    rs = _root_system_for(entry, space.env)
    if rs.rank + rs.total_multiplicity() // 2 != space.dim:
        raise DataFormatError(f"{space.key}: dimension mismatch against root data")
    return RestrictedRootDatum(space=space, root_system=rs, metric_scale=_metric_scale(rs))


def _metric_scale(rs: RootSystem) -> Fraction:
    if rs.rank == 1:
        return min(dot(v, v) for v, _ in rs.roots)
    basis = span_basis(rs.vectors())
    u = basis[0]
    return sum((m * dot(v, u) ** 2 for v, m in rs.roots), Q(0)) / dot(u, u)


def iter_spaces(n_max: int = 8, pq_max: int = 6, data_dir=None) -> Iterator[SpaceDescriptor]:
    """Every valid space over the standard test grid, in deterministic order.

    One-parameter families run up to n_max, two-parameter families over
    p >= q with p, q <= pq_max; parameterless spaces appear once.
    """
    key = _dir_key(data_dir)
    catalog = _load("catalog.json", key)
    for entry in catalog["spaces"]:
        names = tuple(entry["params"])
        if not names:
            grid = [{}]
        elif names == ("n",):
            grid = [{"n": n} for n in range(1, n_max + 1)]
        else:
            grid = [
                {"p": p, "q": q}
                for p in range(1, pq_max + 1)
                for q in range(1, p + 1)
            ]
        for env in grid:
            try:
                yield _make_descriptor(entry, env, key)
            except ParameterError:
                continue


# ---------------------------------------------------------------------------
# space templates (shared by the embedding pairs and the verdict table)


@dataclass(frozen=True)
class SpaceTemplate:
    """A pattern over spaces: a label, pinned values, and lower bounds."""

    label: str
    fixed: tuple[tuple[str, int], ...] = ()
    lower: tuple[tuple[str, int], ...] = ()

    def matches(self, space: SpaceDescriptor) -> bool:
        if space.cartan_label != self.label:
            return False
        env = space.env
        return all(env.get(k) == v for k, v in self.fixed) and all(
            env.get(k, 0) >= v for k, v in self.lower
        )


@dataclass(frozen=True)
class ParamMap:
    """A target label plus linear formulas computing its parameters."""

    label: str
    forms: tuple[tuple[str, tuple[tuple[str, int], ...]], ...] = ()

    def instantiate(self, space: SpaceDescriptor, data_dir=None) -> SpaceDescriptor:
        env = space.env
        values = {name: _eval_linear(dict(coeffs), env) for name, coeffs in self.forms}
        return descriptor(self.label, data_dir=data_dir, **values)


def _as_pairs(mapping: Optional[Mapping[str, int]]) -> tuple[tuple[str, int], ...]:
    if not mapping:
        return ()
    return tuple(sorted(mapping.items()))


def _template_from(raw: Mapping) -> SpaceTemplate:
    lower = dict(raw.get("min", {}))
    for key, floor in raw.get("guard", {}).items():
        if not key.endswith("_min"):
            raise DataFormatError(f"unsupported guard key {key!r}")
        lower[key[: -len("_min")]] = floor
    return SpaceTemplate(
        label=raw["label"], fixed=_as_pairs(raw.get("fix")), lower=_as_pairs(lower)
    )


def _param_map_from(raw: Mapping) -> ParamMap:
    forms = tuple(
        (name, _as_pairs(coeffs)) for name, coeffs in sorted(raw.get("params", {}).items())
    )
    return ParamMap(label=raw["label"], forms=forms)


# ---------------------------------------------------------------------------
# embedding pairs


@dataclass(frozen=True)
class JaffeePair:
    """A space embedded totally geodesically in a Hermitian space.

    kind "diagonal" is the tautological pair every Hermitian space forms
    with itself; kind "embedding" carries a real-form template and the
    formula for its enveloping Hermitian space.
    """

    pair_id: str
    kind: str
    source: str
    real_form: Optional[SpaceTemplate]
    envelope: Optional[ParamMap]

    def applies_to(self, space: SpaceDescriptor) -> bool:
        if self.kind == "diagonal":
            return space.hermitian
        return self.real_form is not None and self.real_form.matches(space)

    def envelope_for(self, space: SpaceDescriptor, data_dir=None) -> SpaceDescriptor:
        if not self.applies_to(space):
            raise ParameterError(f"pair {self.pair_id} does not apply to {space.key}")
        if self.kind == "diagonal":
            return space
        assert self.envelope is not None
        return self.envelope.instantiate(space, data_dir=data_dir)


@functools.lru_cache(maxsize=None)
def _pairs_cached(data_dir: Optional[str]) -> tuple[JaffeePair, ...]:
    payload = _load("jaffee_pairs.json", data_dir)
    out = []
    for raw in payload["pairs"]:
        kind = raw.get("kind")
        if kind not in ("diagonal", "embedding"):
            raise DataFormatError(f"pair {raw.get('id')!r}: unsupported kind {kind!r}")
        real = _template_from(raw["real"]) if kind == "embedding" else None
        env = _param_map_from(raw["envelope"]) if kind == "embedding" else None
        out.append(
            JaffeePair(
                pair_id=raw["id"],
                kind=kind,
                source=raw.get("source", "primary"),
                real_form=real,
                envelope=env,
            )
        )
    return tuple(out)


def jaffee_pairs(data_dir=None) -> tuple[JaffeePair, ...]:
    """The embedding-pair table, diagonal pair included."""
    return _pairs_cached(_dir_key(data_dir))


# ---------------------------------------------------------------------------
# verdict table


@dataclass(frozen=True)
class GoldenTableRow:
    """One row of the expected classification table."""

    row: int
    verdict: str
    display: str
    members: tuple[SpaceTemplate, ...]
    envelope: Optional[ParamMap]

    def covers(self, space: SpaceDescriptor) -> bool:
        return any(member.matches(space) for member in self.members)


@functools.lru_cache(maxsize=None)
def _table_cached(data_dir: Optional[str]) -> tuple[GoldenTableRow, ...]:
    payload = _load("golden_table.json", data_dir)
    rows = []
    for raw in payload["rows"]:
        verdict = raw.get("verdict")
        if verdict not in ("rigid", "product", "envelope"):
            raise DataFormatError(f"row {raw.get('row')}: unsupported verdict {verdict!r}")
        if (verdict == "envelope") != ("envelope" in raw):
            raise DataFormatError(f"row {raw.get('row')}: envelope data inconsistent")
        rows.append(
            GoldenTableRow(
                row=int(raw["row"]),
                verdict=verdict,
                display=raw["display"],
                members=tuple(_template_from(m) for m in raw["members"]),
                envelope=_param_map_from(raw["envelope"]) if "envelope" in raw else None,
            )
        )
    return tuple(rows)


def golden_table(data_dir=None) -> tuple[GoldenTableRow, ...]:
    """The expected classification verdicts, one row per table line."""
    return _table_cached(_dir_key(data_dir))


# ---------------------------------------------------------------------------
# audit


@dataclass(frozen=True)
class AuditReport:
    """Results of the static-data audit: (check name, passed, detail) triples."""

    checks: tuple[tuple[str, bool, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": name, "passed": ok, "detail": detail}
                for name, ok, detail in self.checks
            ],
        }


def audit(data_dir=None, n_max: int = 8, pq_max: int = 6) -> AuditReport:
    """Validate the shipped (or user-supplied) data files against invariants.

    Checks: files load with the right schema; descriptors are dimensionally
    consistent; every embedding pair has a Hermitian envelope whose rank lies
    between the real form's rank and twice it; at most one embedding pair
    passes the rank-doubling test per space; verdict-table rows instantiate
    and reference catalog labels; diagonal pair present exactly once.
    """
    checks: list[tuple[str, bool, str]] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        checks.append((name, ok, detail))

    try:
        spaces = list(iter_spaces(n_max=n_max, pq_max=pq_max, data_dir=data_dir))
        pairs = jaffee_pairs(data_dir)
        rows = golden_table(data_dir)
    except (DataFormatError, ParameterError) as exc:
        return AuditReport((("load", False, str(exc)),))
    record("load", True, f"{len(spaces)} spaces, {len(pairs)} pairs, {len(rows)} rows")

    bad = []
    for space in spaces:
        try:
            if restricted_datum(space, data_dir).root_system.rank != space.rank:
                bad.append(space.key)
        except DataFormatError as exc:
            bad.append(f"{space.key}: {exc}")
    record("datum-consistency", not bad, ",".join(bad[:5]))

    diag = [p for p in pairs if p.kind == "diagonal"]
    record("diagonal-pair", len(diag) == 1, f"{len(diag)} diagonal pairs")

    bad = []
    for space in spaces:
        for pair in pairs:
            if pair.kind != "embedding" or not pair.applies_to(space):
                continue
            try:
                env = pair.envelope_for(space, data_dir=data_dir)
            except ParameterError as exc:
                bad.append(f"{pair.pair_id}@{space.key}: {exc}")
                continue
            if not env.hermitian:
                bad.append(f"{pair.pair_id}@{space.key}: envelope {env.key} not hermitian")
            if not space.rank <= env.rank <= 2 * space.rank:
                bad.append(
                    f"{pair.pair_id}@{space.key}: rank {space.rank} vs envelope {env.rank}"
                )
    record("pair-invariants", not bad, "; ".join(bad[:5]))

    bad = []
    for space in spaces:
        passing = [
            pair.pair_id
            for pair in pairs
            if pair.kind == "embedding"
            and pair.applies_to(space)
            and pair.envelope_for(space, data_dir=data_dir).rank == 2 * space.rank
        ]
        if len(passing) > 1:
            bad.append(f"{space.key}: {','.join(passing)}")
    record("pair-uniqueness", not bad, "; ".join(bad[:5]))

    known = set(labels(data_dir))
    bad = []
    for row in rows:
        for member in row.members:
            if member.label not in known:
                bad.append(f"row {row.row}: unknown label {member.label}")
        if row.envelope is not None and row.envelope.label not in known:
            bad.append(f"row {row.row}: unknown envelope label {row.envelope.label}")
    expected_rows = list(range(1, len(rows) + 1))
    if [row.row for row in rows] != expected_rows:
        bad.append("row numbering not 1..17")
    record("table-labels", not bad, "; ".join(bad[:5]))

    covered = {s.key for s in spaces for row in rows if row.covers(s)}
    uncovered = sorted(s.key for s in spaces if s.key not in covered)
    # Low-parameter coincidences are intentionally outside every table row.
    expected_uncovered = {"AI:n=2", "AII:n=2", "cA:n=2", "cB:n=1", "cC:n=1"}
    record(
        "table-coverage",
        set(uncovered) == expected_uncovered,
        ",".join(sorted(set(uncovered) ^ expected_uncovered)),
    )

    multi = []
    for space in spaces:
        hits = [row.row for row in rows if row.covers(space)]
        if len(hits) > 1:
            multi.append(f"{space.key}: rows {hits}")
    record("table-disjointness", not multi, "; ".join(multi[:5]))

    return AuditReport(tuple(checks))
