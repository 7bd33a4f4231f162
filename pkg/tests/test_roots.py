import itertools
import random
from fractions import Fraction as Q

import pytest

from grauert import roots
from grauert.errors import ParameterError, UnsupportedRankError
from grauert.exact import dot

# (family, rank) -> expected number of roots
COUNTS = {
    ("A", 1): 2,
    ("A", 2): 6,
    ("A", 4): 20,
    ("A", 7): 56,
    ("B", 1): 2,
    ("B", 2): 8,
    ("B", 3): 18,
    ("B", 4): 32,
    ("C", 1): 2,
    ("C", 2): 8,
    ("C", 4): 32,
    ("D", 2): 4,
    ("D", 3): 12,
    ("D", 4): 24,
    ("BC", 1): 4,
    ("BC", 2): 12,
    ("BC", 4): 40,
    ("G2", 2): 12,
    ("F4", 4): 48,
    ("E6", 6): 72,
    ("E7", 7): 126,
    ("E8", 8): 240,
}


@pytest.mark.parametrize("family,rank", sorted(COUNTS))
def test_counts_and_axioms(family, rank):
    rs = roots.build_root_system(family, rank)
    assert len(rs.roots) == COUNTS[(family, rank)]
    report = roots.verify_axioms(rs)
    assert report.passed, report.as_dict()


def test_c2_canonical_listing():
    rs = roots.build_root_system("C", 2)
    expect = sorted(
        [
            (Q(2), Q(0)),
            (Q(-2), Q(0)),
            (Q(0), Q(2)),
            (Q(0), Q(-2)),
            (Q(1), Q(1)),
            (Q(1), Q(-1)),
            (Q(-1), Q(1)),
            (Q(-1), Q(-1)),
        ]
    )
    assert list(rs.vectors()) == expect
    # construction is deterministic
    assert roots.build_root_system("C", 2) == rs


def test_bc2_has_12_roots_axioms_pass():
    rs = roots.build_root_system("BC", 2)
    assert len(rs.roots) == 12
    assert roots.verify_axioms(rs).passed


def test_corrupted_multiplicity_is_caught():
    rs = roots.build_root_system("A", 2)
    bad = list(rs.roots)
    for i, (v, m) in enumerate(bad):
        if v == (Q(1), Q(-1), Q(0)):
            bad[i] = (v, 2)  # its negative keeps multiplicity 1
    corrupted = roots.RootSystem(rs.family, rs.rank, rs.ambient_dim, tuple(bad))
    report = roots.verify_axioms(corrupted)
    assert not report.passed
    failing = {name for name, ok in report.checks if not ok}
    assert failing & {"negation", "reflection_closure"}


def test_dropped_root_breaks_reflection_closure():
    rs = roots.build_root_system("B", 2)
    pruned = tuple(p for p in rs.roots if p[0] != (Q(1), Q(1)))
    corrupted = roots.RootSystem(rs.family, rs.rank, rs.ambient_dim, pruned)
    report = roots.verify_axioms(corrupted)
    assert not report.passed


def test_bad_family_and_rank():
    with pytest.raises(ParameterError):
        roots.build_root_system("H", 2)
    with pytest.raises(ParameterError):
        roots.build_root_system("A", 0)
    with pytest.raises(ParameterError):
        roots.build_root_system("G2", 3)
    with pytest.raises(ParameterError):
        roots.build_root_system("D", 1)


def test_weyl_orbit_c2_axis_vector():
    rs = roots.build_root_system("C", 2)
    orbit = roots.weyl_orbit(rs, (1, 0))
    assert set(orbit) == {
        (Q(1), Q(0)),
        (Q(-1), Q(0)),
        (Q(0), Q(1)),
        (Q(0), Q(-1)),
    }


def test_weyl_orbit_zero_is_fixed():
    rs = roots.build_root_system("A", 1)
    assert roots.weyl_orbit(rs, (0, 0)) == ((Q(0), Q(0)),)


def test_weyl_orbit_of_root_recovers_equal_length_roots():
    rs = roots.build_root_system("G2", 2)
    long_root = (Q(2), Q(-1), Q(-1))
    orbit = roots.weyl_orbit(rs, long_root)
    assert len(orbit) == 6
    assert all(dot(v, v) == 6 for v in orbit)


WEYL_ORDERS = {
    ("A", 1): 2,
    ("A", 2): 6,
    ("A", 3): 24,
    ("B", 2): 8,
    ("B", 3): 48,
    ("C", 3): 48,
    ("BC", 3): 48,
    ("D", 3): 24,
    ("G2", 2): 12,
}


@pytest.mark.parametrize("family,rank", sorted(WEYL_ORDERS))
def test_weyl_group_order_and_orbit_divisibility(family, rank):
    rs = roots.build_root_system(family, rank)
    group = roots.enumerate_weyl(rs)
    assert len(group) == WEYL_ORDERS[(family, rank)]
    rng = random.Random(7)
    vecs = [v for v, _ in rs.roots]
    samples = [vecs[0], vecs[-1]]
    for _ in range(3):
        samples.append(tuple(Q(rng.randint(-3, 3), 2) for _ in range(rs.ambient_dim)))
    for v in samples:
        orbit = roots.weyl_orbit(rs, v)
        assert len(group) % len(orbit) == 0


def test_weyl_enumeration_rank_guard():
    rs = roots.build_root_system("F4", 4)
    with pytest.raises(UnsupportedRankError):
        roots.enumerate_weyl(rs)


def test_generators_permute_roots_preserving_multiplicity():
    rs = roots.with_multiplicities(
        roots.build_root_system("BC", 2), {"single": 4, "pair": 4, "double": 3}
    )
    table = dict(rs.roots)
    for g in roots.weyl_generators(rs):
        image = {g.apply(v): m for v, m in rs.roots}
        assert image == table


def test_root_class_partitions():
    rs = roots.build_root_system("BC", 3)
    classes = {}
    for v, _ in rs.roots:
        classes.setdefault(roots.root_class("BC", v), []).append(v)
    assert len(classes["single"]) == 6
    assert len(classes["pair"]) == 12
    assert len(classes["double"]) == 6
    f4 = roots.build_root_system("F4", 4)
    long_count = sum(1 for v, _ in f4.roots if roots.root_class("F4", v) == "long")
    assert long_count == 24


def test_with_multiplicities_drops_zero_classes():
    rs = roots.with_multiplicities(
        roots.build_root_system("BC", 2), {"single": 0, "pair": 2, "double": 1}
    )
    assert len(rs.roots) == 8
    assert all(dot(v, v) != 1 for v, _ in rs.roots)


@pytest.mark.parametrize(
    "family,rank", [("A", 3), ("BC", 2), ("E6", 6), ("F4", 4), ("G2", 2)]
)
def test_json_round_trip_bit_exact(family, rank):
    rs = roots.build_root_system(family, rank)
    if family == "BC":
        rs = roots.with_multiplicities(rs, {"single": 2, "pair": 2, "double": 1})
    text = roots.dumps(rs)
    again = roots.loads(text)
    assert again == rs
    assert roots.dumps(again) == text


def test_json_rejects_wrong_schema():
    rs = roots.build_root_system("A", 1)
    payload = roots.to_json_dict(rs)
    payload["schema_version"] = "0"
    with pytest.raises(Exception):
        roots.from_json_dict(payload)


def test_e_series_ranks():
    for family, rank, span in [("E6", 6, 6), ("E7", 7, 7), ("E8", 8, 8)]:
        rs = roots.build_root_system(family, rank)
        from grauert.exact import matrix_rank

        assert matrix_rank(list(rs.vectors())) == span


def test_reflection_is_involutive_and_isometric():
    rng = random.Random(3)
    rs = roots.build_root_system("F4", 4)
    vecs = rs.vectors()
    for _ in range(20):
        beta = vecs[rng.randrange(len(vecs))]
        v = tuple(Q(rng.randint(-4, 4), 3) for _ in range(4))
        w = roots.reflect(v, beta)
        assert roots.reflect(w, beta) == v
        assert dot(w, w) == dot(v, v)
