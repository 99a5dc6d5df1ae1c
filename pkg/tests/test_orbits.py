"""Orbit dimensions, Jordan-type validity, and the dominance boundary."""

from __future__ import annotations

import pytest

from orbitci.dynkin import parse_marking, single_black
from orbitci.errors import (
    FullWhiteMarking,
    InvalidPartition,
    NotClassical,
    OutOfRange,
    TrivialOrbit,
)
from orbitci.orbits import (
    Partition,
    boundary_codim_A,
    dominates,
    partition_dim,
    partitions_of,
    richardson_dim,
    richardson_partition_A,
    validate_partition,
)
from orbitci.rootsys import LieType, all_simple_types

_PARTITION_COUNTS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 8: 22, 9: 30, 10: 42}


def test_partition_rejects_bad_parts():
    with pytest.raises(InvalidPartition):
        Partition((2, 3))
    with pytest.raises(InvalidPartition):
        Partition((2, 0))
    assert Partition.of([1, 3, 2]).parts == (3, 2, 1)


def test_transpose_involution():
    for m in range(1, 9):
        for p in partitions_of(m):
            assert p.transpose().transpose() == p
            assert p.transpose().total == p.total


def test_partition_counts():
    for m, count in _PARTITION_COUNTS.items():
        assert len(partitions_of(m)) == count


def test_partitions_of_out_of_range():
    with pytest.raises(OutOfRange):
        partitions_of(0)
    with pytest.raises(OutOfRange):
        partitions_of(31)


def test_dominance_basics():
    p6 = {str(p): p for p in partitions_of(6)}
    assert dominates(p6["[6]"], p6["[3,3]"])
    assert dominates(p6["[3,3]"], p6["[2,2,2]"])
    assert not dominates(p6["[3,3]"], p6["[4,1,1]"])
    assert not dominates(p6["[4,1,1]"], p6["[3,3]"])
    for p in partitions_of(6):
        assert dominates(p, p)
    with pytest.raises(InvalidPartition):
        dominates(Partition((2,)), Partition((3,)))


def test_validate_partition_families():
    validate_partition(LieType("C", 3), Partition((3, 3)))
    validate_partition(LieType("C", 3), Partition((2, 2, 1, 1)))
    with pytest.raises(InvalidPartition):
        validate_partition(LieType("C", 3), Partition((3, 2, 1)))
    validate_partition(LieType("B", 2), Partition((2, 2, 1)))
    with pytest.raises(InvalidPartition):
        validate_partition(LieType("B", 2), Partition((4, 1)))
    validate_partition(LieType("D", 4), Partition((5, 3)))
    with pytest.raises(InvalidPartition):
        validate_partition(LieType("D", 4), Partition((4, 3, 1)))
    with pytest.raises(InvalidPartition):
        validate_partition(LieType("A", 3), Partition((3, 2)))
    with pytest.raises(NotClassical):
        validate_partition(LieType("G", 2), Partition((7,)))


def test_partition_dim_type_a_values():
    o = partition_dim(LieType("A", 3), Partition((2, 2)))
    assert (o.dim_orbit, o.codim) == (8, 7)
    assert o.dim_g == 15
    o = partition_dim(LieType("A", 3), Partition((4,)))
    assert (o.dim_orbit, o.codim) == (12, 3)
    o = partition_dim(LieType("A", 3), Partition((1, 1, 1, 1)))
    assert o.dim_orbit == 0


def test_partition_dim_type_c_values():
    o = partition_dim(LieType("C", 3), Partition((3, 3)))
    assert (o.dim_orbit, o.codim) == (14, 7)
    o = partition_dim(LieType("C", 3), Partition((6,)))
    assert (o.dim_orbit, o.codim) == (18, 3)


def test_partition_dim_type_bd_values():
    o = partition_dim(LieType("B", 2), Partition((5,)))
    assert (o.dim_orbit, o.codim) == (8, 2)
    o = partition_dim(LieType("D", 4), Partition((7, 1)))
    assert (o.dim_orbit, o.codim) == (24, 4)
    o = partition_dim(LieType("B", 4), Partition((3, 3, 3)))
    assert o.dim_orbit == 24


def test_partition_dim_always_even():
    for t in (LieType("A", 5), LieType("B", 3), LieType("C", 3), LieType("D", 4)):
        size = {"A": t.rank + 1, "B": 2 * t.rank + 1,
                "C": 2 * t.rank, "D": 2 * t.rank}[t.family]
        for p in partitions_of(size):
            try:
                validate_partition(t, p)
            except InvalidPartition:
                continue
            assert partition_dim(t, p).dim_orbit % 2 == 0


def test_richardson_dim_chain_example():
    o = richardson_dim(parse_marking("A4:0101"))
    assert (o.dim_orbit, o.codim) == (16, 8)
    assert o.half_dim == 8


def test_richardson_dim_full_black_is_cone():
    for t in all_simple_types(6):
        d = single_black(t, 1) if t.rank == 1 else parse_marking(
            f"{t.family}{t.rank}:" + "0" * t.rank
        )
        o = richardson_dim(d)
        from orbitci.rootsys import build_root_system

        assert o.dim_orbit == build_root_system(t).dim_nilpotent_cone
        assert o.codim == t.rank


def test_richardson_dim_rejects_full_white():
    from orbitci.dynkin import MarkedDiagram

    with pytest.raises(FullWhiteMarking):
        richardson_dim(MarkedDiagram(LieType("A", 2), frozenset({1, 2})))


def test_richardson_dim_g2_subregular():
    for bits in ("01", "10"):
        o = richardson_dim(parse_marking(f"G2:{bits}"))
        assert (o.dim_orbit, o.codim) == (10, 4)


def test_richardson_partition_a_values():
    assert richardson_partition_A(5, 1).parts == (2, 1, 1, 1)
    assert richardson_partition_A(5, 4).parts == (2, 1, 1, 1)
    assert richardson_partition_A(6, 3).parts == (2, 2, 2)
    with pytest.raises(OutOfRange):
        richardson_partition_A(5, 0)
    with pytest.raises(OutOfRange):
        richardson_partition_A(5, 5)


def test_richardson_matches_partition_dim_type_a():
    for m in range(2, 13):
        for r in range(1, m):
            via_roots = richardson_dim(single_black(LieType("A", m - 1), r))
            via_parts = partition_dim(LieType("A", m - 1), richardson_partition_A(m, r))
            assert via_roots.dim_orbit == via_parts.dim_orbit
            assert via_roots.codim == via_parts.codim


def test_richardson_matches_partition_dim_sp6k():
    for k in range(1, 5):
        t = LieType("C", 3 * k)
        via_roots = richardson_dim(single_black(t, 2 * k))
        p = Partition(tuple([3] * (2 * k)))
        via_parts = partition_dim(t, p)
        assert via_roots.dim_orbit == via_parts.dim_orbit == 12 * k * k + 2 * k


def test_richardson_bd_template_formula():
    # single black at chain position r in so(N): dim = 2rN - 3r^2 - r
    for l in range(2, 9):
        t = LieType("B", l)
        n = 2 * l + 1
        for r in range(1, l + 1):
            o = richardson_dim(single_black(t, r))
            assert o.dim_orbit == 2 * r * n - 3 * r * r - r
    for l in range(4, 9):
        t = LieType("D", l)
        n = 2 * l
        for r in range(1, l - 1):
            o = richardson_dim(single_black(t, r))
            assert o.dim_orbit == 2 * r * n - 3 * r * r - r
        # both fork tails match the template evaluated at r = l
        for r in (l - 1, l):
            o = richardson_dim(single_black(t, r))
            assert o.dim_orbit == 2 * l * n - 3 * l * l - l


def test_richardson_c_template_formula():
    # single black at position r in sp(2n): dim = 2r(2n - r) - r(r - 1)
    for n in range(2, 9):
        t = LieType("C", n)
        for r in range(1, n + 1):
            o = richardson_dim(single_black(t, r))
            assert o.dim_orbit == 2 * r * (2 * n - r) - r * (r - 1)


def test_boundary_codim_closed_form():
    # O_[2^s,1^(m-2s)] boundary drops to s-1 doubles: codim 2m - 4s + 2
    for m in range(3, 13):
        for r in range(1, m):
            s = min(r, m - r)
            got = boundary_codim_A(m, richardson_partition_A(m, r))
            assert got == 2 * m - 4 * s + 2


def test_boundary_codim_values():
    assert boundary_codim_A(3, Partition((2, 1))) == 4
    assert boundary_codim_A(4, Partition((2, 2))) == 2
    assert boundary_codim_A(5, Partition((2, 1, 1, 1))) == 8
    assert boundary_codim_A(4, Partition((4,))) == 2
    assert boundary_codim_A(6, Partition((3, 3))) == 2


def test_boundary_codim_trivial_orbit():
    with pytest.raises(TrivialOrbit):
        boundary_codim_A(4, Partition((1, 1, 1, 1)))


def test_boundary_codim_range_guard():
    with pytest.raises(OutOfRange):
        boundary_codim_A(31, Partition((31,)))
