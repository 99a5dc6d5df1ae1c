"""Nilpotent orbit bookkeeping: Richardson dimensions and partition arithmetic.

Richardson orbit dimensions come from exact root counting (twice the
dimension of G/P).  Partition-type dimensions use the classical closed
forms via the conjugate partition, giving an independent channel for the
classical families.  Boundary codimension is implemented for type A only,
where the closure order is the dominance order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dynkin import MarkedDiagram
from .errors import (
    FullWhiteMarking,
    InvalidPartition,
    NotClassical,
    OutOfRange,
    TrivialOrbit,
)
from .rootsys import LieType, build_root_system

_PARTITION_CAP = 30


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        ps = self.parts
        if any(p <= 0 for p in ps):
            raise InvalidPartition(f"nonpositive part in {ps}")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise InvalidPartition(f"parts not weakly decreasing: {ps}")

    @classmethod
    def of(cls, parts) -> "Partition":
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def transpose(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = tuple(
            sum(1 for p in self.parts if p > i) for i in range(self.parts[0])
        )
        return Partition(cols)

    def multiplicity(self, value: int) -> int:
        return sum(1 for p in self.parts if p == value)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class OrbitDescriptor:
    """An orbit with its dimension data inside a fixed simple algebra."""

    lie_type: LieType
    source: object  # MarkedDiagram, Partition, or None for bare dims
    dim_orbit: int
    codim: int

    def __post_init__(self) -> None:
        assert self.dim_orbit % 2 == 0, "nilpotent orbits are even dimensional"

    @property
    def half_dim(self) -> int:
        return self.dim_orbit // 2

    @property
    def dim_g(self) -> int:
        return self.dim_orbit + self.codim


def _matrix_size(t: LieType) -> int:
    if t.family == "A":
        return t.rank + 1
    if t.family == "B":
        return 2 * t.rank + 1
    if t.family == "C":
        return 2 * t.rank
    if t.family == "D":
        return 2 * t.rank
    raise NotClassical(f"no matrix model kept for {t}")


def validate_partition(t: LieType, p: Partition) -> None:
    """Jordan-type validity: B/D need even parts in even multiplicity, C odd."""
    size = _matrix_size(t)
    if p.total != size:
        raise InvalidPartition(f"{p} has total {p.total}, expected {size} for {t}")
    if t.family in ("B", "D"):
        bad = [v for v in set(p.parts) if v % 2 == 0 and p.multiplicity(v) % 2 == 1]
        if bad:
            raise InvalidPartition(f"{p}: even parts {sorted(bad)} with odd multiplicity in type {t.family}")
    elif t.family == "C":
        bad = [v for v in set(p.parts) if v % 2 == 1 and p.multiplicity(v) % 2 == 1]
        if bad:
            raise InvalidPartition(f"{p}: odd parts {sorted(bad)} with odd multiplicity in type C")


def partition_dim(t: LieType, p: Partition) -> OrbitDescriptor:
    """Orbit dimension from the Jordan type, by the conjugate-partition forms."""
    validate_partition(t, p)
    size = _matrix_size(t)
    sq = sum(c * c for c in p.transpose().parts)
    odd = sum(1 for v in p.parts if v % 2 == 1)
    if t.family == "A":
        dim = size * size - sq
        dim_g = size * size - 1
    elif t.family == "C":
        n = t.rank
        twice = 2 * (2 * n * n + n) - sq - odd
        assert twice % 2 == 0
        dim = twice // 2
        dim_g = 2 * n * n + n
    else:  # B or D
        twice = (size * size - size) - sq + odd
        assert twice % 2 == 0
        dim = twice // 2
        dim_g = (size * size - size) // 2
    return OrbitDescriptor(t, p, dim, dim_g - dim)


def richardson_dim(d: MarkedDiagram) -> OrbitDescriptor:
    """Richardson orbit dimension 2(|Phi+| - |Phi+_I|) by root counting."""
    if d.is_full_white:
        raise FullWhiteMarking(f"{d} has no black vertex: P is the whole group")
    rs = build_root_system(d.lie_type)
    white = d.white_set
    levi = sum(
        1
        for root in rs.positive_roots
        if all(root[i] == 0 or (i + 1) in white for i in range(rs.rank))
    )
    dim = 2 * (rs.num_positive - levi)
    return OrbitDescriptor(d.lie_type, d, dim, rs.dim_g - dim)


def richardson_partition_A(m: int, r: int) -> Partition:
    """Jordan type of the type-A Richardson orbit for one black vertex at r.

    Two Jordan blocks only: [2^s, 1^(m-2s)] with s = min(r, m - r).
    """
    if m < 2 or not 1 <= r <= m - 1:
        raise OutOfRange(f"need 1 <= r <= m-1, got m={m}, r={r}")
    s = min(r, m - r)
    return Partition(tuple([2] * s + [1] * (m - 2 * s)))


@lru_cache(maxsize=None)
def _partitions_below(total: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if total == 0:
        return ((),)
    out = []
    for first in range(min(total, cap), 0, -1):
        for rest in _partitions_below(total - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(m: int) -> list[Partition]:
    """All partitions of m, largest-first lexicographic order."""
    if m < 1 or m > _PARTITION_CAP:
        raise OutOfRange(f"partition enumeration kept to 1..{_PARTITION_CAP}, got {m}")
    return [Partition(p) for p in _partitions_below(m, m)]


def dominates(p: Partition, q: Partition) -> bool:
    """Dominance order: every prefix sum of p at least matches q's."""
    if p.total != q.total:
        raise InvalidPartition(f"{p} and {q} partition different totals")
    acc_p = acc_q = 0
    for i in range(max(len(p.parts), len(q.parts))):
        acc_p += p.parts[i] if i < len(p.parts) else 0
        acc_q += q.parts[i] if i < len(q.parts) else 0
        if acc_p < acc_q:
            return False
    return True


def boundary_codim_A(m: int, p: Partition) -> int:
    """Codimension of the singular locus of the type-A closure of O_p.

    In sl(m) the closure order is dominance and every boundary point is
    singular, so this is dim O_p minus the largest dimension strictly below
    p in dominance order.
    """
    if m > _PARTITION_CAP:
        raise OutOfRange(f"boundary scan kept to m <= {_PARTITION_CAP}")
    t = LieType("A", m - 1)
    here = partition_dim(t, p).dim_orbit
    if p.parts == tuple([1] * m):
        raise TrivialOrbit("the zero orbit has no boundary")
    below = [
        partition_dim(t, q).dim_orbit
        for q in partitions_of(m)
        if q != p and dominates(p, q)
    ]
    assert below, "every nonzero orbit dominates the zero partition"
    return here - max(below)
