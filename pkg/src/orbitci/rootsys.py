"""Root systems for the simple complex Lie types, in exact integer arithmetic.

Positive roots live in simple-root coordinates, so every derived invariant
(dimension, fundamental degrees, Weyl group order) is an exact integer and
the downstream budget arithmetic never touches a float.  Node numbering is
Bourbaki throughout: chains run left to right, the B/C arrow sits between
the last two nodes, the D fork tails are the last two nodes, and the E
branch node is node 4 with node 2 hanging off it.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidRank, ParseError

CLASSICAL_FAMILIES = frozenset({"A", "B", "C", "D"})
EXCEPTIONAL_FAMILIES = frozenset({"E", "F", "G"})
FAMILIES = CLASSICAL_FAMILIES | EXCEPTIONAL_FAMILIES

_TYPE_RE = re.compile(r"^([A-G])([0-9]+)$")


@dataclass(frozen=True, order=True)
class LieType:
    """A simple type label: family letter plus rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, rank = self.family, self.rank
        if fam not in FAMILIES:
            raise InvalidRank(f"unknown family {fam!r}")
        if fam == "A" and rank < 1:
            raise InvalidRank("family A needs rank >= 1")
        if fam in ("B", "C") and rank < 2:
            # B1 and C1 are isomorphic to A1; callers must canonicalize.
            raise InvalidRank(f"{fam}1 is not accepted; pass A1 instead")
        if fam == "D":
            if rank == 3:
                raise InvalidRank("D3 is not accepted; pass A3 instead")
            if rank < 4:
                raise InvalidRank("family D needs rank >= 4 (D2 splits as A1 x A1)")
        if fam == "E" and rank not in (6, 7, 8):
            raise InvalidRank("family E exists for ranks 6, 7, 8 only")
        if fam == "F" and rank != 4:
            raise InvalidRank("family F exists for rank 4 only")
        if fam == "G" and rank != 2:
            raise InvalidRank("family G exists for rank 2 only")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = _TYPE_RE.match(text.strip())
        if not m:
            raise ParseError(f"cannot parse type label {text!r} (want e.g. 'A4')")
        return cls(m.group(1), int(m.group(2)))

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL_FAMILIES

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL_FAMILIES

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def bonds(t: LieType) -> dict[tuple[int, int], tuple[int, int | None]]:
    """Dynkin diagram edges: {(i, j): (multiplicity, short_end)} with i < j.

    short_end is the node carrying the short root for a multiple bond and
    None for a simple bond.
    """
    fam, n = t.family, t.rank
    out: dict[tuple[int, int], tuple[int, int | None]] = {}

    def simple(i: int, j: int) -> None:
        out[(min(i, j), max(i, j))] = (1, None)

    def multiple(i: int, j: int, mult: int, short: int) -> None:
        out[(min(i, j), max(i, j))] = (mult, short)

    if fam == "A":
        for i in range(1, n):
            simple(i, i + 1)
    elif fam == "B":
        for i in range(1, n - 1):
            simple(i, i + 1)
        multiple(n - 1, n, 2, short=n)
    elif fam == "C":
        for i in range(1, n - 1):
            simple(i, i + 1)
        multiple(n - 1, n, 2, short=n - 1)
    elif fam == "D":
        for i in range(1, n - 2):
            simple(i, i + 1)
        simple(n - 2, n - 1)
        simple(n - 2, n)
    elif fam == "E":
        simple(1, 3)
        simple(3, 4)
        simple(2, 4)
        for i in range(4, n):
            simple(i, i + 1)
    elif fam == "F":
        simple(1, 2)
        multiple(2, 3, 2, short=3)
        simple(3, 4)
    else:  # G2, alpha_1 short
        multiple(1, 2, 3, short=1)
    return out


def neighbors(t: LieType, v: int) -> tuple[int, ...]:
    """Vertices bonded to v, ascending."""
    out = []
    for (i, j) in bonds(t):
        if i == v:
            out.append(j)
        elif j == v:
            out.append(i)
    return tuple(sorted(out))


def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix A[i][j] = <alpha_i, alpha_j-check>, 0-based."""
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for (i, j), (mult, short) in bonds(t).items():
        if mult == 1:
            a[i - 1][j - 1] = -1
            a[j - 1][i - 1] = -1
        else:
            long = i if short == j else j
            # the short root's column picks up the full bond multiplicity
            a[long - 1][short - 1] = -mult
            a[short - 1][long - 1] = -1
    return tuple(tuple(row) for row in a)


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """All positive roots in simple-root coordinates, by root-string closure.

    Standard algorithm: working up by height, beta + alpha_i is a root iff
    q = p - <beta, alpha_i-check> >= 1, where p counts how far the alpha_i
    string continues below beta.
    """
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots: set[tuple[int, ...]] = set(simple)
    frontier = list(simple)
    while frontier:
        grown: list[tuple[int, ...]] = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in roots:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        grown.append(cand)
        frontier = sorted(set(grown))
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


def _degrees_from_heights(positive: tuple[tuple[int, ...], ...], rank: int) -> tuple[int, ...]:
    """Fundamental degrees from the height distribution of positive roots.

    The counts-per-height sequence is a partition whose conjugate lists the
    exponents; degrees are exponents plus one.
    """
    counts: dict[int, int] = {}
    for r in positive:
        h = sum(r)
        counts[h] = counts.get(h, 0) + 1
    heights = sorted(counts)
    assert counts[1] == rank
    # weakly decreasing by height, so the conjugate is a genuine partition
    series = [counts[h] for h in heights]
    exponents = [sum(1 for c in series if c >= j) for j in range(1, rank + 1)]
    return tuple(sorted(e + 1 for e in exponents))


@dataclass(frozen=True)
class RootSystem:
    """Immutable root data for one simple type."""

    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    rank: int
    dim_g: int
    fundamental_degrees: tuple[int, ...]

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def dim_nilpotent_cone(self) -> int:
        return self.dim_g - self.rank


def _build_root_system(t: LieType) -> RootSystem:
    cartan = cartan_matrix(t)
    positive = _positive_roots(cartan)
    rank = t.rank
    dim_g = 2 * len(positive) + rank
    degrees = _degrees_from_heights(positive, rank)
    # weight-1 identity: sum of degrees = half dim of the cone plus its codim
    assert sum(degrees) == (dim_g + rank) // 2
    return RootSystem(t, cartan, positive, rank, dim_g, degrees)


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystem:
    """Cached constructor; all fields are immutable and shareable."""
    return _build_root_system(t)


def fundamental_degrees(rs: RootSystem) -> list[int]:
    """Degrees of the basic invariants, ascending."""
    return list(rs.fundamental_degrees)


def weyl_order(rs: RootSystem) -> int:
    """Order of the Weyl group from the classical closed forms.

    Kept independent of the degree computation so the product formula
    |W| = prod(d_i) is a genuine cross-check in the test suite.
    """
    t = rs.lie_type
    n = t.rank
    if t.family == "A":
        return math.factorial(n + 1)
    if t.family in ("B", "C"):
        return 2**n * math.factorial(n)
    if t.family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(t.family, n)]


def all_simple_types(max_rank: int) -> list[LieType]:
    """Every accepted simple type with rank <= max_rank, deterministic order."""
    out: list[LieType] = []
    for n in range(1, max_rank + 1):
        out.append(LieType("A", n))
    for n in range(2, max_rank + 1):
        out.append(LieType("B", n))
    for n in range(2, max_rank + 1):
        out.append(LieType("C", n))
    for n in range(4, max_rank + 1):
        out.append(LieType("D", n))
    for n in (6, 7, 8):
        if n <= max_rank:
            out.append(LieType("E", n))
    if max_rank >= 4:
        out.append(LieType("F", 4))
    if max_rank >= 2:
        out.append(LieType("G", 2))
    return out
