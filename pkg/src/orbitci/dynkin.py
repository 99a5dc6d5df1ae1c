"""Marked Dynkin diagrams and the Levi sub-diagram surgery.

A marking paints each node white (in I, spanning the Levi) or black
(crossed, defining the parabolic P_I).  The reduction step restricts the
diagram to I plus one chosen black vertex beta and re-reads each connected
component as a smaller simple type, applying the low-rank isomorphisms
B1 = C1 = A1, D2 = A1 x A1, D3 = A3 and C2 = B2 where they arise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    FullWhiteMarking,
    NoWhiteVertex,
    NotBlackVertex,
    NotClassical,
    OrbitCIError,
    ParseError,
)
from .rootsys import LieType, bonds

_MARK_RE = re.compile(r"^([A-G])([0-9]+):([01]+)$")


@dataclass(frozen=True)
class MarkedDiagram:
    """A simple type with a white subset I of its nodes (bit 1 = white)."""

    lie_type: LieType
    white_set: frozenset[int]

    def __post_init__(self) -> None:
        bad = [v for v in self.white_set if not 1 <= v <= self.lie_type.rank]
        if bad:
            raise OrbitCIError(f"white vertices {bad} outside 1..{self.lie_type.rank}")

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def black_set(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1)) - self.white_set

    @property
    def is_full_white(self) -> bool:
        return len(self.white_set) == self.rank

    def bits(self) -> str:
        return "".join("1" if v in self.white_set else "0" for v in range(1, self.rank + 1))

    def __str__(self) -> str:
        return render_marking(self)


@dataclass(frozen=True)
class LeviReduction:
    """Result of one reduction step: components of the subdiagram on I + {beta}."""

    beta: int
    components: tuple[MarkedDiagram, ...]
    black_index: int

    @property
    def black_component(self) -> MarkedDiagram:
        return self.components[self.black_index]


def parse_marking(text: str) -> MarkedDiagram:
    """Parse 'FAMILY RANK : bitstring', e.g. 'A4:0101' (bit 1 = white).

    Bits follow Bourbaki node order left to right; for family D the fork
    tails are the last two bits.  The full-white string is rejected: I
    equal to the whole vertex set gives no proper parabolic.
    """
    m = _MARK_RE.match(text.strip())
    if not m:
        raise ParseError(f"cannot parse marking {text!r} (want e.g. 'A4:0101')")
    fam, rank, bitstr = m.group(1), int(m.group(2)), m.group(3)
    t = LieType(fam, rank)  # raises InvalidRank for bad pairs
    if len(bitstr) != rank:
        raise ParseError(f"marking {text!r} has {len(bitstr)} bits for rank {rank}")
    if bitstr == "1" * rank:
        raise FullWhiteMarking(f"marking {text!r} is fully white: P would be the whole group")
    white = frozenset(i + 1 for i, b in enumerate(bitstr) if b == "1")
    return MarkedDiagram(t, white)


def render_marking(d: MarkedDiagram) -> str:
    return f"{d.lie_type.family}{d.lie_type.rank}:{d.bits()}"


def single_black(t: LieType, r: int) -> MarkedDiagram:
    """The marking with exactly one black vertex at position r."""
    if not 1 <= r <= t.rank:
        raise OrbitCIError(f"black position {r} outside 1..{t.rank}")
    return MarkedDiagram(t, frozenset(range(1, t.rank + 1)) - {r})


def enumerate_markings(t: LieType):
    """Yield all 2^rank - 1 proper markings in lexicographic bit order.

    Deterministic and restartable, so callers may partition the stream
    across workers.
    """
    import itertools

    n = t.rank
    for bits in itertools.product("01", repeat=n):
        if all(b == "1" for b in bits):
            continue
        white = frozenset(i + 1 for i, b in enumerate(bits) if b == "1")
        yield MarkedDiagram(t, white)


# --- positions and adjacency helpers ---------------------------------------

def _position(t: LieType, v: int) -> int:
    # D fork tails tie for the rightmost chain position
    if t.family == "D" and v >= t.rank - 1:
        return t.rank - 1
    return v


def _left_neighbors(t: LieType, v: int) -> list[int]:
    from .rootsys import neighbors

    pv = _position(t, v)
    return [u for u in neighbors(t, v) if _position(t, u) < pv]


def _right_neighbors(t: LieType, v: int) -> list[int]:
    from .rootsys import neighbors

    pv = _position(t, v)
    return [u for u in neighbors(t, v) if _position(t, u) > pv]


def beta_candidates(d: MarkedDiagram) -> list[int]:
    """Candidate reduction vertices, the selection-rule choice first.

    Rule: let w be a leftmost white vertex (for D both fork tails may tie).
    If a black vertex sits immediately left-adjacent to w take it; otherwise
    w is leftmost on the diagram, and we take the black vertex right-adjacent
    to the rightmost vertex of the maximal all-white connected subdiagram
    through w.  A fully white chain with both D tails black yields two
    symmetric candidates; both are returned.
    """
    t = d.lie_type
    if not t.is_classical:
        raise NotClassical(f"vertex selection is defined for classical types, not {t}")
    whites = sorted(d.white_set)
    if not whites:
        raise NoWhiteVertex("no white vertex to anchor the selection")
    blacks = d.black_set
    if not blacks:
        raise NotBlackVertex("no black vertex to select")

    min_pos = min(_position(t, w) for w in whites)
    leftmost = [w for w in whites if _position(t, w) == min_pos]

    out: list[int] = []
    for w in leftmost:
        left_black = [u for u in _left_neighbors(t, w) if u in blacks]
        if left_black:
            out.extend(sorted(left_black))
            continue
        # w starts the diagram; walk its all-white connected run
        run = {w}
        frontier = [w]
        from .rootsys import neighbors

        while frontier:
            nxt = []
            for v in frontier:
                for u in neighbors(t, v):
                    if u in d.white_set and u not in run:
                        run.add(u)
                        nxt.append(u)
            frontier = nxt
        ended = [v for v in run if any(u in blacks for u in _right_neighbors(t, v))]
        if not ended:
            continue
        w_prime = max(ended, key=lambda v: (_position(t, v), v))
        out.extend(sorted(u for u in _right_neighbors(t, w_prime) if u in blacks))
    seen: list[int] = []
    for b in out:
        if b not in seen:
            seen.append(b)
    if not seen:
        raise OrbitCIError(f"selection rule found no reachable black vertex in {d}")
    return seen


def select_beta(d: MarkedDiagram) -> int:
    """The selection-rule vertex (first candidate when D symmetry ties)."""
    return beta_candidates(d)[0]


# --- component classification ----------------------------------------------

def _chain_order(nodes: list[int], adj: dict[int, list[int]]) -> list[int]:
    """Order a path graph end to end, starting from the smaller endpoint."""
    ends = sorted(v for v in nodes if len(adj[v]) <= 1)
    if len(nodes) == 1:
        return nodes
    order = [ends[0]]
    prev = None
    while len(order) < len(nodes):
        nxt = [u for u in adj[order[-1]] if u != prev]
        assert len(nxt) == 1
        prev = order[-1]
        order.append(nxt[0])
    return order


def _branch_from(center: int, first: int, adj: dict[int, list[int]]) -> list[int]:
    out = [first]
    prev = center
    while True:
        nxt = [u for u in adj[out[-1]] if u != prev]
        if not nxt:
            return out
        prev = out[-1]
        out.append(nxt[0])


def _classify_component(t: LieType, nodes: list[int]) -> tuple[str, list[int]]:
    """Type and canonical node order of an induced connected subdiagram.

    Returns (family, order) where order[k] is the parent node sitting at
    canonical position k+1.  Covers every shape a simple diagram can induce;
    the low-rank identifications fall out of the shape analysis (a single
    node is A1 whatever end of B/C it came from, three nodes around the D
    fork read as a chain, hence A3).
    """
    parent_bonds = bonds(t)
    comp_bonds = {
        (i, j): data
        for (i, j), data in parent_bonds.items()
        if i in nodes and j in nodes
    }
    adj: dict[int, list[int]] = {v: [] for v in nodes}
    for (i, j) in comp_bonds:
        adj[i].append(j)
        adj[j].append(i)
    for v in adj:
        adj[v].sort()

    if len(nodes) == 1:
        return "A", list(nodes)

    triples = [(e, s) for e, (m, s) in comp_bonds.items() if m == 3]
    if triples:
        (i, j), short = triples[0]
        long = i if short == j else j
        return "G", [short, long]

    doubles = [(e, s) for e, (m, s) in comp_bonds.items() if m == 2]
    if doubles:
        assert all(len(adj[v]) <= 2 for v in nodes), "multiple bond in a branched component"
        order = _chain_order(list(nodes), adj)
        (i, j), short = doubles[0]
        long = i if short == j else j
        pos = {v: k for k, v in enumerate(order)}
        interior = 0 < pos[i] and pos[i] < len(order) - 1 and 0 < pos[j] and pos[j] < len(order) - 1
        if interior:
            # two long then two short nodes: F4 orientation
            assert len(order) == 4
            if pos[long] > pos[short]:
                order.reverse()
            return "F", order
        # put the double bond at the high end of the chain
        if not (order[-1] in (i, j) and order[-2] in (i, j)):
            order.reverse()
        assert order[-1] in (i, j) and order[-2] in (i, j)
        fam = "B" if order[-1] == short else "C"
        if fam == "C" and len(order) == 2:
            # C2 is B2 with the nodes swapped
            return "B", [long, short]
        return fam, order

    branch = [v for v in nodes if len(adj[v]) == 3]
    assert all(len(adj[v]) <= 3 for v in nodes)
    if not branch:
        return "A", _chain_order(list(nodes), adj)
    center = branch[0]
    arms = sorted(
        (_branch_from(center, u, adj) for u in adj[center]),
        key=lambda a: (len(a), a),
    )
    lengths = tuple(len(a) for a in arms)
    if lengths[0] == 1 and lengths[1] == 1:
        # D: long arm reversed, then center, then the two tails; with three
        # single-node arms (a D4 shape) the smallest node plays the chain
        if lengths[2] == 1:
            trunk, tail_a, tail_b = arms[0], arms[1][0], arms[2][0]
        else:
            tail_a, tail_b, trunk = arms[0][0], arms[1][0], arms[2]
        return "D", list(reversed(trunk)) + [center] + sorted([tail_a, tail_b])
    if lengths == (1, 2, 2):
        one, near_a, near_b = arms[0], arms[1], arms[2]
        return "E", [near_a[1], one[0], near_a[0], center, near_b[0], near_b[1]]
    if lengths == (1, 2, 3):
        one, two, three = arms
        return "E", [two[1], one[0], two[0], center] + three
    if lengths == (1, 2, 4):
        one, two, four = arms
        return "E", [two[1], one[0], two[0], center] + four
    raise OrbitCIError(f"unrecognized induced shape {lengths} inside {t}")


def _component_diagram(t: LieType, nodes: list[int], white: frozenset[int]) -> MarkedDiagram:
    fam, order = _classify_component(t, sorted(nodes))
    sub_t = LieType(fam, len(order))
    sub_white = frozenset(k + 1 for k, v in enumerate(order) if v in white)
    return MarkedDiagram(sub_t, sub_white)


def levi_reduce(d: MarkedDiagram, beta: int) -> LeviReduction:
    """Restrict the diagram to I + {beta} and split into canonical components.

    The component through beta carries exactly one black vertex; every other
    component is fully white.  Components are ordered by their smallest
    parent node.
    """
    if beta in d.white_set or not 1 <= beta <= d.rank:
        raise NotBlackVertex(f"vertex {beta} is not black in {d}")
    t = d.lie_type
    keep = set(d.white_set) | {beta}
    parent_adj: dict[int, list[int]] = {v: [] for v in keep}
    for (i, j) in bonds(t):
        if i in keep and j in keep:
            parent_adj[i].append(j)
            parent_adj[j].append(i)
    unseen = set(keep)
    comps: list[list[int]] = []
    while unseen:
        start = min(unseen)
        stack, comp = [start], {start}
        unseen.discard(start)
        while stack:
            v = stack.pop()
            for u in parent_adj[v]:
                if u in unseen:
                    unseen.discard(u)
                    comp.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    diagrams = tuple(_component_diagram(t, c, d.white_set) for c in comps)
    black_index = next(k for k, c in enumerate(comps) if beta in c)
    return LeviReduction(beta=beta, components=diagrams, black_index=black_index)
