"""Independent exact-arithmetic checks backing the main pipeline.

Four self-contained suites, none of which share code paths with the verdict
logic: the coefficients of the characteristic polynomial cut out the
nilpotent cone in small matrix algebras (sampled over exact rationals), the
Jacobian of those invariants has the expected rank at nilpotent points
(forward-mode dual numbers, exact row reduction), the fundamental degrees
re-derive from the Molien series of the explicit reflection representation,
and the degree identity sum(a_i) = n + r re-checks on rank-one cases by
hand.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidMatrix, OrbitCIError, Unsupported
from .rootsys import (
    LieType,
    all_simple_types,
    build_root_system,
    cartan_matrix,
    fundamental_degrees,
)

_SEED_ENV = "ORBITCI_SEED"
_DEFAULT_SEED = 20240917

_ALGEBRAS = ("sl2", "sl3", "sp4")
_SIZES = {"sl2": 2, "sl3": 3, "sp4": 4}


def _rng() -> random.Random:
    return random.Random(int(os.environ.get(_SEED_ENV, _DEFAULT_SEED)))


# --- dual numbers: a + b*eps with eps^2 = 0, for exact derivatives ----------


class Dual:
    """a + b*eps over Fraction; arithmetic carries first derivatives."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    def __add__(self, o):
        o = _dual(o)
        return Dual(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, o):
        o = _dual(o)
        return Dual(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return _dual(o) - self

    def __mul__(self, o):
        o = _dual(o)
        return Dual(self.a * o.a, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, Dual):
            raise Unsupported("division by a dual is never needed here")
        return Dual(self.a / Fraction(o), self.b / Fraction(o))

    def __neg__(self):
        return Dual(-self.a, -self.b)

    def __eq__(self, o):
        o = _dual(o)
        return self.a == o.a and self.b == o.b

    def __repr__(self):
        return f"Dual({self.a}, {self.b})"


def _dual(x) -> Dual:
    return x if isinstance(x, Dual) else Dual(x)


# --- matrices over an exact field -------------------------------------------


def _mat_mul(x, y):
    n = len(x)
    return [[sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def _mat_add(x, y):
    n = len(x)
    return [[x[i][j] + y[i][j] for j in range(n)] for i in range(n)]


def _mat_scale(c, x):
    return [[c * v for v in row] for row in x]


def _identity(n, one=Fraction(1)):
    return [[one if i == j else one * 0 for j in range(n)] for i in range(n)]


def _trace(x):
    total = x[0][0]
    for i in range(1, len(x)):
        total = total + x[i][i]
    return total


def _is_zero_matrix(x) -> bool:
    return all(v == 0 for row in x for v in row)


def char_poly_coeffs(x):
    """Coefficients c_1..c_n with det(tI - X) = t^n + c_1 t^(n-1) + ... + c_n.

    Faddeev-LeVerrier over any exact field with integer division by k; works
    for Fraction and Dual entries alike.
    """
    n = len(x)
    m = _identity(n, one=x[0][0] * 0 + 1)
    coeffs = []
    c = 1
    for k in range(1, n + 1):
        m = _mat_mul(x, m)
        c = _trace(m) * Fraction(-1, k)
        coeffs.append(c)
        m = _mat_add(m, _mat_scale(c, _identity(n, one=x[0][0] * 0 + 1)))
    return coeffs


def rref_rank(rows) -> int:
    """Rank over Fraction by straight Gauss-Jordan elimination."""
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def null_space(rows):
    """Basis of the right null space of a Fraction matrix, as row vectors."""
    mat = [list(map(Fraction, r)) for r in rows]
    ncols = len(mat[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(vec)
    return basis


# --- the three small algebras ------------------------------------------------


def _sp4_omega():
    # antidiagonal symplectic form: skew, nondegenerate
    z = Fraction(0)
    o = Fraction(1)
    return [
        [z, z, z, o],
        [z, z, o, z],
        [z, -o, z, z],
        [-o, z, z, z],
    ]


def _in_sp4(x) -> bool:
    omega = _sp4_omega()
    xt = [[x[j][i] for j in range(4)] for i in range(4)]
    lhs = _mat_add(_mat_mul(xt, omega), _mat_mul(omega, x))
    return _is_zero_matrix(lhs)


def sp4_basis():
    """Basis of sp(4) from the null space of X -> X^T Omega + Omega X."""
    rows = []
    for i in range(4):
        for j in range(4):
            e = [[Fraction(0)] * 4 for _ in range(4)]
            e[i][j] = Fraction(1)
            et = [[e[b][a] for b in range(4)] for a in range(4)]
            omega = _sp4_omega()
            img = _mat_add(_mat_mul(et, omega), _mat_mul(omega, e))
            rows.append([img[a][b] for a in range(4) for b in range(4)])
    # rows index the domain entries; transpose so columns are domain
    cols = [[rows[d][c] for d in range(16)] for c in range(16)]
    basis_vecs = null_space(cols)
    basis = []
    for vec in basis_vecs:
        basis.append([[vec[4 * i + j] for j in range(4)] for i in range(4)])
    assert len(basis) == 10
    assert all(_in_sp4(b) for b in basis)
    return basis


def _sl_basis(n):
    basis = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            e = [[Fraction(0)] * n for _ in range(n)]
            e[i][j] = Fraction(1)
            basis.append(e)
    for i in range(n - 1):
        e = [[Fraction(0)] * n for _ in range(n)]
        e[i][i] = Fraction(1)
        e[i + 1][i + 1] = Fraction(-1)
        basis.append(e)
    return basis


def algebra_basis(algebra: str):
    if algebra == "sl2":
        return _sl_basis(2)
    if algebra == "sl3":
        return _sl_basis(3)
    if algebra == "sp4":
        return sp4_basis()
    raise Unsupported(f"unknown algebra {algebra!r}")


@dataclass(frozen=True)
class MatrixPoint:
    """A point of one of the small algebras, entries exact rationals."""

    algebra: str
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.algebra not in _ALGEBRAS:
            raise InvalidMatrix(f"unknown algebra {self.algebra!r}")
        n = _SIZES[self.algebra]
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise InvalidMatrix(f"{self.algebra} needs a {n}x{n} matrix")
        rows = [list(r) for r in self.entries]
        if self.algebra.startswith("sl"):
            if _trace(rows) != 0:
                raise InvalidMatrix("sl matrices are traceless")
        else:
            if not _in_sp4(rows):
                raise InvalidMatrix("not in sp(4): X^T Omega + Omega X != 0")

    @classmethod
    def of(cls, algebra: str, rows) -> "MatrixPoint":
        return cls(algebra, tuple(tuple(Fraction(v) for v in r) for r in rows))

    @property
    def size(self) -> int:
        return _SIZES[self.algebra]

    def rows(self):
        return [list(r) for r in self.entries]


def invariants_at(p: MatrixPoint) -> list[Fraction]:
    """Values of the basic invariants: nonvanishing coefficients of char poly.

    sl2 keeps [c2], sl3 keeps [c2, c3], sp4 keeps [c2, c4]; the omitted
    coefficients vanish identically on the algebra and are asserted to.
    """
    coeffs = char_poly_coeffs(p.rows())
    if p.algebra == "sl2":
        assert coeffs[0] == 0
        return [coeffs[1]]
    if p.algebra == "sl3":
        assert coeffs[0] == 0
        return [coeffs[1], coeffs[2]]
    assert coeffs[0] == 0 and coeffs[2] == 0
    return [coeffs[1], coeffs[3]]


def is_nilpotent(p: MatrixPoint) -> bool:
    n = p.size
    power = p.rows()
    for _ in range(n - 1):
        power = _mat_mul(power, p.rows())
    return _is_zero_matrix(power)


def jacobian_rank_at(p: MatrixPoint) -> int:
    """Rank of d(invariants) at p, by dual-number directional derivatives."""
    basis = algebra_basis(p.algebra)
    rows = []
    for direction in basis:
        pt = [[Dual(p.entries[i][j], direction[i][j]) for j in range(p.size)]
              for i in range(p.size)]
        coeffs = char_poly_coeffs(pt)
        if p.algebra == "sl2":
            picked = [coeffs[1]]
        elif p.algebra == "sl3":
            picked = [coeffs[1], coeffs[2]]
        else:
            picked = [coeffs[1], coeffs[3]]
        rows.append([c.b for c in picked])
    # rows are directions, columns invariants; rank is the same transposed
    return rref_rank(rows)


def exp_nilpotent(x):
    """Exact exp of a nilpotent matrix: the series terminates."""
    n = len(x)
    out = _identity(n)
    term = _identity(n)
    k = 1
    while True:
        term = _mat_scale(Fraction(1, k), _mat_mul(term, x))
        if _is_zero_matrix(term):
            break
        out = _mat_add(out, term)
        k += 1
        assert k <= n + 1
    return out


def _conjugate(g, x):
    # g is unipotent with exact inverse exp(-log); invert by Neumann series
    n = len(g)
    nil = _mat_add(g, _mat_scale(Fraction(-1), _identity(n)))
    inv = _identity(n)
    power = _identity(n)
    for k in range(1, n + 1):
        power = _mat_mul(power, nil)
        if _is_zero_matrix(power):
            break
        inv = _mat_add(inv, _mat_scale(Fraction((-1) ** k), power))
    assert _is_zero_matrix(
        _mat_add(_mat_mul(g, inv), _mat_scale(Fraction(-1), _identity(n)))
    )
    return _mat_mul(_mat_mul(g, x), inv)


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _random_point(algebra: str, rng: random.Random) -> MatrixPoint:
    basis = algebra_basis(algebra)
    n = _SIZES[algebra]
    total = [[Fraction(0)] * n for _ in range(n)]
    for b in basis:
        total = _mat_add(total, _mat_scale(_random_fraction(rng), b))
    return MatrixPoint.of(algebra, total)


def _strictly_upper_nilpotent(algebra: str, rng: random.Random):
    basis = algebra_basis(algebra)
    n = _SIZES[algebra]
    uppers = [b for b in basis
              if all(b[i][j] == 0 for i in range(n) for j in range(i + 1))]
    total = [[Fraction(0)] * n for _ in range(n)]
    for b in uppers:
        total = _mat_add(total, _mat_scale(_random_fraction(rng), b))
    return total


def regular_nilpotent(algebra: str) -> MatrixPoint:
    """A fixed regular nilpotent element: superdiagonal ones (sp4 adjusted)."""
    n = _SIZES[algebra]
    x = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        x[i][i + 1] = Fraction(1)
    if algebra == "sp4":
        # flip the last superdiagonal sign to satisfy X^T Omega + Omega X = 0
        x[2][3] = Fraction(-1)
        if not _in_sp4(x):
            raise OrbitCIError("no sp4 regular nilpotent of this shape")
    p = MatrixPoint.of(algebra, x)
    assert is_nilpotent(p)
    return p


EXPECTED_REGULAR_RANK = {"sl2": 1, "sl3": 2, "sp4": 2}


def cones_suite(samples: int = 500) -> dict:
    """Invariants vanish exactly on the nilpotent matrices, by sampling.

    Half the budget is generic points, half is unipotent conjugates of
    strictly upper triangular (hence nilpotent) points, where all
    invariants must vanish.
    """
    rng = _rng()
    stats = {}
    for algebra in _ALGEBRAS:
        checked = 0
        for _ in range(samples):
            p = _random_point(algebra, rng)
            vanish = all(v == 0 for v in invariants_at(p))
            assert vanish == is_nilpotent(p)
            checked += 1
        for _ in range(samples):
            x = _strictly_upper_nilpotent(algebra, rng)
            g = exp_nilpotent(_strictly_upper_nilpotent(algebra, rng))
            y = _conjugate(g, x)
            p = MatrixPoint.of(algebra, y)
            assert is_nilpotent(p)
            assert all(v == 0 for v in invariants_at(p))
            checked += 1
        stats[algebra] = checked
    return stats


def jacobian_suite() -> dict:
    """Jacobian ranks: full at a regular nilpotent, zero at the origin."""
    out = {}
    for algebra in _ALGEBRAS:
        reg = regular_nilpotent(algebra)
        r = jacobian_rank_at(reg)
        assert r == EXPECTED_REGULAR_RANK[algebra], (algebra, r)
        n = _SIZES[algebra]
        zero = MatrixPoint.of(algebra, [[0] * n for _ in range(n)])
        assert jacobian_rank_at(zero) == 0
        out[algebra] = r
    return out


# --- Molien series for the reflection representation ------------------------


def _reflection_matrices(t: LieType):
    a = cartan_matrix(t)
    n = t.rank
    mats = []
    for i in range(n):
        m = [[Fraction(1) if r == c else Fraction(0) for c in range(n)]
             for r in range(n)]
        for j in range(n):
            m[j][i] -= a[i][j]
        mats.append(tuple(tuple(row) for row in m))
    return mats


def _generate_group(gens):
    seen = {tuple(tuple(row) for row in _identity(len(gens[0])))}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                prod = tuple(
                    tuple(sum(w[i][k] * g[k][j] for k in range(len(g)))
                          for j in range(len(g)))
                    for i in range(len(g))
                )
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return seen


def _det_poly(w):
    """Coefficients of det(I - x*w) by expansion over permutations."""
    n = len(w)
    coeffs = [Fraction(0)] * (n + 1)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            cur = start
            while not seen[cur]:
                seen[cur] = True
                cur = perm[cur]
                length += 1
            if length % 2 == 0:
                sign = -sign
        # product over i of (delta - x w)[i][perm[i]]: each factor is
        # delta_{i,perm[i]} - x * w[i][perm[i]]
        poly = [Fraction(sign)]
        for i in range(n):
            delta = Fraction(1) if perm[i] == i else Fraction(0)
            factor = [delta, -w[i][perm[i]]]
            nxt = [Fraction(0)] * (len(poly) + 1)
            for d1, c1 in enumerate(poly):
                for d2, c2 in enumerate(factor):
                    nxt[d1 + d2] += c1 * c2
            poly = nxt
        for d in range(min(len(poly), n + 1)):
            coeffs[d] += poly[d]
    return coeffs


def _series_inverse(poly, horizon):
    """Power series of 1/poly(x) up to x^horizon; poly[0] must be 1."""
    assert poly[0] == 1
    out = [Fraction(1)]
    for k in range(1, horizon + 1):
        acc = Fraction(0)
        for j in range(1, min(k, len(poly) - 1) + 1):
            acc += poly[j] * out[k - j]
        out.append(-acc)
    return out


def weyl_molien_degrees(t: LieType, horizon: int = 40) -> list[int]:
    """Fundamental degrees from the Molien series of the Weyl group.

    Averages 1/det(1 - x w) over the whole reflection group, then peels
    factors 1/(1 - x^d) greedily.  Exponential in rank; intended for
    rank <= 3 cross-checks.
    """
    if t.rank > 3:
        raise Unsupported("Molien cross-check is for rank <= 3")
    group = _generate_group(_reflection_matrices(t))
    n = t.rank
    total = [Fraction(0)] * (horizon + 1)
    for w in group:
        series = _series_inverse(_det_poly(w), horizon)
        for k in range(horizon + 1):
            total[k] += series[k]
    size = Fraction(len(group))
    molien = [c / size for c in total]
    assert all(c.denominator == 1 for c in molien)
    coeffs = [int(c) for c in molien]
    assert coeffs[0] == 1
    degrees = []
    # peel: multiply by (1 - x^d) for the smallest d >= 2 with coeff > 0
    remaining = list(coeffs)
    for _ in range(n):
        d = next(k for k in range(1, horizon + 1) if remaining[k] > 0)
        degrees.append(d)
        nxt = [Fraction(0)] * (horizon + 1)
        for k in range(horizon + 1):
            nxt[k] = remaining[k] - (remaining[k - d] if k >= d else 0)
        remaining = nxt
    assert remaining[0] == 1 and all(v == 0 for v in remaining[1:])
    return sorted(degrees)


def molien_suite(max_rank: int = 3) -> dict:
    """Molien degrees agree with the height-duality degrees, rank <= 3."""
    out = {}
    for t in all_simple_types(min(max_rank, 3)):
        got = weyl_molien_degrees(t)
        want = fundamental_degrees(build_root_system(t))
        assert got == want, (str(t), got, want)
        out[str(t)] = got
    return out


def weight_check_A1(n: int, r: int, degrees: list[int]) -> int:
    """Leftover weight 2n + r - sum(d_i); zero means the identity balances.

    On sl(2): the cone is the quadric c2 = 0, n = 1, r = 1, degree 2, so the
    leftover is 2*1 + 1 - 2 = 1, matching the weight of the residue form.
    """
    return 2 * n + r - sum(degrees)


def weights_suite() -> dict:
    cases = {
        "sl2-cone": weight_check_A1(1, 1, [2]),
        "sl2-open": weight_check_A1(1, 0, []),
        "sl2-square": weight_check_A1(2, 1, [3]),
    }
    assert cases["sl2-cone"] == 1
    assert cases["sl2-open"] == 2
    assert cases["sl2-square"] == 2
    return cases


def run_suite(name: str, samples: int = 500) -> dict:
    """Entry point used by the command line; returns the per-suite stats."""
    if name == "molien":
        return molien_suite()
    if name == "cones":
        return cones_suite(samples)
    if name == "jacobian":
        return jacobian_suite()
    if name == "weights":
        return weights_suite()
    if name == "all":
        return {
            "molien": molien_suite(),
            "cones": cones_suite(samples),
            "jacobian": jacobian_suite(),
            "weights": weights_suite(),
        }
    raise Unsupported(f"unknown suite {name!r}")
