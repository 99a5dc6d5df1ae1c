"""Euler characteristics of twisted structure sheaves on complete intersections.

chi(O_W(t)) for W of multidegree (d_1, ..., d_k) in P^m is computed by the
Koszul recursion chi_W(t) = chi_W'(t) - chi_W'(t - d_k), grounded in the
polynomial binomial chi(O_P^m(t)) = C(t + m, m).  Everything is exact
integer arithmetic, valid at negative twists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import OrbitCIError, TooManyHypersurfaces


def binom_poly(x: int, m: int) -> int:
    """C(x + m, m) read as a polynomial in x, exact for any integer x."""
    num = 1
    for j in range(1, m + 1):
        num *= x + j
    denom = math.factorial(m)
    assert num % denom == 0, "m consecutive integers divide by m!"
    return num // denom


def chi_ci(m: int, degrees: list[int] | tuple[int, ...], t: int) -> int:
    """chi(O_W(t)) for the complete intersection of the given degrees in P^m."""
    ds = tuple(degrees)
    if m < 1:
        raise OrbitCIError(f"ambient dimension must be positive, got {m}")
    if any(d < 1 for d in ds):
        raise OrbitCIError(f"degrees must be positive, got {ds}")
    if len(ds) > m:
        raise TooManyHypersurfaces(f"{len(ds)} hypersurfaces exceed the ambient dimension {m}")
    if not ds:
        return binom_poly(t, m)
    head = ds[:-1]
    return chi_ci(m, head, t) - chi_ci(m, head, t - ds[-1])


@dataclass
class EulerPoly:
    """chi(O_W(t)) as a memoized function of the twist t."""

    ambient_dim: int
    degrees: tuple[int, ...]
    _values: dict[int, int] = field(default_factory=dict, repr=False)

    def value(self, t: int) -> int:
        if t not in self._values:
            self._values[t] = chi_ci(self.ambient_dim, self.degrees, t)
        return self._values[t]

    def values(self, ts) -> dict[int, int]:
        return {t: self.value(t) for t in ts}


def verify_lemma(m: int, degrees: list[int] | tuple[int, ...]) -> bool:
    """Whether chi(O_W) = 1 and chi(O_W(-i)) = 0 in the low-degree window.

    Precondition sum(d_i) < m + 1; the window is 1 <= i <= m - sum(d_i),
    i.e. every twist with d_1 + ... + d_k + i < m + 1.
    """
    ds = tuple(degrees)
    total = sum(ds)
    if total >= m + 1:
        raise OrbitCIError(f"need sum(degrees) < m + 1, got {total} >= {m + 1}")
    if chi_ci(m, ds, 0) != 1:
        return False
    for i in range(1, m - total + 1):
        if chi_ci(m, ds, -i) != 0:
            return False
    return True
