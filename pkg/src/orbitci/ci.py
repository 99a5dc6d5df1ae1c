"""Complete-intersection verdicts for nilpotent orbit closures.

The pipeline asks whether the closure of a Richardson orbit could be a
homogeneous complete intersection and answers IsNilpotentCone exactly for
the Borel marking (I empty), otherwise produces a NotCompleteIntersection
certificate: an ordered list of reasons, each a rule id with its citation
and exact integer witness.  The rules are the degree budget
sum(a_i) = n + r against the minimum 2r, the singular-codimension bound for
type A, the smallness of exceptional irreducibles, divisibility against the
standard representation in the forced-all-quadrics cases, a Sym^2 character
computation closing sp(6), and Levi sub-diagram reduction for several black
vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .dynkin import (
    MarkedDiagram,
    beta_candidates,
    levi_reduce,
    parse_marking,
    render_marking,
)
from .errors import (
    FullWhiteMarking,
    NotClassical,
    NotExceptional,
    NotForcedQuadric,
    OrbitCIError,
    Unsupported,
)
from .orbits import (
    OrbitDescriptor,
    boundary_codim_A,
    richardson_dim,
    richardson_partition_A,
)
from .rootsys import LieType, build_root_system

VERDICT_CONE = "IsNilpotentCone"
VERDICT_NOT_CI = "NotCompleteIntersection"
VERDICT_UNDETERMINED = "Undetermined"

RULE_NILPOTENT_CONE = "nilpotent-cone"
RULE_CODIM_THIRD = "codim-third"
RULE_ALL_TRIVIAL = "all-trivial-reps"
RULE_SINGULAR_CODIM = "singular-codim"
RULE_DEGREE_BUDGET = "degree-budget"
RULE_FORCED_QUADRICS = "forced-quadrics"
RULE_REP_DIVISIBILITY = "standard-rep-divisibility"
RULE_SYM2_ABSENT = "sym2-standard-absent"
RULE_LEVI_REDUCTION = "levi-reduction"
RULE_NORMALITY = "normality-cited"
RULE_PRODUCT_FACTOR = "product-factor"

_CITATIONS = {
    RULE_NILPOTENT_CONE: "Kostant: the cone of the basic invariants is a reduced complete intersection",
    RULE_CODIM_THIRD: "degree identity sum(a_i) = n + r with every a_i >= 2 forces 3r <= dim g",
    RULE_ALL_TRIVIAL: "Fulton-Harris Ex. 24.52: no nontrivial irrep fits below dim(g)/3, so the cutout is invariant-defined",
    RULE_SINGULAR_CODIM: "Beauville, Symplectic singularities, Prop. 1.4: a symplectic singularity is a complete intersection only if its singular locus has codim <= 3",
    RULE_DEGREE_BUDGET: "residue-form weight 1: sum(a_i) = n + r, impossible under the minimum 2r",
    RULE_FORCED_QUADRICS: "sum(a_i) = n + r = 2r with a_i >= 2 forces every generator to degree 2",
    RULE_REP_DIVISIBILITY: "one invariant quadric only; the rest of V must fill with standard summands (Fulton-Harris Ex. 24.52)",
    RULE_SYM2_ABSENT: "Sym^2 of the adjoint representation has no standard summand (exact character arithmetic)",
    RULE_LEVI_REDUCTION: "Slodowy slice through the reduced orbit: local complete intersections restrict to the slice orbit",
    RULE_NORMALITY: "Kraft-Procesi: the reduced closure is normal (type a/g minimal degeneration for B/C/D, all closures in sl(m))",
    RULE_PRODUCT_FACTOR: "a product is a complete intersection only if every factor is",
}

# smallest nontrivial irreducible dimensions below the adjoint, rank <= 8
_EXCEPTIONAL_SMALL_IRREPS: dict[tuple[str, int], tuple[int, ...]] = {
    ("G", 2): (7,),
    ("F", 4): (26,),
    ("E", 6): (27, 27),
    ("E", 7): (56,),
    ("E", 8): (),
}


@dataclass(frozen=True)
class DegreeBudget:
    """The weight-1 generator-degree identity for one singular orbit closure."""

    half_dim: int
    codim: int
    required_sum: int
    min_sum: int
    feasible: bool
    forced_all_quadrics: bool


@dataclass(frozen=True)
class RepBudget:
    """Shape of the cutting representation V when all degrees are 2."""

    dim_v: int
    quadric_slots: int
    small_irrep_dims: tuple[int, ...]


@dataclass(frozen=True)
class Reason:
    rule: str
    citation: str
    witness: dict

    def __post_init__(self) -> None:
        assert self.rule in _CITATIONS


@dataclass(frozen=True)
class CIReport:
    subject: OrbitDescriptor | None
    verdict: str
    reasons: tuple[Reason, ...]

    @property
    def first_rule(self) -> str:
        return self.reasons[0].rule if self.reasons else ""


def _reason(rule: str, **witness) -> Reason:
    return Reason(rule, _CITATIONS[rule], witness)


def degree_budget(o: OrbitDescriptor) -> DegreeBudget:
    """Compare sum(a_i) = n + r with the floor 2r from a_i >= 2."""
    if o.codim < 1:
        raise Unsupported("degree budget is for singular closures, codim >= 1")
    n, r = o.half_dim, o.codim
    return DegreeBudget(
        half_dim=n,
        codim=r,
        required_sum=n + r,
        min_sum=2 * r,
        feasible=n >= r,
        forced_all_quadrics=n == r,
    )


def standard_rep_dim(t: LieType) -> int:
    """Dimension of the defining representation of the classical algebra."""
    if t.family == "A":
        return t.rank + 1
    if t.family == "B":
        return 2 * t.rank + 1
    if t.family in ("C", "D"):
        return 2 * t.rank
    raise NotClassical(f"{t} has no standard representation in this sense")


def small_irrep_dims(t: LieType) -> tuple[int, ...]:
    if t.is_classical:
        return (standard_rep_dim(t),)
    return _EXCEPTIONAL_SMALL_IRREPS[(t.family, t.rank)]


def exceptional_filter(t: LieType, o: OrbitDescriptor) -> CIReport:
    """Settle any exceptional-type orbit from its dimension pair alone.

    Either the codimension breaks the 1/3 bound, or V is forced to be a
    trivial representation, so the closure would be cut by invariants and
    coincide with the full cone; that is consistent only for the regular
    orbit.
    """
    if not t.is_exceptional:
        raise NotExceptional(f"{t} is classical; the small-irrep table does not apply")
    rs = build_root_system(t)
    if o.dim_orbit + o.codim != rs.dim_g:
        raise OrbitCIError(
            f"dim {o.dim_orbit} + codim {o.codim} is not dim {t} = {rs.dim_g}"
        )
    if 3 * o.codim > rs.dim_g:
        return CIReport(
            o,
            VERDICT_NOT_CI,
            (_reason(RULE_CODIM_THIRD, codim=o.codim, dim_g=rs.dim_g,
                     bound_3r=3 * o.codim),),
        )
    dims = small_irrep_dims(t)
    min_irrep = min(dims) if dims else rs.dim_g
    assert 3 * min_irrep > rs.dim_g, "table property: nothing nontrivial fits"
    if o.codim == rs.rank:
        # regular orbit: the closure is the cone itself
        return CIReport(
            o,
            VERDICT_CONE,
            (_reason(RULE_NILPOTENT_CONE, degrees=list(rs.fundamental_degrees),
                     half_dim=o.half_dim, codim=o.codim),),
        )
    return CIReport(
        o,
        VERDICT_NOT_CI,
        (_reason(RULE_ALL_TRIVIAL, codim=o.codim, dim_g=rs.dim_g,
                 min_nontrivial_irrep=min_irrep),),
    )


def rep_divisibility_check(t: LieType, budget: RepBudget) -> tuple[str, dict]:
    """dim V - 1 must be a nonnegative multiple of the standard dimension.

    One slot of V is the invariant quadric; the remaining slots can only be
    standard summands, so their total must divide evenly.  Returns the
    verdict with the division witness; Undetermined means no contradiction
    from divisibility alone.
    """
    if not t.is_classical:
        raise NotClassical(f"divisibility argument needs a classical standard rep, got {t}")
    if budget.quadric_slots != 1:
        raise NotForcedQuadric("exactly one invariant quadric slot expected")
    std = standard_rep_dim(t)
    rest = budget.dim_v - 1
    if rest < 0:
        raise NotForcedQuadric(f"dim V = {budget.dim_v} leaves no quadric slot")
    witness = {
        "dim_v": budget.dim_v,
        "standard_dim": std,
        "remainder": rest % std,
        "quotient": rest // std,
    }
    if rest % std != 0:
        return VERDICT_NOT_CI, witness
    return VERDICT_UNDETERMINED, witness


# --- Sym^2 of the sp(6) adjoint, exact character arithmetic -----------------

_C3_POS_ROOTS = (
    (1, -1, 0), (1, 0, -1), (0, 1, -1),
    (1, 1, 0), (1, 0, 1), (0, 1, 1),
    (2, 0, 0), (0, 2, 0), (0, 0, 2),
)
_C3_RHO = (3, 2, 1)


def _c3_weyl():
    """Signed permutations of three letters with their determinants."""
    sign = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1,
            (0, 2, 1): -1, (1, 0, 2): -1, (2, 1, 0): -1}
    out = []
    for perm in itertools.permutations(range(3)):
        for flips in itertools.product((1, -1), repeat=3):
            det = sign[perm] * flips[0] * flips[1] * flips[2]
            out.append((perm, flips, det))
    return out


_C3_WEYL = _c3_weyl()


def _w_apply(perm, flips, v):
    return tuple(flips[i] * v[perm[i]] for i in range(3))


def _sp6_adjoint_weights() -> dict[tuple[int, int, int], int]:
    wt: dict[tuple[int, int, int], int] = {(0, 0, 0): 3}
    for root in _C3_POS_ROOTS:
        wt[root] = wt.get(root, 0) + 1
        neg = tuple(-c for c in root)
        wt[neg] = wt.get(neg, 0) + 1
    assert sum(wt.values()) == 21
    return wt


def _sym2_weights(weights: dict) -> dict[tuple[int, int, int], int]:
    flat: list[tuple[int, int, int]] = []
    for w, m in sorted(weights.items()):
        flat.extend([w] * m)
    out: dict[tuple[int, int, int], int] = {}
    for a, b in itertools.combinations_with_replacement(flat, 2):
        s = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
        out[s] = out.get(s, 0) + 1
    return out


def _mult_in(weights: dict, lam: tuple[int, int, int]) -> int:
    """Multiplicity of the irreducible V_lam inside the given character.

    Alternating Racah-Speiser sum over the Weyl group applied to lam + rho.
    """
    shifted = tuple(lam[i] + _C3_RHO[i] for i in range(3))
    total = 0
    for perm, flips, det in _C3_WEYL:
        moved = _w_apply(perm, flips, shifted)
        target = tuple(moved[i] - _C3_RHO[i] for i in range(3))
        total += det * weights.get(target, 0)
    assert total >= 0
    return total


def _weyl_dim_c3(lam: tuple[int, int, int]) -> int:
    num = den = Fraction(1)
    shifted = tuple(lam[i] + _C3_RHO[i] for i in range(3))
    for alpha in _C3_POS_ROOTS:
        num *= sum(shifted[i] * alpha[i] for i in range(3))
        den *= sum(_C3_RHO[i] * alpha[i] for i in range(3))
    dim = num / den
    assert dim.denominator == 1
    return int(dim)


def sp6_sym2_decomposition() -> list[tuple[tuple[int, int, int], int, int]]:
    """Irreducible pieces of Sym^2(sp(6)) as (highest weight, mult, dim)."""
    table = _sym2_weights(_sp6_adjoint_weights())
    total = sum(table.values())
    assert total == 231, "dim Sym^2 of the 21-dim adjoint"
    dominant = sorted(
        (w for w in table if w[0] >= w[1] >= w[2] >= 0),
        reverse=True,
    )
    out = []
    covered = 0
    for lam in dominant:
        m = _mult_in(table, lam)
        if m > 0:
            d = _weyl_dim_c3(lam)
            out.append((lam, m, d))
            covered += m * d
    assert covered == total, "decomposition must exhaust all 231 dimensions"
    return out


def sym2_containment_check(t: LieType) -> bool:
    """Whether the standard representation appears inside Sym^2(adjoint).

    Implemented for sp(6) only, the single case the divisibility argument
    leaves open; the answer there is False.
    """
    if (t.family, t.rank) != ("C", 3):
        raise Unsupported(f"Sym^2 table implemented for C3 only, got {t}")
    table = _sym2_weights(_sp6_adjoint_weights())
    return _mult_in(table, (1, 0, 0)) > 0


# --- the verdict pipeline ----------------------------------------------------


def _budget_witness(b: DegreeBudget) -> dict:
    return {
        "half_dim": b.half_dim,
        "codim": b.codim,
        "required_sum": b.required_sum,
        "min_sum": b.min_sum,
    }


def _single_black_verdict(d: MarkedDiagram, subject: OrbitDescriptor) -> CIReport:
    t = d.lie_type
    (r,) = d.black_set
    budget = degree_budget(subject)
    if t.family == "A":
        m = t.rank + 1
        if 2 * r != m:
            part = richardson_partition_A(m, r)
            codim_sing = boundary_codim_A(m, part)
            assert codim_sing >= 4
            return CIReport(
                subject,
                VERDICT_NOT_CI,
                (_reason(RULE_SINGULAR_CODIM, m=m, r=r, partition=list(part.parts),
                         boundary_codim=codim_sing),),
            )
        # r = m/2: the budget n = r^2 cannot reach 2(2r^2 - 1)
        assert not budget.feasible
        return CIReport(
            subject,
            VERDICT_NOT_CI,
            (_reason(RULE_DEGREE_BUDGET, **_budget_witness(budget)),),
        )
    if not budget.feasible:
        return CIReport(
            subject,
            VERDICT_NOT_CI,
            (_reason(RULE_DEGREE_BUDGET, **_budget_witness(budget)),),
        )
    # for B/C/D the feasible boundary is exactly the all-quadrics case
    assert budget.forced_all_quadrics
    reasons = [_reason(RULE_FORCED_QUADRICS, **_budget_witness(budget), dim_v=budget.codim)]
    rep = RepBudget(dim_v=budget.codim, quadric_slots=1,
                    small_irrep_dims=small_irrep_dims(t))
    verdict, witness = rep_divisibility_check(t, rep)
    if verdict == VERDICT_NOT_CI:
        reasons.append(_reason(RULE_REP_DIVISIBILITY, **witness))
        return CIReport(subject, VERDICT_NOT_CI, tuple(reasons))
    if (t.family, t.rank) == ("C", 3):
        contained = sym2_containment_check(t)
        if not contained:
            reasons.append(_reason(RULE_SYM2_ABSENT, dim_v=budget.codim,
                                   dim_sym2_adjoint=231, standard_multiplicity=0))
            return CIReport(subject, VERDICT_NOT_CI, tuple(reasons))
    return CIReport(subject, VERDICT_UNDETERMINED, tuple(reasons))


def _reduction_verdict(d: MarkedDiagram, subject: OrbitDescriptor) -> CIReport:
    selected = beta_candidates(d)
    whites = d.white_set
    from .rootsys import neighbors

    adjacent_blacks = [
        b for b in sorted(d.black_set)
        if any(u in whites for u in neighbors(d.lie_type, b))
    ]
    order = selected + [b for b in adjacent_blacks if b not in selected]
    routes: list[Reason] = []
    for beta in order:
        red = levi_reduce(d, beta)
        comp = red.black_component
        sub = ci_verdict(comp)
        if sub.verdict != VERDICT_NOT_CI:
            continue
        dropped = [
            render_marking(c) for k, c in enumerate(red.components)
            if k != red.black_index
        ]
        routes.append(_reason(
            RULE_LEVI_REDUCTION,
            beta=beta,
            parent=render_marking(d),
            component=render_marking(comp),
            dropped=dropped,
            component_dim=sub.subject.dim_orbit,
            component_codim=sub.subject.codim,
        ))
        routes.append(_reason(RULE_NORMALITY, component=render_marking(comp),
                              family=comp.lie_type.family))
        routes.extend(sub.reasons)
    if routes:
        return CIReport(subject, VERDICT_NOT_CI, tuple(routes))
    return CIReport(subject, VERDICT_UNDETERMINED, ())


def ci_verdict(d: MarkedDiagram) -> CIReport:
    """Decide one marking: IsNilpotentCone, NotCompleteIntersection, or give up.

    Rule order: the Borel marking is the cone; exceptional types go through
    the small-irrep filter; classical single-black markings meet the type-A
    singular-codimension bound or the degree budget, with divisibility and
    the Sym^2 check closing the forced-quadric boundary; several black
    vertices reduce through every selectable beta and any contradicting
    route settles the verdict.
    """
    if d.is_full_white:
        raise FullWhiteMarking(f"{d} has no black vertex: P is the whole group")
    subject = richardson_dim(d)
    t = d.lie_type
    if not d.white_set:
        rs = build_root_system(t)
        return CIReport(
            subject,
            VERDICT_CONE,
            (_reason(RULE_NILPOTENT_CONE, degrees=list(rs.fundamental_degrees),
                     half_dim=subject.half_dim, codim=subject.codim,
                     degree_sum=sum(rs.fundamental_degrees)),),
        )
    if t.is_exceptional:
        return exceptional_filter(t, subject)
    if len(d.black_set) == 1:
        return _single_black_verdict(d, subject)
    return _reduction_verdict(d, subject)


def ci_verdict_str(marking: str) -> CIReport:
    """Convenience wrapper: parse a marking string and decide it."""
    return ci_verdict(parse_marking(marking))


def product_verdict(reports: list[CIReport]) -> CIReport:
    """Combine per-factor verdicts for a semisimple algebra.

    The product is the cone iff every factor is; otherwise the first
    non-cone factor is cited.  A single factor passes through unchanged.
    """
    if not reports:
        raise OrbitCIError("empty product")
    if len(reports) == 1:
        return reports[0]
    for idx, rep in enumerate(reports):
        if rep.verdict != VERDICT_CONE:
            reason = _reason(RULE_PRODUCT_FACTOR, factor_index=idx,
                             factor_verdict=rep.verdict)
            return CIReport(rep.subject, VERDICT_NOT_CI, (reason,) + rep.reasons)
    return CIReport(
        None,
        VERDICT_CONE,
        (_reason(RULE_PRODUCT_FACTOR, factors=len(reports),
                 factor_verdict=VERDICT_CONE),),
    )


# --- JSON shape ---------------------------------------------------------------


def report_to_dict(report: CIReport) -> dict:
    """The fixed JSON shape: subject {type, rank, marking}, verdict, reasons."""
    subject: dict[str, object]
    s = report.subject
    if s is None:
        subject = {"type": None, "rank": None, "marking": None}
    else:
        marking = s.source.bits() if isinstance(s.source, MarkedDiagram) else None
        subject = {"type": s.lie_type.family, "rank": s.lie_type.rank, "marking": marking}
        if marking is None:
            subject["dim_orbit"] = s.dim_orbit
    return {
        "subject": subject,
        "verdict": report.verdict,
        "reasons": [
            {"rule": r.rule, "citation": r.citation, "witness": r.witness}
            for r in report.reasons
        ],
    }


def report_from_dict(data: dict) -> CIReport:
    """Rebuild a report; Richardson data is recomputed from the marking."""
    s = data["subject"]
    subject: OrbitDescriptor | None
    if s["type"] is None:
        subject = None
    elif s["marking"] is not None:
        d = parse_marking(f"{s['type']}{s['rank']}:{s['marking']}")
        subject = richardson_dim(d)
    else:
        t = LieType(s["type"], s["rank"])
        dim_g = build_root_system(t).dim_g
        subject = OrbitDescriptor(t, None, s["dim_orbit"], dim_g - s["dim_orbit"])
    reasons = tuple(
        Reason(r["rule"], r["citation"], dict(r["witness"])) for r in data["reasons"]
    )
    return CIReport(subject, data["verdict"], reasons)
