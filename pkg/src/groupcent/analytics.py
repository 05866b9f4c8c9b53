"""Centralizer-derived structure of a finite group.

This module computes the centralizer profile (the distinct proper
centralizers, their count n, and the per-element subgroups Z(x), the center
of the centralizer C(x)), the induced family of subgroups of the central
quotient with partition/normality verdicts, conjugate-type data, the
classification predicates built on those, and the numeric bound functions
of n used by the check suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import lru_cache
from typing import Mapping

import numpy as np

from .core import (
    FiniteGroup,
    QuotientResult,
    Subgroup,
    _subgroup,
    center,
    derived_subgroup,
    is_abelian,
    is_perfect,
    prime_power,
    quotient,
    subgroup_as_group,
)
from .errors import (
    AbelianGroupError,
    BadN,
    CentralElementError,
    InvariantViolation,
    NotPerfectQuotient,
    PreconditionNotMet,
)


@dataclass(frozen=True)
class CentralizerProfile:
    """The distinct proper centralizers of a non-abelian group.

    ``n`` counts the group itself as one centralizer, so n = 1 + number of
    proper ones. ``z_of`` maps every element x to Z(x), the center of C(x)
    (for central x that is just the center of the group).
    """

    group: FiniteGroup
    proper_centralizers: tuple[Subgroup, ...]
    n: int
    element_to_centralizer: Mapping[int, int]
    z_of: Mapping[int, Subgroup]


@dataclass(frozen=True)
class PartitionReport:
    """The images of the distinct Z(x) inside G/Z(G), with verdicts.

    Components include the identity coset; the partition property concerns
    the nontrivial elements of the quotient only.
    """

    components: tuple[tuple[int, ...], ...]
    is_partition: bool
    is_normal: bool
    witness: dict | None


@dataclass(frozen=True)
class ConjugateTypeReport:
    """Uniformity of proper-centralizer indices; (m, p, k) when uniform."""

    is_uniform: bool
    m: int | None = None
    p: int | None = None
    k: int | None = None


@dataclass(frozen=True)
class BoundReport:
    """Numeric bounds recomputable from n and the central quotient order."""

    n: int
    q_order: int
    bound_f: int
    bound_general: int | float
    factorial_bound: int
    satisfied: Mapping[str, bool | None]


@dataclass(frozen=True)
class PerfectQuotientReport:
    """Measured centralizer counts of a group and its derived subgroup."""

    cent_count: int
    derived_cent_count: int
    derived_order: int


@lru_cache(maxsize=None)
def _centralizer_sizes(G: FiniteGroup) -> tuple[int, ...]:
    t = G.table
    return tuple(int((t[:, i] == t[i, :]).sum()) for i in range(G.order))


@lru_cache(maxsize=None)
def central_quotient(G: FiniteGroup) -> QuotientResult:
    return quotient(G, center(G))


@lru_cache(maxsize=None)
def profile(G: FiniteGroup) -> CentralizerProfile:
    """Deduplicated proper centralizers, n = |Cent(G)|, and all Z(x).

    Raises AbelianGroupError for abelian input, where the only centralizer
    is the group itself.
    """
    if is_abelian(G):
        raise AbelianGroupError(f"{G.name} is abelian; its only centralizer is itself")
    t = G.table
    zg = center(G)
    central = zg.element_set

    raw: dict[tuple[int, ...], int] = {}
    elem_to_raw: dict[int, int] = {}
    for x in range(G.order):
        if x in central:
            continue
        elems = tuple(int(v) for v in np.nonzero(t[:, x] == t[x, :])[0])
        elem_to_raw[x] = raw.setdefault(elems, len(raw))

    by_raw = sorted(raw, key=lambda e: (len(e), e))
    raw_to_canon = {raw[e]: i for i, e in enumerate(by_raw)}
    proper = tuple(Subgroup(G, e) for e in by_raw)
    element_to_centralizer = {x: raw_to_canon[r] for x, r in elem_to_raw.items()}
    n = len(proper) + 1

    z_by_centralizer = []
    for c in proper:
        h = np.asarray(c.elements, dtype=np.int64)
        sub = t[np.ix_(h, h)]
        mask = (sub == sub.T).all(axis=1)
        z_by_centralizer.append(_subgroup(G, h[mask]))
    z_of: dict[int, Subgroup] = {}
    for x in range(G.order):
        z_of[x] = zg if x in central else z_by_centralizer[element_to_centralizer[x]]

    if n < 4:
        raise InvariantViolation(f"{G.name} reports n={n}; no group has 2 or 3 centralizers")
    for c in proper:
        if not (zg.order < c.order < G.order and central <= c.element_set):
            raise InvariantViolation("proper centralizer fails the strict sandwich Z(G) < C < G")
    covered = set(zg.elements)
    for z in z_by_centralizer:
        covered.update(z.elements)
    if len(covered) != G.order:
        raise InvariantViolation("the Z(x) together with the center do not cover the group")

    return CentralizerProfile(G, proper, n, element_to_centralizer, z_of)


def cent_count(G: FiniteGroup) -> int:
    """|Cent(G)| for non-abelian G."""
    return profile(G).n


@lru_cache(maxsize=None)
def is_F_group(G: FiniteGroup) -> bool:
    """No proper centralizer strictly contains another."""
    sets = [c.element_set for c in profile(G).proper_centralizers]
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if a < b or b < a:
                return False
    return True


@lru_cache(maxsize=None)
def is_CA_group(G: FiniteGroup) -> bool:
    """Every proper centralizer is abelian; a subclass of the F-groups."""
    t = G.table
    for c in profile(G).proper_centralizers:
        h = np.asarray(c.elements, dtype=np.int64)
        sub = t[np.ix_(h, h)]
        if not (sub == sub.T).all():
            return False
    if not is_F_group(G):
        raise InvariantViolation(f"{G.name} is CA but not F, which is impossible")
    return True


def is_I_group(G: FiniteGroup) -> bool:
    """All proper centralizers share one order."""
    orders = {c.order for c in profile(G).proper_centralizers}
    return len(orders) == 1


@lru_cache(maxsize=None)
def conjugate_type(G: FiniteGroup) -> ConjugateTypeReport:
    indices = {G.order // c.order for c in profile(G).proper_centralizers}
    if len(indices) != 1:
        return ConjugateTypeReport(is_uniform=False)
    m = indices.pop()
    pp = prime_power(m)
    if pp is None:
        return ConjugateTypeReport(is_uniform=True, m=m)
    return ConjugateTypeReport(is_uniform=True, m=m, p=pp[0], k=pp[1])


@lru_cache(maxsize=None)
def central_partition(G: FiniteGroup) -> PartitionReport:
    """Project the distinct Z(x) into G/Z(G) and test partition/normality.

    This is computed from the quotient directly, independent of the
    centralizer-containment route used by is_F_group, so the two can be
    cross-validated against each other.
    """
    prof = profile(G)
    qr = central_quotient(G)
    q = qr.quotient
    proj = np.asarray(qr.projection, dtype=np.int64)

    seen: dict[tuple[int, ...], None] = {}
    for x, z in prof.z_of.items():
        if x in center(G).element_set:
            continue
        comp = tuple(sorted({int(v) for v in proj[np.asarray(z.elements)]}))
        seen.setdefault(comp, None)
    components = tuple(sorted(seen, key=lambda e: (len(e), e)))

    for comp in components:
        if len(comp) < 2 or not _closed_in(q, np.asarray(comp, dtype=np.int64)):
            raise InvariantViolation("a projected component is not a nontrivial subgroup")

    witness = None
    owner: dict[int, int] = {}
    is_partition = True
    for i, comp in enumerate(components):
        for e in comp:
            if e == q.identity:
                continue
            if e in owner:
                is_partition = False
                witness = {"kind": "overlap", "element": e, "components": [owner[e], i]}
                break
            owner[e] = i
        if not is_partition:
            break
    if is_partition and len(owner) != q.order - 1:
        missing = next(e for e in range(q.order) if e != q.identity and e not in owner)
        is_partition = False
        witness = {"kind": "uncovered", "element": missing}

    comp_sets = {frozenset(c) for c in components}
    is_norm = True
    for g in range(q.order):
        if not is_norm:
            break
        for i, comp in enumerate(components):
            conj = frozenset(int(q.table[q.table[q.inverses[g], e], g]) for e in comp)
            if conj not in comp_sets:
                is_norm = False
                if witness is None:
                    witness = {"kind": "not-normal", "conjugator": g, "component": i}
                break

    return PartitionReport(components, is_partition, is_norm, witness)


def _closed_in(G: FiniteGroup, elems: np.ndarray) -> bool:
    member = np.zeros(G.order, dtype=bool)
    member[elems] = True
    return bool(member[G.table[np.ix_(elems, elems)]].all())


# ---------------------------------------------------------------------------
# special p-group predicates


def _p_group_prime(G: FiniteGroup) -> int | None:
    pp = prime_power(G.order)
    return pp[0] if pp else None


def is_extraspecial(G: FiniteGroup) -> bool:
    """Z(G) = G' of prime order p, with G/Z elementary abelian."""
    p = _p_group_prime(G)
    if p is None:
        return False
    zg, dg = center(G), derived_subgroup(G)
    if zg.elements != dg.elements or zg.order != p:
        return False
    q = central_quotient(G).quotient
    return all(o in (1, p) for o in q.element_orders)


def _index_p_subgroups(G: FiniteGroup, H: Subgroup, p: int) -> list[Subgroup]:
    """All subgroups of index p inside a small abelian subgroup H of G."""
    from .core import generated_subgroup

    subs = {(G.identity,): None}
    grew = True
    while grew:
        grew = False
        for base in list(subs):
            for z in H.elements:
                cand = generated_subgroup(G, set(base) | {z}).elements
                if len(cand) <= H.order and cand not in subs:
                    if set(cand) <= H.element_set:
                        subs[cand] = None
                        grew = True
    target = H.order // p
    return [Subgroup(G, e) for e in sorted(subs) if len(e) == target]


def is_semi_extraspecial(G: FiniteGroup) -> bool:
    """G/N is extraspecial for every maximal subgroup N of the center."""
    p = _p_group_prime(G)
    if p is None:
        return False
    zg = center(G)
    if zg.order == 1 or zg.order == G.order:
        return False
    for n_sub in _index_p_subgroups(G, zg, p):
        if not is_extraspecial(quotient(G, n_sub).quotient):
            return False
    return True


def is_ultraspecial(G: FiniteGroup) -> bool:
    """Semi-extraspecial with |G'| equal to the square root of [G : G']."""
    if not is_semi_extraspecial(G):
        return False
    d = derived_subgroup(G).order
    return d**3 == G.order


# ---------------------------------------------------------------------------
# bound functions


def _exact_exp_term(m: int) -> int | None:
    """2 * m^(log2 m) as an exact integer, when that is possible."""
    if m <= 0:
        return 0
    if m == 1:
        return 2
    if m & (m - 1) == 0:
        return 2 * m ** (m.bit_length() - 1)
    return None


def exp_bound_holds(q_order: int, n: int) -> bool | None:
    """Is q_order <= 2*(n-4)^(log2(n-4))?

    Exact integer arithmetic when n-4 is a power of two; otherwise the
    comparison runs in 50-digit decimal as log2(q_order/2) <= (log2(n-4))^2
    with a relative guard band of 1e-9. None means the values landed inside
    the guard band and the verdict is indeterminate.
    """
    m = n - 4
    exact = _exact_exp_term(m)
    if exact is not None:
        return q_order <= exact
    with localcontext() as ctx:
        ctx.prec = 50
        ln2 = Decimal(2).ln()
        lhs = (Decimal(q_order) / 2).ln() / ln2
        rhs = (Decimal(m).ln() / ln2) ** 2
        guard = Decimal("1e-9") * max(Decimal(1), abs(rhs))
        if lhs <= rhs - guard:
            return True
        if lhs >= rhs + guard:
            return False
        return None


def bounds(n: int, q_order: int) -> BoundReport:
    """Bound report for a group with |Cent| = n and |G/Z| = q_order."""
    if n < 4:
        raise BadN(f"bounds are defined for n >= 4, got {n}")
    bound_f = (n - 2) ** 2
    factorial_bound = math.factorial(n - 1)
    exact = _exact_exp_term(n - 4)
    if exact is not None:
        bound_general: int | float = max(bound_f, exact)
    else:
        with localcontext() as ctx:
            ctx.prec = 50
            m = Decimal(n - 4)
            approx = 2 * Decimal(2) ** ((m.ln() / Decimal(2).ln()) ** 2)
        bound_general = max(float(bound_f), float(approx))

    sat_general: bool | None
    if q_order <= bound_f:
        sat_general = True
    else:
        sat_general = exp_bound_holds(q_order, n)
    satisfied = {
        "bound_f": q_order <= bound_f,
        "bound_general": sat_general,
        "factorial_bound": q_order < factorial_bound,
    }
    return BoundReport(n, q_order, bound_f, bound_general, factorial_bound, satisfied)


def gcd_condition(n: int, q_order: int) -> bool:
    """gcd(n - 2, |G/Z|) != 1."""
    if n < 4:
        raise BadN(f"defined for n >= 4, got {n}")
    if q_order < 1:
        raise BadN("quotient order must be positive")
    return math.gcd(n - 2, q_order) != 1


# ---------------------------------------------------------------------------
# element- and group-level consequence checks


def quotient_centralizer_sandwich(G: FiniteGroup, x: int) -> tuple[int, int, int]:
    """(|C(x)|/|Z(G)|, |C(x Z)| in G/Z, |C(x)|) with the chain asserted."""
    if x in center(G).element_set:
        raise CentralElementError(f"element {x} is central")
    qr = central_quotient(G)
    cx = _centralizer_sizes(G)[x]
    lower = cx // center(G).order
    middle = _centralizer_sizes(qr.quotient)[qr.projection[x]]
    upper = cx
    if not lower <= middle <= upper:
        raise InvariantViolation(
            f"sandwich {lower} <= {middle} <= {upper} fails at element {x} of {G.name}"
        )
    return (lower, middle, upper)


def perfect_quotient_check(G: FiniteGroup) -> PerfectQuotientReport:
    """For G with perfect central quotient: G' * Z = G and the centralizer
    counts of G and G' agree. Raises InvariantViolation if either fails."""
    if is_abelian(G):
        raise NotPerfectQuotient(f"{G.name} is abelian")
    qr = central_quotient(G)
    if not is_perfect(qr.quotient):
        raise NotPerfectQuotient(f"central quotient of {G.name} is not perfect")
    d = derived_subgroup(G)
    z = center(G)
    products = {
        int(v)
        for v in G.table[np.ix_(np.asarray(d.elements), np.asarray(z.elements))].ravel()
    }
    if len(products) != G.order:
        raise InvariantViolation(f"G'Z covers only {len(products)} of {G.order} elements")
    n_g = profile(G).n
    derived_group = subgroup_as_group(G, d)
    n_d = profile(derived_group).n
    if n_g != n_d:
        raise InvariantViolation(
            f"|Cent({G.name})| = {n_g} but its derived subgroup has {n_d}"
        )
    return PerfectQuotientReport(n_g, n_d, d.order)


def nonabelian_centralizer_check(G: FiniteGroup) -> bool:
    """For a p-group of uniform type (p^k, 1) with |G/Z| > p^(2k): are all
    proper centralizers non-abelian? Raises PreconditionNotMet otherwise."""
    p = _p_group_prime(G)
    if p is None or is_abelian(G):
        raise PreconditionNotMet(f"{G.name} is not a non-abelian p-group")
    ct = conjugate_type(G)
    if not ct.is_uniform or ct.p is None:
        raise PreconditionNotMet(f"{G.name} is not of uniform prime-power conjugate type")
    qz = G.order // center(G).order
    if qz <= ct.p ** (2 * ct.k):
        raise PreconditionNotMet(
            f"|G/Z| = {qz} does not exceed p^2k = {ct.p ** (2 * ct.k)}"
        )
    t = G.table
    for c in profile(G).proper_centralizers:
        h = np.asarray(c.elements, dtype=np.int64)
        sub = t[np.ix_(h, h)]
        if (sub == sub.T).all():
            return False
    return True
