"""Catalog-driven checks, one per verified statement, plus search queries.

Each check takes one group, evaluates its statement's hypothesis (skipping,
with the violated precondition, when it does not apply) and reports pass,
fail with a concrete witness, or indeterminate when a transcendental bound
comparison lands inside the guard band. Census-style statements that
quantify over all finite groups of a kind are evaluated catalog-relative:
the per-group check decides both sides of the characterization for that
group, and the suite over the default catalog supplies the witnesses.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Mapping

import numpy as np

from . import specs
from .analytics import (
    bounds,
    central_partition,
    central_quotient,
    cent_count,
    conjugate_type,
    exp_bound_holds,
    gcd_condition,
    is_CA_group,
    is_F_group,
    is_extraspecial,
    is_semi_extraspecial,
    is_ultraspecial,
    nonabelian_centralizer_check,
    perfect_quotient_check,
    profile,
    _centralizer_sizes,
)
from .constructions import alternating, dihedral, elementary_abelian, quaternion8, symmetric
from .core import (
    FiniteGroup,
    center,
    is_abelian,
    is_nilpotent,
    isomorphic,
    largest_prime_divisor,
    prime_power,
    renamed,
)
from .errors import (
    GroupTheoryError,
    InvariantViolation,
    PreconditionNotMet,
    UnknownCheckId,
)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
INDETERMINATE = "indeterminate"
ERROR = "error"

DEFAULT_SEED = 0x5EED
DEFAULT_SAMPLE_PAIRS = 200
DEFAULT_EXHAUSTIVE_CAP = 64


@dataclass(frozen=True)
class CheckSettings:
    """Quantification controls: exhaustive pair scans up to the cap, seeded
    sampling above it."""

    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP
    sample_pairs: int = DEFAULT_SAMPLE_PAIRS
    seed: int = DEFAULT_SEED


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    group_name: str
    status: str
    details: Mapping

    def as_dict(self) -> dict:
        return {
            "check": self.check_id,
            "group": self.group_name,
            "status": self.status,
            "details": dict(self.details),
        }


@lru_cache(maxsize=None)
def _build_named(name: str, builder_spec: str) -> FiniteGroup:
    return renamed(specs.build_group(builder_spec), name)


@dataclass(frozen=True)
class CatalogEntry:
    """A named group in the verification catalog, with optional expected
    attributes (centralizer count, conjugate type, predicate flags)."""

    name: str
    builder_spec: str
    expected: Mapping | None = None

    def build(self) -> FiniteGroup:
        return _build_named(self.name, self.builder_spec)


@dataclass(frozen=True)
class SearchQuery:
    """A predicate over (cent_count, order, center_order), with an optional
    order clamp and class restriction ("f" or "ca")."""

    predicate: str | Callable[[int, int, int], bool]
    max_order: int | None = None
    restrict: str | None = None


@dataclass(frozen=True)
class SearchHit:
    name: str
    order: int
    center_order: int
    cent_count: int
    f_group: bool
    ca_group: bool
    family: str | None

    @property
    def in_known_family(self) -> bool:
        return self.family is not None

    def as_dict(self) -> dict:
        return {
            "group": self.name,
            "order": self.order,
            "center_order": self.center_order,
            "cent_count": self.cent_count,
            "f_group": self.f_group,
            "ca_group": self.ca_group,
            "family": self.family,
            "in_known_family": self.in_known_family,
        }


@dataclass(frozen=True)
class SuiteReport:
    results: tuple[CheckResult, ...]
    summary: Mapping[str, int]


# ---------------------------------------------------------------------------
# shared helpers


@lru_cache(maxsize=None)
def _centralizer_sets(G: FiniteGroup) -> tuple[frozenset[int], ...]:
    t = G.table
    return tuple(
        frozenset(int(v) for v in np.nonzero(t[:, i] == t[i, :])[0]) for i in range(G.order)
    )


@lru_cache(maxsize=None)
def _z_sets(G: FiniteGroup) -> tuple[frozenset[int], ...]:
    prof = profile(G)
    return tuple(prof.z_of[x].element_set for x in range(G.order))


def _pair_mode(G: FiniteGroup, s: CheckSettings) -> str:
    return "exhaustive" if G.order <= s.exhaustive_cap else "sampled"


def _all_pairs(G: FiniteGroup, s: CheckSettings) -> Iterable[tuple[int, int]]:
    if G.order <= s.exhaustive_cap:
        return product(range(G.order), repeat=2)
    rng = random.Random(s.seed)
    n = G.order
    return [(rng.randrange(n), rng.randrange(n)) for _ in range(s.sample_pairs)]


def _noncentral_pairs(G: FiniteGroup, s: CheckSettings) -> Iterable[tuple[int, int]]:
    """(x, g) with x non-central and g arbitrary."""
    noncentral = [x for x in range(G.order) if x not in center(G).element_set]
    if G.order <= s.exhaustive_cap:
        return product(noncentral, range(G.order))
    rng = random.Random(s.seed)
    n = G.order
    return [(rng.choice(noncentral), rng.randrange(n)) for _ in range(s.sample_pairs)]


def _quotient_order(G: FiniteGroup) -> int:
    return G.order // center(G).order


@lru_cache(maxsize=None)
def _known_family(G: FiniteGroup) -> str | None:
    """Membership in the families that settle the census characterizations:
    A4, Q8, D8, dihedral of twice-odd order, or extraspecial 2-group."""
    n = G.order
    if n == 12 and not is_abelian(G) and isomorphic(G, alternating(4)):
        return "A4"
    if n == 8 and isomorphic(G, quaternion8()):
        return "Q8"
    if n == 8 and isomorphic(G, dihedral(8)):
        return "D8"
    if n >= 6 and n % 2 == 0 and (n // 2) % 2 == 1 and isomorphic(G, dihedral(n)):
        return "dihedral_odd"
    if is_extraspecial(G) and n % 2 == 0:
        return "extraspecial_2"
    return None


def _is_frobenius_prime_cyclic(G: FiniteGroup) -> bool:
    """Is G a Frobenius group with kernel of prime order q (q the largest
    prime divisor of |G|) and a cyclic complement?"""
    q = largest_prime_divisor(G.order)
    m = G.order // q
    if m == 1:
        return False
    sizes = _centralizer_sizes(G)
    orders = G.element_orders
    member = np.zeros(G.order, dtype=bool)
    for x in range(G.order):
        if orders[x] != q or sizes[x] != q:
            continue
        kernel = [x]
        y = x
        while True:
            y = G.mul(y, x)
            if y == G.identity:
                break
            kernel.append(y)
        if any(sizes[k] != q for k in kernel):
            continue
        member[:] = False
        member[kernel] = True
        member[G.identity] = True
        ok = True
        for g in range(G.order):
            t = G.table
            conj = t[t[G.inverses[g], kernel], g]
            if not member[conj].all():
                ok = False
                break
        if not ok:
            continue
        kernel_set = set(kernel)
        for h in range(G.order):
            if orders[h] != m:
                continue
            z, disjoint = h, True
            while z != G.identity:
                if z in kernel_set:
                    disjoint = False
                    break
                z = G.mul(z, h)
            if disjoint:
                return True
    return False


# ---------------------------------------------------------------------------
# the checks


def _check_np1(G, s):
    cz, zs = _centralizer_sets(G), _z_sets(G)
    count = 0
    for x, y in _all_pairs(G, s):
        count += 1
        if (cz[x] <= cz[y]) != (zs[y] <= zs[x]):
            return FAIL, {"x": x, "y": y}
    return PASS, {"mode": _pair_mode(G, s), "pairs": count}


def _check_co1(G, s):
    zs = _z_sets(G)
    count = 0
    for x, y in _all_pairs(G, s):
        count += 1
        if (y in zs[x]) != (zs[y] <= zs[x]):
            return FAIL, {"x": x, "y": y}
    return PASS, {"mode": _pair_mode(G, s), "pairs": count}


def _check_npcor1(G, s):
    from .core import is_prime

    prof = profile(G)
    sets = [c.element_set for c in prof.proper_centralizers]
    prime_ones = [i for i, c in enumerate(prof.proper_centralizers) if is_prime(c.order)]
    for i in prime_ones:
        for j, other in enumerate(sets):
            if i != j and sets[i] < other:
                return FAIL, {"prime_centralizer": i, "containing_centralizer": j}
    return PASS, {"prime_order_centralizers": len(prime_ones)}


def _check_np155(G, s):
    qr = central_quotient(G)
    zorder = center(G).order
    cg = _centralizer_sizes(G)
    cq = _centralizer_sizes(qr.quotient)
    central = center(G).element_set
    for x in range(G.order):
        if x in central:
            continue
        lower, middle, upper = cg[x] // zorder, cq[qr.projection[x]], cg[x]
        if not lower <= middle <= upper:
            return FAIL, {"x": x, "chain": [lower, middle, upper]}
    return PASS, {"elements": G.order - len(central)}


def _check_zclass1(G, s):
    zs = _z_sets(G)
    count = 0
    for x, g in _noncentral_pairs(G, s):
        count += 1
        conj = frozenset(G.conj(a, g) for a in zs[x])
        if conj != zs[G.conj(x, g)]:
            return FAIL, {"x": x, "g": g}
    return PASS, {"mode": _pair_mode(G, s), "pairs": count}


def _check_zclass5(G, s):
    lhs = is_F_group(G)
    rep = central_partition(G)
    rhs = rep.is_partition and rep.is_normal
    details = {
        "f_group": lhs,
        "is_partition": rep.is_partition,
        "is_normal": rep.is_normal,
        "component_sizes": sorted(len(c) for c in rep.components),
    }
    if lhs != rhs:
        details["witness"] = rep.witness
        return FAIL, details
    return PASS, details


def _check_1np(G, s):
    if not is_F_group(G):
        return SKIP, {"reason": "not an F-group"}
    n, qz = cent_count(G), _quotient_order(G)
    g = math.gcd(n - 2, qz)
    details = {"n": n, "quotient_order": qz, "gcd": g}
    return (PASS, details) if gcd_condition(n, qz) else (FAIL, details)


def _check_np22(G, s):
    if not is_F_group(G):
        return SKIP, {"reason": "not an F-group"}
    if not is_nilpotent(G):
        return SKIP, {"reason": "not nilpotent"}
    n, qz = cent_count(G), _quotient_order(G)
    pp = prime_power(qz)
    if pp is None:
        return FAIL, {"quotient_order": qz, "reason": "central quotient order is not a prime power"}
    p, k = pp
    details = {"n": n, "p": p, "k": k}
    return (PASS, details) if (n - 2) % p == 0 else (FAIL, details)


def _check_np2(G, s):
    ct = conjugate_type(G)
    if not ct.is_uniform:
        return SKIP, {"reason": "not of uniform conjugate type"}
    n = cent_count(G)
    if ct.p is None:
        return FAIL, {"m": ct.m, "reason": "uniform index is not a prime power"}
    details = {"n": n, "m": ct.m, "p": ct.p}
    return (PASS, details) if (n - 2) % ct.p == 0 else (FAIL, details)


def _check_bc1a(G, s):
    if not is_F_group(G):
        return SKIP, {"reason": "not an F-group"}
    n, qz = cent_count(G), _quotient_order(G)
    bound = (n - 2) ** 2
    if qz > bound:
        return FAIL, {"n": n, "quotient_order": qz, "bound": bound}
    zorder = center(G).order
    prof = profile(G)
    stricter = all(
        (z.order // zorder) ** 2 < qz for z in set(prof.z_of.values()) if z.order > zorder
    )
    details = {"n": n, "quotient_order": qz, "bound": bound, "strict_hypothesis": stricter}
    if stricter and qz >= bound:
        return FAIL, details
    return PASS, details


def _check_bc1b(G, s):
    if is_F_group(G):
        return SKIP, {"reason": "F-group; covered by bc1a"}
    n, qz = cent_count(G), _quotient_order(G)
    rep = bounds(n, qz)
    details = {"n": n, "quotient_order": qz, "bound_general": rep.bound_general}
    verdict = rep.satisfied["bound_general"]
    if verdict is None:
        return INDETERMINATE, details
    return (PASS, details) if verdict else (FAIL, details)


def _check_1sb(G, s):
    n, qz = cent_count(G), _quotient_order(G)
    rep = bounds(n, qz)
    details = {"n": n, "quotient_order": qz, "bound_general": rep.bound_general}
    verdict = rep.satisfied["bound_general"]
    if verdict is None:
        return INDETERMINATE, details
    return (PASS, details) if verdict else (FAIL, details)


def _check_sb1(G, s):
    n, qz = cent_count(G), _quotient_order(G)
    if n <= 11:
        return SKIP, {"reason": f"n = {n} <= 11"}
    verdict = exp_bound_holds(qz, n)
    details = {"n": n, "quotient_order": qz}
    if verdict is None:
        return INDETERMINATE, details
    return (PASS, details) if verdict else (FAIL, details)


def _check_bbc(G, s):
    n, qz = cent_count(G), _quotient_order(G)
    bound = math.factorial(n - 1)
    details = {"n": n, "quotient_order": qz}
    return (PASS, details) if qz < bound else (FAIL, details)


def _check_xx(G, s):
    if not is_F_group(G):
        return SKIP, {"reason": "not an F-group"}
    n, qz = cent_count(G), _quotient_order(G)
    sq = (n - 2) ** 2
    details = {"n": n, "quotient_order": qz, "squared": sq}
    if qz <= sq and 4 * sq <= G.order**2:
        return PASS, details
    return FAIL, details


def _uniform_type_check(G, k_wanted):
    ct = conjugate_type(G)
    if not ct.is_uniform:
        return None, (SKIP, {"reason": "not of uniform conjugate type"})
    if ct.p is None or ct.k != k_wanted:
        return None, (SKIP, {"reason": f"uniform index {ct.m} is not p^{k_wanted} for a prime p"})
    return ct, None


def _check_5sb(G, s):
    ct, skip = _uniform_type_check(G, 1)
    if skip:
        return skip
    n = cent_count(G)
    q = central_quotient(G).quotient
    rhs = isomorphic(q, elementary_abelian(ct.p, 2))
    details = {"n": n, "p": ct.p, "n_minus_2_equals_p": n - 2 == ct.p, "quotient_is_CpxCp": rhs}
    return (PASS, details) if (n - 2 == ct.p) == rhs else (FAIL, details)


def _check_52sb(G, s):
    ct, skip = _uniform_type_check(G, 2)
    if skip:
        return skip
    n = cent_count(G)
    q = central_quotient(G).quotient
    rhs = isomorphic(q, elementary_abelian(ct.p, 4))
    details = {"n": n, "p": ct.p, "n_minus_2_equals_p2": n - 2 == ct.p**2, "quotient_is_Cp4": rhs}
    return (PASS, details) if (n - 2 == ct.p**2) == rhs else (FAIL, details)


def _check_np2b(G, s):
    ct, skip = _uniform_type_check(G, 1)
    if skip:
        return skip
    n, qz = cent_count(G), _quotient_order(G)
    bound = (n - 2) ** 2
    if qz > bound:
        return FAIL, {"n": n, "quotient_order": qz, "bound": bound}
    rhs = isomorphic(central_quotient(G).quotient, elementary_abelian(ct.p, 2))
    details = {"n": n, "quotient_order": qz, "equality": qz == bound, "quotient_is_CpxCp": rhs}
    return (PASS, details) if (qz == bound) == rhs else (FAIL, details)


def _check_np2a(G, s):
    ct, skip = _uniform_type_check(G, 2)
    if skip:
        return skip
    n, qz = cent_count(G), _quotient_order(G)
    bound = (n - 2) ** 2
    if qz > bound:
        return FAIL, {"n": n, "quotient_order": qz, "bound": bound}
    rhs = isomorphic(central_quotient(G).quotient, elementary_abelian(ct.p, 4))
    details = {"n": n, "quotient_order": qz, "equality": qz == bound, "quotient_is_Cp4": rhs}
    return (PASS, details) if (qz == bound) == rhs else (FAIL, details)


def _check_semi(G, s):
    if not is_semi_extraspecial(G):
        return SKIP, {"reason": "not semi-extraspecial"}
    p = prime_power(G.order)[0]
    n, qz = cent_count(G), _quotient_order(G)
    details = {"n": n, "p": p, "quotient_order": qz}
    if (n - 2) % p == 0 and qz <= (n - 2) ** 2:
        return PASS, details
    return FAIL, details


def _check_bbu(G, s):
    pp = prime_power(G.order)
    if pp is None or pp[1] != 6 or not is_ultraspecial(G):
        return SKIP, {"reason": "not an ultraspecial group of order p^6"}
    n = cent_count(G)
    prof = profile(G)
    t = G.table
    covered: set[int] = set()
    for c in prof.proper_centralizers:
        h = np.asarray(c.elements, dtype=np.int64)
        sub = t[np.ix_(h, h)]
        if not (sub == sub.T).all():
            return FAIL, {"nonabelian_centralizer_order": c.order}
    for c in prof.proper_centralizers:
        covered.update(c.elements)
    qz = _quotient_order(G)
    details = {
        "n": n,
        "abelian_proper_centralizers": len(prof.proper_centralizers),
        "covers_group": len(covered) == G.order,
        "quotient_order": qz,
        "ca_group": is_CA_group(G),
    }
    ok = (
        len(prof.proper_centralizers) == n - 1
        and len(covered) == G.order
        and qz == (n - 2) ** 2
        and details["ca_group"]
    )
    return (PASS, details) if ok else (FAIL, details)


def _check_np12a(G, s):
    if center(G).order > 1:
        return SKIP, {"reason": "center is nontrivial"}
    q = largest_prime_divisor(G.order)
    n = cent_count(G)
    if n < q + 2:
        return FAIL, {"n": n, "q": q}
    frob = _is_frobenius_prime_cyclic(G)
    details = {"n": n, "q": q, "equality": n == q + 2, "frobenius_prime_kernel": frob}
    return (PASS, details) if (n == q + 2) == frob else (FAIL, details)


def _check_np12b(G, s):
    if center(G).order > 1:
        return SKIP, {"reason": "center is nontrivial"}
    n = cent_count(G)
    if n > G.order - 1:
        return FAIL, {"n": n, "order": G.order}
    is_s3 = G.order == 6 and isomorphic(G, symmetric(3))
    details = {"n": n, "order": G.order, "equality": n == G.order - 1, "is_S3": is_s3}
    return (PASS, details) if (n == G.order - 1) == is_s3 else (FAIL, details)


def _check_t1(G, s):
    if center(G).order == 1:
        return SKIP, {"reason": "center is trivial"}
    n = cent_count(G)
    if 2 * n > G.order:
        return FAIL, {"n": n, "order": G.order}
    es2 = is_extraspecial(G) and G.order % 2 == 0
    details = {"n": n, "order": G.order, "equality": 2 * n == G.order, "extraspecial_2": es2}
    return (PASS, details) if (2 * n == G.order) == es2 else (FAIL, details)


def _check_thm1(G, s):
    n = cent_count(G)
    lhs = is_F_group(G) and 2 * n >= G.order
    fam = _known_family(G)
    rhs = fam in ("A4", "dihedral_odd", "extraspecial_2", "Q8", "D8")
    details = {"n": n, "f_group_with_large_count": lhs, "family": fam, "catalog_relative": True}
    return (PASS, details) if lhs == rhs else (FAIL, details)


def _check_ccor1(G, s):
    n = cent_count(G)
    lhs = is_CA_group(G) and 2 * n >= G.order
    fam = _known_family(G)
    rhs = fam in ("A4", "Q8", "D8", "dihedral_odd")
    details = {"n": n, "ca_group_with_large_count": lhs, "family": fam, "catalog_relative": True}
    return (PASS, details) if lhs == rhs else (FAIL, details)


def _check_cg118(G, s):
    from .core import is_perfect

    if not is_perfect(central_quotient(G).quotient):
        return SKIP, {"reason": "central quotient is not perfect"}
    try:
        rep = perfect_quotient_check(G)
    except InvariantViolation as exc:
        return FAIL, {"reason": str(exc)}
    return PASS, {
        "cent_count": rep.cent_count,
        "derived_cent_count": rep.derived_cent_count,
        "derived_order": rep.derived_order,
    }


def _check_za1(G, s):
    try:
        ok = nonabelian_centralizer_check(G)
    except PreconditionNotMet as exc:
        return SKIP, {"reason": str(exc)}
    if ok:
        ct = conjugate_type(G)
        return PASS, {
            "p": ct.p,
            "k": ct.k,
            "proper_centralizers": len(profile(G).proper_centralizers),
        }
    t = G.table
    for i, c in enumerate(profile(G).proper_centralizers):
        h = np.asarray(c.elements, dtype=np.int64)
        sub = t[np.ix_(h, h)]
        if (sub == sub.T).all():
            return FAIL, {"abelian_centralizer": i, "order": c.order}
    return FAIL, {"reason": "inconsistent scan"}


def _check_tom11(G, s):
    n, qz = cent_count(G), _quotient_order(G)
    if n > 11:
        return SKIP, {"reason": f"n = {n} > 11"}
    details = {"n": n, "quotient_order": qz, "bound": (n - 2) ** 2}
    return (PASS, details) if qz <= (n - 2) ** 2 else (FAIL, details)


#: check id -> (implementation, one-line description); iteration order is the
#: suite's minor ordering.
REGISTRY: dict[str, tuple[Callable, str]] = {
    "np1": (_check_np1, "C(x) <= C(y) iff Z(y) <= Z(x), over element pairs"),
    "co1": (_check_co1, "y in Z(x) iff Z(y) <= Z(x), over element pairs"),
    "npcor1": (_check_npcor1, "a prime-order centralizer is contained in no other proper one"),
    "np155": (_check_np155, "|C(x)|/|Z| <= |C(xZ)| <= |C(x)| for non-central x"),
    "zclass1": (_check_zclass1, "conjugation transports Z(x) to Z(g^-1 x g)"),
    "zclass5": (_check_zclass5, "F-group iff the Z(x)/Z family is a normal partition of G/Z"),
    "1np": (_check_1np, "F-group: gcd(n-2, |G/Z|) != 1"),
    "np22": (_check_np22, "nilpotent F-group: |G/Z| = p^k with p | n-2"),
    "np2": (_check_np2, "uniform type (m,1): m = p^k and p | n-2"),
    "bc1a": (_check_bc1a, "F-group: |G/Z| <= (n-2)^2, strict under the small-Z(x) hypothesis"),
    "bc1b": (_check_bc1b, "non-F-group: |G/Z| within the combined general bound"),
    "1sb": (_check_1sb, "|G/Z| <= max((n-2)^2, 2(n-4)^log2(n-4)) for every group"),
    "sb1": (_check_sb1, "n > 11: |G/Z| <= 2(n-4)^log2(n-4)"),
    "bbc": (_check_bbc, "|G/Z| < (n-1)!"),
    "xx": (_check_xx, "F-group: |G/Z| <= (n-2)^2 <= |G|^2/4"),
    "5sb": (_check_5sb, "type (p,1): n-2 = p iff G/Z is C_p x C_p"),
    "52sb": (_check_52sb, "type (p^2,1): n-2 = p^2 iff G/Z is C_p^4"),
    "np2b": (_check_np2b, "type (p,1): |G/Z| <= (n-2)^2 with equality iff G/Z is C_p x C_p"),
    "np2a": (_check_np2a, "type (p^2,1): |G/Z| <= (n-2)^2 with equality iff G/Z is C_p^4"),
    "semi": (_check_semi, "semi-extraspecial: p | n-2 and |G/Z| <= (n-2)^2"),
    "bbu": (_check_bbu, "ultraspecial of order p^6: n-1 abelian centralizers cover G, |G/Z| = (n-2)^2"),
    "np12a": (_check_np12a, "centerless: n >= q+2, equality iff Frobenius with C_q kernel"),
    "np12b": (_check_np12b, "centerless: n <= |G|-1, equality iff S3"),
    "t1": (_check_t1, "nontrivial center: n <= |G|/2, equality iff extraspecial 2-group"),
    "thm1": (_check_thm1, "F-group with n >= |G|/2 iff A4, twice-odd dihedral, or extraspecial 2"),
    "ccor1": (_check_ccor1, "CA-group with n >= |G|/2 iff A4, Q8, D8, or twice-odd dihedral"),
    "cg118": (_check_cg118, "perfect central quotient: |Cent(G)| = |Cent(G')|"),
    "za1": (_check_za1, "p-group of type (p^k,1), |G/Z| > p^2k: all proper centralizers non-abelian"),
    "tom11": (_check_tom11, "n <= 11: |G/Z| <= (n-2)^2"),
}


def check_ids() -> tuple[str, ...]:
    return tuple(REGISTRY)


def run_check(check_id: str, G: FiniteGroup, settings: CheckSettings | None = None) -> CheckResult:
    """Run one named check against one group."""
    if check_id not in REGISTRY:
        raise UnknownCheckId(f"no check registered under {check_id!r}")
    settings = settings or CheckSettings()
    if is_abelian(G):
        return CheckResult(
            check_id, G.name, SKIP, {"reason": "abelian group; centralizer structure is trivial"}
        )
    fn = REGISTRY[check_id][0]
    status, details = fn(G, settings)
    return CheckResult(check_id, G.name, status, details)


def _expected_result(entry: CatalogEntry, G: FiniteGroup) -> CheckResult:
    """Validate an entry's expected attributes against measured values."""
    measured: dict = {"order": G.order, "center_order": center(G).order}
    if not is_abelian(G):
        measured["cent_count"] = cent_count(G)
        ct = conjugate_type(G)
        measured["conjugate_type"] = [ct.m, 1] if ct.is_uniform else None
        measured["f_group"] = is_F_group(G)
        measured["ca_group"] = is_CA_group(G)
        measured["extraspecial"] = is_extraspecial(G)
    mismatches = {
        key: {"expected": want, "measured": measured.get(key)}
        for key, want in (entry.expected or {}).items()
        if measured.get(key) != want
    }
    if mismatches:
        return CheckResult("expected", entry.name, FAIL, mismatches)
    return CheckResult("expected", entry.name, PASS, {"attributes": sorted(entry.expected or ())})


def _entry_results(entry: CatalogEntry, settings: CheckSettings) -> list[CheckResult]:
    try:
        G = entry.build()
    except (GroupTheoryError, OSError) as exc:
        return [CheckResult("build", entry.name, ERROR, {"reason": str(exc)})]
    results = []
    if entry.expected is not None:
        results.append(_expected_result(entry, G))
    results.extend(run_check(cid, G, settings) for cid in REGISTRY)
    return results


def run_suite(
    catalog: Iterable[CatalogEntry] | None = None,
    *,
    jobs: int = 1,
    settings: CheckSettings | None = None,
) -> SuiteReport:
    """Every applicable check against every catalog entry, in deterministic
    order (catalog major, registry minor); entries with expected attributes
    get one extra validation row first. Builder failures become per-entry
    error results without disturbing the rest."""
    entries = list(default_catalog() if catalog is None else catalog)
    settings = settings or CheckSettings()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(lambda e: _entry_results(e, settings), entries))
    else:
        chunks = [_entry_results(e, settings) for e in entries]
    results = tuple(r for chunk in chunks for r in chunk)
    summary = {"total": len(results), PASS: 0, FAIL: 0, SKIP: 0, INDETERMINATE: 0, ERROR: 0}
    for r in results:
        summary[r.status] += 1
    return SuiteReport(results, summary)


# ---------------------------------------------------------------------------
# search

_NAMED_PREDICATES: dict[str, Callable[[int, int, int], bool]] = {
    "cent_eq_half": lambda n, order, z: 2 * n == order,
    "cent_eq_half_plus_two": lambda n, order, z: 2 * (n - 2) == order,
    "cent_ge_half": lambda n, order, z: 2 * n >= order,
}


def search(query: SearchQuery, catalog: Iterable[CatalogEntry] | None = None) -> list[SearchHit]:
    """Catalog groups satisfying the predicate, flagged by family membership
    so out-of-family hits stand out. Abelian entries are not profiled and
    never match."""
    if callable(query.predicate):
        pred = query.predicate
    else:
        if query.predicate not in _NAMED_PREDICATES:
            raise UnknownCheckId(f"unknown search predicate {query.predicate!r}")
        pred = _NAMED_PREDICATES[query.predicate]
    if query.restrict not in (None, "f", "ca"):
        raise UnknownCheckId(f"unknown restriction {query.restrict!r}")

    hits = []
    for entry in default_catalog() if catalog is None else catalog:
        G = entry.build()
        if query.max_order is not None and G.order > query.max_order:
            continue
        if is_abelian(G):
            continue
        f_flag, ca_flag = is_F_group(G), is_CA_group(G)
        if query.restrict == "f" and not f_flag:
            continue
        if query.restrict == "ca" and not ca_flag:
            continue
        n = cent_count(G)
        if pred(n, G.order, center(G).order):
            hits.append(
                SearchHit(
                    name=entry.name,
                    order=G.order,
                    center_order=center(G).order,
                    cent_count=n,
                    f_group=f_flag,
                    ca_group=ca_flag,
                    family=_known_family(G),
                )
            )
    return hits


# ---------------------------------------------------------------------------
# the default catalog


def _frobenius_entry(q: int, n: int, r: int) -> CatalogEntry:
    return CatalogEntry(
        name=f"C{q}:C{n}(r={r})",
        builder_spec=f"builtin:frobenius:{q}:{n}:{r}",
        expected={"cent_count": q + 2, "f_group": True, "ca_group": True},
    )


def default_catalog() -> list[CatalogEntry]:
    """The built-in verification catalog (37 groups)."""
    entries: list[CatalogEntry] = []
    for half in range(3, 11):
        odd = half % 2 == 1
        expected = {"cent_count": half + 2 if odd else half // 2 + 2, "f_group": True, "ca_group": True}
        entries.append(CatalogEntry(f"D{2 * half}", f"builtin:dihedral:{2 * half}", expected))
    entries.append(
        CatalogEntry("Q8", "builtin:quaternion8", {"cent_count": 4, "ca_group": True, "extraspecial": True})
    )
    for a in (1, 2, 3):
        order = 2 ** (2 * a + 1)
        for variant, sign in (("plus", "+"), ("minus", "-")):
            entries.append(
                CatalogEntry(
                    f"E{order}{sign}",
                    f"builtin:extraspecial2:{a}:{variant}",
                    {
                        "cent_count": order // 2,
                        "conjugate_type": [2, 1],
                        "f_group": True,
                        "ca_group": a == 1,
                        "extraspecial": True,
                    },
                )
            )
    for p, e in ((2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)):
        q = p**e
        entries.append(
            CatalogEntry(
                f"Heis({q})",
                f"builtin:heisenberg:{p}:{e}",
                {"cent_count": q + 2, "conjugate_type": [q, 1], "f_group": True, "ca_group": True},
            )
        )
    for q, n, r in ((5, 4, 2), (7, 3, 2), (7, 6, 3), (11, 5, 3), (13, 3, 3), (13, 4, 5)):
        entries.append(_frobenius_entry(q, n, r))
    entries.append(CatalogEntry("A4", "builtin:alternating:4", {"cent_count": 6, "f_group": True, "ca_group": True}))
    entries.append(CatalogEntry("S4", "builtin:symmetric:4", {"cent_count": 14, "f_group": False}))
    entries.append(CatalogEntry("A5", "builtin:alternating:5", {"cent_count": 22, "f_group": True, "ca_group": True}))
    entries.append(CatalogEntry("S5", "builtin:symmetric:5", {"cent_count": 57, "f_group": False}))
    entries.append(
        CatalogEntry(
            "S3xS3", "builtin:symmetric:3*builtin:symmetric:3", {"cent_count": 25, "f_group": False}
        )
    )
    entries.append(
        CatalogEntry(
            "C6xA5", "builtin:cyclic:6*builtin:alternating:5", {"cent_count": 22, "center_order": 6}
        )
    )
    entries.append(
        CatalogEntry(
            "D8xC2",
            "builtin:dihedral:8*builtin:cyclic:2",
            {"cent_count": 4, "conjugate_type": [2, 1], "extraspecial": False},
        )
    )
    entries.append(CatalogEntry("C12", "builtin:cyclic:12", {"center_order": 12}))
    entries.append(CatalogEntry("C2^3", "builtin:elementary_abelian:2:3", {"center_order": 8}))
    entries.append(CatalogEntry("C15", "builtin:cyclic:15", {"center_order": 15}))
    return entries
