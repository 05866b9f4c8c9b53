"""Dense-table finite groups: validation, subgroups, quotients, recognizers.

Elements of a group of order n are the indices 0..n-1 and the whole group is
a single n x n product table, so every product, inverse and commutation scan
is an O(1) array lookup. All values are immutable after construction and safe
to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadParameter,
    NotAGroup,
    NotNormal,
    NotPrime,
    OrderCapExceeded,
)

# Above this order, construction switches from the O(n^3) associativity scan
# to a generator-based (Light) test on a Latin-square table.
FULL_ASSOCIATIVITY_CAP = 1024

# isomorphic() refuses orders above this cap; recognition targets in this
# package are all small (C_p x C_p, C_p^4, named groups of order <= 128).
ISOMORPHISM_ORDER_CAP = 512


class FiniteGroup:
    """A finite group on elements 0..order-1 with a dense product table.

    ``table[i, j]`` is the index of the product of element i by element j.
    The identity is wherever validation finds it, not pinned to index 0.
    Instances hash by identity, which makes them usable as cache keys.
    """

    __slots__ = ("name", "order", "table", "identity", "inverses", "element_orders")

    def __init__(
        self,
        name: str,
        table: np.ndarray,
        identity: int,
        inverses: np.ndarray,
        element_orders: tuple[int, ...],
    ):
        self.name = name
        self.order = int(table.shape[0])
        self.table = table
        self.identity = int(identity)
        self.inverses = inverses
        self.element_orders = element_orders

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conj(self, x: int, g: int) -> int:
        """g^-1 * x * g."""
        t = self.table
        return int(t[t[self.inverses[g], x], g])

    def order_of(self, a: int) -> int:
        return self.element_orders[a]

    def elements(self) -> range:
        return range(self.order)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A closed subset of a parent group, stored as sorted element indices."""

    group: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.elements, self.elements[1:])):
            raise BadParameter("subgroup elements must be strictly sorted")
        if self.elements and not (
            0 <= self.elements[0] and self.elements[-1] < self.group.order
        ):
            raise BadParameter("subgroup elements out of range")

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class QuotientResult:
    """A quotient group together with the projection from the parent."""

    quotient: FiniteGroup
    projection: tuple[int, ...]
    normal_subgroup: Subgroup


def _subgroup(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    return Subgroup(G, tuple(sorted({int(m) for m in members})))


def _greedy_generators(table: np.ndarray, identity: int) -> list[int]:
    """Small generating set found by repeatedly adjoining the first element
    outside the closure of what we already have."""
    n = table.shape[0]
    reached = np.zeros(n, dtype=bool)
    reached[identity] = True
    gens: list[int] = []
    while not reached.all():
        g = int(np.argmin(reached))
        gens.append(g)
        frontier = list(np.nonzero(reached)[0])
        reached[g] = True
        frontier.append(g)
        while frontier:
            x = frontier.pop()
            for h in gens:
                y = int(table[x, h])
                if not reached[y]:
                    reached[y] = True
                    frontier.append(y)
    return gens


def _validate_full_associativity(arr: np.ndarray) -> None:
    n = arr.shape[0]
    for k in range(n):
        lhs = arr[arr, k]
        rhs = arr[:, arr[:, k]]
        if not np.array_equal(lhs, rhs):
            i, j = map(int, np.argwhere(lhs != rhs)[0])
            raise NotAGroup(f"associativity fails on triple ({i}, {j}, {k})")


def _validate_light_associativity(arr: np.ndarray, identity: int) -> None:
    # Light's test: with a Latin-square table, checking that every generator
    # associates in the middle position implies full associativity.
    n = arr.shape[0]
    expect = np.arange(n, dtype=arr.dtype)
    if not (np.array_equal(np.sort(arr, axis=1), np.broadcast_to(expect, arr.shape))
            and np.array_equal(np.sort(arr, axis=0), np.broadcast_to(expect[:, None], arr.shape))):
        raise NotAGroup("table is not a Latin square; generator-based validation needs one")
    for g in _greedy_generators(arr, identity):
        lhs = arr[arr[:, g], :]
        rhs = arr[:, arr[g, :]]
        if not np.array_equal(lhs, rhs):
            x, z = map(int, np.argwhere(lhs != rhs)[0])
            raise NotAGroup(f"associativity fails on triple ({x}, {g}, {z})")


def from_table(table, name: str = "G", validate: str = "auto") -> FiniteGroup:
    """Build a validated group from a square table of element indices.

    ``validate`` is "auto" (full O(n^3) scan up to order 1024, generator-based
    above), "full", or "light". Raises NotAGroup with the witnessing triple or
    element when any axiom fails.
    """
    arr = np.array(table, dtype=np.int32)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotAGroup(f"table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise NotAGroup("table is empty")
    if arr.min() < 0 or arr.max() >= n:
        raise NotAGroup(f"table entries must lie in [0, {n})")
    arr.setflags(write=False)

    expect = np.arange(n, dtype=arr.dtype)
    identity = -1
    for e in np.nonzero((arr == expect[None, :]).all(axis=1))[0]:
        if np.array_equal(arr[:, e], expect):
            identity = int(e)
            break
    if identity < 0:
        raise NotAGroup("no two-sided identity element")

    hits = arr == identity
    rinv = hits.argmax(axis=1)
    if not hits[expect, rinv].all():
        i = int(np.argmin(hits[expect, rinv]))
        raise NotAGroup(f"element {i} has no right inverse")
    if not (arr[rinv, expect] == identity).all():
        i = int(np.argmin(arr[rinv, expect] == identity))
        raise NotAGroup(f"element {i} has no two-sided inverse")
    inverses = rinv.astype(np.int32)
    inverses.setflags(write=False)

    if validate not in ("auto", "full", "light"):
        raise BadParameter(f"unknown validation mode {validate!r}")
    if validate == "full" or (validate == "auto" and n <= FULL_ASSOCIATIVITY_CAP):
        _validate_full_associativity(arr)
    else:
        _validate_light_associativity(arr, identity)

    orders = []
    for i in range(n):
        k, x = 1, i
        while x != identity:
            x = int(arr[x, i])
            k += 1
            if k > n:
                raise NotAGroup(f"powers of element {i} never reach the identity")
        if n % k != 0:
            raise NotAGroup(f"element {i} has order {k}, which does not divide {n}")
        orders.append(k)

    return FiniteGroup(name, arr, identity, inverses, tuple(orders))


def renamed(G: FiniteGroup, name: str) -> FiniteGroup:
    """The same group under a different display name (no revalidation)."""
    return FiniteGroup(name, G.table, G.identity, G.inverses, G.element_orders)


# ---------------------------------------------------------------------------
# subgroups


@lru_cache(maxsize=None)
def center(G: FiniteGroup) -> Subgroup:
    """Elements commuting with everything."""
    mask = (G.table == G.table.T).all(axis=1)
    return _subgroup(G, np.nonzero(mask)[0])


def centralizer(G: FiniteGroup, x: int) -> Subgroup:
    """Elements commuting with x; always contains <x> and the center."""
    if not 0 <= x < G.order:
        raise BadParameter(f"element index {x} out of range")
    mask = G.table[:, x] == G.table[x, :]
    return _subgroup(G, np.nonzero(mask)[0])


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest closed subset containing the generators and the identity."""
    gen_list = [int(g) for g in gens]
    if any(g < 0 or g >= G.order for g in gen_list):
        raise BadParameter("generator index out of range")
    elems = np.unique(np.array(gen_list + [G.identity], dtype=np.int64))
    while True:
        products = np.unique(G.table[np.ix_(elems, elems)])
        if products.size == elems.size:
            return _subgroup(G, elems)
        elems = np.unique(np.append(elems, products))


@lru_cache(maxsize=None)
def _commutator_table(G: FiniteGroup) -> np.ndarray:
    """K[a, b] = a b a^-1 b^-1."""
    t = G.table
    k = t[t, np.asarray(G.inverses)[t.T]]
    k.setflags(write=False)
    return k


@lru_cache(maxsize=None)
def derived_subgroup(G: FiniteGroup) -> Subgroup:
    """Subgroup generated by all commutators; normal in G."""
    return generated_subgroup(G, np.unique(_commutator_table(G)))


def _is_closed(G: FiniteGroup, elems: np.ndarray) -> bool:
    member = np.zeros(G.order, dtype=bool)
    member[elems] = True
    return bool(member[G.table[np.ix_(elems, elems)]].all())


def _require_subgroup(G: FiniteGroup, H: Subgroup) -> np.ndarray:
    if H.group is not G:
        raise BadParameter("subgroup belongs to a different group")
    elems = np.asarray(H.elements, dtype=np.int64)
    if H.group.identity not in H.element_set or not _is_closed(G, elems):
        raise BadParameter("element set is not a subgroup")
    return elems


def conjugate_elements(G: FiniteGroup, elems: Sequence[int], g: int) -> np.ndarray:
    """g^-1 E g as an unsorted index array."""
    t = G.table
    return t[t[G.inverses[g], np.asarray(elems, dtype=np.int64)], g]


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    elems = _require_subgroup(G, H)
    member = np.zeros(G.order, dtype=bool)
    member[elems] = True
    for g in range(G.order):
        if not member[conjugate_elements(G, elems, g)].all():
            return False
    return True


def quotient(G: FiniteGroup, N: Subgroup) -> QuotientResult:
    """Coset group G/N with its projection map; requires N normal."""
    elems = _require_subgroup(G, N)
    if not is_normal(G, N):
        raise NotNormal(f"{N.elements} is not normal in {G.name}")
    # canonical coset label = least element of xN
    canon = G.table[:, elems].min(axis=1)
    reps = np.unique(canon)
    qindex = np.full(G.order, -1, dtype=np.int32)
    qindex[reps] = np.arange(reps.size, dtype=np.int32)
    qtable = qindex[canon[G.table[np.ix_(reps, reps)]]]
    q = from_table(qtable, name=f"{G.name}/N{N.order}")
    projection = tuple(int(v) for v in qindex[canon])
    return QuotientResult(q, projection, N)


def subgroup_as_group(G: FiniteGroup, H: Subgroup) -> FiniteGroup:
    """H with its inherited product, reindexed to 0..|H|-1."""
    elems = _require_subgroup(G, H)
    pos = np.full(G.order, -1, dtype=np.int32)
    pos[elems] = np.arange(elems.size, dtype=np.int32)
    table = pos[G.table[np.ix_(elems, elems)]]
    return from_table(table, name=f"{G.name}|H{H.order}")


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs, indexed as a * |B| + b."""
    na, nb = A.order, B.order
    table = (
        A.table[:, None, :, None].astype(np.int64) * nb
        + B.table[None, :, None, :]
    ).reshape(na * nb, na * nb)
    return from_table(table, name=f"{A.name}x{B.name}")


# ---------------------------------------------------------------------------
# recognizers


def is_abelian(G: FiniteGroup) -> bool:
    return bool((G.table == G.table.T).all())


def is_cyclic(G: FiniteGroup) -> bool:
    return max(G.element_orders) == G.order


def exponent(G: FiniteGroup) -> int:
    """Least common multiple of the element orders."""
    return math.lcm(*G.element_orders)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p^k, or None if n is not a prime power (or n = 1)."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if p * p > n:
            return (n, 1)
        if n % p == 0:
            k, m = 0, n
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return None


def largest_prime_divisor(n: int) -> int:
    if n < 2:
        raise BadParameter("largest prime divisor is undefined for n < 2")
    best = 1
    m = n
    for p in range(2, n + 1):
        if p * p > m:
            break
        while m % p == 0:
            best = p
            m //= p
    return m if m > 1 else best


def is_elementary_abelian(G: FiniteGroup, p: int) -> bool:
    """Abelian of order p^k and exponent p (the trivial group qualifies)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if G.order == 1:
        return True
    if not is_abelian(G):
        return False
    pp = prime_power(G.order)
    if pp is None or pp[0] != p:
        return False
    return all(o in (1, p) for o in G.element_orders)


def is_nilpotent(G: FiniteGroup) -> bool:
    """Ascending central series reaches the whole group."""
    k = _commutator_table(G)
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity] = True
    while True:
        new = mask[k].all(axis=1)
        if new.all():
            return True
        if np.array_equal(new, mask):
            return False
        mask = new


def is_perfect(G: FiniteGroup) -> bool:
    return derived_subgroup(G).order == G.order


# ---------------------------------------------------------------------------
# isomorphism


@lru_cache(maxsize=None)
def _fingerprints(G: FiniteGroup) -> tuple[tuple[int, int], ...]:
    """Per-element (order, centralizer size); preserved by isomorphism."""
    t = G.table
    sizes = [int((t[:, i] == t[i, :]).sum()) for i in range(G.order)]
    return tuple(zip(G.element_orders, sizes))


@lru_cache(maxsize=None)
def isomorphic(A: FiniteGroup, B: FiniteGroup, cap: int = ISOMORPHISM_ORDER_CAP) -> bool:
    """Exact isomorphism test by generator-image backtracking.

    Candidate images are pruned by the (element order, centralizer size)
    fingerprint; a partial assignment is extended to a full word map by
    closure and rejected on the first inconsistency. Only intended for the
    small recognition targets of this package, hence the order cap.
    """
    if A.order > cap or B.order > cap:
        raise OrderCapExceeded(f"isomorphism testing capped at order {cap}")
    if A is B:
        return True
    if A.order != B.order:
        return False
    fpa, fpb = _fingerprints(A), _fingerprints(B)
    if sorted(fpa) != sorted(fpb):
        return False

    n = A.order
    ta, tb = A.table, B.table
    gens = _greedy_generators(ta, A.identity)
    buckets: dict[tuple[int, int], list[int]] = {}
    for i, fp in enumerate(fpb):
        buckets.setdefault(fp, []).append(i)
    candidates = [buckets.get(fpa[g], []) for g in gens]

    def extend(images: list[int]) -> np.ndarray | None:
        m = np.full(n, -1, dtype=np.int32)
        m[A.identity] = B.identity
        stack = [A.identity]
        count = 1
        while stack:
            a = stack.pop()
            ma = m[a]
            for g, h in zip(gens, images):
                a2 = int(ta[a, g])
                b2 = int(tb[ma, h])
                if m[a2] < 0:
                    m[a2] = b2
                    stack.append(a2)
                    count += 1
                elif m[a2] != b2:
                    return None
        if np.unique(m[m >= 0]).size != count:
            return None
        return m

    def dfs(images: list[int]) -> bool:
        m = extend(images)
        if m is None:
            return False
        if len(images) == len(gens):
            if (m < 0).any():
                return False
            perm = m.astype(np.int64)
            return bool((perm[ta] == tb[perm[:, None], perm[None, :]]).all())
        return any(dfs(images + [h]) for h in candidates[len(images)])

    return dfs([])
