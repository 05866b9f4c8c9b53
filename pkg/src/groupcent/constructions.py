"""Builders for the group families used throughout the catalog.

Every builder routes its table through ``from_table`` validation, so a value
returned from here is a checked group, not just a plausible one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .core import (
    FiniteGroup,
    _subgroup,
    center,
    direct_product,
    from_table,
    is_prime,
    quotient,
    renamed,
)
from .errors import (
    BadOrder,
    BadParameter,
    NotAnAction,
    NotAPermutation,
    NotCentralIso,
    NotFrobenius,
    TooLarge,
)
from .fields import FiniteField

PERMUTATION_CLOSURE_CAP = 10000

# Field orders whose Heisenberg group stays within desk-scale validation.
HEISENBERG_FIELD_ORDERS = (2, 3, 4, 5, 7, 8, 9)


@lru_cache(maxsize=None)
def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise BadParameter("cyclic group order must be >= 1")
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return from_table(table, name=f"C{n}")


@lru_cache(maxsize=None)
def elementary_abelian(p: int, k: int) -> FiniteGroup:
    """Direct power C_p^k, with digit-wise addition base p."""
    if not is_prime(p):
        raise BadParameter(f"{p} is not prime")
    if k < 0:
        raise BadParameter("exponent must be >= 0")
    n = p**k
    idx = np.arange(n)
    table = np.zeros((n, n), dtype=np.int64)
    for i in range(k):
        di = (idx[:, None] // p**i) % p
        dj = (idx[None, :] // p**i) % p
        table += ((di + dj) % p) * p**i
    name = f"C{p}^{k}" if k != 1 else f"C{p}"
    return from_table(table, name=name)


@lru_cache(maxsize=None)
def dihedral(two_n: int) -> FiniteGroup:
    """Dihedral group of order two_n (rotations first, then reflections)."""
    if two_n % 2 != 0 or two_n < 6:
        raise BadParameter(f"dihedral order must be even and >= 6, got {two_n}")
    half = two_n // 2
    table = np.zeros((two_n, two_n), dtype=np.int32)
    for f1 in (0, 1):
        for i1 in range(half):
            a = f1 * half + i1
            for f2 in (0, 1):
                sign = 1 if f2 == 0 else -1
                for i2 in range(half):
                    b = f2 * half + i2
                    table[a, b] = ((f1 ^ f2) * half) + (i2 + sign * i1) % half
    return from_table(table, name=f"D{two_n}")


@lru_cache(maxsize=None)
def quaternion8() -> FiniteGroup:
    """The quaternion group on {1, -1, i, -i, j, -j, k, -k}."""
    units = [
        (1, 0, 0, 0), (-1, 0, 0, 0),
        (0, 1, 0, 0), (0, -1, 0, 0),
        (0, 0, 1, 0), (0, 0, -1, 0),
        (0, 0, 0, 1), (0, 0, 0, -1),
    ]
    index = {u: i for i, u in enumerate(units)}

    def hprod(q1, q2):
        a1, b1, c1, d1 = q1
        a2, b2, c2, d2 = q2
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    table = [[index[hprod(u, v)] for v in units] for u in units]
    return from_table(table, name="Q8")


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[i]] for i in range(len(q)))


def _parity(p: tuple[int, ...]) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def _tabulate_permutations(perms: list[tuple[int, ...]], name: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[_compose(a, b)] for b in perms] for a in perms]
    return from_table(table, name=name)


@lru_cache(maxsize=None)
def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise BadParameter("symmetric groups supported for degree 1..5")
    perms = sorted(permutations(range(n)))
    return _tabulate_permutations(perms, name=f"S{n}")


@lru_cache(maxsize=None)
def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise BadParameter("alternating groups supported for degree 1..5")
    perms = sorted(p for p in permutations(range(n)) if _parity(p) == 0)
    return _tabulate_permutations(perms, name=f"A{n}")


@dataclass(frozen=True)
class ActionSpec:
    """A complement acting on a kernel: action[h] permutes kernel indices."""

    kernel: FiniteGroup
    complement: FiniteGroup
    action: tuple[tuple[int, ...], ...]


def semidirect(spec: ActionSpec, name: str | None = None) -> FiniteGroup:
    """Semidirect product on pairs (k, h), indexed as k * |H| + h.

    Raises NotAnAction when some permutation is not an automorphism of the
    kernel or the map h -> action[h] is not a homomorphism.
    """
    K, H = spec.kernel, spec.complement
    nk, nh = K.order, H.order
    if len(spec.action) != nh:
        raise NotAnAction(f"need one permutation per complement element, got {len(spec.action)}")
    perms = []
    for h, p in enumerate(spec.action):
        arr = np.asarray(p, dtype=np.int64)
        if arr.shape != (nk,) or not np.array_equal(np.sort(arr), np.arange(nk)):
            raise NotAnAction(f"action of complement element {h} is not a permutation of the kernel")
        if not np.array_equal(arr[K.table], K.table[arr[:, None], arr[None, :]]):
            raise NotAnAction(f"action of complement element {h} is not an automorphism")
        perms.append(arr)
    for h1 in range(nh):
        for h2 in range(nh):
            if not np.array_equal(perms[H.table[h1, h2]], perms[h1][perms[h2]]):
                raise NotAnAction(f"action is not a homomorphism at ({h1}, {h2})")

    n = nk * nh
    table = np.zeros((n, n), dtype=np.int64)
    ks = np.arange(nk)
    for h1 in range(nh):
        twisted = K.table[:, perms[h1]]  # [k1, k2] -> k1 * action(h1)(k2)
        for h2 in range(nh):
            h3 = int(H.table[h1, h2])
            block = twisted * nh + h3
            table[np.ix_(ks * nh + h1, ks * nh + h2)] = block
    return from_table(table, name=name or f"{K.name}:{H.name}")


@lru_cache(maxsize=None)
def frobenius_cq_cn(q: int, n: int, r: int) -> FiniteGroup:
    """C_q with a cyclic complement of order n acting by x -> x * r mod q.

    r must have multiplicative order exactly n mod q (else BadOrder), which
    forces the action to be fixed-point free; the defining property is still
    re-verified after construction.
    """
    if not is_prime(q):
        raise BadParameter(f"kernel order {q} must be prime")
    if n < 2:
        raise BadParameter("complement order must be >= 2")
    if r % q == 0:
        raise BadOrder(f"r={r} is not a unit mod {q}")
    k, x = 1, r % q
    while x != 1:
        x = (x * r) % q
        k += 1
    if k != n:
        raise BadOrder(f"r={r} has multiplicative order {k} mod {q}, need {n}")

    action = tuple(
        tuple((x * pow(r, j, q)) % q for x in range(q)) for j in range(n)
    )
    spec = ActionSpec(cyclic(q), cyclic(n), action)
    G = semidirect(spec, name=f"C{q}:C{n}(r={r})")
    for j in range(1, n):
        if any(action[j][x] == x for x in range(1, q)):
            raise NotFrobenius(f"complement element {j} fixes a nontrivial kernel element")
    return G


def smallest_frobenius_unit(q: int, n: int) -> int:
    """Least r with multiplicative order exactly n mod q; helper for fixtures."""
    if not is_prime(q) or n < 2 or (q - 1) % n != 0:
        raise BadParameter(f"no unit of order {n} exists mod {q}")
    for r in range(2, q):
        k, x = 1, r
        while x != 1:
            x = (x * r) % q
            k += 1
        if k == n:
            return r
    raise BadParameter(f"no unit of order {n} exists mod {q}")


def central_product(
    A: FiniteGroup,
    B: FiniteGroup,
    iso: dict[int, int] | None = None,
) -> FiniteGroup:
    """(A x B) / {(z, iso(z)^-1)} for an isomorphism iso of the two centers.

    With iso omitted, both centers must have order <= 2 so that the
    identification is forced.
    """
    za, zb = center(A), center(B)
    if iso is None:
        if za.order != zb.order or za.order > 2:
            raise NotCentralIso(
                "an explicit center isomorphism is required unless both centers have order <= 2"
            )
        iso = {A.identity: B.identity}
        for x, y in zip(
            (z for z in za.elements if z != A.identity),
            (z for z in zb.elements if z != B.identity),
        ):
            iso[x] = y
    if set(iso) != set(za.elements) or set(iso.values()) != set(zb.elements):
        raise NotCentralIso("map is not a bijection between the two centers")
    for z1 in za.elements:
        for z2 in za.elements:
            if iso[A.mul(z1, z2)] != B.mul(iso[z1], iso[z2]):
                raise NotCentralIso(f"map does not preserve products at ({z1}, {z2})")

    P = direct_product(A, B)
    nb = B.order
    anti = [z * nb + B.inv(iso[z]) for z in za.elements]
    result = quotient(P, _subgroup(P, anti))
    return renamed(result.quotient, f"{A.name}o{B.name}")


@lru_cache(maxsize=None)
def extraspecial2(a: int, variant: str) -> FiniteGroup:
    """Central products of a copies of D8 ("plus") or D8's and one Q8 ("minus");
    order 2^(2a+1)."""
    if variant not in ("plus", "minus"):
        raise BadParameter(f"variant must be 'plus' or 'minus', got {variant!r}")
    if not 1 <= a <= 4:
        raise BadParameter("supported sizes are a = 1..4 (orders 8..512)")
    G = dihedral(8) if variant == "plus" else quaternion8()
    for _ in range(a - 1):
        G = central_product(G, dihedral(8))
    sign = "+" if variant == "plus" else "-"
    return renamed(G, f"E{2 ** (2 * a + 1)}{sign}")


@lru_cache(maxsize=None)
def heisenberg(field: FiniteField) -> FiniteGroup:
    """Upper unitriangular 3x3 matrices over the field; order q^3, center of
    order q. Triples (a, b, c) multiply as (a+a', b+b', c+c'+a*b')."""
    q = field.order
    if q not in HEISENBERG_FIELD_ORDERS:
        raise BadParameter(
            f"field order {q} not supported; need q^3 <= 1024 (q in {HEISENBERG_FIELD_ORDERS})"
        )
    add, mul = field.add_table, field.mul_table
    n = q**3
    idx = np.arange(n)
    a1, b1, c1 = (idx // q**2)[:, None], ((idx // q) % q)[:, None], (idx % q)[:, None]
    a2, b2, c2 = (idx // q**2)[None, :], ((idx // q) % q)[None, :], (idx % q)[None, :]
    a3 = add[a1, a2]
    b3 = add[b1, b2]
    c3 = add[add[c1, c2], mul[a1, b2]]
    table = (a3.astype(np.int64) * q + b3) * q + c3
    mode = "light" if n > 512 else "auto"
    return from_table(table, name=f"Heis({q})", validate=mode)


def from_permutations(degree: int, generators, name: str | None = None) -> FiniteGroup:
    """Group generated by permutations of {0..degree-1}, tabulated after
    closure; TooLarge above the enumeration cap."""
    if degree < 1:
        raise BadParameter("degree must be >= 1")
    gens: list[tuple[int, ...]] = []
    for g in generators:
        p = tuple(int(v) for v in g)
        if sorted(p) != list(range(degree)):
            raise NotAPermutation(f"{p} is not a permutation of 0..{degree - 1}")
        gens.append(p)

    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = _compose(x, g)
            if y not in seen:
                if len(seen) >= PERMUTATION_CLOSURE_CAP:
                    raise TooLarge(f"closure exceeds {PERMUTATION_CLOSURE_CAP} elements")
                seen.add(y)
                frontier.append(y)
    perms = sorted(seen)
    return _tabulate_permutations(perms, name=name or f"P{degree}({len(perms)})")
