"""Table construction, subgroup machinery, quotients, recognizers."""

import numpy as np
import pytest

from groupcent import (
    Subgroup,
    center,
    centralizer,
    cyclic,
    derived_subgroup,
    dihedral,
    direct_product,
    exponent,
    from_table,
    generated_subgroup,
    is_abelian,
    is_cyclic,
    is_elementary_abelian,
    is_nilpotent,
    is_normal,
    is_perfect,
    isomorphic,
    largest_prime_divisor,
    prime_power,
    quaternion8,
    quotient,
    subgroup_as_group,
    symmetric,
    alternating,
    elementary_abelian,
)
from groupcent.errors import (
    BadParameter,
    NotAGroup,
    NotNormal,
    NotPrime,
    OrderCapExceeded,
)


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def s3_table_by_hand():
    """Oracle: tabulate S3 from raw permutation composition."""
    perms = sorted(
        {(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)}
    )
    idx = {p: i for i, p in enumerate(perms)}
    return [[idx[compose(a, b)] for b in perms] for a in perms]


class TestFromTable:
    def test_trivial_group(self):
        g = from_table([[0]], name="1")
        assert g.order == 1 and g.identity == 0 and g.element_orders == (1,)

    def test_s3_from_permutation_composition(self):
        g = from_table(s3_table_by_hand(), name="S3")
        assert g.order == 6
        assert sorted(g.element_orders) == [1, 2, 2, 2, 3, 3]

    def test_identity_discovered_not_pinned(self):
        # relabel C3 so the identity sits at index 2
        relabel = [2, 0, 1]
        base = cyclic(3)
        table = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                table[relabel[i]][relabel[j]] = relabel[base.mul(i, j)]
        g = from_table(table)
        assert g.identity == 2

    def test_nonassociative_triple_rejected(self):
        # a Latin square with identity that is not a group (order 5 loop)
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(NotAGroup, match="associativity"):
            from_table(table)

    def test_missing_identity_rejected(self):
        with pytest.raises(NotAGroup, match="identity"):
            from_table([[1, 0], [1, 0]])

    def test_out_of_range_rejected(self):
        with pytest.raises(NotAGroup, match="entries"):
            from_table([[0, 1], [1, 5]])

    def test_non_square_rejected(self):
        with pytest.raises(NotAGroup, match="square"):
            from_table([[0, 1, 2], [1, 2, 0]])

    def test_light_validation_matches_full(self):
        g = cyclic(30)
        full = from_table(g.table, validate="full")
        light = from_table(g.table, validate="light")
        assert full.element_orders == light.element_orders

    def test_light_validation_catches_bad_triple(self):
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(NotAGroup):
            from_table(table, validate="light")

    def test_table_is_read_only(self):
        g = cyclic(4)
        with pytest.raises(ValueError):
            g.table[0, 0] = 1


class TestCenterAndCentralizer:
    def test_center_s3_trivial(self):
        g = symmetric(3)
        assert center(g).elements == (g.identity,)

    def test_center_q8(self):
        g = quaternion8()
        z = center(g)
        assert z.order == 2
        assert all(g.element_orders[e] <= 2 for e in z)

    def test_center_abelian_is_whole_group(self):
        g = cyclic(6)
        assert center(g).order == 6

    def test_centralizer_of_identity_is_group(self):
        g = symmetric(4)
        assert centralizer(g, g.identity).order == g.order

    def test_centralizer_against_scan_oracle(self):
        g = symmetric(3)
        for x in g.elements():
            brute = sorted(h for h in g.elements() if g.mul(h, x) == g.mul(x, h))
            assert list(centralizer(g, x).elements) == brute

    def test_centralizer_transposition_in_s3(self):
        g = symmetric(3)
        t = next(x for x in g.elements() if g.element_orders[x] == 2)
        assert centralizer(g, t).elements == tuple(sorted((g.identity, t)))

    def test_centralizer_of_i_in_q8(self):
        g = quaternion8()
        i = next(x for x in g.elements() if g.element_orders[x] == 4)
        c = centralizer(g, i)
        assert c.order == 4 and i in c

    def test_center_is_intersection_of_centralizers(self):
        for g in (symmetric(4), quaternion8(), dihedral(12)):
            common = set(g.elements())
            for x in g.elements():
                common &= centralizer(g, x).element_set
            assert common == center(g).element_set

    def test_out_of_range_element(self):
        with pytest.raises(BadParameter):
            centralizer(cyclic(3), 7)


class TestGeneratedAndDerived:
    def test_empty_generators(self):
        g = symmetric(3)
        assert generated_subgroup(g, []).elements == (g.identity,)

    def test_three_cycle_generates_a3(self):
        g = symmetric(3)
        c = next(x for x in g.elements() if g.element_orders[x] == 3)
        assert generated_subgroup(g, [c]).order == 3

    def test_transposition_and_cycle_generate_s3(self):
        g = symmetric(3)
        t = next(x for x in g.elements() if g.element_orders[x] == 2)
        c = next(x for x in g.elements() if g.element_orders[x] == 3)
        assert generated_subgroup(g, [t, c]).order == 6

    def test_derived_of_abelian_trivial(self):
        g = cyclic(12)
        assert derived_subgroup(g).elements == (g.identity,)

    def test_derived_s3_is_a3(self):
        g = symmetric(3)
        d = derived_subgroup(g)
        assert d.order == 3
        # oracle: every commutator lands inside
        for a in g.elements():
            for b in g.elements():
                comm = g.mul(g.mul(a, b), g.inv(g.mul(b, a)))
                assert comm in d

    def test_derived_q8_equals_center(self):
        g = quaternion8()
        assert derived_subgroup(g).elements == center(g).elements


class TestNormalityAndQuotient:
    def test_center_always_normal(self):
        for g in (symmetric(4), quaternion8(), dihedral(16)):
            assert is_normal(g, center(g))

    def test_order2_subgroup_of_s3_not_normal(self):
        g = symmetric(3)
        t = next(x for x in g.elements() if g.element_orders[x] == 2)
        assert not is_normal(g, generated_subgroup(g, [t]))

    def test_a3_normal_in_s3(self):
        g = symmetric(3)
        c = next(x for x in g.elements() if g.element_orders[x] == 3)
        assert is_normal(g, generated_subgroup(g, [c]))

    def test_quotient_by_trivial_is_isomorphic(self):
        g = symmetric(3)
        qr = quotient(g, generated_subgroup(g, []))
        assert qr.quotient.order == 6
        assert sorted(qr.quotient.element_orders) == sorted(g.element_orders)

    def test_q8_mod_center_is_klein(self):
        g = quaternion8()
        qr = quotient(g, center(g))
        assert qr.quotient.order == 4
        assert exponent(qr.quotient) == 2

    def test_quotient_nonnormal_rejected(self):
        g = symmetric(3)
        t = next(x for x in g.elements() if g.element_orders[x] == 2)
        with pytest.raises(NotNormal):
            quotient(g, generated_subgroup(g, [t]))

    def test_projection_is_homomorphism(self):
        g = dihedral(12)
        qr = quotient(g, center(g))
        proj, q = qr.projection, qr.quotient
        for a in g.elements():
            for b in g.elements():
                assert proj[g.mul(a, b)] == q.mul(proj[a], proj[b])
        assert set(proj) == set(range(q.order))
        assert q.order * qr.normal_subgroup.order == g.order


class TestSubgroupAsGroup:
    def test_whole_group(self):
        g = symmetric(3)
        h = subgroup_as_group(g, generated_subgroup(g, list(g.elements())))
        assert h.order == 6 and sorted(h.element_orders) == sorted(g.element_orders)

    def test_a3_in_s3_is_c3(self):
        g = symmetric(3)
        c = next(x for x in g.elements() if g.element_orders[x] == 3)
        h = subgroup_as_group(g, generated_subgroup(g, [c]))
        assert isomorphic(h, cyclic(3))

    def test_i_in_q8_is_c4(self):
        g = quaternion8()
        i = next(x for x in g.elements() if g.element_orders[x] == 4)
        h = subgroup_as_group(g, generated_subgroup(g, [i]))
        assert isomorphic(h, cyclic(4))

    def test_order_multiset_preserved(self):
        g = symmetric(4)
        sub = generated_subgroup(g, [next(x for x in g.elements() if g.element_orders[x] == 4)])
        h = subgroup_as_group(g, sub)
        assert sorted(h.element_orders) == sorted(g.element_orders[e] for e in sub)

    def test_unclosed_set_rejected(self):
        g = symmetric(3)
        t = next(x for x in g.elements() if g.element_orders[x] == 2)
        c = next(x for x in g.elements() if g.element_orders[x] == 3)
        with pytest.raises(BadParameter):
            subgroup_as_group(g, Subgroup(g, tuple(sorted({g.identity, t, c}))))


class TestDirectProduct:
    def test_product_with_trivial(self):
        g = symmetric(3)
        p = direct_product(g, from_table([[0]]))
        assert np.array_equal(p.table, g.table)

    def test_s3_x_s3(self):
        p = direct_product(symmetric(3), symmetric(3))
        assert p.order == 36 and center(p).order == 1

    def test_c6_x_a5(self):
        p = direct_product(cyclic(6), alternating(5))
        assert p.order == 360 and center(p).order == 6


class TestRecognizers:
    def test_elementary_abelian(self):
        assert is_elementary_abelian(elementary_abelian(2, 2), 2)
        assert not is_elementary_abelian(cyclic(4), 2)
        assert is_elementary_abelian(from_table([[0]]), 3)
        with pytest.raises(NotPrime):
            is_elementary_abelian(cyclic(4), 4)

    def test_perfect(self):
        assert is_perfect(alternating(5))
        assert not is_perfect(symmetric(4))

    def test_nilpotent(self):
        assert is_nilpotent(dihedral(8))
        assert not is_nilpotent(symmetric(3))
        assert is_nilpotent(quaternion8())

    def test_cyclic_and_exponent(self):
        assert is_cyclic(cyclic(15))
        assert not is_cyclic(elementary_abelian(3, 2))
        assert exponent(quaternion8()) == 4
        assert exponent(symmetric(3)) == 6

    def test_abelian(self):
        assert is_abelian(cyclic(9))
        assert not is_abelian(dihedral(10))


class TestIsomorphic:
    def test_same_object(self):
        g = symmetric(4)
        assert isomorphic(g, g)

    def test_q8_vs_d8(self):
        assert not isomorphic(quaternion8(), dihedral(8))

    def test_q8_quotient_vs_klein(self):
        qr = quotient(quaternion8(), center(quaternion8()))
        assert isomorphic(qr.quotient, elementary_abelian(2, 2))

    def test_different_orders(self):
        assert not isomorphic(cyclic(4), cyclic(5))

    def test_same_order_profile_different_groups(self):
        # C4 x C4 vs C2 x C8 differ already in order multisets
        a = direct_product(cyclic(4), cyclic(4))
        b = direct_product(cyclic(2), cyclic(8))
        assert not isomorphic(a, b)

    def test_symmetric_on_relabelled_copy(self):
        g = alternating(4)
        rng = np.random.default_rng(7)
        perm = rng.permutation(g.order)
        table = np.empty_like(np.asarray(g.table))
        for i in range(g.order):
            for j in range(g.order):
                table[perm[i], perm[j]] = perm[g.mul(i, j)]
        h = from_table(table, name="A4-relabelled")
        assert isomorphic(g, h) and isomorphic(h, g)

    def test_cap_enforced(self):
        big = cyclic(600)
        with pytest.raises(OrderCapExceeded):
            isomorphic(big, big)


class TestNumberTheoryHelpers:
    @pytest.mark.parametrize("n,want", [(12, 3), (42, 7), (128, 2), (97, 97)])
    def test_largest_prime_divisor(self, n, want):
        assert largest_prime_divisor(n) == want

    def test_largest_prime_divisor_undefined(self):
        with pytest.raises(BadParameter):
            largest_prime_divisor(1)

    def test_prime_power(self):
        assert prime_power(8) == (2, 3)
        assert prime_power(81) == (3, 4)
        assert prime_power(12) is None
        assert prime_power(1) is None
        assert prime_power(7) == (7, 1)
