"""Localization model: bases, decomposition, reduction, Chern classes."""

import itertools
import random

import pytest

from qhcube import (
    EquivariantClass,
    NotInSpanError,
    PolyRing,
    Y_RING,
    all_points,
    basis_a,
    basis_b,
    chern_series,
    elementary_symmetric,
    gkm_check,
    quantum_ring,
    y_poly,
)

Y = Y_RING.var("y")


def subsets(n):
    for k in range(n + 1):
        yield from (frozenset(c) for c in itertools.combinations(range(1, n + 1), k))


# -- basis_a -------------------------------------------------------------------


def test_a_empty_is_unit():
    one = basis_a(3, [])
    for p in all_points(3):
        assert one.restrict(p) == Y_RING.one()
    assert one == EquivariantClass.one(3)


def test_a_singleton_values():
    a1 = basis_a(2, [1])
    assert a1.restrict([1]) == -Y
    assert a1.restrict([]) == Y_RING.zero()
    assert a1.restrict([2]) == Y_RING.zero()
    assert a1.restrict([1, 2]) == -Y


def test_a_pair_is_product_of_singletons():
    assert basis_a(2, [1]) * basis_a(2, [2]) == basis_a(2, [1, 2])
    a12 = basis_a(2, [1, 2])
    assert a12.restrict([1, 2]) == Y * Y
    for members in ([], [1], [2]):
        assert a12.restrict(members).is_zero()


def test_triangularity():
    for n in range(1, 5):
        for i_set in subsets(n):
            a = basis_a(n, i_set)
            for j_set in subsets(n):
                if len(j_set) <= len(i_set) and j_set != i_set:
                    assert a.restrict(j_set).is_zero()


# -- basis_b -------------------------------------------------------------------


def test_b_of_singleton_complement():
    for n in range(1, 5):
        for i in range(1, n + 1):
            members = frozenset(range(1, n + 1)) - {i}
            expected = basis_a(n, [i]) + EquivariantClass.y_class(n)
            assert basis_b(n, members) == expected


def test_b_full_set_is_unit():
    assert basis_b(3, [1, 2, 3]) == EquivariantClass.one(3)


def test_b_empty_corner_values():
    b0 = basis_b(2, [])
    assert b0.restrict([]) == Y * Y
    assert b0.restrict([1, 2]).is_zero()


def test_b_closed_form():
    # The product formula collapses to y^(n-|I|) on subsets of I, zero elsewhere.
    for n in range(1, 5):
        for i_set in subsets(n):
            b = basis_b(n, i_set)
            for p in all_points(n):
                if p.members <= i_set:
                    assert b.restrict(p) == y_poly({n - len(i_set): 1})
                else:
                    assert b.restrict(p).is_zero()


def test_b_symmetric_function_expansion():
    # Independent oracle: sigma_{n-k} + y sigma_{n-k-1} + ... + y^{n-k} in the
    # complementary a-variables, restricted pointwise by a_i -> -y or 0.
    for n in range(1, 5):
        ring = PolyRing(("y",) + tuple(f"a{i}" for i in range(1, n + 1)), (2,) * (n + 1))
        y = ring.var("y")
        for i_set in subsets(n):
            comp = sorted(frozenset(range(1, n + 1)) - i_set)
            names = [f"a{i}" for i in comp]
            expansion = ring.zero()
            for m in range(len(comp) + 1):
                expansion = expansion + y**m * elementary_symmetric(
                    ring, len(comp) - m, names
                )
            b = basis_b(n, i_set)
            for p in all_points(n):
                assignment = {"y": Y}
                for i in range(1, n + 1):
                    assignment[f"a{i}"] = -Y if i in p.members else Y_RING.zero()
                assert expansion.substitute(assignment) == b.restrict(p)


# -- multiply / ring relation ----------------------------------------------------


def test_multiply_unit():
    rng = random.Random(42)
    from helpers import random_gkm_class

    c = random_gkm_class(rng, 3)
    assert c * EquivariantClass.one(3) == c


def test_ring_relation():
    for n in range(1, 6):
        y = EquivariantClass.y_class(n)
        for i in range(1, n + 1):
            a_i = basis_a(n, [i])
            assert (a_i * (a_i + y)).is_zero()


def test_multiply_dimension_mismatch():
    with pytest.raises(ValueError):
        basis_a(2, [1]) * basis_a(3, [1])


# -- gkm_check -------------------------------------------------------------------


def test_gkm_check_basis_classes():
    for n in range(1, 5):
        for i_set in subsets(n):
            assert basis_a(n, i_set).satisfies_gkm()
            assert basis_b(n, i_set).satisfies_gkm()


def test_gkm_check_delta_fails():
    delta = EquivariantClass(2, {frozenset([1]): 1})
    assert not delta.satisfies_gkm()
    assert not gkm_check(2, {frozenset([1]): Y_RING.one()})


def test_gkm_check_zero_table():
    assert gkm_check(3, {})


# -- decompose / reduce ------------------------------------------------------------


def test_decompose_basis_element():
    coeffs = basis_a(3, [1, 2]).decompose()
    for point, lam in coeffs.items():
        if point.members == frozenset([1, 2]):
            assert lam == Y_RING.one()
        else:
            assert lam.is_zero()


def test_decompose_b_empty():
    # Frozen from the symmetric-function expansion with k = 0.
    coeffs = {
        p.members: lam for p, lam in basis_b(2, []).decompose().items()
    }
    assert coeffs[frozenset()] == Y * Y
    assert coeffs[frozenset([1])] == Y
    assert coeffs[frozenset([2])] == Y
    assert coeffs[frozenset([1, 2])] == Y_RING.one()


def test_decompose_delta_not_in_span():
    delta = EquivariantClass(2, {frozenset([1]): 1})
    with pytest.raises(NotInSpanError):
        delta.decompose()


def test_decompose_round_trip():
    rng = random.Random(31_415)
    from helpers import random_gkm_class

    for _ in range(100):
        n = rng.randint(1, 4)
        cls = random_gkm_class(rng, n)
        coeffs = cls.decompose()
        rebuilt = EquivariantClass.zero(n)
        for point, lam in coeffs.items():
            rebuilt = rebuilt + basis_a(n, point.members) * lam
        assert rebuilt == cls


def test_reduce_basis_a():
    ring = quantum_ring(3)
    assert basis_a(3, [1, 3]).reduce_to_ordinary() == ring.x_set([1, 3])


def test_reduce_basis_b_duality():
    for n in range(1, 6):
        ring = quantum_ring(n)
        for i_set in subsets(n):
            comp = frozenset(range(1, n + 1)) - i_set
            assert basis_b(n, i_set).reduce_to_ordinary() == ring.x_set(comp)


def test_reduce_kills_y_multiples():
    rng = random.Random(7)
    from helpers import random_gkm_class

    for _ in range(20):
        cls = random_gkm_class(rng, 3)
        scaled = cls * Y
        assert scaled.reduce_to_ordinary() == quantum_ring(3).zero()


# -- chern classes -------------------------------------------------------------------


def test_c1_reduces_to_twice_sum():
    for n in range(1, 5):
        ring = quantum_ring(n)
        expected = ring.zero()
        for i in range(1, n + 1):
            expected = expected + 2 * ring.x(i)
        assert chern_series(n)[0].reduce_to_ordinary() == expected


def test_c1_restriction_n1():
    c1 = chern_series(1)[0]
    assert c1.restrict([]) == -Y


def test_cn_at_minimum():
    for n in range(1, 5):
        cn = chern_series(n)[n - 1]
        assert cn.restrict([]) == y_poly({n: (-1) ** n})


def test_chern_classes_gkm_and_degree():
    for n in range(1, 5):
        for k, c in enumerate(chern_series(n), start=1):
            assert c.satisfies_gkm()
            assert c.graded_degree() == 2 * k


# -- json export ------------------------------------------------------------------------


def test_json_key_order():
    keys = list(basis_b(2, []).to_json_dict())
    assert keys == ["{}", "{1}", "{2}", "{1,2}"]
