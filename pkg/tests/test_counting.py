import math
from fractions import Fraction

import pytest

from conftest import group
from massform.counting import (build_counting, perm_conductor, signed_conductor, sum_compose,
                               wreath_compose, zero_conductor)
from massform.errors import StructureError
from massform.expr import compatible_countings
from massform.perm import (Permutation, cycle_product, from_cycles, identity, product_element,
                           symmetric_group, wreath_element, wreath_parts)
from massform.reference import catalog

import oracle

s, e = Permutation([1, 0]), identity(2)


def test_perm_conductor_examples():
    S4 = symmetric_group(4)
    c = perm_conductor(S4)
    assert c(identity(4)) == 0
    assert c(from_cycles(4, [(0, 1, 2, 3)])) == 3
    assert c(from_cycles(4, [(0, 1), (2, 3)])) == 2


def test_zero_conductor_examples():
    S4 = symmetric_group(4)
    z = zero_conductor(S4)
    assert z(identity(4)) == 0
    assert z(from_cycles(4, [(0, 1, 2, 3)])) == 0
    assert set(z.values) == {0}


def test_wreath_compose_examples():
    D4 = group("D4")
    A, B = D4.factors
    c = wreath_compose(perm_conductor(A), perm_conductor(B), D4)
    assert c(from_cycles(4, [(0, 2, 1, 3)])) == 2
    assert c(wreath_element(A, B, e, [s, e])) == 1
    assert c(wreath_element(A, B, s, [e, e])) == 1


def test_wreath_compose_structure_mismatch():
    S4 = symmetric_group(4)
    S2 = symmetric_group(2)
    with pytest.raises(StructureError):
        wreath_compose(perm_conductor(S2), perm_conductor(S2), S4)
    D4 = group("D4")
    with pytest.raises(StructureError):
        # factors must be the very groups D4 was built from
        wreath_compose(perm_conductor(S2), perm_conductor(S2), D4)


def test_sum_compose_examples():
    G2 = group("G2")
    L, R = G2.factors
    c = sum_compose(perm_conductor(L), perm_conductor(R), G2)
    three = from_cycles(3, [(0, 1, 2)])
    assert c(G2.identity) == 0
    assert c(product_element(L, R, s, three)) == 3
    assert c(product_element(L, R, s, identity(3))) == 1


def test_signed_conductor_examples():
    D4 = group("D4")
    A, B = D4.factors
    c = signed_conductor(D4)
    assert c(D4.identity) == 0
    assert c(wreath_element(A, B, e, [s, s])) == 2
    assert c(wreath_element(A, B, s, [e, e])) == 1
    with pytest.raises(StructureError):
        signed_conductor(group("S3wrS2"))


def _all_countings(G, expr):
    return [build_counting(c, G) for c in compatible_countings(expr)]


def test_counting_invariants(catalog_group):
    name, G = catalog_group
    expr = next(x for x in catalog() if x.name == name).expr
    for c in _all_countings(G, expr):
        for g in G.elements:
            v = c(g)
            # table lookup (class value) equals the element formula: conjugation invariance
            assert c.formula(g) == v
            n = g.order()
            for k in range(1, n):
                if math.gcd(k, n) == 1:
                    assert c(g ** k) == v
        assert c(G.identity) == 0


def test_perm_conductor_zero_only_at_identity(catalog_group):
    _, G = catalog_group
    c = perm_conductor(G)
    assert all((c(g) == 0) == g.is_identity() for g in G.elements)
    assert all(c(g) == oracle.perm_conductor(tuple(g)) for g in G.elements)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_signed_equals_wreath_of_perms(n):
    W = group({2: "D4", 3: "B3", 4: "B4"}[n])
    A, B = W.factors
    signed = signed_conductor(W)
    wreath = wreath_compose(perm_conductor(A), perm_conductor(B), W)
    assert all(signed.formula(g) == wreath.formula(g) for g in W.elements)


@pytest.mark.parametrize("name", ["D4", "B3", "S3wrS2", "S2wrD4"])
def test_per_point_form_agrees(name):
    # cB(b) + sum over all blocks j of cA(cycle product at j) / (b-cycle length of j)
    W = group(name)
    A, B = W.factors
    cA, cB = perm_conductor(A), perm_conductor(B)
    c = wreath_compose(cA, cB, W)
    for g in W.elements:
        b, _ = wreath_parts(W, g)
        length = {j: len(cyc) for cyc in b.cycles() for j in cyc}
        per_point = cB(b) + sum(Fraction(cA(cycle_product(W, g, j)), length[j])
                                for j in range(B.degree))
        assert per_point == c(g)
