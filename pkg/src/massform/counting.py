"""Tame counting functions.

In the tame setting a counting function only sees the inertia generator g of
a pair (g, h), so it is a class function on the group.  Each function keeps
its values as a per-class table (for serialization) plus the per-element
formula it was built from (for auditing invariance).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import StructureError
from .nodes import PermCount, SignedCount, SumCount, WreathCount, ZeroCount
from .perm import PermGroup, cycle_product, product_parts, wreath_parts


@dataclass(frozen=True, eq=False)
class TameCountingFunction:
    group: PermGroup
    values: tuple  # indexed by conjugacy class
    name: str
    formula: Callable = field(repr=False)

    def __call__(self, g):
        return self.values[self.group.class_index(g)]

    value = __call__

    def table(self):
        """``{class representative (cycle notation): value}``."""
        return {str(c.representative): v for c, v in zip(self.group.classes, self.values)}

    def vanishes_only_at_identity(self):
        return all((v == 0) == (k == 0) for k, v in enumerate(self.values))


def _tabulate(G, formula, name):
    values = tuple(formula(c.representative) for c in G.classes)
    return TameCountingFunction(G, values, name, formula)


def perm_conductor(G):
    """Degree minus number of <g>-orbits: the tame discriminant exponent."""
    return _tabulate(G, lambda g: G.degree - len(g.cycles()), "perm")


def zero_conductor(G):
    return _tabulate(G, lambda g: 0, "zero")


def wreath_compose(cA, cB, W):
    """Counting function on W = A wr B from ones on A and on B.

    value(b; (a_j)) = cB(b) + sum over b-cycles of cA(cycle product at the
    cycle's smallest block).
    """
    if W.kind != "wr" or W.factors is None:
        raise StructureError(f"{W!r} is not a wreath product")
    A, B = W.factors
    if cA.group is not A or cB.group is not B:
        raise StructureError("counting functions do not live on the wreath factors")

    def formula(g):
        b, _ = wreath_parts(W, g)
        return cB(b) + sum(cA(cycle_product(W, g, cyc[0])) for cyc in b.cycles())

    return _tabulate(W, formula, f"wreath({cA.name},{cB.name})")


def sum_compose(c1, c2, P):
    if P.kind != "prod" or P.factors is None:
        raise StructureError(f"{P!r} is not a direct product")
    G, H = P.factors
    if c1.group is not G or c2.group is not H:
        raise StructureError("counting functions do not live on the product factors")

    def formula(g):
        g1, g2 = product_parts(P, g)
        return c1(g1) + c2(g2)

    return _tabulate(P, formula, f"sum({c1.name},{c2.name})")


def signed_conductor(W):
    """Tame conductor of the signed permutation representation of S2 wr B.

    n minus the number of base cycles whose cycle product is trivial.
    """
    if W.kind != "wr" or W.factors is None or W.factors[0].order != 2 \
            or W.factors[0].degree != 2:
        raise StructureError(f"{W!r} is not of the form S2 wr B")
    n = W.factors[1].degree

    def formula(g):
        b, _ = wreath_parts(W, g)
        trivial = sum(1 for cyc in b.cycles()
                      if cycle_product(W, g, cyc[0]).is_identity())
        return n - trivial

    return _tabulate(W, formula, "signed")


def build_counting(c, G):
    """Build the counting function described by expression ``c`` on group ``G``."""
    if isinstance(c, PermCount):
        return perm_conductor(G)
    if isinstance(c, ZeroCount):
        return zero_conductor(G)
    if isinstance(c, SignedCount):
        return signed_conductor(G)
    if isinstance(c, WreathCount):
        if G.kind != "wr":
            raise StructureError(f"wreath(...) needs a wreath product, got {G!r}")
        A, B = G.factors
        return wreath_compose(build_counting(c.inner, A), build_counting(c.outer, B), G)
    if isinstance(c, SumCount):
        if G.kind != "prod":
            raise StructureError(f"sum(...) needs a direct product, got {G!r}")
        L, R = G.factors
        return sum_compose(build_counting(c.left, L), build_counting(c.right, R), G)
    raise TypeError(f"not a counting expression: {c!r}")
