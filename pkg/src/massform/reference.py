"""Closed-form reference masses and the built-in group catalog."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .expr import parse_group
from .poly import MassPoly


@lru_cache(maxsize=None)
def partition_p(k, m):
    """Number of partitions of k into at most m parts."""
    if k == 0:
        return 1
    if k < 0 or m == 0:
        return 0
    return partition_p(k, m - 1) + partition_p(k - m, m)


def bhargava_rhs(n):
    """sum_{k<n} p(k, n-k) x^k: the S_n mass per group element (not scaled by n!)."""
    if n < 1:
        raise ValueError("n must be positive")
    return MassPoly(partition_p(k, n - k) for k in range(n))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    text: str
    order: int
    rational: bool
    reference_polys: dict = field(default_factory=dict)  # counting text -> coefficients
    notes: tuple = ()

    @property
    def expr(self):
        return parse_group(self.text)

    def to_dict(self):
        return {"name": self.name, "expr": self.text, "order": self.order,
                "rational": self.rational,
                "reference_polys": {k: list(v) for k, v in sorted(self.reference_polys.items())},
                "notes": list(self.notes)}


_D4_WILD = ("q = 2 (wild): the tame polynomial for 'perm' gives 17 at x = 1/2, while the "
            "true mass over Q_2 is 121/8; wild masses are outside this engine")

_CATALOG = (
    CatalogEntry("S1", "S1", 1, True, {"perm": (1,)}),
    CatalogEntry("S2", "S2", 2, True, {"perm": (2, 2)}),
    CatalogEntry("S3", "S3", 6, True, {"perm": (6, 6, 6)}),
    CatalogEntry("S4", "S4", 24, True, {"perm": (24, 24, 48, 24)}),
    CatalogEntry("S5", "S5", 120, True, {"perm": (120, 120, 240, 240, 120)}),
    CatalogEntry("D4", "wr(S2,S2)", 8, True,
                 {"wreath(perm,perm)": (8, 16, 16), "perm": (8, 8, 16, 8)}, (_D4_WILD,)),
    CatalogEntry("B3", "wr(S2,S3)", 48, True),
    CatalogEntry("B4", "wr(S2,S4)", 384, True),
    CatalogEntry("S3wrS2", "wr(S3,S2)", 72, True),
    CatalogEntry("S2wrD4", "wr(S2,wr(S2,S2))", 128, True),
    CatalogEntry("V4", "x(S2,S2)", 4, True),
    CatalogEntry("G2", "x(S2,S3)", 12, True, {"sum(perm,perm)": (12, 24, 24, 12)}),
    CatalogEntry("G18", "custom(6; (1 2 3), (4 5 6), (2 3)(5 6))", 18, True),
    CatalogEntry("C3", "custom(3; (1 2 3))", 3, False),
    CatalogEntry("C4", "custom(4; (1 2 3 4))", 4, False),
    CatalogEntry("A4", "custom(4; (1 2 3), (2 3 4))", 12, False),
)


def catalog():
    return list(_CATALOG)


def catalog_entry(name):
    for entry in _CATALOG:
        if entry.name == name:
            return entry
    return None


def entry_for_expr(expr):
    for entry in _CATALOG:
        if entry.expr == expr:
            return entry
    return None
