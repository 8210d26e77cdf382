"""Recursive-descent parser for the group and counting-function DSL.

Group expressions::

    expr := S<n> | wr(expr, expr) | x(expr, expr) | custom(<n>; <gens>)
    gens := gen ("," gen)*        gen := ("(" <points> ")")+

Custom cycles are written 1-based, e.g. ``custom(6; (1 2 3), (4 5 6), (2 3)(5 6))``.

Counting expressions::

    c := perm | zero | signed | wreath(c, c) | sum(c, c)

Whitespace between tokens is ignored.
"""
from __future__ import annotations

from .errors import ParseError
from .nodes import (Custom, PermCount, Prod, SignedCount, SumCount, Sym,
                    WreathCount, Wr, ZeroCount)
from .perm import direct_product, from_cycles, generate, symmetric_group, wreath_product


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def accept(self, ch):
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def word(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected a name, found {found}", start)
        return self.text[start:self.pos], start

    def number(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected a number, found {found}", start)
        return int(self.text[start:self.pos]), start

    def end(self):
        if self.peek():
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)


def parse_group(text):
    sc = _Scanner(text)
    node = _group(sc)
    sc.end()
    return node


def _group(sc):
    name, at = sc.word()
    if name == "S":
        n, nat = sc.number()
        if n < 1:
            raise ParseError("symmetric group needs n >= 1", nat)
        return Sym(n)
    if name in ("wr", "x"):
        sc.expect("(")
        left = _group(sc)
        sc.expect(",")
        right = _group(sc)
        sc.expect(")")
        return Wr(left, right) if name == "wr" else Prod(left, right)
    if name == "custom":
        return _custom(sc)
    raise ParseError(f"unknown group constructor {name!r}", at)


def _custom(sc):
    sc.expect("(")
    degree, dat = sc.number()
    if degree < 1:
        raise ParseError("custom group needs degree >= 1", dat)
    sc.expect(";")
    gens = []
    if sc.peek() == "(":
        gens.append(_generator(sc, degree))
        while sc.accept(","):
            gens.append(_generator(sc, degree))
    sc.expect(")")
    return Custom(degree, tuple(gens))


def _generator(sc, degree):
    cycles = []
    while sc.peek() == "(":
        start = sc.pos
        sc.expect("(")
        pts = []
        while sc.peek().isdigit():
            p, pat = sc.number()
            if not 1 <= p <= degree:
                raise ParseError(f"point {p} outside 1..{degree}", pat)
            pts.append(p)
        sc.expect(")")
        if len(set(pts)) != len(pts):
            raise ParseError("repeated point in cycle", start)
        cycles.append(tuple(pts))
    if not cycles:
        raise ParseError("expected a cycle", sc.pos)
    return tuple(cycles)


_LEAVES = {"perm": PermCount(), "zero": ZeroCount(), "signed": SignedCount()}


def parse_counting(text):
    sc = _Scanner(text)
    node = _counting(sc)
    sc.end()
    return node


def _counting(sc):
    name, at = sc.word()
    if name in _LEAVES:
        return _LEAVES[name]
    if name in ("wreath", "sum"):
        sc.expect("(")
        left = _counting(sc)
        sc.expect(",")
        right = _counting(sc)
        sc.expect(")")
        return WreathCount(left, right) if name == "wreath" else SumCount(left, right)
    raise ParseError(f"unknown counting function {name!r}", at)


def format_group(e):
    return str(e)


def format_counting(c):
    return str(c)


def build_group(e, max_order=None):
    """Build the permutation group an expression describes, tagged with ``e``."""
    if isinstance(e, Sym):
        G = symmetric_group(e.n, max_order)
    elif isinstance(e, Wr):
        G = wreath_product(build_group(e.left, max_order),
                           build_group(e.right, max_order), max_order)
    elif isinstance(e, Prod):
        G = direct_product(build_group(e.left, max_order),
                           build_group(e.right, max_order), max_order)
    elif isinstance(e, Custom):
        gens = [from_cycles(e.degree, g, one_based=True) for g in e.generators]
        G = generate(e.degree, gens, max_order, structure=e)
    else:
        raise TypeError(f"not a group expression: {e!r}")
    G.structure = e
    return G


def check_compat(g, c):
    """Whether counting expression ``c`` can be built on the group ``g`` describes."""
    if isinstance(c, (PermCount, ZeroCount)):
        return True
    if isinstance(c, SignedCount):
        return isinstance(g, Wr) and g.left == Sym(2)
    if isinstance(c, WreathCount):
        return (isinstance(g, Wr) and check_compat(g.left, c.inner)
                and check_compat(g.right, c.outer))
    if isinstance(c, SumCount):
        return (isinstance(g, Prod) and check_compat(g.left, c.left)
                and check_compat(g.right, c.right))
    return False


def compatible_countings(g):
    """Every counting expression that structurally matches ``g``."""
    out = [PermCount(), ZeroCount()]
    if isinstance(g, Wr):
        if g.left == Sym(2):
            out.append(SignedCount())
        out += [WreathCount(a, b) for a in compatible_countings(g.left)
                for b in compatible_countings(g.right)]
    elif isinstance(g, Prod):
        out += [SumCount(a, b) for a in compatible_countings(g.left)
                for b in compatible_countings(g.right)]
    return out
