"""Permutations on {0..n-1} and explicitly enumerated permutation groups.

Groups are small (a few thousand elements at most), so every group keeps its
full element list, its conjugacy classes and a conjugating transversal for
each class.  Nothing here uses stabilizer chains.
"""
from __future__ import annotations

import itertools
import math
import os
from collections import deque
from dataclasses import dataclass

from .errors import NotInGroupError, SizeCapError, StructureError
from .nodes import Custom, Prod, Sym, Wr

DEFAULT_MAX_ORDER = 20000


def default_max_order():
    value = os.environ.get("MASSFORM_MAX_ORDER")
    return int(value) if value else DEFAULT_MAX_ORDER


class Permutation(tuple):
    """A permutation stored as its image tuple: ``p[i]`` is the image of ``i``.

    Multiplication is functional composition, ``(p * q)[i] == p[q[i]]``.
    """

    __slots__ = ()

    def __new__(cls, images):
        t = tuple.__new__(cls, images)
        if not t or sorted(t) != list(range(len(t))):
            raise ValueError(f"not a permutation of 0..n-1: {tuple(t)}")
        return t

    @property
    def degree(self):
        return len(self)

    @property
    def images(self):
        return tuple(self)

    def __mul__(self, other):
        return compose(self, other)

    def __rmul__(self, other):
        return NotImplemented

    def __pow__(self, k):
        n = len(self)
        out = list(range(n))
        for cyc in self.cycles(include_fixed=False):
            m = len(cyc)
            s = k % m
            for idx, x in enumerate(cyc):
                out[x] = cyc[(idx + s) % m]
        return _mk(out)

    def inverse(self):
        return inverse(self)

    def is_identity(self):
        return all(i == x for i, x in enumerate(self))

    def cycles(self, include_fixed=True):
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self[x]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles()))

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")"
                       for c in self.cycles(include_fixed=False)) or "()"

    def __repr__(self):
        return f"Permutation({list(self)})"


def _mk(images):
    return tuple.__new__(Permutation, images)


def identity(degree):
    return _mk(range(degree))


def compose(p, q):
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return _mk([p[i] for i in q])


def inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return _mk(out)


def conjugate(x, g):
    """x g x^-1."""
    xi = inverse(x)
    return _mk([x[g[i]] for i in xi])


def from_cycles(degree, cycles, one_based=False):
    """Build a permutation from cycles; the rightmost cycle is applied first."""
    shift = 1 if one_based else 0
    result = identity(degree)
    for cyc in reversed(list(cycles)):
        pts = [p - shift for p in cyc]
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle {tuple(cyc)}")
        img = list(range(degree))
        for k, p in enumerate(pts):
            if not 0 <= p < degree:
                raise ValueError(f"point {p + shift} out of range for degree {degree}")
            img[p] = pts[(k + 1) % len(pts)]
        result = compose(_mk(img), result)
    return result


def orbits(perms, degree):
    """Orbit partition of ``range(degree)`` under the group generated by ``perms``.

    Orbits are sorted lists, listed by smallest point.
    """
    parent = list(range(degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        if len(p) != degree:
            raise ValueError("degree mismatch")
        for i, x in enumerate(p):
            ri, rx = find(i), find(x)
            if ri != rx:
                if ri < rx:
                    parent[rx] = ri
                else:
                    parent[ri] = rx
    groups = {}
    for i in range(degree):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda o: o[0])


def closure(generators, degree, max_order=None):
    """All elements of the group generated by ``generators`` (breadth first)."""
    cap = default_max_order() if max_order is None else max_order
    e = identity(degree)
    seen = {e}
    queue = deque([e])
    gens = list(generators)
    while queue:
        x = queue.popleft()
        for s in gens:
            y = _mk([s[i] for i in x])
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise SizeCapError(f"group order exceeds cap {cap}")
                queue.append(y)
    return seen


@dataclass(frozen=True)
class ConjClass:
    representative: Permutation
    size: int
    members: tuple  # indices into the group's element list


class PermGroup:
    """A finite permutation group with all elements enumerated.

    ``kind`` is one of ``"sym"``, ``"wr"``, ``"prod"`` or ``"custom"``; for
    ``"wr"`` and ``"prod"`` groups ``factors`` holds the two factor groups
    (inner/outer for wreath products, left/right for direct products).
    """

    def __init__(self, degree, generators, elements, kind="custom",
                 factors=None, structure=None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self.kind = kind
        self.factors = factors
        self.structure = structure
        self.index = {g: i for i, g in enumerate(self.elements)}
        self._centralizers = {}
        self._cache = {}
        self._compute_classes()

    def __repr__(self):
        tag = self.structure if self.structure is not None else self.kind
        return f"<PermGroup {tag} order={self.order} degree={self.degree}>"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.index

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return self.elements[0]

    def _compute_classes(self):
        n = len(self.elements)
        class_of = [-1] * n
        conj = [None] * n
        classes = []
        for start in range(n):
            if class_of[start] >= 0:
                continue
            k = len(classes)
            rep = self.elements[start]
            class_of[start] = k
            conj[start] = identity(self.degree)
            members = [start]
            queue = deque([start])
            while queue:
                i = queue.popleft()
                m, t = self.elements[i], conj[i]
                for s in self.generators:
                    y = self.index[conjugate(s, m)]
                    if class_of[y] < 0:
                        class_of[y] = k
                        conj[y] = compose(s, t)
                        members.append(y)
                        queue.append(y)
            classes.append(ConjClass(rep, len(members), tuple(sorted(members))))
        self.classes = classes
        self._class_of = class_of
        self._conjugator = conj
        self.exponent = math.lcm(*(c.representative.order() for c in classes))

    def _idx(self, g):
        try:
            return self.index[g]
        except KeyError:
            raise NotInGroupError(f"{g} is not an element of {self!r}") from None

    def class_index(self, g):
        return self._class_of[self._idx(g)]

    def class_of(self, g):
        return self.classes[self.class_index(g)]

    def conjugator(self, g):
        """Some t with t * rep * t^-1 == g, rep the representative of g's class."""
        return self._conjugator[self._idx(g)]

    def centralizer(self, g):
        self._idx(g)
        cached = self._centralizers.get(g)
        if cached is None:
            cached = [x for x in self.elements if compose(x, g) == compose(g, x)]
            self._centralizers[g] = cached
        return cached

    def centralizer_order(self, g):
        self._idx(g)
        return sum(1 for x in self.elements if compose(x, g) == compose(g, x))

    def is_conjugate(self, g, h):
        return self.class_index(g) == self.class_index(h)


def conjugacy_classes(G):
    return G.classes


def is_conjugate(G, g, h):
    return G.is_conjugate(g, h)


def centralizer_order(G, g):
    return G.centralizer_order(g)


def element_order(g):
    return g.order()


def generate(degree, generators, max_order=None, structure=None):
    gens = []
    for g in generators:
        p = g if isinstance(g, Permutation) else Permutation(g)
        if len(p) != degree:
            raise ValueError(f"generator {p} does not act on {degree} points")
        gens.append(p)
    elements = closure(gens, degree, max_order)
    if structure is None:
        structure = Custom(degree, tuple(
            tuple(tuple(x + 1 for x in c) for c in g.cycles(include_fixed=False))
            for g in gens))
    return PermGroup(degree, gens, elements, kind="custom", structure=structure)


def symmetric_group(n, max_order=None):
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    cap = default_max_order() if max_order is None else max_order
    if math.factorial(n) > cap:
        raise SizeCapError(f"|S{n}| = {math.factorial(n)} exceeds cap {cap}")
    gens = []
    if n >= 2:
        gens.append(from_cycles(n, [(0, 1)]))
        gens.append(_mk(list(range(1, n)) + [0]))
    elements = [_mk(p) for p in itertools.permutations(range(n))]
    return PermGroup(n, gens, elements, kind="sym", structure=Sym(n))


def wreath_element(A, B, b, comps):
    """The flattened permutation (b; (a_j)): point (j, x) goes to (b(j), a_j(x))."""
    na = A.degree
    img = [0] * (na * B.degree)
    for j, a in enumerate(comps):
        base = b[j] * na
        off = j * na
        for x in range(na):
            img[off + x] = base + a[x]
    return _mk(img)


def wreath_parts(W, g):
    """Split a wreath element into its base permutation and block components."""
    A, B = _wreath_factors(W)
    na = A.degree
    b = _mk([g[j * na] // na for j in range(B.degree)])
    comps = [_mk([g[j * na + x] % na for x in range(na)]) for j in range(B.degree)]
    return b, comps


def project(W, g):
    A, B = _wreath_factors(W)
    na = A.degree
    return _mk([g[j * na] // na for j in range(B.degree)])


def component(W, g, j):
    """Action of g on block j, read as a permutation of the inner set."""
    A, _ = _wreath_factors(W)
    na = A.degree
    return _mk([g[j * na + x] % na for x in range(na)])


def _wreath_factors(W):
    if W.kind != "wr" or W.factors is None:
        raise StructureError(f"{W!r} carries no wreath structure")
    return W.factors


def wreath_product(A, B, max_order=None):
    cap = default_max_order() if max_order is None else max_order
    order = A.order ** B.degree * B.order
    if order > cap:
        raise SizeCapError(f"|A wr B| = {order} exceeds cap {cap}")
    ea, eb = A.identity, B.identity
    nb = B.degree
    gens = [wreath_element(A, B, b, [ea] * nb) for b in B.generators]
    for a in A.generators:
        for j in range(nb):
            comps = [ea] * nb
            comps[j] = a
            gens.append(wreath_element(A, B, eb, comps))
    elements = [wreath_element(A, B, b, comps)
                for b in B.elements
                for comps in itertools.product(A.elements, repeat=nb)]
    structure = None
    if A.structure is not None and B.structure is not None:
        structure = Wr(A.structure, B.structure)
    return PermGroup(A.degree * nb, gens, elements, kind="wr",
                     factors=(A, B), structure=structure)


def product_element(G, H, g, h):
    n = G.degree
    return _mk(list(g) + [n + x for x in h])


def product_parts(P, g):
    if P.kind != "prod" or P.factors is None:
        raise StructureError(f"{P!r} carries no direct-product structure")
    n = P.factors[0].degree
    return _mk(g[:n]), _mk([x - n for x in g[n:]])


def direct_product(G, H, max_order=None):
    cap = default_max_order() if max_order is None else max_order
    if G.order * H.order > cap:
        raise SizeCapError(f"|G x H| = {G.order * H.order} exceeds cap {cap}")
    gens = [product_element(G, H, g, H.identity) for g in G.generators]
    gens += [product_element(G, H, G.identity, h) for h in H.generators]
    elements = [product_element(G, H, g, h) for g in G.elements for h in H.elements]
    structure = None
    if G.structure is not None and H.structure is not None:
        structure = Prod(G.structure, H.structure)
    return PermGroup(G.degree + H.degree, gens, elements, kind="prod",
                     factors=(G, H), structure=structure)


def cycle_product(W, g, j):
    """Product of the block components of g along the base cycle through j.

    With g = (b; (a_k)) and e the length of the b-cycle through j this is
    a_{b^(e-1)(j)} * ... * a_{b(j)} * a_j, i.e. the action of g^e on block j.
    """
    b, comps = wreath_parts(W, g)
    result = comps[j]
    k = b[j]
    while k != j:
        result = compose(comps[k], result)
        k = b[k]
    return result
