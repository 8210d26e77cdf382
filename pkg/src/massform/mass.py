"""Tame masses by enumeration of Galois pairs.

For a residue field size q prime to |G|, tame representations of the
absolute Galois group into G correspond to pairs (g, h) with
h g h^-1 = g^q: g is the image of a tame inertia generator and h of a
Frobenius lift.  Everything here depends on q only through its residue a
mod |G| (in fact mod the exponent of G), and masses are polynomials in
x = 1/q.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidPairError, InvalidResidueError, StructureError
from .perm import (closure, component, compose, conjugate, cycle_product, identity,
                   orbits, product_parts, project)
from .poly import MassPoly
from .ramtype import RamType, WreathType, product_type_key


def invertible_residues(m):
    return [a for a in range(1, m + 1) if math.gcd(a, m) == 1]


def _reduce(G, a):
    if math.gcd(a, G.order) != 1:
        raise InvalidResidueError(f"residue {a} is not invertible mod |G| = {G.order}")
    return a % G.exponent


def _check_counting(G, c):
    if c.group is not G:
        raise StructureError("counting function belongs to a different group")


def _rep_solutions(G, k, ar):
    """All h with h r h^-1 = r^a for the representative r of class k."""
    cache = G._cache.setdefault("solutions", {})
    key = (k, ar)
    if key not in cache:
        rep = G.classes[k].representative
        target = rep ** ar
        if G.class_index(target) != k:
            cache[key] = []
        else:
            h0 = G.conjugator(target)
            cache[key] = [compose(h0, z) for z in G.centralizer(rep)]
    return cache[key]


def frobenius_solutions(G, g, a):
    """All h in G with h g h^-1 = g^a, sorted.

    The set is empty or a coset of the centralizer of g.
    """
    ar = _reduce(G, a)
    k = G.class_index(g)
    t = G.conjugator(g)
    return sorted(conjugate(t, h) for h in _rep_solutions(G, k, ar))


def rep_pairs(G, a):
    """Yield ``(class index, g, h)`` for every pair with g a class representative.

    Each yielded pair stands for ``G.classes[k].size`` pairs, its conjugates.
    """
    ar = _reduce(G, a)
    for k, cls in enumerate(G.classes):
        for h in _rep_solutions(G, k, ar):
            yield k, cls.representative, h


def _cyclic_powers(g):
    out = [identity(len(g))]
    x = g
    while not x.is_identity():
        out.append(x)
        x = compose(g, x)
    return out


def _check_pair(g, h):
    target = conjugate(h, g)
    if target not in set(_cyclic_powers(g)):
        raise InvalidPairError(f"h g h^-1 is not a power of g for g={g}, h={h}")


def _type_of(galois_gens, inertia, degree):
    cyc_len = [0] * degree
    for cyc in inertia.cycles():
        for x in cyc:
            cyc_len[x] = len(cyc)
    terms = []
    for orb in orbits(list(galois_gens) + [inertia], degree):
        e = cyc_len[orb[0]]
        terms.append((e, len(orb) // e))
    return RamType.of(terms)


def ram_type_of_pair(G, g, h):
    """Type of the pair: Galois orbits are <g,h>-orbits, inertia orbits <g>-orbits."""
    G.class_index(g)
    G.class_index(h)
    _check_pair(g, h)
    return _type_of([h], g, G.degree)


def pair_image(g, h):
    """The subgroup <g, h>; uses that <g> is normal in it."""
    gp = _cyclic_powers(g)
    gs = set(gp)
    elems = set()
    hm = identity(len(g))
    while True:
        elems.update(compose(hm, x) for x in gp)
        hm = compose(h, hm)
        if hm in gs:
            return frozenset(elems)


def wreath_type_of_pair(W, g, h):
    """Wreath type of the pair (g, h) in W = A wr B.

    For each <g,h>-orbit on blocks with smallest block i, the component
    Galois image is the action on block i of the block stabilizer in <g,h>,
    and the component inertia image is generated by the cycle product of g
    at i.
    """
    if W.kind != "wr":
        raise StructureError(f"{W!r} is not a wreath product")
    A, B = W.factors
    W.class_index(g)
    W.class_index(h)
    _check_pair(g, h)
    gb, hb = project(W, g), project(W, h)
    image = pair_image(g, h)
    base_len = {x: len(c) for c in gb.cycles() for x in c}
    entries = []
    for orb in orbits([gb, hb], B.degree):
        i = orb[0]
        e = base_len[i]
        f = len(orb) // e
        na = A.degree
        stab = {component(W, s, i) for s in image if s[i * na] // na == i}
        sub = _type_of(stab, cycle_product(W, g, i), na)
        entries.append((e, f, sub))
    return WreathType.of(entries)


def _accumulate(G, c, a, keyfunc):
    _check_counting(G, c)
    out = defaultdict(MassPoly)
    for k, g, h in rep_pairs(G, a):
        out[keyfunc(g, h)] += MassPoly.monomial(c.values[k], G.classes[k].size)
    return dict(out)


def total_mass(G, c, a):
    """Sum over pairs of x^c(g), i.e. the mass with no 1/|G| normalization."""
    _check_counting(G, c)
    ar = _reduce(G, a)
    total = MassPoly()
    for k, cls in enumerate(G.classes):
        n = len(_rep_solutions(G, k, ar))
        if n:
            total += MassPoly.monomial(c.values[k], cls.size * n)
    return total


def mass_by_type(G, c, a):
    """``{RamType: MassPoly}`` over types with nonzero mass."""
    _check_counting(G, c)
    cache = G._cache.setdefault("by_type", {})
    key = (id(c), _reduce(G, a))
    if key not in cache:
        # keep c alive so its id cannot be reused
        cache[key] = (c, _accumulate(G, c, a, lambda g, h: _type_of([h], g, G.degree)))
    return dict(cache[key][1])


def mass_by_wreath_type(W, c, a):
    if W.kind != "wr":
        raise StructureError(f"{W!r} is not a wreath product")
    return _accumulate(W, c, a, lambda g, h: wreath_type_of_pair(W, g, h))


def mass_by_product_type(P, c, a):
    if P.kind != "prod":
        raise StructureError(f"{P!r} is not a direct product")
    L, R = P.factors

    def key(g, h):
        g1, g2 = product_parts(P, g)
        h1, h2 = product_parts(P, h)
        return (_type_of([h1], g1, L.degree), _type_of([h2], g2, R.degree))

    return _accumulate(P, c, a, key)


def predicted_wreath_mass(A, cA, B, cB, sigma, a):
    """Mass of a wreath type from by-type masses of the factors.

    |A|^(|blocks| - r) * m_B(base type)(x) * prod_i m_A(sigma_i)(x^f_i),
    where the i-th inner factor is taken at residue a^f_i (its residue field
    has q^f_i elements).  That product counts one assignment of sub-types to
    the ordered base orbits; since wreath types are multisets it is
    multiplied by the number of distinct such assignments.
    """
    _check_counting(A, cA)
    _check_counting(B, cB)
    if math.gcd(a, A.order * B.order) != 1:
        raise InvalidResidueError(f"residue {a} is not invertible")
    mb = mass_by_type(B, cB, a % B.order or 1)
    poly = mb.get(sigma.base, MassPoly()) * (A.order ** (B.degree - sigma.r)
                                             * _assignments(sigma))
    for e, f, sub in sigma.entries:
        ma = mass_by_type(A, cA, pow(a, f, A.order) or 1)
        poly = poly * ma.get(sub, MassPoly()).substitute(f)
    return poly


def _assignments(sigma):
    """Ways to distribute the sub-types over base orbits sharing the same (e, f)."""
    by_base = defaultdict(Counter)
    for e, f, sub in sigma.entries:
        by_base[(e, f)][sub] += 1
    ways = 1
    for subs in by_base.values():
        ways *= math.factorial(sum(subs.values()))
        for m in subs.values():
            ways //= math.factorial(m)
    return ways


def predicted_product_mass(G1, c1, G2, c2, s1, s2, a):
    m1 = mass_by_type(G1, c1, a % G1.order or 1)
    m2 = mass_by_type(G2, c2, a % G2.order or 1)
    return m1.get(s1, MassPoly()) * m2.get(s2, MassPoly())


def types_of(G):
    """Every type realized by some pair, over all invertible residues."""
    found = set()
    seen = set()
    for a in invertible_residues(G.order):
        if a % G.exponent in seen:
            continue
        seen.add(a % G.exponent)
        found.update(_type_of([h], g, G.degree) for _, g, h in rep_pairs(G, a))
    return found


def possible_wreath_types(A, B):
    """All wreath types whose base and sub-types are realized in B and A."""
    sub_types = sorted(types_of(A), key=str)
    out = set()
    for base in types_of(B):
        for subs in itertools.product(sub_types, repeat=len(base.terms)):
            out.add(WreathType.of((e, f, s) for (e, f), s in zip(base.terms, subs)))
    return sorted(out, key=str)


def rationality_witness(G):
    """A pair (g, k) with gcd(k, ord g) = 1 and g^k not conjugate to g, or None."""
    for cls in G.classes:
        g = cls.representative
        n = g.order()
        for k in range(2, n):
            if math.gcd(k, n) == 1 and not G.is_conjugate(g, g ** k):
                return g, k
    return None


def rational_character_table(G):
    """Power-map criterion: every g is conjugate to each generator of <g>."""
    return rationality_witness(G) is None


# -- image subgroups ------------------------------------------------------

def _generating_set(elements, degree):
    gens = []
    span = {identity(degree)}
    for s in sorted(elements):
        if s not in span:
            gens.append(s)
            span = closure(gens, degree)
    return gens


def subgroup_label(elements, degree):
    gens = _generating_set(elements, degree)
    return f"|I|={len(elements)} <{', '.join(map(str, gens)) or '()'}>"


def _subgroup_class_key(G, sub, memo):
    key = memo.get(sub)
    if key is None:
        conjugates = {frozenset(conjugate(x, s) for s in sub) for x in G.elements}
        canonical = min(conjugates, key=lambda s: tuple(sorted(s)))
        key = subgroup_label(canonical, G.degree)
        for s in conjugates:
            memo[s] = key
    return key


def mass_by_image(G, c, a):
    """Masses keyed by the G-conjugacy class of the image <g, h>."""
    memo = G._cache.setdefault("subgroup_classes", {})
    return _accumulate(G, c, a, lambda g, h: _subgroup_class_key(G, pair_image(g, h), memo))


def _as_subgroup(elements, degree):
    elems = frozenset(elements)
    if identity(degree) not in elems:
        raise ValueError("subgroup must contain the identity")
    for x in elems:
        for y in elems:
            if compose(x, y) not in elems:
                raise ValueError("input is not closed under composition")
    return elems


def conjugators_into(I, D, S):
    """Number of s in S with s I s^-1 contained in D."""
    I = _as_subgroup(I, S.degree)
    D = _as_subgroup(D, S.degree)
    gens = _generating_set(I, S.degree)
    return sum(1 for s in S.elements if all(conjugate(s, x) in D for x in gens))


def ambient_centralizer_order(I, S):
    I = _as_subgroup(I, S.degree)
    gens = _generating_set(I, S.degree)
    return sum(1 for s in S.elements if all(compose(s, x) == compose(x, s) for x in gens))


# -- formula reports ------------------------------------------------------

STRATIFIERS = ("total", "type", "wreath-type", "product-type", "image")


def strata(G, c, a, by):
    """Masses for one residue under a named stratification, keyed by string."""
    if by == "total":
        return None
    if by == "type":
        m = mass_by_type(G, c, a)
    elif by == "wreath-type":
        m = mass_by_wreath_type(G, c, a)
    elif by == "product-type":
        m = {product_type_key(*k): v for k, v in mass_by_product_type(G, c, a).items()}
    elif by == "image":
        m = mass_by_image(G, c, a)
    else:
        raise ValueError(f"unknown stratification {by!r}")
    return {str(k): v for k, v in m.items()}


def wild_primes(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass
class FormulaReport:
    group: str
    counting: str
    order: int
    degree: int
    modulus: int
    masses: dict  # residue -> MassPoly
    exists: bool
    polynomial: MassPoly | None
    strata: dict = field(default_factory=dict)  # residue -> {key: MassPoly}
    warnings: list = field(default_factory=list)

    def evaluate(self, q):
        """Value of the common polynomial at x = 1/q (exact)."""
        if self.polynomial is None:
            raise ValueError("no mass formula: masses depend on the residue")
        return self.polynomial.at_q(q)

    def is_tame(self, q):
        return math.gcd(q, self.order) == 1

    def to_dict(self):
        results = []
        for a in sorted(self.masses):
            entry = {"residue": a, "total": self.masses[a].to_list()}
            if a in self.strata:
                entry["strata"] = [{"key": k, "coeffs": v.to_list()}
                                   for k, v in sorted(self.strata[a].items())]
            results.append(entry)
        return {
            "group": {"expr": self.group, "order": self.order, "degree": self.degree},
            "counting": self.counting,
            "modulus": self.modulus,
            "results": results,
            "formula_exists": self.exists,
            "polynomial": self.polynomial.to_list() if self.polynomial is not None else None,
            "warnings": list(self.warnings),
        }


def tame_warnings(order):
    primes = wild_primes(order)
    if not primes:
        return []
    ps = ", ".join(map(str, primes))
    noun = "characteristic" if len(primes) == 1 else "characteristics"
    verb = "is" if len(primes) == 1 else "are"
    return [f"tame masses only: valid for q prime to |G| = {order}; "
            f"residue {noun} {ps} {verb} wild and excluded"]


def check_mass_formula(G, c, by="total", residues=None):
    """Masses for every invertible residue mod |G| and whether they agree."""
    _check_counting(G, c)
    group = str(G.structure) if G.structure is not None else repr(G)
    all_res = invertible_residues(G.order)
    masses = {a: total_mass(G, c, a) for a in all_res}
    polys = set(masses.values())
    exists = len(polys) == 1
    if residues is None:
        shown = all_res
    else:
        for a in residues:
            _reduce(G, a)
        shown = sorted({a % G.order or G.order for a in residues})
    report = FormulaReport(
        group=group, counting=c.name, order=G.order, degree=G.degree,
        modulus=G.order, masses={a: masses[a] for a in shown},
        exists=exists, polynomial=next(iter(polys)) if exists else None,
        warnings=tame_warnings(G.order))
    if by != "total":
        report.strata = {a: strata(G, c, a, by) for a in shown}
    return report


def evaluation_entry(report, q):
    """JSON-ready evaluation of a report's polynomial at x = 1/q."""
    value = report.evaluate(q) if report.polynomial is not None else None
    entry = {"q": q, "value": None if value is None else str(Fraction(value)),
             "tame": report.is_tame(q)}
    if not entry["tame"]:
        entry["warning"] = (f"q = {q} is not prime to |G| = {report.order}; the true mass "
                            "includes wildly ramified representations and is not computed")
    return entry
