"""Brute-force oracles on plain tuples, independent of the engine's class machinery."""
from itertools import product


def mul(p, q):
    return tuple(p[i] for i in q)


def inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def power(p, k):
    out = tuple(range(len(p)))
    for _ in range(k):
        out = mul(p, out)
    return out


def orbit_sizes(gens, degree):
    """{point: size of its orbit} under <gens>, by BFS."""
    sizes = {}
    for start in range(degree):
        if start in sizes:
            continue
        orbit = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    todo.append(y)
        for x in orbit:
            sizes[x] = len(orbit)
    return sizes


def orbit_list(gens, degree):
    seen = set()
    out = []
    for start in range(degree):
        if start in seen:
            continue
        orbit = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for g in gens:
                if g[x] not in orbit:
                    orbit.add(g[x])
                    todo.append(g[x])
        seen |= orbit
        out.append(sorted(orbit))
    return out


def pair_type(g, h):
    """Sorted list of (e, f) from the definition: orbits of <g,h> split into <g>-orbits."""
    n = len(g)
    inertia = orbit_sizes([g], n)
    terms = []
    for orb in orbit_list([g, h], n):
        e = inertia[orb[0]]
        terms.append((e, len(orb) // e))
    return sorted(terms, key=lambda t: (-(t[0] * t[1]), -t[0], -t[1]))


def pairs(elements, a):
    """All (g, h) in G x G with h g h^-1 = g^a."""
    elements = [tuple(e) for e in elements]
    out = []
    for g in elements:
        target = power(g, a)
        for h in elements:
            if mul(mul(h, g), inv(h)) == target:
                out.append((g, h))
    return out


def perm_conductor(g):
    return len(g) - len(orbit_list([g], len(g)))


def mass(elements, a, weight):
    """Coefficient list of sum over pairs of x^weight(g)."""
    coeffs = {}
    for g, _ in pairs(elements, a):
        w = weight(g)
        coeffs[w] = coeffs.get(w, 0) + 1
    top = max(coeffs) if coeffs else -1
    return [coeffs.get(k, 0) for k in range(top + 1)]


def partitions(k, max_parts):
    """All partitions of k into at most max_parts parts (explicit listing)."""
    out = []

    def rec(rest, largest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_parts:
            return
        for part in range(min(rest, largest), 0, -1):
            rec(rest - part, part, acc + [part])

    rec(k, k, [])
    return out


def all_perms_group(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x, s in product(frontier, gens):
            y = mul(s, x)
            if y not in seen:
                seen.add(y)
                nxt.append(y)
        frontier = nxt
    return seen
