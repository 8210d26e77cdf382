"""Ramification types and wreath types.

A type is a multiset of (e, f) pairs, one per Galois orbit: the orbit splits
into f inertia orbits of size e.  It prints as ``f^e`` terms, largest orbits
first.  A wreath type attaches a sub-type of the inner group to each base
term and prints as ``f^e(sub)``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass


def _term_key(e, f):
    return (-(e * f), -e, -f)


@dataclass(frozen=True)
class RamType:
    terms: tuple  # ((e, f), ...) in canonical order

    @classmethod
    def of(cls, pairs):
        pairs = [(int(e), int(f)) for e, f in pairs]
        if any(e < 1 or f < 1 for e, f in pairs):
            raise ValueError(f"bad type terms {pairs}")
        return cls(tuple(sorted(pairs, key=lambda t: _term_key(*t))))

    @classmethod
    def parse(cls, text):
        """Parse ``"1^3 2^1 1^1"`` (f^e terms)."""
        terms = text.strip().strip("()").split()
        pairs = []
        for t in terms:
            m = re.fullmatch(r"(\d+)\^(\d+)", t)
            if not m:
                raise ValueError(f"bad type term {t!r}")
            f, e = int(m.group(1)), int(m.group(2))
            pairs.append((e, f))
        return cls.of(pairs)

    @property
    def degree(self):
        return sum(e * f for e, f in self.terms)

    def multiplicities(self):
        """``((e, f, multiplicity), ...)`` in canonical order."""
        counts = Counter(self.terms)
        return tuple((e, f, counts[(e, f)]) for e, f in dict.fromkeys(self.terms))

    def __str__(self):
        return " ".join(f"{f}^{e}" for e, f in self.terms)


@dataclass(frozen=True)
class WreathType:
    entries: tuple  # ((e, f, RamType), ...) in canonical order

    @classmethod
    def of(cls, entries):
        entries = [(int(e), int(f), sub) for e, f, sub in entries]
        return cls(tuple(sorted(entries, key=lambda t: (*_term_key(t[0], t[1]), str(t[2])))))

    @property
    def base(self):
        return RamType.of((e, f) for e, f, _ in self.entries)

    @property
    def r(self):
        return len(self.entries)

    def flatten(self):
        return flatten_wreath_type(self)

    def __str__(self):
        return " ".join(f"{f}^{e}({sub})" for e, f, sub in self.entries)


def flatten_wreath_type(sigma):
    """Compose a wreath type into the type of the full action.

    An entry f^e(sub) with sub-term f'^e' contributes the term (f f')^(e e').
    """
    return RamType.of((e * e2, f * f2) for e, f, sub in sigma.entries
                      for e2, f2 in sub.terms)


def product_type_key(s1, s2):
    return f"({s1}) x ({s2})"
