"""Expression trees for group constructions and counting functions."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Sym:
    n: int

    def __str__(self):
        return f"S{self.n}"


@dataclass(frozen=True)
class Wr:
    left: object
    right: object

    def __str__(self):
        return f"wr({self.left},{self.right})"


@dataclass(frozen=True)
class Prod:
    left: object
    right: object

    def __str__(self):
        return f"x({self.left},{self.right})"


@dataclass(frozen=True)
class Custom:
    """Group given by generators; each generator is a tuple of 1-based cycles."""
    degree: int
    generators: tuple
    name: str | None = field(default=None, compare=False)

    def __str__(self):
        gens = ", ".join(_format_generator(g) for g in self.generators)
        if gens:
            return f"custom({self.degree}; {gens})"
        return f"custom({self.degree};)"


def _format_generator(gen):
    return "".join("(" + " ".join(str(p) for p in cyc) + ")" for cyc in gen) or "()"


@dataclass(frozen=True)
class PermCount:
    def __str__(self):
        return "perm"


@dataclass(frozen=True)
class ZeroCount:
    def __str__(self):
        return "zero"


@dataclass(frozen=True)
class SignedCount:
    def __str__(self):
        return "signed"


@dataclass(frozen=True)
class WreathCount:
    inner: object
    outer: object

    def __str__(self):
        return f"wreath({self.inner},{self.outer})"


@dataclass(frozen=True)
class SumCount:
    left: object
    right: object

    def __str__(self):
        return f"sum({self.left},{self.right})"
