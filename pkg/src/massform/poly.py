"""Dense integer polynomials in x = 1/q."""
from __future__ import annotations

from fractions import Fraction


class MassPoly:
    """Immutable polynomial with non-negative integer coefficients.

    ``coeffs[k]`` is the coefficient of x**k; trailing zeros are stripped, so
    the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(v) for v in coeffs]
        if any(v < 0 for v in c):
            raise ValueError(f"negative coefficient in {c}")
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("MassPoly is immutable")

    @classmethod
    def monomial(cls, k, coeff=1):
        return cls([0] * k + [coeff])

    @classmethod
    def constant(cls, c):
        return cls([c])

    def __eq__(self, other):
        if isinstance(other, MassPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == MassPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = MassPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return MassPoly(out)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return MassPoly([v * other for v in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return MassPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return MassPoly(out)

    __rmul__ = __mul__

    def substitute(self, f):
        """The polynomial p(x**f)."""
        if f < 1:
            raise ValueError("substitution exponent must be positive")
        out = [0] * (f * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for k, v in enumerate(self.coeffs):
            out[k * f] = v
        return MassPoly(out)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Exact value at x (ints and Fractions stay exact)."""
        x = Fraction(x)
        total = Fraction(0)
        for v in reversed(self.coeffs):
            total = total * x + v
        return total

    def at_q(self, q):
        """Value at x = 1/q."""
        return self(Fraction(1, q))

    def to_list(self):
        return list(self.coeffs)

    def __repr__(self):
        return f"MassPoly({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for k, v in enumerate(self.coeffs):
            if not v:
                continue
            if k == 0:
                terms.append(str(v))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if v == 1 else f"{v}{mono}")
        return " + ".join(terms) or "0"
