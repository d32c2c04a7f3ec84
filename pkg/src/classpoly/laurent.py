"""Laurent polynomials in one variable ``v`` with exact integer coefficients.

Polynomials are stored normalized: no zero coefficient is ever kept.  The
degree of the zero polynomial is the distinguished value ``NEG_INFINITY``.

The reduction engine produces values that, rewritten in powers of
``z = v - v^-1``, have nonnegative integer coefficients.  ``rebase_in_z``
performs that (unitriangular) change of basis and fails loudly when the input
is not in the span, which downstream code treats as a fatal bug signal.

>>> z = LaurentPoly.z()
>>> (z * z).rebase_in_z()
{2: 1}
>>> LaurentPoly.zero().degree()
-inf
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

NEG_INFINITY = float("-inf")


class LaurentPoly:
    """Immutable-by-convention Laurent polynomial over the integers."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, x in dict(coeffs).items():
                if x:
                    c[int(k)] = x
        self._c = c

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def v_power(cls, k: int, coeff: int = 1) -> "LaurentPoly":
        return cls({k: coeff})

    @classmethod
    def z(cls) -> "LaurentPoly":
        """The element v - v^-1."""
        return cls({1: 1, -1: -1})

    @classmethod
    def z_power(cls, k: int) -> "LaurentPoly":
        """(v - v^-1)^k expanded in powers of v.

        >>> LaurentPoly.z_power(2).to_pairs()
        ((-2, 1), (0, -2), (2, 1))
        """
        if k < 0:
            raise ValueError("negative power of z")
        return cls({k - 2 * j: (-1) ** j * comb(k, j) for j in range(k + 1)})

    def is_zero(self) -> bool:
        return not self._c

    def degree(self):
        """Top degree, or NEG_INFINITY for the zero polynomial."""
        return max(self._c) if self._c else NEG_INFINITY

    def valuation(self):
        return min(self._c) if self._c else NEG_INFINITY

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(sorted(self._c.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for k, x in other._c.items():
            y = c.get(k, 0) + x
            if y:
                c[k] = y
            else:
                c.pop(k, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {k: -x for k, x in self._c.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {k: x * other for k, x in self._c.items()} if other else {}
            return out
        c: dict[int, int] = {}
        for k1, x1 in self._c.items():
            for k2, x2 in other._c.items():
                k = k1 + k2
                y = c.get(k, 0) + x1 * x2
                if y:
                    c[k] = y
                else:
                    c.pop(k, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __rmul__ = __mul__

    def evaluate(self, value):
        """Exact evaluation at an integer or Fraction value of v."""
        if value == 0:
            raise ZeroDivisionError("v = 0 is outside the Laurent domain")
        value = Fraction(value)
        total = Fraction(0)
        for k, x in self._c.items():
            total += x * value ** k
        return total

    def to_pairs(self) -> tuple[tuple[int, int], ...]:
        """Sorted (power, coefficient) pairs: the wire format used in caches."""
        return tuple(sorted(self._c.items()))

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        return cls({int(k): int(x) for k, x in pairs})

    def rebase_in_z(self) -> dict[int, int]:
        """Rewrite in powers of z = v - v^-1.

        Returns {z-power: coefficient}.  Raises ValueError if the polynomial
        is not an integer combination of nonnegative powers of z; callers
        treat that as an upstream bug, never as a value to ignore.
        """
        rem = dict(self._c)
        out: dict[int, int] = {}
        while rem:
            d = max(rem)
            if d < 0:
                raise ValueError("not in the span of nonnegative powers of v - v^-1")
            c = rem[d]
            out[d] = c
            for k, x in LaurentPoly.z_power(d)._c.items():
                y = rem.get(k, 0) - c * x
                if y:
                    rem[k] = y
                else:
                    rem.pop(k, None)
            if rem and max(rem) >= d:
                raise ValueError("degree failed to drop during z-expansion")
        return out

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, reverse=True):
            x = self._c[k]
            if k == 0:
                term = str(abs(x))
            else:
                mag = "" if abs(x) == 1 else f"{abs(x)}*"
                term = f"{mag}v^{k}" if k != 1 else f"{mag}v"
            parts.append(("- " if x < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._c.items()))!r})"


if __name__ == "__main__":
    import doctest

    doctest.testmod()
