"""Dense univariate polynomials with exact integer or rational coefficients.

Coefficients are Python ints or fractions.Fraction (auto-reduced, positive
denominator), so equality is structural.  Everything here is immutable and
pure; degrees stay small (at most a few dozen) so dense storage is fine.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Coeff = Union[int, Fraction]


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """A polynomial stored as a coefficient tuple, index i = coeff of x^i.

    Trailing zeros are trimmed; the zero polynomial is the single coeff 0.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = (0,)):
        cs = [_norm_coeff(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls) -> "Poly":
        return cls((0,))

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: Coeff = 1) -> "Poly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls((0,) * exponent + (coeff,))

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports degree 0."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Coeff:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    def scale(self, c: Coeff) -> "Poly":
        return Poly(tuple(c * x for x in self.coeffs))

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Poly((0,) * k + self.coeffs)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, v: Coeff) -> Coeff:
        """Exact Horner evaluation."""
        acc: Coeff = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return _norm_coeff(acc if isinstance(acc, Fraction) else acc)

    def compose_scale(self, r: int) -> "Poly":
        """Return p(r*t): coefficient of t^i multiplied by r^i."""
        if r < 1:
            raise ValueError("dilation factor must be a positive integer")
        return Poly(tuple(c * r**i for i, c in enumerate(self.coeffs)))

    def __repr__(self) -> str:
        return f"Poly({self.coeffs!r})"

    def __str__(self) -> str:
        return poly_to_text(self)


def binom_poly(shift: int, d: int) -> Poly:
    """Expand binom(t+shift, d) as a polynomial in t.

    Equals (t+shift)(t+shift-1)...(t+shift-d+1)/d!; degree d, leading
    coefficient 1/d!.
    """
    if d < 0:
        raise ValueError("invalid dimension: d must be >= 0")
    p = Poly.one()
    for i in range(d):
        p = p * Poly((shift - i, 1))
    return p.scale(Fraction(1, math.factorial(d)))


def poly_to_text(p: Poly, var: str = "x") -> str:
    """Render terms joined by " + " / " - ", ascending degree.

    E.g. "1 + 7*x^3 + 9*x^4 + 3*x^5"; rational coefficients as "p/q".
    """
    if p.is_zero:
        return "0"
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}*{power}"
        parts.append((c < 0, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def poly_to_json(p: Poly, var: str = "x") -> dict:
    return {"var": var, "coeffs": [str(c) for c in p.coeffs]}


def poly_from_json(obj: dict) -> Poly:
    coeffs: list[Coeff] = []
    for s in obj["coeffs"]:
        if isinstance(s, int):
            coeffs.append(s)
        elif "/" in s:
            coeffs.append(Fraction(s))
        else:
            coeffs.append(int(s))
    return Poly(coeffs)


def all_integer(p: Poly) -> bool:
    return all(isinstance(c, int) for c in p.coeffs)


def as_fraction_coeffs(p: Poly) -> Sequence[Fraction]:
    return tuple(Fraction(c) for c in p.coeffs)
