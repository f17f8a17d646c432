"""Brute-force lattice-point ground truth.

Counts lattice points of dilates of Delta(0,q) (and of the 2-D quad block
and standard simplices) by bounded enumeration, then recovers Ehrhart and
h*-polynomials by interpolation.  Everything is exact integer arithmetic:
membership in t*Delta(0,q) is tested with the inequalities scaled by n.
The guards are hard preconditions, not silent truncation.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .delta import DeltaQ, HStar
from .polynomials import Poly, binom_poly


class OracleGuardError(ValueError):
    """Enumeration refused: instance exceeds the desk-scale guard."""


DEFAULT_MAX_POINTS = 10_000
DEFAULT_MAX_DIM = 4


def _max_points() -> int:
    env = os.environ.get("EHRHART_MAX_ORACLE_POINTS")
    return int(env) if env else DEFAULT_MAX_POINTS


@dataclass(frozen=True)
class DilationCount:
    t: int
    count: int
    interior_count: int

    def __post_init__(self):
        if not self.count >= self.interior_count >= 0:
            raise ValueError("count >= interior_count >= 0 violated")


def count_points(
    s: DeltaQ, t: int, max_points: int | None = None, max_dim: int = DEFAULT_MAX_DIM
) -> DilationCount:
    """Exact |t*Delta(0,q) cap Z^d| and its interior count.

    x lies in t*Delta(0,q) iff lam_d := x_d/n >= 0, lam_i := x_i - q_i x_d/n
    >= 0, and sum lam <= t; interior uses strict inequalities.  All tests are
    done on the n-scaled integers.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    limit = max_points if max_points is not None else _max_points()
    if s.n * t > limit:
        raise OracleGuardError(
            f"n*t = {s.n * t} exceeds the oracle guard {limit} "
            "(set EHRHART_MAX_ORACLE_POINTS to override)"
        )
    if s.d > max_dim:
        raise OracleGuardError(f"d = {s.d} exceeds the oracle dimension guard {max_dim}")
    if t == 0:
        return DilationCount(0, 1, 0)

    n = s.n
    qs = s.q_head
    total = 0
    interior = 0
    tn = t * n

    def walk(i: int, budget: int, strict_ok: bool):
        # budget = n*(t - lam_d - lam_1 - ... - lam_{i-1}), an integer >= 0
        nonlocal total, interior
        if i == len(qs):
            total += 1
            if strict_ok and budget > 0:
                interior += 1
            return
        base = qs[i] * x_d  # n * (q_i * lam_d)
        lo = -((-base) // n)  # ceil(base / n)
        hi = (base + budget) // n
        for x_i in range(lo, hi + 1):
            lam_scaled = n * x_i - base
            walk(i + 1, budget - lam_scaled, strict_ok and lam_scaled > 0)

    for x_d in range(0, tn + 1):
        walk(0, tn - x_d, x_d > 0)
    return DilationCount(t, total, interior)


def interpolate_ehrhart(s: DeltaQ, **guard_kwargs) -> Poly:
    """Lagrange interpolation of the counting function through t = 0..d."""
    d = s.d
    ts = list(range(d + 1))
    ys = [count_points(s, t, **guard_kwargs).count for t in ts]
    # Lagrange in exact rationals
    poly = Poly.zero()
    for i, ti in enumerate(ts):
        basis = Poly.one()
        denom = 1
        for j, tj in enumerate(ts):
            if j != i:
                basis = basis * Poly((-tj, 1))
                denom *= ti - tj
        poly = poly + basis.scale(Fraction(ys[i], denom))
    return poly


def hstar_via_counts(s: DeltaQ, **guard_kwargs) -> HStar:
    """Recover h* from counts at t = 0..d by inverting
    i(t) = sum_i h_i * C(t + d - i, d) (a triangular system), then check the
    lattice-point identities h_1 = count(1) - (d+1), h_d = interior(1)."""
    d = s.d
    counts = [count_points(s, t, **guard_kwargs) for t in range(d + 1)]
    h = [0] * (d + 1)
    for t in range(d + 1):
        acc = counts[t].count
        for i in range(t):
            acc -= h[i] * math.comb(t + d - i, d)
        # at t the first new unknown is h_t with coefficient C(d, d) = 1
        h[t] = acc
    result = HStar(Poly(h), d)
    c1 = counts[1]
    if result.poly[1] != c1.count - (d + 1):
        raise AssertionError("h_1 != count(1) - (d+1)")
    if result.poly[d] != c1.interior_count:
        raise AssertionError("h_d != interior count at t=1")
    return result


def count_quad_points(a: int, t: int) -> int:
    """Lattice points of t * conv{(0,0),(1,0),(2,a),(1,a)} by column scan."""
    if a < 1 or t < 0:
        raise ValueError("require a >= 1, t >= 0")
    total = 0
    for x in range(0, 2 * t + 1):
        if x <= t:
            lo, hi = 0, a * x
        else:
            lo, hi = a * (x - t), a * t
        total += hi - lo + 1
    return total


def count_simplex_points(d: int, t: int) -> int:
    """Lattice points of the dilated standard simplex: #{x >= 0, sum x <= t}."""
    if d < 1 or t < 0:
        raise ValueError("require d >= 1, t >= 0")

    def rec(i: int, budget: int) -> int:
        if i == d:
            return 1
        return sum(rec(i + 1, budget - v) for v in range(budget + 1))

    return rec(0, t)


def interpolate_through(points: list[tuple[int, int]]) -> Poly:
    """Exact Lagrange interpolation through arbitrary integer points."""
    poly = Poly.zero()
    for i, (ti, yi) in enumerate(points):
        basis = Poly.one()
        denom = 1
        for j, (tj, _) in enumerate(points):
            if j != i:
                basis = basis * Poly((-tj, 1))
                denom *= ti - tj
        poly = poly + basis.scale(Fraction(yi, denom))
    return poly


def ehrhart_from_hstar_poly(h: Poly, d: int) -> Poly:
    """sum_i h_i * C(t + d - i, d); shared by oracle checks and tests."""
    out = Poly.zero()
    for i, c in enumerate(h.coeffs):
        if c:
            out = out + binom_poly(d - i, d).scale(c)
    return out
