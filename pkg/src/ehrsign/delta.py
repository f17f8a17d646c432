"""The simplex family Delta(0,q) and its h*-polynomials.

Delta(0,q) = conv{0, e_1, ..., e_{d-1}, n*e_d + sum q_i e_i}.  Its
h*-polynomial is sum_{j=0}^{n-1} x^{ceil(q_1 j/n) + ... + ceil(q_d j/n)}
with the derived last coordinate q_d = 1 - sum_{i<d} q_i.

Two computation paths are provided: the direct O(n*d) summation and a
breakpoint/plateau reconstruction that needs only O(sum |q_i|) operations
(valid when n >= |q_i| for every i, q_d included).  The module also computes
the characteristic polynomials L1, L2 of the parametric family where n is
scaled by m (requires q_i | n), and the closed-form special families used as
golden vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .polynomials import Poly

# numpy path is used only when every intermediate |q_i * j| provably fits
# in int64; otherwise we fall back to Python big ints.
_INT64_SAFE = 2**62
_NUMPY_MIN_N = 512


class FastPreconditionError(ValueError):
    """Fast path requires n >= |q_i| for all i (q_d included)."""


class DivisibilityError(ValueError):
    """The family Delta(0,q^(m)) requires q_i | n for all i, q_i != 0."""


@dataclass(frozen=True)
class DeltaQ:
    """Parameters (q_1,...,q_{d-1}, n); q_d and d are derived."""

    q_head: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "q_head", tuple(int(q) for q in self.q_head))
        if self.n < 1:
            raise ValueError("n must be a positive integer")
        if len(self.q_head) < 1:
            raise ValueError("dimension must be at least 2")

    @property
    def d(self) -> int:
        return len(self.q_head) + 1

    @property
    def q_d(self) -> int:
        return 1 - sum(self.q_head)

    @property
    def q_full(self) -> tuple[int, ...]:
        return self.q_head + (self.q_d,)

    def vertices(self) -> list[tuple[int, ...]]:
        d = self.d
        verts = [tuple([0] * d)]
        for i in range(d - 1):
            verts.append(tuple(1 if j == i else 0 for j in range(d)))
        verts.append(self.q_head + (self.n,))
        return verts


@dataclass(frozen=True)
class HStar:
    """An IntPoly certified as an h*-polynomial of a dim-dimensional polytope."""

    poly: Poly
    dim: int

    def __post_init__(self):
        p = self.poly
        if p[0] != 1:
            raise ValueError("h* must have constant term 1")
        if any(not isinstance(c, int) or c < 0 for c in p.coeffs):
            raise ValueError("h* coefficients must be nonnegative integers")
        if p.degree > self.dim:
            raise ValueError("h* degree exceeds dimension")

    def normalized_volume(self) -> int:
        return self.poly.eval(1)


def _ceil_div(a: int, b: int) -> int:
    # b > 0; exact ceil(a/b) on big ints
    return -((-a) // b)


def _exponents_numpy_ok(s: DeltaQ) -> bool:
    return s.n >= _NUMPY_MIN_N and all(
        abs(q) * (s.n - 1) < _INT64_SAFE for q in s.q_full
    )


def hstar_naive(s: DeltaQ) -> HStar:
    """Direct evaluation of the defining sum (O(n*d) operations)."""
    n, d = s.n, s.d
    if _exponents_numpy_ok(s):
        j = np.arange(n, dtype=np.int64)
        e = np.zeros(n, dtype=np.int64)
        for q in s.q_full:
            if q:
                e -= (-q * j) // n
        lo, hi = int(e.min()), int(e.max())
        if lo < 0 or hi > d:
            raise AssertionError("internal error: h* exponent outside [0, d]")
        counts = np.bincount(e, minlength=d + 1)
        return HStar(Poly(int(c) for c in counts), d)
    counts = [0] * (d + 1)
    qs = [q for q in s.q_full if q]
    for j in range(n):
        exp = sum(_ceil_div(q * j, n) for q in qs)
        if not 0 <= exp <= d:
            raise AssertionError("internal error: h* exponent outside [0, d]")
        counts[exp] += 1
    return HStar(Poly(counts), d)


def breakpoints_for(q_i: int, n: int) -> list[tuple[int, int]]:
    """Positions j in [1, n-1] where ceil(q_i*j/n) jumps, with jump sign.

    For q_i > 0 the jump is +1 at floor((m-1)*n/q_i)+1; for q_i < 0 it is -1
    at ceil(m*n/|q_i|).  q_i = 0 contributes nothing.
    """
    if q_i == 0:
        return []
    if abs(q_i) > n:
        raise FastPreconditionError(
            f"breakpoints require n >= |q_i| (got q_i={q_i}, n={n})"
        )
    if q_i > 0:
        count = q_i - 1 if q_i == n else q_i
        return [((m - 1) * n // q_i + 1, 1) for m in range(1, count + 1)]
    qa = -q_i
    return [(_ceil_div(m * n, qa), -1) for m in range(1, qa)]


def difference_poly(s: DeltaQ) -> Poly:
    """The sparse difference polynomial F(x) = sum_i sum_j (jump of
    ceil(q_i*j/n)) x^j, the fast path's intermediate."""
    net: dict[int, int] = {}
    for q in s.q_full:
        for pos, sign in breakpoints_for(q, s.n):
            net[pos] = net.get(pos, 0) + sign
    if not net:
        return Poly.zero()
    out = [0] * (max(net) + 1)
    for pos, c in net.items():
        out[pos] = c
    return Poly(out)


def fast_precondition_ok(s: DeltaQ) -> bool:
    return s.n >= max(abs(q) for q in s.q_full)


def _plateau_reconstruct(net: dict[int, int], n: int, dim: int, base: int) -> Poly:
    """Given net jump coefficients at sorted positions in [1, n-1] and the
    height at j=0, aggregate plateau lengths into coefficient counts."""
    counts = [0] * (dim + 1)
    height = base
    prev = 0
    for pos in sorted(net):
        if pos > prev:
            if not 0 <= height <= dim:
                raise AssertionError("internal error: plateau height outside [0, d]")
            counts[height] += pos - prev
            prev = pos
        height += net[pos]
    if not 0 <= height <= dim:
        raise AssertionError("internal error: plateau height outside [0, d]")
    counts[height] += n - prev
    return Poly(counts)


def hstar_fast(s: DeltaQ) -> HStar:
    """Breakpoint/plateau computation; O(sum |q_i|) operations, independent
    of n.  Requires n >= |q_i| for every i including the derived q_d."""
    if not fast_precondition_ok(s):
        raise FastPreconditionError(
            "hstar_fast requires n >= max|q_i| (q_d included); "
            "fall back to hstar_naive"
        )
    net: dict[int, int] = {}
    for q in s.q_full:
        for pos, sign in breakpoints_for(q, s.n):
            net[pos] = net.get(pos, 0) + sign
    return HStar(_plateau_reconstruct(net, s.n, s.d, 0), s.d)


Method = Literal["auto", "fast", "naive"]


def hstar(s: DeltaQ, method: Method = "auto") -> HStar:
    """Public entry point; auto uses the fast path iff its precondition holds."""
    if method == "naive":
        return hstar_naive(s)
    if method == "fast":
        return hstar_fast(s)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if fast_precondition_ok(s):
        return hstar_fast(s)
    return hstar_naive(s)


def _check_divisibility(s: DeltaQ) -> None:
    for q in s.q_full:
        if q == 0 or s.n % q != 0:
            raise DivisibilityError(
                f"q_i | n required for the Delta(0,q^(m)) family (q={s.q_full}, n={s.n})"
            )


def _l_poly_naive(s: DeltaQ) -> Poly:
    """L(x) = x*L1(x) = sum_j x^{A(j)}, A(j) = sum_i ceil((q_i j + q_i^+)/n)."""
    n = s.n
    counts = [0] * (s.d + 1)
    for j in range(n):
        a = sum(_ceil_div(q * j + max(q, 0), n) for q in s.q_full)
        if not 1 <= a <= s.d:
            raise AssertionError("internal error: L exponent outside [1, d]")
        counts[a] += 1
    return Poly(counts)


def _l_poly_fast(s: DeltaQ) -> Poly:
    """Plateau reconstruction of L(x) under divisibility: with a_i = n/q_i
    integral, A(j) = p + sum_{q_i>0} floor(j/a_i) - sum_{q_i<0} floor(j/|a_i|)
    where p = #{i: q_i > 0}; jumps sit at multiples of |a_i|."""
    n = s.n
    net: dict[int, int] = {}
    p = 0
    for q in s.q_full:
        a = abs(n // q)
        if q > 0:
            p += 1
            sign = 1
        else:
            sign = -1
        for m in range(1, abs(q)):
            pos = m * a
            net[pos] = net.get(pos, 0) + sign
    return _plateau_reconstruct(net, n, s.d, p)


def l1_l2(s: DeltaQ, method: Method = "auto") -> tuple[Poly, Poly]:
    """Characteristic polynomials: h* of the family member with n -> m*n
    equals m*x*L1(x) + L2(x).  Requires q_i | n for all i (q_i != 0)."""
    _check_divisibility(s)
    if method == "naive":
        l = _l_poly_naive(s)
    else:
        l = _l_poly_fast(s)
    l1 = Poly(l.coeffs[1:])
    h = hstar(s).poly
    l2 = h - l
    return l1, l2


def hstar_family(s: DeltaQ, m: int) -> HStar:
    """h* of Delta(0, q^(m)): the member with n replaced by m*n."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    l1, l2 = l1_l2(s)
    return HStar(l1.shift(1).scale(m) + l2, s.d)


# --- closed-form special families -------------------------------------------


def r_odd(s: int, k: int, a: int) -> tuple[DeltaQ, HStar]:
    """Odd-dimensional (d = 2k-1) simplex with last vertex
    (a,...,a, -a,...,-a, s+1); h* = (s+1-b)x^k + (b-1)x + 1, b = gcd(a, s+1)."""
    if k < 2 or s < 0 or a < 0:
        raise ValueError("require k >= 2, s >= 0, a >= 0")
    dq = DeltaQ((a,) * (k - 1) + (-a,) * (k - 1), s + 1)
    b = math.gcd(a, s + 1)
    coeffs = [0] * (k + 1)
    coeffs[0] = 1
    coeffs[1] += b - 1
    coeffs[k] += s + 1 - b
    return dq, HStar(Poly(coeffs), 2 * k - 1)


def r_even(s: int, k: int, a: int) -> tuple[DeltaQ, HStar]:
    """Even-dimensional (d = 2k) variant; same h* as the odd one."""
    if k < 2 or s < 0 or a < 0:
        raise ValueError("require k >= 2, s >= 0, a >= 0")
    dq = DeltaQ((1,) + (a,) * (k - 1) + (-a,) * (k - 1), s + 1)
    _, h = r_odd(s, k, a)
    return dq, HStar(h.poly, 2 * k)


def extended_reeve(s: int, d: int) -> tuple[DeltaQ, HStar]:
    """Empty simplices with h* = s*x^k + 1 (k = ceil(d/2) for d=2k or 2k-1)."""
    if d < 3 or s < 0:
        raise ValueError("require d >= 3, s >= 0")
    k = (d + 1) // 2
    if d % 2 == 1:
        head = (1,) * (k - 1) + (s,) * (k - 1)
    else:
        head = (1,) * k + (s,) * (k - 1)
    dq = DeltaQ(head, s + 1)
    coeffs = [0] * (k + 1)
    coeffs[0] = 1
    coeffs[k] += s
    return dq, HStar(Poly(coeffs), d)


def all_minus_ones(d: int, m: int) -> tuple[DeltaQ, HStar]:
    """q = (-1,...,-1, d), scaled n = d*m; h* = m*sum_{i=1}^d x^i + 1 - x^d."""
    if d < 2 or m < 1:
        raise ValueError("require d >= 2, m >= 1")
    dq = DeltaQ((-1,) * (d - 1), d * m)
    coeffs = [1] + [m] * (d - 1) + [m - 1]
    return dq, HStar(Poly(coeffs), d)


def pow2(d: int, m: int) -> tuple[DeltaQ, HStar]:
    """q = (-2^0,...,-2^{d-2}, 2^{d-1}), scaled n = 2^{d-1}*m;
    h* = ((m-1)x + 1)(1+x)^{d-1}."""
    if d < 2 or m < 1:
        raise ValueError("require d >= 2, m >= 1")
    dq = DeltaQ(tuple(-(2**i) for i in range(d - 1)), 2 ** (d - 1) * m)
    h = Poly((1, m - 1)) * Poly((1, 1)) ** (d - 1)
    return dq, HStar(h, d)


SPECIAL_FAMILIES = {
    "r_odd": r_odd,
    "r_even": r_even,
    "extended_reeve": extended_reeve,
    "all_minus_ones": all_minus_ones,
    "pow2": pow2,
}


def special_family(kind: str, **params) -> tuple[DeltaQ, HStar]:
    if kind not in SPECIAL_FAMILIES:
        raise ValueError(f"unknown special family {kind!r}")
    return SPECIAL_FAMILIES[kind](**params)
