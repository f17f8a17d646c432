"""Sign-pattern realization: build a lattice polytope whose middle Ehrhart
coefficients carry any prescribed +/- pattern.

The hard shape (leading -1 followed by blocks of +1, -1, ..., -1) is served
by a product of dilated Eulerian simplices and a dilated Reeve tetrahedron,
with exponents synthesized greedily from exact rational parameters; the
remaining shapes reduce recursively (products with intervals, the Reeve
tetrahedron, or a sheared quadrilateral).  Every "sufficiently large"
parameter is found by geometric search with exact verification, so each
returned witness is certified by its own Ehrhart polynomial.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .ehrhart import (
    EhrhartPoly,
    EulerianS,
    Interval,
    PolytopeExpr,
    Quad,
    ReeveT,
    expr_ehrhart,
    expr_from_json,
    expr_to_json,
    sign_vector,
)
from .polynomials import Poly

DOUBLING_CAP = 2**20
DEFAULT_MAX_BASE = 64

Pattern = tuple[int, ...]


class SearchExhausted(RuntimeError):
    """A verified search ran out of budget; carries the failing context."""

    def __init__(self, case: str, pattern: Pattern, last_sign_vector=None):
        self.case = case
        self.pattern = pattern
        self.last_sign_vector = last_sign_vector
        super().__init__(
            f"search exhausted in {case} for pattern {format_pattern(pattern)}"
            + (f" (last sign vector {last_sign_vector})" if last_sign_vector else "")
        )


def parse_pattern(text: str) -> Pattern:
    out = []
    for ch in text:
        if ch == "+":
            out.append(1)
        elif ch == "-":
            out.append(-1)
        else:
            raise ValueError(f"invalid pattern character {ch!r} (use only '+'/'-')")
    if not out:
        raise ValueError("pattern must be nonempty (defined only for d >= 3)")
    return tuple(out)


def format_pattern(p: Pattern) -> str:
    return "".join("+" if s > 0 else "-" for s in p)


def validate_pattern(p) -> Pattern:
    p = tuple(p)
    if not p or any(s not in (1, -1) for s in p):
        raise ValueError("pattern must be a nonempty tuple over {+1, -1}")
    return p


def decompose_pattern(p: Pattern) -> list[int] | None:
    """Match (-1, [+1, -1^{d_1-1}], ..., [+1, -1^{d_k-1}]) with d_i >= 2.

    Returns the block lengths d_1..d_k, or None if the shape does not match.
    """
    if len(p) < 3 or p[0] != -1:
        return None
    d_list = []
    i = 1
    while i < len(p):
        if p[i] != 1:
            return None
        j = i + 1
        minus = 0
        while j < len(p) and p[j] == -1:
            minus += 1
            j += 1
        if minus < 1:
            return None
        d_list.append(minus + 1)
        i = j
    return d_list or None


# --- greedy parameter synthesis ---------------------------------------------


@dataclass(frozen=True)
class GreedyParams:
    """Exact rational exponent data: alpha/beta indexed 0..k, and L, the lcm
    of all denominators (so L*alpha_i and L*beta_i are integers)."""

    d_list: tuple[int, ...]
    epsilon: Fraction
    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]
    L: int

    def __post_init__(self):
        k = len(self.d_list)
        a, b, eps = self.alpha, self.beta, self.epsilon
        assert 0 < a[0] < eps
        assert a[1] == eps
        for i in range(1, k):
            assert a[i] < a[i + 1]
        assert a[k] < 1
        for i in range(1, k + 1):
            assert b[i] == 1 + eps - a[i]
            assert eps < b[i] <= 1
        assert a[0] == eps / 3 and b[0] == 1 - eps / 3
        for i in range(1, k):
            assert a[i + 1] == a[i] + b[i] / self.d_list[i - 1]


def greedy_params(d_list, epsilon: Fraction | None = None) -> GreedyParams:
    """epsilon defaults to half the validity bound prod(1 - 1/d_j), j < k."""
    d_list = tuple(d_list)
    if not d_list or any(d < 2 for d in d_list):
        raise ValueError("every d_i must be >= 2 and k >= 1")
    k = len(d_list)
    bound = Fraction(1)
    for d in d_list[:-1]:
        bound *= 1 - Fraction(1, d)
    if epsilon is None:
        epsilon = bound / 2
    if not 0 < epsilon < bound:
        raise ValueError("epsilon outside the validity interval")
    alpha = [epsilon / 3, epsilon]
    beta = [1 - epsilon / 3, 1 + epsilon - epsilon]
    for i in range(1, k):
        a_next = alpha[i] + beta[i] / d_list[i - 1]
        alpha.append(a_next)
        beta.append(1 + epsilon - a_next)
    L = 1
    for f in itertools.chain(alpha, beta):
        L = L * f.denominator // math.gcd(L, f.denominator)
    return GreedyParams(d_list, epsilon, tuple(alpha), tuple(beta), L)


class WeightTable:
    """Maximal r-exponents W(x) over decompositions x = sum l_i with
    0 <= l_i <= d_i, where a full factor weighs d_i*alpha_i + beta_i and a
    partial one l_i*alpha_i.  The greedy decomposition (fill from the last
    factor) attains the maximum."""

    def __init__(self, d_list, params: GreedyParams | None = None):
        self.params = params if params is not None else greedy_params(d_list)
        self.d_list = tuple(d_list)
        k = len(self.d_list)
        self.k = k
        # suffix sums E[j] = d_j + ... + d_k, 1-indexed; E[k+1] = 0
        self.E = [0] * (k + 2)
        for j in range(k, 0, -1):
            self.E[j] = self.E[j + 1] + self.d_list[j - 1]
        self.D = self.E[1]

    def weight(self, i: int, l: int) -> Fraction:
        """w_i(l) for factor i in 1..k."""
        d = self.d_list[i - 1]
        if not 0 <= l <= d:
            raise ValueError("degree out of range")
        if l == d:
            return d * self.params.alpha[i] + self.params.beta[i]
        return l * self.params.alpha[i]

    def W(self, x: int) -> Fraction:
        if not 0 <= x <= self.D:
            raise ValueError("x outside [0, D]")
        rem = x
        total = Fraction(0)
        for i in range(self.k, 0, -1):
            d = self.d_list[i - 1]
            if rem >= d:
                total += self.weight(i, d)
                rem -= d
            else:
                total += self.weight(i, rem)
                rem = 0
                break
        return total

    def delta(self, x: int) -> Fraction:
        return self.W(x) - self.W(x - 1)

    def brute_force_W(self, x: int) -> Fraction:
        """Exhaustive maximum over all decompositions; test oracle only."""
        best = None
        for ls in itertools.product(*(range(d + 1) for d in self.d_list)):
            if sum(ls) != x:
                continue
            w = sum(
                (self.weight(i + 1, l) for i, l in enumerate(ls)),
                Fraction(0),
            )
            if best is None or w > best:
                best = w
        return best


def target_pattern(d_list) -> Pattern:
    out = [-1]
    for d in d_list:
        out.append(1)
        out.extend([-1] * (d - 1))
    return tuple(out)


def predict_signs(d_list, params: GreedyParams | None = None) -> Pattern:
    """Asymptotic signs of the middle coefficients (degrees D+1 down to 1):
    for each degree, maximize w_0(l_0) + W(h - l_0) over l_0 in {0..3}; the
    coefficient is negative exactly when the unique maximizer is l_0 = 1."""
    table = WeightTable(d_list, params)
    p = table.params
    w0 = [
        Fraction(0),
        p.alpha[0] + p.beta[0],  # = 1, the sign-negative term
        2 * p.alpha[0],
        3 * p.alpha[0] + p.beta[0],
    ]
    signs = []
    for h in range(table.D + 1, 0, -1):
        best = None
        best_l0 = None
        for l0 in range(4):
            x = h - l0
            if not 0 <= x <= table.D:
                continue
            val = w0[l0] + table.W(x)
            if best is None or val > best:
                best, best_l0 = val, l0
            elif val == best:
                raise AssertionError(
                    f"internal error: weight tie at degree {h} (l0={best_l0},{l0})"
                )
        signs.append(-1 if best_l0 == 1 else 1)
    return tuple(signs)


def instantiate(d_list, params: GreedyParams, b: int) -> PolytopeExpr:
    """r = b^L; r_i = r^{alpha_i} and m_i = r^{beta_i} are exact integers
    because L clears every denominator."""
    if b < 2:
        raise ValueError("base b must be >= 2")
    L = params.L
    factors = []
    for i, d in enumerate(d_list, start=1):
        ea = L * params.alpha[i]
        eb = L * params.beta[i]
        assert ea.denominator == 1 and eb.denominator == 1
        factors.append((b ** int(ea), EulerianS(d, b ** int(eb))))
    ea0 = L * params.alpha[0]
    eb0 = L * params.beta[0]
    assert ea0.denominator == 1 and eb0.denominator == 1
    factors.append((b ** int(ea0), ReeveT(b ** int(eb0))))
    return PolytopeExpr(tuple(factors))


def verify_expr(e: PolytopeExpr, p: Pattern) -> bool:
    """True iff the exact sign vector matches p (leading, second, and
    constant coefficients are positive by construction and re-checked)."""
    p = validate_pattern(p)
    if e.dim != len(p) + 2:
        raise ValueError(f"dimension mismatch: expr dim {e.dim}, pattern wants {len(p) + 2}")
    ehr = expr_ehrhart(e)
    d = ehr.dim
    if ehr.poly[d] <= 0 or ehr.poly[d - 1] <= 0 or ehr.poly[0] <= 0:
        return False
    return sign_vector(ehr) == p


def construct_case6(
    d_list, max_b: int = DEFAULT_MAX_BASE
) -> tuple[PolytopeExpr, EhrhartPoly, int]:
    """Search b = 2, 3, ... for an exact instantiation realizing the target
    pattern; if max_b is exhausted, halve epsilon once and retry."""
    d_list = tuple(d_list)
    target = target_pattern(d_list)
    last_sv = None
    for eps_scale in (1, 2):
        params = greedy_params(d_list)
        if eps_scale == 2:
            params = greedy_params(d_list, params.epsilon / 2)
        for b in range(2, max_b + 1):
            expr = instantiate(d_list, params, b)
            ehr = expr_ehrhart(expr)
            sv = sign_vector(ehr)
            last_sv = sv
            if sv == target:
                return expr, ehr, b
    raise SearchExhausted("case6", target, last_sv)


# --- the recursive Case 1-6 constructor --------------------------------------


@dataclass(frozen=True)
class ConstructResult:
    expr: PolytopeExpr
    ehrhart: EhrhartPoly
    trace: tuple[str, ...]


_DIM2_BASE = PolytopeExpr(((1, EulerianS(2, 1)),))


def _load_catalog() -> dict:
    text = resources.files("ehrsign").joinpath("data/base_catalog.json").read_text()
    raw = json.loads(text)
    return {
        pat: expr_from_json(expr)
        for dim_entry in raw.values()
        for pat, expr in dim_entry.items()
    }


@lru_cache(maxsize=1)
def _catalog() -> dict:
    return _load_catalog()


def _sgn(c) -> int:
    if c > 0:
        return 1
    if c < 0:
        return -1
    return 0


def _floor_ratio(num, den) -> int:
    """floor(|num| / |den|) exactly, for int or Fraction inputs."""
    f = abs(Fraction(num)) / abs(Fraction(den))
    return f.numerator // f.denominator


def _solve_linear(A, B, pattern: Pattern, d: int) -> int | None:
    """Middle coefficients of the candidate are A_j*m + B_j; return the
    smallest m >= 1 realizing the pattern, or None when no m can (an A_j
    sign points the wrong way)."""
    need = 1
    for idx, s in enumerate(pattern):
        j = d - 2 - idx
        a, b = A[j], B[j]
        if a == 0:
            if _sgn(b) != s:
                return None
            continue
        if _sgn(a) != s:
            return None
        if _sgn(b) != s:
            need = max(need, _floor_ratio(b, a) + 1)
    return need


def _product_threshold(p1, d1: int, p2, pattern: Pattern, d: int) -> int | None:
    """Sufficient r for r*Q1 x Q2: coefficient j of the product is
    sum_k r^k a_k b_{j-k}, dominated by k* = min(j, d1) once r clears the
    ratio of the residual mass to the dominant term.  None when a dominant
    term's sign contradicts the pattern (this split cannot work)."""
    r0 = 2
    for idx, s in enumerate(pattern):
        j = d - 2 - idx
        k_star = min(j, d1)
        dom = Fraction(p1[k_star]) * Fraction(p2[j - k_star])
        if dom == 0 or _sgn(dom) != s:
            return None
        rest = sum(
            abs(Fraction(p1[k]) * Fraction(p2[j - k])) for k in range(k_star)
        )
        if rest:
            r0 = max(r0, _floor_ratio(rest, dom) + 1)
    return r0


def _retry_scales(base: int, rounds: int = 6):
    """base, 2*base, ... : the computed threshold is provably sufficient, so
    the extra rounds are pure safety margin."""
    for i in range(rounds):
        yield base << i


def construct(
    pattern, max_b: int = DEFAULT_MAX_BASE, doubling_cap: int = DOUBLING_CAP
) -> ConstructResult:
    """Resolve any +/- pattern (length d-2 >= 1) to a verified witness."""
    pattern = validate_pattern(pattern)
    return _construct(pattern, max_b, doubling_cap)


def _finish(expr: PolytopeExpr, pattern: Pattern, trace: tuple[str, ...]) -> ConstructResult:
    ehr = expr_ehrhart(expr)
    if sign_vector(ehr) != pattern:
        raise AssertionError("internal error: verified witness re-check failed")
    return ConstructResult(expr, ehr, trace)


@lru_cache(maxsize=None)
def _construct(pattern: Pattern, max_b: int, cap: int) -> ConstructResult:
    d = len(pattern) + 2

    if len(pattern) == 0:
        ehr = expr_ehrhart(_DIM2_BASE)
        return ConstructResult(_DIM2_BASE, ehr, ("base-dim2",))

    if d in (3, 4):
        expr = _catalog()[format_pattern(pattern)]
        if not verify_expr(expr, pattern):
            raise AssertionError("base catalog witness failed verification")
        return _finish(expr, pattern, (f"catalog-d{d}",))

    # Case 1: top middle coefficient positive -> r*Q x [0,1].  The product
    # coefficients are r^j c_j + r^{j-1} c_{j-1}, so any r beyond the largest
    # |c_{j-1}/c_j| ratio keeps every middle sign equal to sgn(c_j).
    if pattern[0] == 1:
        sub = _construct(pattern[1:], max_b, cap)
        c = sub.ehrhart.poly
        r0 = 1 + max(_floor_ratio(c[j - 1], c[j]) for j in range(1, d - 1))
        for r in _retry_scales(r0):
            expr = sub.expr.dilated(r) * PolytopeExpr(((1, Interval(1)),))
            if verify_expr(expr, pattern):
                return _finish(expr, pattern, (f"case1[r={r}]",) + sub.trace)
        raise SearchExhausted("case1", pattern)

    # Case 2: bottom middle coefficient positive -> Q x [0,m]; coefficients
    # are m*c_{j-1} + c_j, linear in m, so solve for the smallest m directly.
    if pattern[-1] == 1:
        sub = _construct(pattern[:-1], max_b, cap)
        c = sub.ehrhart.poly
        m = _solve_linear(c.shift(1), c, pattern, d)
        if m is not None:
            for mm in _retry_scales(m):
                expr = sub.expr * PolytopeExpr(((1, Interval(mm)),))
                if verify_expr(expr, pattern):
                    return _finish(expr, pattern, (f"case2[m={mm}]",) + sub.trace)
        raise SearchExhausted("case2", pattern)

    # Case 3: top two and bottom negative -> r*Q x ReeveT(m), Q realizing the
    # negated inner pattern.  i(ReeveT(m),t) = m*(t^3-t)/6 + (t^2+2t+1): with
    # u_j = r^j c_j the m-coefficient is (u_{j-3} - u_{j-1})/6, dominated by
    # -u_{j-1} once r clears every |c_{j-3}/c_{j-1}| ratio; then solve for m.
    if pattern[0] == -1 and pattern[1] == -1 and pattern[-1] == -1:
        sub = _construct(tuple(-s for s in pattern[2:-1]), max_b, cap)
        c = sub.ehrhart.poly
        r0 = 1 + max(_floor_ratio(c[j - 3], c[j - 1]) for j in range(1, d - 1))
        reeve_m = Poly((0, -Fraction(1, 6), 0, Fraction(1, 6)))
        reeve_rest = Poly((1, 2, 1))
        for r in _retry_scales(r0):
            qr = c.compose_scale(r)
            m = _solve_linear(qr * reeve_m, qr * reeve_rest, pattern, d)
            if m is None:
                continue
            expr = sub.expr.dilated(r) * PolytopeExpr(((1, ReeveT(m)),))
            if verify_expr(expr, pattern):
                return _finish(expr, pattern, (f"case3[r={r},m={m}]",) + sub.trace)
        raise SearchExhausted("case3", pattern)

    # Case 4: tail (-,+,-) -> r*Q x Quad(a).  i(Quad(a),t) = a*t^2 + 2t + 1;
    # the t-coefficient of the product is 2 + r*c_1 (a-independent), so r must
    # make it negative (c_1 < 0 by the guard); the rest is linear in a.
    if pattern[-1] == -1 and pattern[-2] == 1 and pattern[-3] == -1:
        sub = _construct(pattern[:-2], max_b, cap)
        c = sub.ehrhart.poly
        if not c[1] < 0:
            raise SearchExhausted("case4", pattern)
        r0 = 1 + _floor_ratio(2, c[1])
        quad_rest = Poly((1, 2))
        for r in _retry_scales(r0):
            qr = c.compose_scale(r)
            a = _solve_linear(qr.shift(2), qr * quad_rest, pattern, d)
            if a is None:
                continue
            expr = sub.expr.dilated(r) * PolytopeExpr(((1, Quad(a)),))
            if verify_expr(expr, pattern):
                return _finish(expr, pattern, (f"case4[r={r},a={a}]",) + sub.trace)
        raise SearchExhausted("case4", pattern)

    # Case 5: two consecutive +1 -> split product r*Q1 x Q2 / Q1 x r*Q2
    if any(pattern[i] == pattern[i + 1] == 1 for i in range(len(pattern) - 1)):
        for d1 in range(d - 2, 1, -1):
            d2 = d - d1
            if d2 < 2 or d1 < d2:
                continue
            # s_i = pattern[d-2-i]
            def s(i):
                return pattern[d - 2 - i]

            if d1 <= d - 2 and s(d1) == 1 and s(d1 - 1) == 1:
                sub1 = _construct(pattern[d - d1 :], max_b, cap)  # dims d1
                sub2 = _construct(pattern[: d2 - 2], max_b, cap)  # dims d2
                r0 = _product_threshold(
                    sub1.ehrhart.poly, d1, sub2.ehrhart.poly, pattern, d
                )
                if r0 is not None:
                    for r in _retry_scales(r0):
                        expr = sub1.expr.dilated(r) * sub2.expr
                        if verify_expr(expr, pattern):
                            return _finish(
                                expr,
                                pattern,
                                (f"case5.1[d1={d1},d2={d2},r={r}]",)
                                + sub1.trace
                                + sub2.trace,
                            )
                raise SearchExhausted("case5.1", pattern)
            if d2 <= d - 2 and s(d2) == 1 and s(d2 - 1) == 1:
                sub1 = _construct(pattern[: d1 - 2], max_b, cap)  # dims d1
                sub2 = _construct(pattern[d - d2 :], max_b, cap)  # dims d2
                r0 = _product_threshold(
                    sub2.ehrhart.poly, d2, sub1.ehrhart.poly, pattern, d
                )
                if r0 is not None:
                    for r in _retry_scales(r0):
                        expr = sub1.expr * sub2.expr.dilated(r)
                        if verify_expr(expr, pattern):
                            return _finish(
                                expr,
                                pattern,
                                (f"case5.2[d1={d1},d2={d2},r={r}]",)
                                + sub1.trace
                                + sub2.trace,
                            )
                raise SearchExhausted("case5.2", pattern)
        raise SearchExhausted("case5", pattern)

    # Case 6: the residual shape always decomposes
    d_list = decompose_pattern(pattern)
    if d_list is None:
        raise AssertionError(
            f"internal error: no case applies to {format_pattern(pattern)} "
            "(cases 1-6 should be exhaustive)"
        )
    expr, ehr, b = construct_case6(d_list, max_b)
    return ConstructResult(expr, ehr, (f"case6[d_list={d_list},b={b}]",))


# --- base catalog ------------------------------------------------------------

_CATALOG_R_GRID = [1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024]
_CATALOG_M_GRID = [1, 2, 6, 13, 18, 19, 20, 40, 100, 120, 200]


def generate_base_catalog() -> dict:
    """Recompute the d=3 and d=4 witnesses (deterministic bounded search);
    returns the JSON-ready structure of the checked-in data file."""
    out: dict = {"3": {}, "4": {}}
    for pat, m in (("+", 1), ("-", 13)):
        expr = PolytopeExpr(((1, ReeveT(m)),))
        if not verify_expr(expr, parse_pattern(pat)):
            raise AssertionError(f"d=3 witness for {pat} failed")
        out["3"][pat] = expr_to_json(expr)

    wanted = {pat: parse_pattern(pat) for pat in ("++", "+-", "-+", "--")}
    found: dict = {}
    for r1 in _CATALOG_R_GRID:
        for m1 in _CATALOG_M_GRID:
            for r2 in _CATALOG_R_GRID:
                for m2 in _CATALOG_M_GRID:
                    expr = PolytopeExpr(((r1, Interval(m1)), (r2, ReeveT(m2))))
                    ehr = expr_ehrhart(expr)
                    sv = sign_vector(ehr)
                    for pat, target in wanted.items():
                        if pat not in found and sv == target:
                            found[pat] = expr_to_json(expr)
                    if len(found) == len(wanted):
                        out["4"] = {p: found[p] for p in wanted}
                        return out
    missing = set(wanted) - set(found)
    raise AssertionError(f"d=4 catalog search failed for {missing}")
