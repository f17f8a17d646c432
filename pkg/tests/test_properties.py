"""Hypothesis property tests: the fast path against the naive summation,
and structural identities that should hold on arbitrary valid inputs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from ehrsign.delta import DeltaQ, difference_poly, hstar_fast, hstar_naive
from ehrsign.eulerian import lehmer_decode, lehmer_encode
from ehrsign.oracle import ehrhart_from_hstar_poly
from ehrsign.polynomials import Poly


@st.composite
def fast_path_instances(draw):
    d = draw(st.integers(min_value=2, max_value=8))
    head = tuple(
        draw(st.integers(min_value=-25, max_value=25)) for _ in range(d - 1)
    )
    bound = max(abs(q) for q in DeltaQ(head, 1).q_full)
    n = draw(st.integers(min_value=bound, max_value=bound + 300))
    return DeltaQ(head, n)


@given(fast_path_instances())
@settings(max_examples=150, deadline=None)
def test_fast_equals_naive(s):
    assert hstar_fast(s) == hstar_naive(s)


@given(fast_path_instances())
@settings(max_examples=80, deadline=None)
def test_hstar_structure(s):
    h = hstar_naive(s)
    assert h.poly[0] == 1
    assert h.normalized_volume() == s.n
    assert h.poly.degree <= s.d
    assert all(c >= 0 for c in h.poly.coeffs)


@given(fast_path_instances())
@settings(max_examples=60, deadline=None)
def test_difference_poly_telescopes(s):
    # F(x) encodes the jumps, so its coefficients sum to the final height
    f = difference_poly(s)
    total = sum(f.coeffs)
    q_sum = sum(-((-q * (s.n - 1)) // s.n) for q in s.q_full)
    assert total == q_sum


@given(fast_path_instances())
@settings(max_examples=40, deadline=None)
def test_ehrhart_count_at_t_equals_one(s):
    # only h_0 and h_1 survive at t = 1: i(P,1) = (d+1) + h_1
    h = hstar_naive(s).poly
    e = ehrhart_from_hstar_poly(h, s.d)
    assert e.eval(1) == (s.d + 1) + h[1]


@given(st.permutations(list(range(1, 8))))
def test_lehmer_round_trip(perm):
    assert lehmer_decode(lehmer_encode(tuple(perm))) == tuple(perm)


@given(st.lists(st.integers(min_value=-50, max_value=50), max_size=8),
       st.lists(st.integers(min_value=-50, max_value=50), max_size=8))
def test_poly_ring_laws(a, b):
    p, q = Poly(a or [0]), Poly(b or [0])
    assert p + q == q + p
    assert p * q == q * p
    assert (p - q) + q == p
    assert p * Poly.one() == p
    assert (p * q).eval(3) == p.eval(3) * q.eval(3)
