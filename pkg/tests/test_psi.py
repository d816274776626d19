from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quiverdims.psi import (at_space, av_closed_forms, av_dims, av_serre_homology, kw_bounds, psi,
                            psi_graded_dims, verify_exact, width)

SMALL = [(0, 0), (0, 0, 0), (0, 1), (-1, 0, 1)]


def test_low_spaces():
    V = (0, 1)
    assert psi(V, 0).dim == 1
    assert psi(V, 1).dim == 2
    assert psi(V, 2).dim == 3          # V (x) V* minus the trace
    assert psi_graded_dims(V, 2) == Counter({-1: 1, 0: 1, 1: 1})


@pytest.mark.parametrize("V", SMALL)
def test_direct_matches_recursion(V):
    for n in range(0, 6):
        assert psi(V, n).graded_dims() == psi_graded_dims(V, n)


@pytest.mark.parametrize("V", SMALL)
@pytest.mark.parametrize("i", range(0, 6))
def test_exact_sequences(V, i):
    assert verify_exact(V, i).ok


def test_one_dimensional_space_breaks_exactness():
    with pytest.raises(ValueError):
        verify_exact((0,), 2)
    r = verify_exact((0,), 2, strict=False)
    assert not r.ok


@pytest.mark.parametrize("V", SMALL)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_extreme_degrees(V, k):
    r = kw_bounds(V, k)
    assert r["match"], r
    assert r["witness_in_psi"] in (None, True)


@pytest.mark.parametrize("V", SMALL + [(0, 2), (-2, 0, 1, 1)])
def test_av_closed_forms(V):
    for m in range(1, 7):
        h = av_serre_homology(V, m, direct=False)
        assert {"sup": h["sup"], "inf": h["inf"]} == av_closed_forms(V, m)


def test_av_direct_and_recursive_agree():
    for m in range(1, 5):
        assert av_serre_homology((0, 1), m, True)["inf"] == av_serre_homology((0, 1), m, False)["inf"]


def test_av_dims_limits():
    (ls, us), rows = av_dims((-1, 0, 1), 8)
    assert (ls, us) == (-1, 3)
    assert rows[-1][4] == Fraction(11, 4)


def test_ambient_cap():
    with pytest.raises(MemoryError):
        psi((0, 1, 2, 3), 9)


@given(st.lists(st.integers(-2, 2), min_size=2, max_size=3), st.integers(0, 7))
@settings(max_examples=60, deadline=None)
def test_euler_characteristic(V, n):
    V = tuple(sorted(V))
    g = psi_graded_dims(V, n)
    assert all(c > 0 for c in g.values())
    total = sum(at_space(V, n).values())
    assert sum(g.values()) <= total


@given(st.lists(st.integers(-2, 2), min_size=2, max_size=3), st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_width_bounds_on_degrees(V, k):
    V = tuple(sorted(V))
    g = psi_graded_dims(V, 2 * k)
    w = width(V)
    assert max(g) == k * w and min(g) == -k * w
