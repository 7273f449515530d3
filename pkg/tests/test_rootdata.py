from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chiralbwb.rootdata import CartanType, build_root_system, pairing, wadd

TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"]

# |Delta_+| and dual Coxeter numbers: standard tables
KNOWN = {"A1": (1, 2), "A2": (3, 3), "A3": (6, 4), "B2": (4, 3), "B3": (9, 5), "C3": (9, 4),
         "D4": (12, 6), "G2": (6, 4), "F4": (24, 9), "E6": (36, 12)}


@pytest.mark.parametrize("name", TYPES)
def test_counts_and_dual_coxeter(rs_cache, name):
    rs = rs_cache(name)
    assert (len(rs.positive_roots), rs.dual_coxeter) == KNOWN[name]


@pytest.mark.parametrize("name", TYPES)
def test_root_invariants(rs_cache, name):
    rs = rs_cache(name)
    for p in rs.positive_roots:
        assert rs.coroot_pairing(p.root, p) == 2
    half_sum = [Fraction(0)] * rs.rank
    for p in rs.positive_roots:
        half_sum = wadd(half_sum, p.root)
    assert tuple(x / 2 for x in half_sum) == rs.rho
    assert max(rs.inner(p.root, p.root) for p in rs.positive_roots) == 2
    A = rs.cartan_matrix
    for i in range(rs.rank):
        for j in range(rs.rank):
            assert rs.simple_roots[j][i] == A[i][j]


def test_a2_roots_and_pairings(rs_cache):
    rs = rs_cache("A2")
    assert sorted(p.root_coords for p in rs.positive_roots) == [(0, 1), (1, 0), (1, 1)]
    theta = rs.highest_root.root
    assert pairing(rs, (2, 2), theta) == 4


def test_a1_pairings(rs_cache):
    rs = rs_cache("A1")
    alpha = rs.positive_roots[0].root
    assert pairing(rs, (1,), alpha) == 1
    assert pairing(rs, wadd((1,), rs.rho), alpha) == 2
    assert rs.rho == (1,)


def test_g2_count_matches_dimension(rs_cache):
    rs = rs_cache("G2")
    assert rs.dim_g - rs.rank == 2 * len(rs.positive_roots) == 12


@pytest.mark.parametrize("bad", ["E5", "G3", "D3", "B1", "H3", "A", "A9", "E9"])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        build_root_system(bad)


def test_pairing_rejects_non_roots(rs_cache):
    rs = rs_cache("A2")
    with pytest.raises(ValueError):
        pairing(rs, (1, 1), (2, 0))
    with pytest.raises(ValueError):
        pairing(rs, (1,), rs.positive_roots[0].root)


def test_cartan_parse_roundtrip():
    assert str(CartanType.parse(" g2 ")) == "G2"


@given(st.lists(st.fractions(max_denominator=5), min_size=2, max_size=2),
       st.lists(st.fractions(max_denominator=5), min_size=2, max_size=2),
       st.integers(-3, 3))
def test_pairing_is_linear(a, b, c):
    rs = build_root_system("B2")
    for p in rs.positive_roots:
        lhs = rs.coroot_pairing(wadd([c * x for x in a], b), p)
        assert lhs == c * rs.coroot_pairing(a, p) + rs.coroot_pairing(b, p)
