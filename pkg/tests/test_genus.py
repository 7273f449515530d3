import random

import pytest
from hypothesis import given, settings, strategies as st

from chiralbwb import genus as gn
from chiralbwb.characters import weyl_dimension
from chiralbwb.rootdata import build_root_system
from chiralbwb.weyl import enumerate_weyl_group, weyl_action
from oracles import colored_partitions

A1 = build_root_system("A1")
A2 = build_root_system("A2")


def test_fiber_layers():
    f = gn.fiber_character(A1, (0,), 2)
    assert f.layers[0] == {(0,): 1}
    assert f.layers[1] == {(2,): 1, (-2,): 1}
    for name in ["A1", "A2", "B2"]:
        rs = build_root_system(name)
        f = gn.fiber_character(rs, tuple(0 for _ in range(rs.rank)), 3)
        assert [f.layer_total(n) for n in range(4)] == [colored_partitions(n, 2 * rs.dim_flag)
                                                        for n in range(4)]


def test_line_bundle_euler_examples():
    assert gn.line_bundle_euler(A1, (-2,)) == {(0,): -1}
    assert gn.line_bundle_euler(A1, (-1,)) == {}
    assert gn.line_bundle_euler(A2, (-1, -1)) == {}
    assert sum(gn.line_bundle_euler(A2, (1, 1)).values()) == 8
    with pytest.raises(ValueError):
        gn.line_bundle_euler(A1, ("1/2",))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2"]), st.integers(0, 10**6))
def test_line_bundle_dot_orbit(name, seed):
    rs = build_root_system(name)
    rng = random.Random(seed)
    mu = tuple(rng.randint(-5, 5) for _ in range(rs.rank))
    W = enumerate_weyl_group(rs)
    w = W[rng.randrange(len(W))]
    a = gn.line_bundle_euler(rs, weyl_action(rs, w, mu))
    b = gn.line_bundle_euler(rs, mu)
    assert a == {k: w.sign * v for k, v in b.items()}


def test_genus_a1_and_a2():
    r = gn.elliptic_genus(A1, (1,), 4)
    assert list(r.qseries) == [2, 4, 10, 20, 40]
    assert r.report["pass"] and r.report["checks"]["euler_chiral"]
    r = gn.elliptic_genus(A2, (1, 1), 3)
    # 8 times the six-coloured partition numbers 1, 6, 27, 98
    assert list(r.qseries) == [8 * colored_partitions(n, 6) for n in range(4)] == [8, 48, 216, 784]
    assert r.report["pass"]


def test_genus_non_regular_weight():
    r = gn.elliptic_genus(A2, (0, 1), 2)
    assert r.qseries[0] == weyl_dimension(A2, (0, 1))
    assert r.report["pass"] and "note" in r.report
    with pytest.raises(ValueError):
        gn.elliptic_genus(A2, (-1, 1), 2)


def test_genus_csv():
    r = gn.elliptic_genus(A1, (1,), 2, full=False)
    assert gn.genus_csv(r.qseries) == "degree,coefficient\n0,2\n1,4\n2,10\n"
