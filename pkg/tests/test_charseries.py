import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from chiralbwb import charseries as cs
from chiralbwb.charseries import CharSeries, QSeries
from chiralbwb.rootdata import build_root_system
from oracles import colored_partitions

A1 = build_root_system("A1")
A2 = build_root_system("A2")


def random_series(rs, rng, trunc=(3, 5), n_terms=6, leading=None):
    if leading is None:
        leading = rs.from_root_coords(tuple(rng.randint(-2, 2) for _ in range(rs.rank)))
    terms = {}
    for _ in range(n_terms):
        depth = tuple(rng.randint(0, 3) for _ in range(rs.rank))
        terms[(depth, rng.randint(0, trunc[0]))] = rng.randint(-5, 5)
    return CharSeries(rs, leading, trunc, terms)


def test_monomials():
    one = cs.monomial(A1, (0,), 0, 1, (2, 2))
    assert one.coefficient((0,)) == 1 and len(one.terms) == 1
    two = cs.monomial(A1, (1,), 0, 2, (2, 2))
    assert two.coefficient((1,)) == 2
    m = cs.monomial(A2, (1, 1), 3, -1, (3, 8))
    assert m.coefficient((1, 1), 3) == -1
    with pytest.raises(ValueError):
        cs.monomial(A1, (0,), -1, 1, (2, 2))


def test_linear_combine_examples():
    a = cs.monomial(A1, (1,), 0, 1, (0, 4))
    b = cs.monomial(A1, (-1,), 0, 1, (0, 4))
    s = a + b
    assert s.leading == (1,)
    assert sorted(s.terms) == [((0,), 0), ((1,), 0)]
    assert (a - a).is_zero()
    with pytest.raises(cs.WindowError):
        cs.linear_combine([])


def test_mul_examples():
    rng = random.Random(1)
    a = random_series(A1, rng)
    one = cs.monomial(A1, (0,), 0, 1, a.trunc)
    assert cs.window_equal(cs.mul(a, one), a)[0]
    geo = cs.invert_factor(A1, (2,), 0, (0, 6))
    fac = cs.times_factor(cs.monomial(A1, (0,), 0, 1, (0, 6)), (2,), 0)
    assert cs.mul(geo, fac).terms == {((0,), 0): 1}
    p = cs.mul(cs.monomial(A1, (1,), 0, 1, (2, 4)), cs.monomial(A1, (3,), 1, 1, (2, 4)))
    assert p.coefficient((4,), 1) == 1


def test_invert_factor_examples():
    s = cs.invert_factor(A1, (-2,), 1, (2, 2))
    assert s.weight_terms() == [((0,), 0, 1), ((2,), 1, 1), ((4,), 2, 1)]
    q = cs.invert_factor(A1, (0,), 1, (3, 10))
    assert list(cs.specialize_q(q)) == [1, 1, 1, 1]
    for bad in [((0,), 0), ((-2,), 0), ((1,), 1)]:
        with pytest.raises(ValueError):
            cs.invert_factor(A1, bad[0], bad[1], (2, 2))


@pytest.mark.parametrize("name,root,n", [("A1", (-2,), 1), ("A2", (1, 1), 0), ("A2", (-1, -1), 2),
                                         ("A2", (0, 0), 1)])
def test_invert_factor_is_inverse(name, root, n):
    rs = build_root_system(name)
    trunc = (4, 9)
    inv = cs.invert_factor(rs, root, n, trunc)
    back = cs.times_factor(inv, root, n)
    assert back.terms == {(tuple(0 for _ in range(rs.rank)), 0): 1}
    rng = random.Random(3)
    s = random_series(rs, rng, trunc)
    assert cs.window_equal(cs.divide_by_factor(s, root, n), cs.mul(s, inv))[0]


def test_imaginary_product_is_partitions():
    s = cs.affine_real_root_product(A1, "imaginary_mult_r", (4, 5))
    expected = [colored_partitions(n, 1) for n in range(5)]
    assert list(cs.specialize_q(s)) == expected == [1, 1, 2, 3, 5]
    s2 = cs.affine_real_root_product(A2, "imaginary_mult_r", (3, 7))
    assert list(cs.specialize_q(s2)) == [colored_partitions(n, 2) for n in range(4)]


def test_real_root_products():
    trunc = (3, 14)
    full = cs.affine_real_root_product(A1, "positive_real", trunc)
    fin = cs.product_of_inverses(A1, cs.real_root_factors(A1, "finite_positive", 3), trunc)
    rest = cs.affine_real_root_product(A1, "real_n_ge_1", trunc)
    assert cs.window_equal(full, cs.mul(fin, rest))[0]
    q = cs.specialize_q(rest.restrict(3, 14))
    assert list(q) == [colored_partitions(n, 2) for n in range(4)]


def test_specialize_q_rejects_tails():
    fin = cs.product_of_inverses(A1, cs.real_root_factors(A1, "finite_positive", 2), (2, 5))
    with pytest.raises(cs.SpecializationError):
        cs.specialize_q(fin)
    v, _ = __import__("chiralbwb.characters", fromlist=["x"]).weyl_character(A1, (1,), (0, 4))
    assert list(cs.specialize_q(v)) == [2]
    assert list(cs.specialize_q(cs.monomial(A2, (1, 0), 0, 1, (0, 2)))) == [1]


def test_window_equal_reports_first_key():
    rng = random.Random(5)
    a = random_series(A2, rng, (3, 6), leading=(0, 0))
    ok, rep = cs.window_equal(a, a)
    assert ok and rep is None
    bump = CharSeries(A2, (0, 0), (3, 6), {((6, 0), 3): 1})
    ok, rep = cs.window_equal(a, a + bump)
    assert not ok
    assert rep["depth"] == [6, 0] and rep["n"] == 3
    assert int(rep["right"]) - int(rep["left"]) == 1


def test_json_roundtrip():
    rng = random.Random(9)
    a = random_series(A2, rng)
    data = json.loads(json.dumps(a.to_json()))
    assert set(data) == {"leading", "trunc", "terms"}
    assert cs.window_equal(CharSeries.from_json(A2, data), a)[0]


def test_qseries_csv():
    assert QSeries([2, 4]).to_csv() == "degree,coefficient\n0,2\n1,4\n"


series_params = st.tuples(st.integers(0, 2**31), st.integers(1, 8))


@settings(max_examples=30, deadline=None)
@given(series_params, series_params, series_params)
def test_ring_laws(pa, pb, pc):
    trunc = (3, 6)
    a = random_series(A2, random.Random(pa[0]), trunc, pa[1])
    b = random_series(A2, random.Random(pb[0]), trunc, pb[1])
    c = random_series(A2, random.Random(pc[0]), trunc, pc[1])
    assert cs.window_equal(cs.mul(a, b), cs.mul(b, a))[0]
    assert cs.window_equal(cs.mul(cs.mul(a, b), c), cs.mul(a, cs.mul(b, c)))[0]
    assert cs.window_equal(cs.mul(a, b + c), cs.mul(a, b) + cs.mul(a, c))[0]


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**31))
def test_truncation_monotone(seed):
    rng = random.Random(seed)
    big = (4, 8)
    a = random_series(A1, rng, big)
    b = random_series(A1, rng, big)
    small = cs.mul(a.restrict(2, 5), b.restrict(2, 5))
    assert cs.window_equal(cs.mul(a, b).restrict(2, 5), small)[0]
