"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v -s`` to see the lines, or
``python tests/test_acceptance.py`` for the summary alone.
"""

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chiralbwb import characters as ch  # noqa: E402
from chiralbwb import charseries as cs  # noqa: E402
from chiralbwb import genus as gn  # noqa: E402
from chiralbwb.brst.complex import build_complex, ds_cohomology  # noqa: E402
from chiralbwb.brst.singular import scan_singular_vectors  # noqa: E402
from chiralbwb.brst.verma import VermaSL2, sugawara_restricted_verma  # noqa: E402
from chiralbwb.rootdata import build_root_system  # noqa: E402
from oracles import colored_partitions, partitions  # noqa: E402

BWB_CASES = [("A1", (1,)), ("A1", (2,)), ("A2", (1, 1)), ("B2", (1, 1))]


def criterion_1():
    t0 = time.time()
    notes = []
    ok = True
    for name, nu0 in BWB_CASES:
        rs = build_root_system(name)
        a = ch.euler_chiral(rs, nu0, (6, 6), "wakimoto_sum")
        b = ch.euler_chiral(rs, nu0, (6, 6), "factored")
        c = ch.cohomology_assembly(rs, nu0, (6, 6))
        good = cs.window_equal(a, b)[0] and cs.window_equal(a, c)[0]
        ok &= good
        notes.append(f"{name}{list(map(int, nu0))}:{'ok' if good else 'MISMATCH'}")
    dt = time.time() - t0
    return ok and dt < 30, f"{' '.join(notes)} in {dt:.1f}s (limit 30s)"


def criterion_2():
    t0 = time.time()
    notes = []
    ok = True
    for name, nu0, N in [("A1", (1,), 4), ("A2", (1, 1), 3)]:
        rs = build_root_system(name)
        oracle = [ch.weyl_dimension(rs, nu0) * colored_partitions(n, 2 * rs.dim_flag) for n in range(N + 1)]
        product = list(ch.q_dim_formula(rs, "chiral_euler", nu0, N))
        euler = list(cs.specialize_q(ch.euler_chiral(rs, nu0, gn.genus_window(rs, nu0, N), "factored")))
        genus = list(gn.elliptic_genus(rs, nu0, N, full=False).qseries)
        good = product == euler == genus == oracle
        ok &= good
        notes.append(f"{name}: {genus}")
    ok &= notes[0].endswith("[2, 4, 10, 20, 40]") and notes[1].endswith("[8, 48, 216, 784]")
    dt = time.time() - t0
    return ok and dt < 60, (f"{'; '.join(notes)} via product, specialized Euler, weightwise BWB "
                            f"in {dt:.1f}s (A2 q^3 is 8*98; six-coloured partitions of 3 number 98)")


def criterion_3():
    count = 0
    ok = True
    rng = random.Random(2024)
    for name in ["A1", "A2", "B2", "G2"]:
        rs = build_root_system(name)
        weights = set()
        for k in range(3 ** rs.rank):
            w, x = [], k
            for _ in range(rs.rank):
                w.append(x % 3 + 1)
                x //= 3
            weights.add(tuple(w))
        grid = sorted(weights)
        randoms = [tuple(rng.randint(1, 6) for _ in range(rs.rank)) for _ in range(20)]
        for nu0 in grid + randoms:
            ok &= ch.verify_denominator_identity(rs, nu0)[0]
            count += 1
    return ok, f"{count} weights over A1, A2, B2, G2 (grid {{1,2,3}}^rank plus 20 random each)"


def criterion_4():
    rs = build_root_system("A1")
    q = list(cs.specialize_q(ch.ch_irreducible_critical(rs, (1,), gn.genus_window(rs, (1,), 3))))
    ok = q == [2, 4, 12, 24]
    for name, nu0 in BWB_CASES:
        rs = build_root_system(name)
        irr = ch.ch_irreducible_critical(rs, nu0, (6, 6))
        zero = tuple(0 for _ in range(rs.rank))
        for m in ch.shift_exponents(rs, nu0):
            irr = cs.times_factor(irr, zero, m)
        ok &= cs.window_equal(irr, ch.euler_chiral(rs, nu0, (6, 6)))[0]
    return ok, f"A1 q-dimension {q}; product identity on all criterion-1 cases"


def criterion_5():
    t0 = time.time()
    ok = True
    notes = []
    expected = [partitions(n) for n in range(5)]
    for lam in [0, 1, 2, -3]:
        cx = build_complex(VermaSL2(lam, cutoff=4))
        res = ds_cohomology(cx)
        h0 = list(res.qseries(0))
        good = cx.d_squared_zero and res.vanishes_outside(0) and h0 == expected
        ok &= good
        notes.append(f"lam={lam}:{h0}")
    dt = time.time() - t0
    return ok and dt < 300, f"d^2=0, H^(i!=0)=0, H^0 {' '.join(notes)} in {dt:.1f}s"


def criterion_6():
    rs = build_root_system("A1")
    Q = sugawara_restricted_verma(0, cutoff=3)
    r = ch.ch_restricted_verma(rs, (0,), (3, 20))
    dims_ok = all(len(Q.layer(c, j)) == r.coefficient((-2 * j,), c)
                  for c in range(4) for j in range(-c, 6))
    res = ds_cohomology(build_complex(Q))
    total = sum(res.cohomology[0].values())
    ok = dims_ok and res.d_squared_zero and res.vanishes_outside(0) and total == 1
    return ok, f"quotient layers match restricted character: {dims_ok}; certified H^0 total {total}"


def criterion_7():
    rs = build_root_system("A1")
    M = VermaSL2(-3, cutoff=3)
    hits = scan_singular_vectors(M)
    predicted = ch.predicted_singular_weights(rs, (-3,), 3)
    found = {(Fraction(h.weight), h.delta_degree) for h in hits}
    marked = (Fraction(1), 2)
    inside = all(((w,), d) in predicted or (w == -3 and d == 0) for w, d in found)
    return marked in found and inside, (f"singular vector at omega - 2 delta: {marked in found}; "
                                        f"{len(found)} detected weights all predicted: {inside}")


def criterion_8():
    cases = {"A1": [(0,), (1,), (2,), (3,)],
             "A2": [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)],
             "B2": [(0, 0), (1, 0), (0, 1), (1, 1)],
             "G2": [(0, 0), (1, 0), (0, 1), (1, 1)]}
    ok = True
    n = 0
    for name, weights in cases.items():
        rs = build_root_system(name)
        for lam in weights:
            q = gn.elliptic_genus(rs, lam, 8, full=False).qseries
            ok &= all(c > 0 for c in q)
            n += 1
    return ok, f"{n} (type, dominant weight) pairs, all coefficients positive through q^8"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8]


def _line(i, ok, detail):
    return f"criterion {i}: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.mark.parametrize("i", range(1, len(CRITERIA) + 1))
def test_criterion(i, capsys):
    ok, detail = CRITERIA[i - 1]()
    with capsys.disabled():
        print("\n" + _line(i, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failures += not ok
        print(_line(i, ok, detail))
    sys.exit(1 if failures else 0)
