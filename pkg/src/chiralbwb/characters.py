"""Character formulas at the critical level and the engines that cross-check them.

All characters are :class:`~chiralbwb.charseries.CharSeries` on a common
``(N, D)`` window.  ``q`` stands for ``e^{-delta}`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import charseries as cs
from .charseries import CharSeries, QSeries
from .rootdata import RootSystem, as_weight, frac_str, wadd, wscale, wsub
from .weyl import (enumerate_weyl_group, identity_element, strata,
                   weyl_action)


# -- preconditions ------------------------------------------------------------


def _check_dominant_integral(rs: RootSystem, lam):
    rs.check_rank(lam)
    if not rs.is_integral(lam):
        raise ValueError(f"weight {_fmt(lam)} is not integral")
    if not rs.is_dominant(lam):
        raise ValueError(f"weight {_fmt(lam)} is not dominant")


def check_regular_dominant(rs: RootSystem, nu0):
    """``nu0`` must be integral with every coordinate at least 1."""
    nu0 = as_weight(nu0)
    _check_dominant_integral(rs, nu0)
    if any(c == 0 for c in nu0):
        raise ValueError(f"weight {_fmt(nu0)} is dominant but not regular")
    return nu0


def _fmt(lam):
    return "(" + ", ".join(str(Fraction(c)) for c in lam) + ")"


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> tuple:
    return tuple(enumerate_weyl_group(rs))


# -- finite characters --------------------------------------------------------


def weyl_dimension(rs: RootSystem, lam) -> int:
    shifted = wadd(as_weight(lam), rs.rho)
    num = Fraction(1)
    for p in rs.positive_roots:
        num *= rs.coroot_pairing(shifted, p) / rs.coroot_pairing(rs.rho, p)
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=None)
def _freudenthal(rs: RootSystem, lam: tuple) -> dict:
    """Weight multiplicities of ``V_lam`` keyed by simple-root depth ``lam - mu``."""
    r = rs.rank
    B = rs.form
    pos = [p.root_coords for p in rs.positive_roots]

    def ip(x, y):
        return sum(x[i] * B[i][j] * y[j] for i in range(r) for j in range(r))

    top = tuple(rs.to_root_coords(wadd(lam, rs.rho)))
    top_norm = ip(top, top)
    max_h = int(2 * rs.height(lam))
    mult = {tuple([0] * r): 1}
    frontier = {tuple([0] * r)}
    for h in range(1, max_h + 1):
        candidates = set()
        for beta in frontier:
            for i in range(r):
                candidates.add(tuple(b + (k == i) for k, b in enumerate(beta)))
        frontier = set()
        for beta in sorted(candidates):
            mu_rho = tuple(t - b for t, b in zip(top, beta))  # mu + rho, root coords
            total = Fraction(0)
            for a in pos:
                k = 1
                while True:
                    up = tuple(b - k * x for b, x in zip(beta, a))
                    if min(up) < 0:
                        break
                    m = mult.get(up)
                    if m:
                        # (mu + k alpha, alpha)
                        total += m * ip(tuple(x - y + k * z for x, y, z in zip(mu_rho, rs.to_root_coords(rs.rho), a)), a)
                    k += 1
            denom = top_norm - ip(mu_rho, mu_rho)
            if denom == 0:
                assert total == 0
                continue
            m = 2 * total / denom
            assert m.denominator == 1 and m >= 0
            if m:
                mult[beta] = int(m)
                frontier.add(beta)
    return mult


def weight_multiplicities(rs: RootSystem, lam) -> dict:
    """``{mu: multiplicity}`` for the irreducible module ``V_lam``."""
    lam = as_weight(lam)
    _check_dominant_integral(rs, lam)
    return {wsub(lam, rs.from_root_coords(beta)): m for beta, m in _freudenthal(rs, lam).items()}


def weyl_character(rs: RootSystem, lam, trunc=None):
    """Finite character of ``V_lam`` by Freudenthal's recursion.

    Returns ``(series, dimension)``; the series sits at delta-degree 0 with
    leading weight ``lam``.  ``trunc`` defaults to a window holding every weight.
    """
    lam = as_weight(lam)
    _check_dominant_integral(rs, lam)
    mult = _freudenthal(rs, lam)
    if trunc is None:
        trunc = (0, int(2 * rs.height(lam)))
    terms = {(beta, 0): m for beta, m in mult.items()}
    dim = sum(mult.values())
    return CharSeries(rs, lam, trunc, terms), dim


def finite_character_dict(rs: RootSystem, lam) -> dict:
    return weight_multiplicities(rs, lam)


# -- affine characters --------------------------------------------------------


def ch_verma_affine(rs: RootSystem, lam, trunc) -> CharSeries:
    """Full affine Verma module: real roots plus imaginary roots of multiplicity rank."""
    N = trunc[0]
    zero = tuple(0 for _ in range(rs.rank))
    factors = cs.real_root_factors(rs, "positive_real", N)
    factors += [(zero, n) for n in range(1, N + 1) for _ in range(rs.rank)]
    return cs.product_of_inverses(rs, factors, trunc, leading=as_weight(lam))


def ch_restricted_verma(rs: RootSystem, lam, trunc) -> CharSeries:
    """Verma module modulo the negative modes of the centre: real roots only."""
    factors = cs.real_root_factors(rs, "positive_real", trunc[0])
    return cs.product_of_inverses(rs, factors, trunc, leading=as_weight(lam))


def ch_wakimoto(rs: RootSystem, w, nu0, trunc) -> CharSeries:
    nu0 = as_weight(nu0)
    if not rs.is_integral(nu0):
        raise ValueError(f"weight {_fmt(nu0)} is not integral")
    return ch_restricted_verma(rs, weyl_action(rs, w, nu0, "dot"), trunc)


def alternating_numerator(rs: RootSystem, nu0, trunc) -> CharSeries:
    """``sum_w (-1)^l(w) e^{w . nu0}``."""
    terms = [(w.sign, cs.monomial(rs, weyl_action(rs, w, nu0, "dot"), 0, 1, trunc))
             for w in weyl_group(rs)]
    return cs.linear_combine(terms)


def euler_chiral(rs: RootSystem, nu0, trunc, path: str = "wakimoto_sum") -> CharSeries:
    """Euler character of the chiral line bundle sheaf.

    ``wakimoto_sum`` adds the signed Wakimoto characters over ``W``;
    ``factored`` multiplies the Weyl character of ``V_nu0`` by the
    ``n >= 1`` real-root product.
    """
    nu0 = check_regular_dominant(rs, nu0)
    if path == "wakimoto_sum":
        return cs.linear_combine([(w.sign, ch_wakimoto(rs, w, nu0, trunc)) for w in weyl_group(rs)])
    if path == "factored":
        s, _ = weyl_character(rs, nu0, trunc)
        for root, n in cs.real_root_factors(rs, "real_n_ge_1", trunc[0]):
            s = cs.divide_by_factor(s, root, n)
        return s
    raise ValueError(f"unknown path {path!r}; use 'wakimoto_sum' or 'factored'")


def shift_exponents(rs: RootSystem, nu0) -> list:
    """``<nu0 + rho, alpha^vee>`` over the positive roots."""
    shifted = wadd(as_weight(nu0), rs.rho)
    return [int(rs.coroot_pairing(shifted, p)) for p in rs.positive_roots]


def ch_irreducible_critical(rs: RootSystem, nu0, trunc) -> CharSeries:
    """Character of the simple quotient of the Weyl module by its central character.

    Computed as the alternating numerator divided by the positive real root
    product and by ``prod_{alpha>0} (1 - q^{<nu0+rho, alpha^vee>})``.
    """
    nu0 = check_regular_dominant(rs, nu0)
    s = alternating_numerator(rs, nu0, trunc)
    zero = tuple(0 for _ in range(rs.rank))
    for m in shift_exponents(rs, nu0):
        s = cs.divide_by_factor(s, zero, m)
    for root, n in cs.real_root_factors(rs, "positive_real", trunc[0]):
        s = cs.divide_by_factor(s, root, n)
    return s


# -- cohomology shifts and the denominator identity ---------------------------


def cohomology_shifts(rs: RootSystem, nu0) -> dict:
    """``{i: sorted shifts <nu0 - w.nu0, rho^vee> over l(w) = i}``."""
    nu0 = check_regular_dominant(rs, nu0)
    out = {}
    for i, layer in enumerate(strata(weyl_group(rs))):
        shifts = []
        for w in layer:
            s = rs.height(wsub(nu0, weyl_action(rs, w, nu0, "dot")))
            assert s.denominator == 1
            shifts.append(int(s))
        out[i] = sorted(shifts)
    return out


def shift_polynomial(shifts: dict) -> list:
    """``sum_i (-1)^i sum_s q^s`` as a coefficient list."""
    top = max(max(v) for v in shifts.values())
    poly = [0] * (top + 1)
    for i, layer in shifts.items():
        for s in layer:
            poly[s] += (-1) ** i
    return poly


def denominator_product(rs: RootSystem, nu0) -> list:
    """``prod_{alpha>0} (1 - q^{<nu0+rho, alpha^vee>})`` as a coefficient list."""
    poly = [1]
    for m in shift_exponents(rs, nu0):
        new = poly + [0] * m
        for i, c in enumerate(poly):
            new[i + m] -= c
        poly = new
    return poly


def _trim(poly):
    poly = list(poly)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def format_q_polynomial(poly) -> str:
    parts = []
    for i, c in enumerate(poly):
        if c == 0:
            continue
        mag = abs(c)
        body = "" if (mag == 1 and i) else str(mag)
        if i == 1:
            body += "q"
        elif i > 1:
            body += f"q^{i}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def verify_denominator_identity(rs: RootSystem, nu0):
    """Return ``(equal, lhs, rhs)`` for the signed shift sum versus the product."""
    lhs = _trim(shift_polynomial(cohomology_shifts(rs, nu0)))
    rhs = _trim(denominator_product(rs, nu0))
    return lhs == rhs, lhs, rhs


# -- the chiral Borel-Weil-Bott check ------------------------------------------


def cohomology_assembly(rs: RootSystem, nu0, trunc) -> CharSeries:
    """``sum_i (-1)^i sum_{s in shifts(i)} q^s ch V`` with ``V`` the irreducible quotient."""
    irr = ch_irreducible_critical(rs, nu0, trunc)
    zero = tuple(0 for _ in range(rs.rank))
    poly = shift_polynomial(cohomology_shifts(rs, nu0))
    pieces = []
    for s, c in enumerate(poly):
        if c and s <= trunc[0]:
            pieces.append((c, cs.mul(irr, cs.monomial(rs, zero, s, 1, trunc))))
    return cs.linear_combine(pieces)


def _tables(a: CharSeries, b: CharSeries) -> dict:
    x, y = cs.align([a, b])
    N, D = cs.common_window([x, y])
    tables = {}
    keys = sorted({k for k in list(x.terms) + list(y.terms) if k[1] <= N and sum(k[0]) <= D},
                  key=lambda k: (k[1], k[0]))
    for k in keys:
        mu, n = x.weight_of(k)
        tables.setdefault(str(n), []).append(
            {"weight": [frac_str(c) for c in mu], "lhs": str(x.terms.get(k, 0)),
             "rhs": str(y.terms.get(k, 0))})
    return tables


def verify_chiral_bwb(rs: RootSystem, nu0, trunc) -> dict:
    nu0 = check_regular_dominant(rs, nu0)
    lhs = euler_chiral(rs, nu0, trunc, "wakimoto_sum")
    rhs = cohomology_assembly(rs, nu0, trunc)
    ok, first = cs.window_equal(lhs, rhs)
    report = {
        "claim": "euler character (alternating Wakimoto sum) equals "
                 "sum_i (-1)^i sum_shifts q^s ch V_irreducible",
        "cartan": str(rs.cartan_type),
        "weight": [frac_str(c) for c in nu0],
        "window": {"N": trunc[0], "D": trunc[1]},
        "pass": ok,
        "tables": _tables(lhs, rhs),
    }
    if not ok:
        report["first_discrepancy"] = first
    return report


# -- q-dimensions -------------------------------------------------------------


def q_dim_formula(rs: RootSystem, which: str, lam, N: int) -> QSeries:
    """Closed product formulas for q-dimensions.

    ``weyl_module``  dim V * prod (1-q^j)^(-dim g)
    ``chiral_euler`` dim V * prod (1-q^j)^(-2 dim X)
    ``irreducible``  the above times prod_{alpha>0} (1-q^{<lam+rho, alpha^vee>})^(-1)
    """
    lam = as_weight(lam)
    if which == "weyl_module":
        _check_dominant_integral(rs, lam)
        return weyl_dimension(rs, lam) * cs.euler_power(rs.dim_g, N)
    if which == "chiral_euler":
        check_regular_dominant(rs, lam)
        return weyl_dimension(rs, lam) * cs.euler_power(2 * rs.dim_flag, N)
    if which == "irreducible":
        check_regular_dominant(rs, lam)
        out = weyl_dimension(rs, lam) * cs.euler_power(2 * rs.dim_flag, N)
        for m in shift_exponents(rs, lam):
            out = out * cs.inverse_factor_q(m, N)
        return out
    raise ValueError(f"unknown q-dimension formula {which!r}")


# -- Kac-Kazhdan and blocks ---------------------------------------------------


@dataclass(frozen=True)
class KKSolution:
    root: tuple
    n: int
    predicted_weights: tuple = field(default=())   # (weight, delta-degree) pairs
    marked_weight: tuple | None = None              # the weight lam + N(alpha - <alpha,rho^vee> delta)


def kac_kazhdan_singular_weights(rs: RootSystem, lam, delta_bound: int) -> list:
    """Positive roots with ``<lam + rho, alpha^vee> = n`` a negative integer.

    For each, the critical-level family ``lam + n(-alpha + m delta)``, ``m > 0``,
    is listed up to delta-degree ``delta_bound``, together with the weight
    ``lam + |n| (alpha - <alpha, rho^vee> delta)``.
    """
    lam = as_weight(lam)
    rs.check_rank(lam)
    shifted = wadd(lam, rs.rho)
    out = []
    for p in rs.positive_roots:
        n = rs.coroot_pairing(shifted, p)
        if n.denominator != 1 or n >= 0:
            continue
        n = int(n)
        finite = wsub(lam, wscale(n, p.root))          # lam + |n| alpha
        family = tuple((finite, -n * m) for m in range(1, delta_bound // -n + 1))
        marked = (finite, -n * p.height)
        out.append(KKSolution(p.root, n, family, marked))
    return out


def predicted_singular_weights(rs: RootSystem, lam, delta_bound: int) -> set:
    """Weights at which singular vectors may occur in the critical-level Verma module.

    Closure of ``{(lam, 0)}`` under the real-root Kac-Kazhdan moves (both
    signs of the pairing) and the imaginary moves ``mu -> mu - j delta``,
    which at the critical level are always allowed.  Pairs are
    ``(weight, delta-degree)`` with degree at most ``delta_bound``.
    """
    lam = as_weight(lam)
    start = (lam, 0)
    found = {start}
    todo = [start]
    while todo:
        mu, d = todo.pop()
        moves = [(mu, d + j) for j in range(1, delta_bound - d + 1)]
        shifted = wadd(mu, rs.rho)
        for p in rs.positive_roots:
            N = rs.coroot_pairing(shifted, p)
            if N.denominator != 1 or N == 0:
                continue
            N = int(N)
            if N > 0:
                # beta = alpha + m delta, m >= 0: lam - N beta
                target = wsub(mu, wscale(N, p.root))
                moves += [(target, d + N * m) for m in range(0, (delta_bound - d) // N + 1)]
            else:
                # beta = -alpha + m delta, m >= 1, pairing -N > 0
                target = wadd(mu, wscale(-N, p.root))
                moves += [(target, d - N * m) for m in range(1, (delta_bound - d) // -N + 1)]
        for mv in moves:
            if mv[1] <= delta_bound and mv not in found:
                found.add(mv)
                todo.append(mv)
    return found


def block_representative(rs: RootSystem, lam):
    """Dominant representative of the dot orbit ``W . lam``.

    Returns ``(rep, singular)``; when ``lam + rho`` is singular the
    representative lies on a wall and ``singular`` is True.
    """
    lam = as_weight(lam)
    rs.check_rank(lam)
    v = list(wadd(lam, rs.rho))
    A = rs.cartan_matrix
    while True:
        i = next((i for i, c in enumerate(v) if c < 0), None)
        if i is None:
            break
        c = v[i]
        v = [v[k] - c * A[k][i] for k in range(rs.rank)]
    rep = wsub(tuple(v), rs.rho)
    return rep, any(c == 0 for c in v)


# -- Wakimoto invariants -------------------------------------------------------


def _w_image_split(rs: RootSystem, w, source_sign: int):
    """Roots of ``w(sign * Delta_+)`` split into positive and negative ones."""
    pos, neg = [], []
    for p in rs.positive_roots:
        img = w.apply(wscale(source_sign, p.root))
        if img in rs._root_index:
            pos.append(img)
        else:
            neg.append(img)
    return pos, neg


def wakimoto_invariants_character(rs: RootSystem, w, nu0, trunc) -> CharSeries:
    """Character of the invariants of ``Lw(n_+) cap hat n_+`` in the Wakimoto module."""
    nu0 = as_weight(nu0)
    if not rs.is_integral(nu0):
        raise ValueError(f"weight {_fmt(nu0)} is not integral")
    N = trunc[0]
    pos, neg = _w_image_split(rs, w, -1)
    factors = [(a, n) for a in pos for n in range(0, N + 1)]
    factors += [(a, n) for a in neg for n in range(1, N + 1)]
    return cs.product_of_inverses(rs, factors, trunc, leading=weyl_action(rs, w, nu0, "dot"))


def twisted_nminus_character(rs: RootSystem, w, trunc) -> CharSeries:
    """Character of ``U(Lw(n_-) cap hat n_-)``."""
    N = trunc[0]
    pos, neg = _w_image_split(rs, w, 1)
    factors = [(a, n) for a in pos for n in range(0, N + 1)]
    factors += [(a, n) for a in neg for n in range(1, N + 1)]
    return cs.product_of_inverses(rs, factors, trunc)


__all__ = [
    "KKSolution", "alternating_numerator", "block_representative", "ch_irreducible_critical",
    "ch_restricted_verma", "ch_verma_affine", "ch_wakimoto", "check_regular_dominant",
    "cohomology_assembly", "cohomology_shifts", "denominator_product", "euler_chiral",
    "format_q_polynomial", "identity_element", "kac_kazhdan_singular_weights",
    "predicted_singular_weights", "q_dim_formula", "shift_exponents", "shift_polynomial",
    "twisted_nminus_character", "verify_chiral_bwb", "verify_denominator_identity",
    "wakimoto_invariants_character", "weight_multiplicities", "weyl_character",
    "weyl_dimension", "weyl_group",
]
