"""Truncated highest weight modules for affine sl2.

Modes ``x_m`` with ``x in {e, h, f}`` obey

    [h_a, e_b] = 2 e_{a+b}        [h_a, f_b] = -2 f_{a+b}
    [e_a, f_b] = h_{a+b} + a k delta_{a+b,0}
    [h_a, h_b] = 2 a k delta_{a+b,0}

(invariant form with ``(e, f) = 1``, ``(h, h) = 2``).  The creation operators
are ``f_0`` and ``x_{-n}`` for ``n >= 1``; a PBW monomial is a sorted tuple of
generators ``(kind, n)`` standing for ``x_{-n}``, applied to ``v_lam`` with
``e_m v = f_m v = h_m v = 0`` for ``m >= 1``, ``e_0 v = 0`` and ``h_0 v = lam v``.

Layers are indexed by the conformal degree ``c`` (sum of the ``n``) and
``j = #f - #e``, so the weight is ``lam - j alpha`` (``lam - 2j`` in the
fundamental coordinate).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..linalg import Echelon, _axpy

CRITICAL_LEVEL = -2
_KIND_ORDER = {"e": 0, "h": 1, "f": 2}


def _gen_key(g):
    return (g[1], _KIND_ORDER[g[0]])


def is_creation(kind: str, m: int) -> bool:
    return m < 0 or (m == 0 and kind == "f")


def mono_conformal(mono) -> int:
    return sum(n for _, n in mono)


def mono_j(mono) -> int:
    return sum((k == "f") - (k == "e") for k, _ in mono)


def mono_str(mono) -> str:
    if not mono:
        return "v"
    return " ".join(f"{k}_{{{-n}}}" for k, n in mono) + " v"


def bracket(a, b, level):
    """``[a, b]`` for modes ``a = (x, m)``; returns ``(terms, scalar)``."""
    (x, p), (y, q) = a, b
    s = p + q
    central = 1 if s == 0 else 0
    if x == y:
        if x == "h":
            return [], 2 * p * level * central
        return [], 0
    if x == "h":
        return [(y, s, 2 if y == "e" else -2)], 0
    if y == "h":
        return [(x, s, -2 if x == "e" else 2)], 0
    if x == "e":  # y == f
        return [("h", s, 1)], p * level * central
    return [("h", s, -1)], -q * level * central  # [f_p, e_q]


def pbw_basis(c: int, j: int) -> list:
    """Sorted PBW monomials of conformal degree ``c`` with ``#f - #e = j``."""
    out = []
    gens = [(k, n) for n in range(1, c + 1) for k in ("e", "h", "f")]

    def rec(start, remaining, acc):
        if remaining == 0:
            nf0 = j - mono_j(acc)
            if nf0 >= 0:
                out.append(tuple(sorted(acc + [("f", 0)] * nf0, key=_gen_key)))
            return
        for i in range(start, len(gens)):
            g = gens[i]
            if g[1] <= remaining:
                rec(i, remaining - g[1], acc + [g])

    rec(0, c, [])
    return sorted(set(out), key=lambda m: [_gen_key(g) for g in m])


class VermaSL2:
    """Verma module ``M_{lam,k}`` over affine sl2, explored lazily up to ``cutoff``."""

    def __init__(self, lam, level=CRITICAL_LEVEL, cutoff: int = 4):
        if cutoff < 0:
            raise ValueError("cutoff must be non-negative")
        self.lam = Fraction(lam)
        self.level = Fraction(level)
        self.cutoff = cutoff
        self._act = lru_cache(maxsize=None)(self._act_uncached)

    def describe(self):
        return {"module": "verma", "lambda": str(self.lam), "level": str(self.level),
                "cutoff": self.cutoff}

    def layer(self, c: int, j: int) -> list:
        if c < 0 or c > self.cutoff:
            return []
        return pbw_basis(c, j)

    def weight(self, j: int) -> Fraction:
        return self.lam - 2 * j

    def act(self, kind: str, m: int, label) -> dict:
        """``x_m`` applied to a basis monomial, as ``{monomial: coefficient}``."""
        return self._act((kind, m), label)

    def act_vec(self, kind: str, m: int, vec: dict) -> dict:
        out = {}
        for label, c in vec.items():
            _axpy(out, c, self.act(kind, m, label))
        return out

    def _act_uncached(self, op, mono) -> dict:
        kind, m = op
        if m > mono_conformal(mono):
            return {}
        if not mono:
            if is_creation(kind, m):
                return {((kind, -m),): Fraction(1)}
            if kind == "h" and m == 0:
                return {(): self.lam} if self.lam else {}
            return {}
        g1 = mono[0]
        if is_creation(kind, m) and _gen_key((kind, -m)) <= _gen_key(g1):
            return {((kind, -m),) + mono: Fraction(1)}
        rest = mono[1:]
        out = {}
        # g1 (op rest)
        for mono2, c in self._act(op, rest).items():
            _axpy(out, c, self._act((g1[0], -g1[1]), mono2))
        # [op, g1] rest
        terms, scalar = bracket(op, (g1[0], -g1[1]), self.level)
        for y, s, c in terms:
            _axpy(out, c, self._act((y, s), rest))
        if scalar:
            _axpy(out, scalar, {rest: 1})
        return out


class QuotientModule:
    """``base / sum_j S_{-j} base`` layer by layer, ``S`` the Sugawara modes."""

    def __init__(self, base: VermaSL2, chi=None):
        self.base = base
        self.lam = base.lam
        self.level = base.level
        self.cutoff = base.cutoff
        self.chi = list(chi or [])
        self._reducers = {}

    def describe(self):
        d = self.base.describe()
        d["module"] = "sugawara_quotient"
        d["chi"] = [str(x) for x in self.chi]
        return d

    def weight(self, j):
        return self.base.weight(j)

    def reducer(self, c: int, j: int) -> Echelon:
        key = (c, j)
        if key not in self._reducers:
            ech = Echelon()
            for i in range(1, c + 1):
                for mono in self.base.layer(c - i, j):
                    ech.add(sugawara(self.base, -i, {mono: 1}))
            self._reducers[key] = ech
        return self._reducers[key]

    def layer(self, c: int, j: int) -> list:
        ech = self.reducer(c, j)
        return [m for m in self.base.layer(c, j) if m not in ech.pivots]

    def reduce(self, vec: dict) -> dict:
        out = {}
        by_layer = {}
        for mono, c in vec.items():
            by_layer.setdefault((mono_conformal(mono), mono_j(mono)), {})[mono] = c
        for (c, j), part in by_layer.items():
            _axpy(out, 1, self.reducer(c, j).reduce(part))
        return out

    def act(self, kind: str, m: int, label) -> dict:
        return self.reduce(self.base.act(kind, m, label))

    def act_vec(self, kind, m, vec):
        out = {}
        for label, c in vec.items():
            _axpy(out, c, self.act(kind, m, label))
        return out


def _normal_pair(module, a, b, vec):
    """``:a b: vec`` with non-negative modes moved to the right."""
    if a[1] < 0:
        return module.act_vec(a[0], a[1], module.act_vec(b[0], b[1], vec))
    return module.act_vec(b[0], b[1], module.act_vec(a[0], a[1], vec))


def sugawara(module, n: int, vec: dict) -> dict:
    """``S_n = 1/2 sum_m :e_m f_{n-m} + f_m e_{n-m} + 1/2 h_m h_{n-m}:`` applied to ``vec``."""
    if not vec:
        return {}
    top = max(mono_conformal(m) for m in vec)
    out = {}
    half = Fraction(1, 2)
    for m in range(n - top - 1, top + 2):
        for a, b, c in ((("e", m), ("f", n - m), half), (("f", m), ("e", n - m), half),
                        (("h", m), ("h", n - m), half * half)):
            _axpy(out, c, _normal_pair(module, a, b, vec))
    return out


def casimir_eigenvalue(lam) -> Fraction:
    """Eigenvalue of ``S_0`` on the highest weight vector: ``lam (lam + 2) / 4``."""
    lam = Fraction(lam)
    return lam * (lam + 2) / 4


def build_truncated_verma_sl2(lam, level=CRITICAL_LEVEL, cutoff: int = 4) -> VermaSL2:
    return VermaSL2(lam, level, cutoff)


def sugawara_restricted_verma(lam, chi=None, cutoff: int = 4) -> QuotientModule:
    """Critical-level Verma module modulo the negative Sugawara modes.

    ``chi`` lists the central character values ``[chi_0, chi_{-1}, ...]``.
    ``chi_0`` must equal ``lam (lam + 2) / 4``.  Non-zero ``chi_{-j}`` give a
    filtered quotient whose associated graded is the module built here, so
    only ``chi_0`` affects the result.
    """
    lam = Fraction(lam)
    chi = [Fraction(x) for x in (chi or [casimir_eigenvalue(lam)])]
    if chi and chi[0] != casimir_eigenvalue(lam):
        raise ValueError(f"central character chi_0 = {chi[0]} is incompatible with lambda = {lam}; "
                         f"the Sugawara zero mode acts by {casimir_eigenvalue(lam)}")
    return QuotientModule(VermaSL2(lam, CRITICAL_LEVEL, cutoff), chi)
