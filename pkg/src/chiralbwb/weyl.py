"""Finite Weyl groups: enumeration by reduced words, linear and dot actions."""

from __future__ import annotations

from dataclasses import dataclass
from .rootdata import RootSystem, as_weight, wadd, wsub

DEFAULT_CAP = 1_000_000


class WeylGroupTooLarge(ValueError):
    def __init__(self, partial_count, cap):
        self.partial_count = partial_count
        self.cap = cap
        super().__init__(f"Weyl group enumeration exceeded cap {cap} "
                         f"(stopped after {partial_count} elements)")


@dataclass(frozen=True)
class WeylElement:
    word: tuple      # simple reflection indices (0-based), leftmost applied last
    matrix: tuple    # integer matrix acting on fundamental-weight coordinates
    length: int

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def __str__(self):
        return " ".join(f"s{i + 1}" for i in self.word) or "e"

    def apply(self, lam) -> tuple:
        return tuple(sum(row[j] * lam[j] for j in range(len(lam))) for row in self.matrix)


def _matmul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def simple_reflection_matrix(rs: RootSystem, i: int) -> tuple:
    A = rs.cartan_matrix
    r = rs.rank
    # s_i(lam) = lam - lam_i * alpha_i, alpha_i = column i of A
    return tuple(tuple(int(k == l) - int(l == i) * A[k][i] for l in range(r)) for k in range(r))


def identity_element(rs: RootSystem) -> WeylElement:
    r = rs.rank
    return WeylElement((), tuple(tuple(int(i == j) for j in range(r)) for i in range(r)), 0)


def enumerate_weyl_group(rs: RootSystem, cap: int = DEFAULT_CAP) -> list:
    """All elements of W, breadth-first by length.

    The returned list is sorted by length; ``strata(elements)`` groups it.
    """
    gens = [simple_reflection_matrix(rs, i) for i in range(rs.rank)]
    e = identity_element(rs)
    seen = {e.matrix}
    out = [e]
    layer = [e]
    while layer:
        nxt = []
        for w in layer:
            for i, s in enumerate(gens):
                m = _matmul(s, w.matrix)
                if m in seen:
                    continue
                seen.add(m)
                v = WeylElement((i,) + w.word, m, w.length + 1)
                nxt.append(v)
                out.append(v)
                if len(out) > cap:
                    raise WeylGroupTooLarge(len(out), cap)
        layer = nxt
    return out


def strata(elements) -> list:
    """Group elements by length: ``strata(W)[i]`` is the list of ``w`` with ``l(w) = i``."""
    top = max(w.length for w in elements)
    groups = [[] for _ in range(top + 1)]
    for w in elements:
        groups[w.length].append(w)
    return groups


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    """``a*b`` as a matrix; the word is concatenated and may not be reduced."""
    word = a.word + b.word
    return WeylElement(word, _matmul(a.matrix, b.matrix), a.length + b.length)


def weyl_action(rs: RootSystem, w: WeylElement, lam, mode: str = "dot") -> tuple:
    lam = as_weight(lam)
    rs.check_rank(lam)
    if len(w.matrix) != rs.rank:
        raise ValueError("Weyl element and root system have different ranks")
    if mode == "linear":
        return w.apply(lam)
    if mode == "dot":
        return wsub(w.apply(wadd(lam, rs.rho)), rs.rho)
    raise ValueError(f"unknown action mode {mode!r}; use 'linear' or 'dot'")


def inversions(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots by ``w``."""
    count = 0
    for p in rs.positive_roots:
        image = rs.to_root_coords(w.apply(p.root))
        if all(c <= 0 for c in image):
            count += 1
    return count


def dot_to_dominant(rs: RootSystem, lam):
    """Move ``lam`` into the dominant chamber under the dot action.

    Returns ``(mu, sign, word)`` with ``mu = w . lam`` dominant and
    ``sign = (-1)^l(w)``; returns ``(None, 0, word)`` when ``lam + rho`` is
    singular, i.e. stabilised by a reflection.
    """
    v = list(wadd(as_weight(lam), rs.rho))
    A = rs.cartan_matrix
    sign = 1
    word = []
    while True:
        i = next((i for i, c in enumerate(v) if c <= 0), None)
        if i is None:
            return wsub(tuple(v), rs.rho), sign, tuple(word)
        if v[i] == 0:
            return None, 0, tuple(word)
        c = v[i]
        v = [v[k] - c * A[k][i] for k in range(rs.rank)]
        sign = -sign
        word.insert(0, i)


def exponents(rs: RootSystem) -> list:
    """Exponents read off from the height distribution of positive roots."""
    counts = {}
    for p in rs.positive_roots:
        counts[p.height] = counts.get(p.height, 0) + 1
    top = max(counts)
    out = []
    for h in range(1, top + 1):
        out += [h] * (counts.get(h, 0) - counts.get(h + 1, 0))
    return sorted(out)


def poincare_polynomial(rs: RootSystem) -> list:
    """Coefficients of ``prod (1 + q + ... + q^m)`` over the exponents ``m``."""
    poly = [1]
    for m in exponents(rs):
        new = [0] * (len(poly) + m)
        for i, c in enumerate(poly):
            for j in range(m + 1):
                new[i + j] += c
        poly = new
    return poly


def parse_word(text: str) -> tuple:
    """``"s1 s2 s1"`` -> ``(0, 1, 0)``; ``"e"`` or ``""`` is the identity."""
    text = text.strip()
    if text in ("", "e", "1"):
        return ()
    out = []
    for tok in text.split():
        if not (tok.startswith("s") and tok[1:].isdigit() and int(tok[1:]) >= 1):
            raise ValueError(f"bad reflection token {tok!r}")
        out.append(int(tok[1:]) - 1)
    return tuple(out)


def element_from_word(rs: RootSystem, word) -> WeylElement:
    """Element for a word; raises if the word is not reduced."""
    m = identity_element(rs).matrix
    for i in reversed(word):
        if not 0 <= i < rs.rank:
            raise ValueError(f"reflection index {i + 1} out of range for rank {rs.rank}")
        m = _matmul(simple_reflection_matrix(rs, i), m)
    w = WeylElement(tuple(word), m, len(word))
    if inversions(rs, w) != len(word):
        raise ValueError(f"word {word} is not reduced")
    return w
