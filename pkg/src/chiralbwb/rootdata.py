"""Finite root systems in the fundamental-weight basis.

Weights are plain tuples of :class:`fractions.Fraction` giving coordinates
with respect to the fundamental weights.  Roots are stored in the same basis,
so the pairing with a simple coroot is just a coordinate read-off and every
other pairing goes through the Cartan matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

MAX_RANK = 8

_VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def as_weight(coords: Iterable) -> tuple:
    """Coerce ints, Fractions or strings such as ``"1/2"`` to a weight tuple."""
    return tuple(Fraction(c) for c in coords)


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def wadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def wsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def wscale(c, a):
    return tuple(c * x for x in a)


@dataclass(frozen=True)
class CartanType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _VALID_RANKS:
            raise ValueError(f"unknown Cartan series {self.series!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if not _VALID_RANKS[self.series](self.rank):
            raise ValueError(f"{self.series}{self.rank} is not a valid finite Cartan type")
        if self.rank > MAX_RANK:
            raise ValueError(f"rank {self.rank} exceeds the supported maximum {MAX_RANK}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Cartan type {text!r}; expected e.g. 'A2' or 'G2'")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


def cartan_matrix(t: CartanType) -> tuple:
    """Bourbaki-labelled Cartan matrix with ``A[i][j] = <alpha_j, alpha_i^vee>``."""
    r = t.rank
    A = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i, j, a_ij=-1, a_ji=-1):
        A[i][j] = a_ij
        A[j][i] = a_ji

    if t.series in "ABCD":
        for i in range(r - 1):
            link(i, i + 1)
        if t.series == "B":
            # alpha_r short
            link(r - 2, r - 1, -1, -2)
        elif t.series == "C":
            # alpha_r long
            link(r - 2, r - 1, -2, -1)
        elif t.series == "D":
            A[r - 2][r - 1] = A[r - 1][r - 2] = 0
            link(r - 3, r - 1)
    elif t.series == "E":
        # 1 - 3 - 4 - 5 - ... with 2 hanging off 4
        link(0, 2)
        link(1, 3)
        for i in range(2, r - 1):
            link(i, i + 1)
    elif t.series == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif t.series == "G":
        # alpha_1 short
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in A)


def _invert(M) -> tuple:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _root_lengths(A) -> list:
    """Squared lengths of simple roots, longest normalized to 2."""
    r = len(A)
    d = [None] * r
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and A[i][j] != 0 and d[j] is None:
                d[j] = d[i] * A[i][j] / A[j][i]
                stack.append(j)
    top = max(d)
    return [x * 2 / top for x in d]


@dataclass(frozen=True)
class PositiveRoot:
    root: tuple          # fundamental-weight coordinates
    coroot: tuple        # simple-coroot coordinates (integers)
    height: int
    root_coords: tuple   # simple-root coordinates (integers)


@dataclass(frozen=True, eq=False)
class RootSystem:
    cartan_type: CartanType
    cartan_matrix: tuple
    simple_roots: tuple
    fundamental_weights: tuple
    positive_roots: tuple
    rho: tuple
    rho_check_pairings: tuple
    form: tuple          # Gram matrix of the simple roots
    dual_coxeter: int
    _inverse_cartan: tuple = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def dim_flag(self) -> int:
        return len(self.positive_roots)

    @property
    def dim_g(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @cached_property
    def highest_root(self) -> PositiveRoot:
        return max(self.positive_roots, key=lambda p: p.height)

    @cached_property
    def _root_index(self) -> dict:
        return {p.root: p for p in self.positive_roots}

    @cached_property
    def all_roots(self) -> tuple:
        """Positive roots followed by their negatives, fundamental coordinates."""
        pos = tuple(p.root for p in self.positive_roots)
        return pos + tuple(wscale(-1, a) for a in pos)

    def lookup(self, root) -> PositiveRoot:
        try:
            return self._root_index[as_weight(root)]
        except KeyError:
            raise ValueError(f"{tuple(root)} is not a positive root of {self.cartan_type}") from None

    def to_root_coords(self, lam) -> tuple:
        C = self._inverse_cartan
        return tuple(sum(C[i][j] * lam[j] for j in range(self.rank)) for i in range(self.rank))

    def from_root_coords(self, beta) -> tuple:
        A = self.cartan_matrix
        return tuple(Fraction(sum(A[i][j] * beta[j] for j in range(self.rank)))
                     for i in range(self.rank))

    def inner(self, lam, mu) -> Fraction:
        x, y = self.to_root_coords(lam), self.to_root_coords(mu)
        B = self.form
        return sum(x[i] * B[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))

    def coroot_pairing(self, lam, p: PositiveRoot) -> Fraction:
        return sum(c * l for c, l in zip(p.coroot, lam))

    def height(self, lam) -> Fraction:
        """``<lam, rho^vee>``, i.e. the height in simple-root coordinates."""
        return sum(self.to_root_coords(lam))

    def check_rank(self, lam):
        if len(lam) != self.rank:
            raise ValueError(f"weight {tuple(lam)} has length {len(lam)}, "
                             f"expected rank {self.rank} for {self.cartan_type}")

    def is_integral(self, lam) -> bool:
        return all(Fraction(c).denominator == 1 for c in lam)

    def is_dominant(self, lam) -> bool:
        return all(c >= 0 for c in lam)

    def is_regular(self, lam) -> bool:
        """True when ``lam + rho`` lies on no reflection hyperplane."""
        shifted = wadd(lam, self.rho)
        return all(self.coroot_pairing(shifted, p) != 0 for p in self.positive_roots)

    def is_in_root_lattice(self, lam) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.to_root_coords(lam))


def build_root_system(t: CartanType | str) -> RootSystem:
    if isinstance(t, str):
        t = CartanType.parse(t)
    A = cartan_matrix(t)
    r = t.rank
    lengths = _root_lengths(A)
    form = tuple(tuple(lengths[i] * A[i][j] / 2 for j in range(r)) for i in range(r))

    def reflect(beta, i):
        pairing = sum(A[i][j] * beta[j] for j in range(r))
        return tuple(b - pairing * (k == i) for k, b in enumerate(beta))

    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                gamma = reflect(beta, i)
                if all(c >= 0 for c in gamma) and gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt

    def sq_len(beta):
        return sum(beta[i] * form[i][j] * beta[j] for i in range(r) for j in range(r))

    positive = []
    for beta in sorted(found, key=lambda b: (sum(b), b)):
        n = sq_len(beta)
        coroot = tuple(beta[j] * lengths[j] / n for j in range(r))
        assert all(c.denominator == 1 for c in coroot)
        positive.append(PositiveRoot(
            root=tuple(Fraction(sum(A[i][j] * beta[j] for j in range(r))) for i in range(r)),
            coroot=tuple(int(c) for c in coroot),
            height=sum(beta),
            root_coords=beta,
        ))

    theta = max(positive, key=lambda p: p.height)
    rho = tuple(Fraction(1) for _ in range(r))
    dual_coxeter = 1 + sum(theta.coroot)  # 1 + <rho, theta^vee>
    return RootSystem(
        cartan_type=t,
        cartan_matrix=A,
        simple_roots=tuple(tuple(Fraction(A[i][j]) for i in range(r)) for j in range(r)),
        fundamental_weights=tuple(tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r)),
        positive_roots=tuple(positive),
        rho=rho,
        rho_check_pairings=tuple(1 for _ in range(r)),
        form=form,
        dual_coxeter=dual_coxeter,
        _inverse_cartan=_invert(A),
    )


def pairing(rs: RootSystem, lam: Sequence, root: Sequence) -> Fraction:
    """Exact ``<lam, root^vee>`` for a positive root given in fundamental coordinates."""
    rs.check_rank(lam)
    return rs.coroot_pairing(as_weight(lam), rs.lookup(root))
