"""Truncated formal characters over the affine weight lattice.

A :class:`CharSeries` is supported on the cone ``leading - Qhat_+`` where
``Qhat_+`` is spanned by the affine simple roots ``alpha_1..alpha_r`` and
``alpha_0 = delta - theta``.  A key ``(depth, n)`` stands for the monomial

    e^{leading - sum_i depth_i alpha_i - n alpha_0}
      = e^{leading - sum_i depth_i alpha_i + n theta - n delta},

so ``n`` is the delta-exponent and ``depth`` is a non-negative integer vector.
Every character of a highest weight module lives on such a cone with finite
coefficients, which keeps products well defined under truncation.  The window
is ``n <= N`` and ``sum(depth) <= D``; coefficients outside it are unknown,
never silently zero.
"""

from __future__ import annotations

from collections import namedtuple
from fractions import Fraction
from functools import reduce
from typing import Iterable

from .rootdata import RootSystem, as_weight, frac_str, wadd, wsub

Trunc = namedtuple("Trunc", "N D")


class WindowError(ValueError):
    """Raised when two series share no usable truncation window."""


class SpecializationError(ValueError):
    """Raised when a layer's weight support is not certified finite."""


def _key_height(key):
    return sum(key[0])


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class CharSeries:
    __slots__ = ("rs", "leading", "trunc", "terms")

    def __init__(self, rs: RootSystem, leading, trunc, terms=None):
        self.rs = rs
        self.leading = as_weight(leading)
        self.trunc = Trunc(*trunc)
        if self.trunc.N < 0 or self.trunc.D < 0:
            raise ValueError(f"truncation must be non-negative, got {tuple(self.trunc)}")
        N, D = self.trunc
        clean = {}
        for (depth, n), c in (terms or {}).items():
            if c and n <= N and sum(depth) <= D:
                if n < 0 or min(depth, default=0) < 0:
                    raise ValueError(f"key {(depth, n)} lies outside the cone")
                clean[(tuple(depth), n)] = int(c)
        self.terms = clean

    def __repr__(self):
        return (f"CharSeries({self.rs.cartan_type}, leading={tuple(map(str, self.leading))}, "
                f"trunc={tuple(self.trunc)}, {len(self.terms)} terms)")

    def __eq__(self, other):
        if not isinstance(other, CharSeries):
            return NotImplemented
        return window_equal(self, other)[0]

    __hash__ = None

    # weight <-> key conversion

    def key_for(self, mu, n: int):
        """Key of ``e^{mu - n delta}``, or None if it is not on the cone lattice."""
        theta = self.rs.highest_root.root_coords
        diff = self.rs.to_root_coords(wsub(self.leading, as_weight(mu)))
        depth = tuple(d + n * t for d, t in zip(diff, theta))
        if any(Fraction(d).denominator != 1 for d in depth):
            return None
        return tuple(int(d) for d in depth), n

    def weight_of(self, key):
        depth, n = key
        theta = self.rs.highest_root.root_coords
        beta = tuple(d - n * t for d, t in zip(depth, theta))
        return wsub(self.leading, self.rs.from_root_coords(beta)), n

    def coefficient(self, mu, n: int = 0) -> int:
        key = self.key_for(mu, n)
        if key is None or min(key[0]) < 0:
            return 0
        if n > self.trunc.N or sum(key[0]) > self.trunc.D:
            raise WindowError(f"e^(mu - {n} delta) lies outside the truncation window")
        return self.terms.get(key, 0)

    def weight_terms(self):
        """Sorted list of ``(mu, n, c)`` triples."""
        out = [(*self.weight_of(k), c) for k, c in self.terms.items()]
        out.sort(key=lambda t: (t[1], tuple(-x for x in self.rs.to_root_coords(t[0]))))
        return out

    def in_window(self, key) -> bool:
        return key[1] <= self.trunc.N and _key_height(key) <= self.trunc.D

    # window manipulation

    def reanchor(self, new_leading) -> "CharSeries":
        """Same series with a higher leading weight (``new - leading`` in ``Q_+``)."""
        gamma = self.rs.to_root_coords(wsub(as_weight(new_leading), self.leading))
        if any(Fraction(g).denominator != 1 or g < 0 for g in gamma):
            raise WindowError(f"cannot re-anchor leading weight {self.leading} at {new_leading}")
        gamma = tuple(int(g) for g in gamma)
        terms = {(_vadd(d, gamma), n): c for (d, n), c in self.terms.items()}
        return CharSeries(self.rs, new_leading, (self.trunc.N, self.trunc.D + sum(gamma)), terms)

    def restrict(self, N: int, D: int) -> "CharSeries":
        if N > self.trunc.N or D > self.trunc.D:
            raise WindowError("restriction window must lie inside the current one")
        return CharSeries(self.rs, self.leading, (N, D), self.terms)

    def layer(self, n: int) -> dict:
        return {d: c for (d, m), c in self.terms.items() if m == n}

    def is_zero(self) -> bool:
        return not self.terms

    def __neg__(self):
        return CharSeries(self.rs, self.leading, self.trunc, {k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other):
        return linear_combine([(1, self), (-1, other)])

    def __mul__(self, other):
        if isinstance(other, int):
            return CharSeries(self.rs, self.leading, self.trunc,
                              {k: other * c for k, c in self.terms.items()})
        return mul(self, other)

    __rmul__ = __mul__

    # serialization

    def to_json(self) -> dict:
        return {
            "leading": [frac_str(x) for x in self.leading],
            "trunc": {"N": self.trunc.N, "D": self.trunc.D},
            "terms": [{"depth": list(d), "n": n, "c": str(c)}
                      for (d, n), c in sorted(self.terms.items(), key=lambda kc: (kc[0][1], kc[0][0]))],
        }

    @classmethod
    def from_json(cls, rs: RootSystem, data: dict) -> "CharSeries":
        terms = {(tuple(t["depth"]), int(t["n"])): int(t["c"]) for t in data["terms"]}
        return cls(rs, data["leading"], (data["trunc"]["N"], data["trunc"]["D"]), terms)





class QSeries:
    """Integer power series in ``q`` known up to ``q^N``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = tuple(int(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a QSeries needs at least the q^0 coefficient")

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QSeries):
            m = min(self.N, other.N)
            return self.coeffs[:m + 1] == other.coeffs[:m + 1]
        if isinstance(other, (list, tuple)):
            return list(self.coeffs[:len(other)]) == list(other)
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"QSeries({list(self.coeffs)})"

    def truncate(self, N: int) -> "QSeries":
        return QSeries(self.coeffs[:N + 1])

    def __add__(self, other):
        N = min(self.N, other.N)
        return QSeries(a + b for a, b in zip(self.coeffs[:N + 1], other.coeffs[:N + 1]))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(other * c for c in self.coeffs)
        N = min(self.N, other.N)
        out = [0] * (N + 1)
        for i, a in enumerate(self.coeffs[:N + 1]):
            if a:
                for j, b in enumerate(other.coeffs[:N + 1 - i]):
                    out[i + j] += a * b
        return QSeries(out)

    __rmul__ = __mul__

    @classmethod
    def polynomial(cls, coeffs, N: int) -> "QSeries":
        out = [0] * (N + 1)
        for i, c in enumerate(coeffs[:N + 1]):
            out[i] = c
        return cls(out)

    def to_json(self):
        return [[n, str(c)] for n, c in enumerate(self.coeffs)]

    def to_csv(self) -> str:
        return "degree,coefficient\n" + "".join(f"{n},{c}\n" for n, c in enumerate(self.coeffs))


def euler_power(m: int, N: int) -> QSeries:
    """``prod_{j>=1} (1 - q^j)^(-m)`` up to ``q^N``."""
    c = [1] + [0] * N
    for j in range(1, N + 1):
        for _ in range(m):
            for i in range(j, N + 1):
                c[i] += c[i - j]
    return QSeries(c)


def inverse_factor_q(exponent: int, N: int) -> QSeries:
    """``(1 - q^exponent)^(-1)`` up to ``q^N``."""
    if exponent <= 0:
        raise ValueError("exponent must be positive")
    return QSeries([1 if i % exponent == 0 else 0 for i in range(N + 1)])


# ring operations


def monomial(rs: RootSystem, mu, n: int, c: int, trunc) -> CharSeries:
    """``c * e^{mu - n delta}`` with leading weight ``mu``."""
    if n < 0:
        raise ValueError("delta-exponent must be non-negative")
    theta = rs.highest_root.root_coords
    return CharSeries(rs, mu, trunc, {(tuple(n * t for t in theta), n): c})


def _join(rs, leadings):
    base = leadings[0]
    coords = []
    for lam in leadings:
        diff = rs.to_root_coords(wsub(lam, base))
        if any(Fraction(d).denominator != 1 for d in diff):
            raise WindowError(f"leading weights {base} and {lam} differ by a non-root-lattice vector")
        coords.append(diff)
    top = tuple(max(col) for col in zip(*coords))
    return wadd(base, rs.from_root_coords(top))


def align(series) -> list:
    """Re-anchor all series at the ``Q_+``-join of their leading weights."""
    series = list(series)
    if not series:
        raise WindowError("nothing to align")
    rs = series[0].rs
    if any(s.rs is not rs and s.rs.cartan_type != rs.cartan_type for s in series):
        raise WindowError("series belong to different root systems")
    top = _join(rs, [s.leading for s in series])
    return [s.reanchor(top) for s in series]


def common_window(series) -> Trunc:
    return Trunc(min(s.trunc.N for s in series), min(s.trunc.D for s in series))


def linear_combine(pairs) -> CharSeries:
    pairs = list(pairs)
    if not pairs:
        raise WindowError("empty linear combination")
    aligned = align(s for _, s in pairs)
    N, D = common_window(aligned)
    terms = {}
    for (coef, _), s in zip(pairs, aligned):
        for k, c in s.terms.items():
            if k[1] <= N and _key_height(k) <= D:
                terms[k] = terms.get(k, 0) + coef * c
    return CharSeries(aligned[0].rs, aligned[0].leading, (N, D), terms)


def mul(a: CharSeries, b: CharSeries) -> CharSeries:
    """Cauchy product on the common window; leading weights add."""
    N = min(a.trunc.N, b.trunc.N)
    D = min(a.trunc.D, b.trunc.D)
    out = {}
    bt = [(k, c) for k, c in b.terms.items() if k[1] <= N and _key_height(k) <= D]
    for (da, na), ca in a.terms.items():
        ha = sum(da)
        if na > N or ha > D:
            continue
        for (db, nb), cb in bt:
            if na + nb > N or ha + sum(db) > D:
                continue
            k = (_vadd(da, db), na + nb)
            out[k] = out.get(k, 0) + ca * cb
    return CharSeries(a.rs, wadd(a.leading, b.leading), (N, D), out)


def _factor_key(rs: RootSystem, root, n: int):
    """Key (relative to leading 0) of ``e^{-(root + n delta)}``, validating convergence."""
    root = as_weight(root)
    if n < 0:
        raise ValueError("delta-exponent must be non-negative")
    is_zero = all(c == 0 for c in root)
    if is_zero and n == 0:
        raise ValueError("the factor (1 - e^0) is not invertible")
    if not is_zero and root not in rs.all_roots:
        raise ValueError(f"{root} is not a root of {rs.cartan_type}")
    if n == 0 and root not in rs._root_index:
        raise ValueError(f"(1 - e^(-{root}))^-1 does not converge on the cone: root is negative")
    theta = rs.highest_root.root_coords
    beta = rs.to_root_coords(root)
    depth = tuple(int(b) + n * t for b, t in zip(beta, theta))
    return depth, n


def invert_factor(rs: RootSystem, root, n: int, trunc) -> CharSeries:
    """Geometric series ``sum_k e^{-k(root + n delta)}`` on the window."""
    depth, m = _factor_key(rs, root, n)
    N, D = trunc
    terms = {}
    k = 0
    while k * m <= N and k * sum(depth) <= D:
        terms[(tuple(k * d for d in depth), k * m)] = 1
        k += 1
    return CharSeries(rs, tuple(0 for _ in range(rs.rank)), trunc, terms)


def divide_by_factor(s: CharSeries, root, n: int) -> CharSeries:
    """``s * (1 - e^{-root - n delta})^{-1}`` by walking each term along the factor direction.

    Same result as ``mul(s, invert_factor(...))`` without materializing the
    geometric series.
    """
    step, m = _factor_key(s.rs, root, n)
    N, D = s.trunc
    hstep = sum(step)
    out = {}
    for (d, k), c in s.terms.items():
        h = sum(d)
        while k <= N and h <= D:
            key = (d, k)
            out[key] = out.get(key, 0) + c
            d = _vadd(d, step)
            k += m
            h += hstep
    return CharSeries(s.rs, s.leading, s.trunc, out)


def times_factor(s: CharSeries, root, n: int) -> CharSeries:
    """``s * (1 - e^{-root - n delta})``."""
    step, m = _factor_key(s.rs, root, n)
    out = dict(s.terms)
    for (d, k), c in s.terms.items():
        nk = (_vadd(d, step), k + m)
        out[nk] = out.get(nk, 0) - c
    return CharSeries(s.rs, s.leading, s.trunc, out)


def real_root_factors(rs: RootSystem, which: str, N: int) -> list:
    """The ``(root, n)`` pairs whose inverse factors make up each named product."""
    pos = [p.root for p in rs.positive_roots]
    neg = [tuple(-x for x in a) for a in pos]
    if which == "finite_positive":
        return [(a, 0) for a in pos]
    if which == "real_n_ge_1":
        return [(a, n) for n in range(1, N + 1) for a in pos + neg]
    if which == "positive_real":
        return real_root_factors(rs, "finite_positive", N) + real_root_factors(rs, "real_n_ge_1", N)
    raise ValueError(f"unknown factor set {which!r}")


def product_of_inverses(rs: RootSystem, factors, trunc, leading=None) -> CharSeries:
    """``e^{leading} * prod (1 - e^{-root - n delta})^{-1}`` over ``factors``."""
    zero = tuple(0 for _ in range(rs.rank))
    s = monomial(rs, leading if leading is not None else zero, 0, 1, trunc)
    for root, n in factors:
        s = divide_by_factor(s, root, n)
    return s


def affine_real_root_product(rs: RootSystem, which: str, trunc) -> CharSeries:
    """Named infinite products on the window.

    ``positive_real``    prod over positive real affine roots,
    ``real_n_ge_1``      the ``n >= 1`` part over all finite roots,
    ``imaginary_mult_r`` ``prod_{n>=1} (1 - e^{-n delta})^{-rank}``.
    """
    N, _ = trunc
    zero = tuple(0 for _ in range(rs.rank))
    if which == "imaginary_mult_r":
        factors = [(zero, n) for n in range(1, N + 1) for _ in range(rs.rank)]
    else:
        factors = real_root_factors(rs, which, N)
    return product_of_inverses(rs, factors, trunc)


def specialize_q(s: CharSeries, margin: int = 1) -> QSeries:
    """Set ``e^alpha -> 1`` and ``e^{-delta} -> q``.

    Each delta-layer must be certified finite: no coefficient within ``margin``
    rows of the depth cutoff, and the layer's pure delta-shift of the leading
    weight (depth ``n * theta``) inside the certified rows.
    """
    N, D = s.trunc
    limit = D - margin
    theta_h = s.rs.highest_root.height
    out = [0] * (N + 1)
    for (depth, n), c in s.terms.items():
        if sum(depth) > limit:
            raise SpecializationError(
                f"layer q^{n} has a nonzero coefficient at depth {sum(depth)} within {margin} of the cutoff D={D}")
        out[n] += c
    for n in range(N + 1):
        if n * theta_h > limit:
            raise SpecializationError(
                f"layer q^{n} is not covered: need D >= {n * theta_h + margin}, have D={D}")
    return QSeries(out)


def window_equal(a: CharSeries, b: CharSeries):
    """Compare on the common window; returns ``(equal, report)``.

    ``report`` is None when equal, else a dict with the lexicographically first
    differing key (by ``n`` then depth) and both coefficients.
    """
    x, y = align([a, b])
    N, D = common_window([x, y])
    if N < 0 or D < 0:
        raise WindowError("disjoint truncation windows")
    keys = {k for k in x.terms if k[1] <= N and _key_height(k) <= D}
    keys |= {k for k in y.terms if k[1] <= N and _key_height(k) <= D}
    bad = sorted((k for k in keys if x.terms.get(k, 0) != y.terms.get(k, 0)),
                 key=lambda k: (k[1], k[0]))
    if not bad:
        return True, None
    k = bad[0]
    mu, n = x.weight_of(k)
    return False, {
        "depth": list(k[0]), "n": k[1],
        "weight": [frac_str(c) for c in mu],
        "left": str(x.terms.get(k, 0)), "right": str(y.terms.get(k, 0)),
        "window": {"N": N, "D": D},
    }


def sum_series(series) -> CharSeries:
    return linear_combine([(1, s) for s in series])


def product(series) -> CharSeries:
    return reduce(mul, series)
