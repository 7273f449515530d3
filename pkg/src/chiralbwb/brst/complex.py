"""The reduction complex ``M (x) Lambda`` with ``d = sum_n e_n phi*_{-n} + phi*_1``.

Ghosts satisfy ``{phi_m, phi*_n} = delta_{m,-n}``.  The vacuum is killed by
``phi_m`` (``m >= 0``) and ``phi*_m`` (``m >= 1``); a ghost monomial is a sorted
tuple of creation operators ``("p", m)`` for ``phi_{-m}`` (``m >= 1``) and
``("s", n)`` for ``phi*_{-n}`` (``n >= 0``).

Gradings of a basis vector ``x (x) omega``:

* ghost degree ``g = #phi* - #phi``, raised by one by ``d``;
* conformal degree ``c``, kept by the ``e_n phi*_{-n}`` part and lowered by
  one by ``phi*_1``;
* twisted degree ``t = c + j + g`` with ``j = #f - #e`` of the module part,
  kept by all of ``d`` and zero on ``v_lam (x) 1``.

The span of ``c <= C`` is a subcomplex.  Its cohomology in twisted degree
``t`` agrees with that of the untruncated complex when ``t <= C``: beyond the
cutoff only vectors of negative ``j + g`` are lost, and those carry no
cohomology of the ``e``/``phi`` Koszul part.  Blocks with ``t <= C`` are
therefore reported as certified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..charseries import QSeries
from ..linalg import _axpy, kernel, rank
from .verma import mono_str


def ghost_monomials(C: int) -> list:
    """All ghost monomials of conformal degree at most ``C``."""
    phi_modes = range(1, C + 1)
    star_modes = range(0, C + 1)
    out = []
    for a in range(len(phi_modes) + 1):
        for ps in combinations(phi_modes, a):
            if sum(ps) > C:
                continue
            for b in range(len(star_modes) + 1):
                for ss in combinations(star_modes, b):
                    if sum(ps) + sum(ss) <= C:
                        out.append(tuple([("p", m) for m in ps] + [("s", n) for n in ss]))
    return out


def ghost_conformal(gm) -> int:
    return sum(m for _, m in gm)


def ghost_degree(gm) -> int:
    return sum(1 if k == "s" else -1 for k, _ in gm)


def ghost_str(gm) -> str:
    return " ".join(("phi" if k == "p" else "phi*") + f"_{{{-m}}}" for k, m in gm) or "1"


def apply_phi_star(p: int, gm):
    """``phi*_p`` on a ghost monomial; returns ``(sign, monomial)`` or None."""
    if p <= 0:
        g = ("s", -p)
        if g in gm:
            return None
        pos = sum(1 for x in gm if x < g)
        return (-1) ** pos, gm[:pos] + (g,) + gm[pos:]
    g = ("p", p)
    if g not in gm:
        return None
    pos = gm.index(g)
    return (-1) ** pos, gm[:pos] + gm[pos + 1:]


@dataclass
class Block:
    t: int
    g: int
    basis: list
    index: dict = field(repr=False)


@dataclass
class BRSTComplex:
    module: object
    cutoff: int
    blocks: dict          # (t, g) -> Block
    differentials: dict   # (t, g) -> list of image dicts (row indices in block (t, g+1))
    d_squared_zero: bool
    d_squared_failures: list

    def dims(self, t: int) -> dict:
        return {g: len(b.basis) for (tt, g), b in self.blocks.items() if tt == t}

    @property
    def twisted_degrees(self):
        return sorted({t for t, _ in self.blocks})

    def apply_d(self, vec: dict) -> dict:
        out = {}
        for (x, gm), c in vec.items():
            _axpy(out, c, _d_basis(self.module, x, gm))
        return out


def _d_basis(module, x, gm) -> dict:
    out = {}
    cx = sum(n for _, n in x)
    modes = list(range(0, cx + 1)) + [-m for k, m in gm if k == "p"]
    for n in modes:
        res = apply_phi_star(-n, gm)
        if res is None:
            continue
        sign, gm2 = res
        for x2, c in module.act("e", n, x).items():
            key = (x2, gm2)
            v = out.get(key, 0) + sign * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    res = apply_phi_star(1, gm)
    if res is not None:
        sign, gm2 = res
        key = (x, gm2)
        v = out.get(key, 0) + sign
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def build_complex(module, cutoff: int | None = None, t_max: int | None = None) -> BRSTComplex:
    """Blocks ``(t, g)`` of the ``c <= cutoff`` subcomplex for ``0 <= t <= t_max``.

    ``t_max`` defaults to the cutoff, i.e. to the certified range.
    """
    C = module.cutoff if cutoff is None else cutoff
    if C > module.cutoff:
        raise ValueError(f"complex cutoff {C} exceeds the module cutoff {module.cutoff}")
    T = C if t_max is None else t_max
    ghosts = ghost_monomials(C)
    bases = {}
    for gm in ghosts:
        cg, g = ghost_conformal(gm), ghost_degree(gm)
        for cm in range(0, C - cg + 1):
            for t in range(0, T + 1):
                j = t - cm - cg - g
                for x in module.layer(cm, j):
                    bases.setdefault((t, g), []).append((x, gm))
    blocks = {}
    for key, basis in bases.items():
        blocks[key] = Block(key[0], key[1], basis, {b: i for i, b in enumerate(basis)})
    diffs = {}
    for (t, g), blk in blocks.items():
        target = blocks.get((t, g + 1))
        images = []
        for x, gm in blk.basis:
            img = _d_basis(module, x, gm)
            row = {}
            for k, c in img.items():
                if target is None or k not in target.index:
                    raise RuntimeError(f"d leaves the truncated complex at block {(t, g)}: {k}")
                row[target.index[k]] = c
            images.append(row)
        diffs[(t, g)] = images
    failures = []
    for (t, g), images in diffs.items():
        nxt = diffs.get((t, g + 1))
        if nxt is None:
            continue
        for i, row in enumerate(images):
            out = {}
            for r, c in row.items():
                _axpy(out, c, nxt[r])
            if out:
                failures.append({"t": t, "g": g, "basis": i})
                break
    return BRSTComplex(module, C, blocks, diffs, not failures, failures)


@dataclass
class DSResult:
    cohomology: dict        # g -> {t: dim}
    euler: dict             # t -> (alternating basis count, alternating cohomology count)
    certified_max_twisted: int
    d_squared_zero: bool
    module: dict

    def qseries(self, g: int = 0) -> QSeries:
        row = self.cohomology.get(g, {})
        return QSeries([row.get(t, 0) for t in range(self.certified_max_twisted + 1)])

    def vanishes_outside(self, g: int = 0) -> bool:
        return all(d == 0 for gg, row in self.cohomology.items() if gg != g for d in row.values())

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "certified_max_twisted": self.certified_max_twisted,
            "d_squared_zero": self.d_squared_zero,
            "cohomology": {str(g): [[t, d] for t, d in sorted(row.items())]
                           for g, row in sorted(self.cohomology.items())},
            "euler": {str(t): {"basis": a, "cohomology": b} for t, (a, b) in sorted(self.euler.items())},
        }


def ds_cohomology(cx: BRSTComplex) -> DSResult:
    ranks = {key: rank(images) for key, images in cx.differentials.items()}
    coh = {}
    euler = {}
    for (t, g), blk in cx.blocks.items():
        h = len(blk.basis) - ranks.get((t, g), 0) - ranks.get((t, g - 1), 0)
        coh.setdefault(g, {})[t] = h
        a, b = euler.get(t, (0, 0))
        euler[t] = (a + (-1) ** (g % 2) * len(blk.basis), b + (-1) ** (g % 2) * h)
    for row in coh.values():
        for t in range(0, cx.cutoff + 1):
            row.setdefault(t, 0)
    coh.setdefault(0, {t: 0 for t in range(cx.cutoff + 1)})
    describe = cx.module.describe() if hasattr(cx.module, "describe") else {}
    return DSResult(coh, euler, cx.cutoff, cx.d_squared_zero, describe)


def cocycle_class_nonzero(cx: BRSTComplex, vec: dict, t: int, g: int = 0) -> bool:
    """True if ``vec`` (keys ``(x, ghost)``) is a cocycle whose class is nonzero."""
    if cx.apply_d(vec):
        raise ValueError("vector is not a cocycle")
    source = cx.differentials.get((t, g - 1), [])
    blk = cx.blocks[(t, g)]
    target = {blk.index[k]: c for k, c in vec.items()}
    # the class vanishes iff target lies in the span of the images
    from ..linalg import in_span
    return not in_span(source, target)


def format_vector(vec: dict) -> str:
    parts = []
    for k, c in sorted(vec.items(), key=lambda kc: str(kc[0])):
        x, gm = k if isinstance(k, tuple) and len(k) == 2 and isinstance(k[1], tuple) and (
            not k[1] or k[1][0][0] in "ps") else (k, ())
        parts.append(f"{c}*{mono_str(x)}" + (f" (x) {ghost_str(gm)}" if gm else ""))
    return " + ".join(parts)


__all__ = ["BRSTComplex", "DSResult", "apply_phi_star", "build_complex", "cocycle_class_nonzero",
           "ds_cohomology", "ghost_monomials", "kernel"]
