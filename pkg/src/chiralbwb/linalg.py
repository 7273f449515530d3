"""Sparse exact linear algebra over the rationals.

Vectors are dicts ``{index: Fraction}``.  Elimination is incremental, which
suits the block sizes of the BRST complexes (a few hundred columns).
"""

from __future__ import annotations

from fractions import Fraction


def _axpy(target: dict, coef, source: dict):
    """``target += coef * source`` in place, dropping zeros."""
    for k, v in source.items():
        x = target.get(k, 0) + coef * v
        if x:
            target[k] = x
        else:
            target.pop(k, None)


class Echelon:
    """Row space kept in reduced form: ``pivots[col]`` has a 1 at ``col``."""

    def __init__(self):
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        for col in [c for c in v if c in self.pivots]:
            c = v.get(col)
            if c:
                _axpy(v, -c, self.pivots[col])
        # a pivot row may reintroduce another pivot column only if rows are not fully reduced;
        # rows are kept fully reduced below, so one pass suffices.
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        col = min(v)
        inv = 1 / v[col]
        v = {k: x * inv for k, x in v.items()}
        for row in self.pivots.values():
            c = row.get(col)
            if c:
                _axpy(row, -c, v)
        self.pivots[col] = v
        return True


def rank(vectors) -> int:
    ech = Echelon()
    return sum(ech.add(v) for v in vectors)


def kernel(images) -> list:
    """Kernel of the map sending basis vector ``i`` to ``images[i]``.

    Returns a list of dicts ``{i: coefficient}``.
    """
    pivots = {}        # col -> (image row, tag) with image row normalized at col
    out = []
    for i, img in enumerate(images):
        v = {k: Fraction(x) for k, x in img.items() if x}
        tag = {i: Fraction(1)}
        changed = True
        while changed:
            changed = False
            for col in [c for c in v if c in pivots]:
                c = v.get(col)
                if c:
                    row, rtag = pivots[col]
                    _axpy(v, -c, row)
                    _axpy(tag, -c, rtag)
                    changed = True
        if not v:
            out.append(tag)
            continue
        col = min(v)
        inv = 1 / v[col]
        pivots[col] = ({k: x * inv for k, x in v.items()}, {k: x * inv for k, x in tag.items()})
    return out


def in_span(vectors, target: dict) -> bool:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return not ech.reduce(target)
