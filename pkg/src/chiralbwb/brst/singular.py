"""Singular vectors found as the joint kernel of the raising modes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..linalg import kernel
from .complex import build_complex, cocycle_class_nonzero
from .verma import mono_str


def raising_modes(c: int) -> list:
    """Modes that can act nontrivially on a layer of conformal degree ``c``."""
    return ([("e", n) for n in range(0, c + 1)] + [("h", n) for n in range(1, c + 1)]
            + [("f", n) for n in range(1, c + 1)])


def find_singular_vectors(module, j: int, c: int) -> list:
    """Basis of the vectors in layer ``(c, j)`` killed by every raising mode."""
    basis = module.layer(c, j)
    if not basis:
        return []
    modes = raising_modes(c)
    images = []
    for x in basis:
        row = {}
        for mi, (kind, n) in enumerate(modes):
            for y, coef in module.act(kind, n, x).items():
                row[(mi, y)] = coef
        images.append(row)
    # kernel() wants integer-like sortable columns
    cols = {}
    packed = [{cols.setdefault(k, len(cols)): v for k, v in row.items()} for row in images]
    return [{basis[i]: v for i, v in vec.items()} for vec in kernel(packed)]


@dataclass
class SingularHit:
    weight: Fraction       # finite weight, fundamental coordinate
    delta_degree: int
    j: int
    vectors: list
    brst_nonzero: list     # per vector: True/False, or None when the block is uncertified

    def to_json(self):
        return {
            "weight": str(self.weight), "delta_degree": self.delta_degree,
            "vectors": [" + ".join(f"{v}*{mono_str(x)}" for x, v in sorted(vec.items(), key=str))
                        for vec in self.vectors],
            "brst_class_nonzero": self.brst_nonzero,
        }


def scan_singular_vectors(module, cutoff: int | None = None, j_margin: int = 2,
                          with_brst: bool = True) -> list:
    """Singular vectors in every layer ``c <= cutoff``, ``-c <= j <= c + j_margin``.

    For each vector, the class of ``vector (x) 1`` in the reduction complex is
    tested for nonvanishing when its twisted degree is certified.
    """
    C = module.cutoff if cutoff is None else cutoff
    cx = build_complex(module, C) if with_brst else None
    hits = []
    for c in range(0, C + 1):
        for j in range(-c, c + j_margin + 1):
            vecs = find_singular_vectors(module, j, c)
            if not vecs:
                continue
            flags = []
            t = c + j
            for vec in vecs:
                if cx is None or not 0 <= t <= C or (t, 0) not in cx.blocks:
                    flags.append(None)
                else:
                    flags.append(cocycle_class_nonzero(cx, {(x, ()): v for x, v in vec.items()}, t))
            hits.append(SingularHit(module.weight(j), c, j, vecs, flags))
    return hits
