"""Borel cosets, canonical representatives, and relative position.

A point of the flag variety is a coset g * B^+ stored through a canonical
representative, so that coset equality is plain tuple equality.  The
canonical form is a column echelon modulo right multiplication by upper
triangular matrices: bottom-most pivots are normalized to 1 and cleared
rightward, and the last column is rescaled so the representative has
determinant 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg, weyl
from .errors import InternalInconsistency, Singular
from .linalg import Mat, Rat, mat_mul, rank
from .weyl import Perm


@dataclass(frozen=True)
class BorelPt:
    """A Borel subgroup, as the canonical representative of its coset g*B^+."""

    rep: Mat

    @property
    def n(self) -> int:
        return len(self.rep)

    def to_json(self) -> dict:
        return {"borel_rep": linalg.mat_to_json(self.rep)}

    @staticmethod
    def from_json(data: dict) -> "BorelPt":
        return borel_from(linalg.mat_from_json(data["borel_rep"]))


def _canonicalize(g: Mat) -> Mat:
    n = len(g)
    cols = [[g[i][j] for i in range(n)] for j in range(n)]
    pivots: list[int] = []
    for j in range(n):
        col = cols[j]
        for jp, p in enumerate(pivots):
            if col[p] != 0:
                f = col[p]
                col[:] = [x - f * y for x, y in zip(col, cols[jp])]
        p = max((i for i in range(n) if col[i] != 0), default=None)
        if p is None:
            raise Singular("columns are dependent")
        f = col[p]
        col[:] = [x / f for x in col]
        pivots.append(p)
    out = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    d = linalg.det(out)
    cols[n - 1] = [x / d for x in cols[n - 1]]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def borel_from(g: Mat) -> BorelPt:
    """The coset g * B^+; g must be invertible of determinant 1."""
    if linalg.det(g) != 1:
        raise Singular("representative must have determinant 1")
    return BorelPt(_canonicalize(g))


@lru_cache(maxsize=None)
def b_plus(n: int) -> BorelPt:
    return borel_from(linalg.identity_mat(n))


@lru_cache(maxsize=None)
def b_minus(n: int) -> BorelPt:
    return borel_from(linalg.rep_weyl(weyl.longest_element(n)))


def act(g: Mat, b: BorelPt) -> BorelPt:
    """Conjugation action on Borels: the coset (g * rep) * B^+."""
    return borel_from(mat_mul(g, b.rep))


def relative_position(b1: BorelPt, b2: BorelPt) -> Perm:
    """The unique w with b1 --w--> b2.

    Computed from the array r(i, j) = dim(span of the first i columns of
    rep1 intersected with span of the first j columns of rep2): w(j) = i
    exactly when the second difference of r at (i, j) equals 1.
    """
    n = b1.n
    rows1 = b1.rep
    rows2 = b2.rep
    # r[i][j] = i + j - rank of the first i columns of rep1 next to the
    # first j columns of rep2 (0-based sentinel row/column of zeros)
    r = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1):
            if i == 0 or j == 0:
                continue
            stacked = [row1[:i] + row2[:j] for row1, row2 in zip(rows1, rows2)]
            r[i][j] = i + j - rank(stacked)
    images = [0] * n
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            if r[i][j] - r[i - 1][j] - r[i][j - 1] + r[i - 1][j - 1] == 1:
                images[j - 1] = i
                break
    return weyl.validate_perm(images)


@dataclass(frozen=True)
class CellIndex:
    """Label (w, w') of the stratum R_{w,w'}; always w <= w'."""

    w: Perm
    wp: Perm

    def __post_init__(self):
        if not weyl.bruhat_leq(self.w, self.wp):
            raise InternalInconsistency(
                f"stratum index violates Bruhat order: {self.w} vs {self.wp}"
            )

    def dim(self) -> int:
        return weyl.length(self.wp) - weyl.length(self.w)

    def to_json(self) -> dict:
        return {"w": weyl.perm_to_str(self.w), "wp": weyl.perm_to_str(self.wp)}


def stratum(b: BorelPt) -> CellIndex:
    """The (w, w') with b in R_{w,w'}: w from the B^+ side, w' from the B^- side."""
    n = b.n
    w0 = weyl.longest_element(n)
    w = weyl.multiply(w0, relative_position(b_plus(n), b))
    wp = relative_position(b_minus(n), b)
    return CellIndex(w, wp)


def codim_check(b: BorelPt) -> tuple[int, int]:
    """(l(w), l(w') - l(w)) for the stratum of b; the second is the local dimension."""
    idx = stratum(b)
    return weyl.length(idx.w), idx.dim()
