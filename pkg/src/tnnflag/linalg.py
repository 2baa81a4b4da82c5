"""Exact rational linear algebra for SL_n.

Matrices are immutable tuples of tuples of exact rationals.  ``gmpy2.mpq``
is used when available (it is markedly faster), with ``fractions.Fraction``
as a drop-in fallback; the two are interchangeable value types.

Chevalley generators x_i(a), y_i(a) and the pinned simple-reflection
representatives live here, together with the two factorizations everything
geometric reduces to: the Bruhat factorization g = b1 * rep(w) * b2 with
b1, b2 upper triangular, and the opposite-big-cell factorization extracting
the unique upper-unitriangular witness of a Borel opposite to B^-.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rat

from . import weyl
from .errors import IndexOutOfRange, NotInBigCell, ShapeMismatch, Singular
from .weyl import Perm

Mat = tuple[tuple, ...]

ZERO = Rat(0)
ONE = Rat(1)


def rat(value) -> "Rat":
    """Coerce ints, 'p/q' strings, or rationals to the exact rational type."""
    if isinstance(value, str):
        return Rat(value)
    return Rat(value)


def rat_to_str(r) -> str:
    """Serialize as 'p/q', or just 'p' when the denominator is 1."""
    r = Rat(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def mat(rows: Iterable[Iterable]) -> Mat:
    m = tuple(tuple(Rat(x) for x in row) for row in rows)
    if any(len(row) != len(m) for row in m):
        raise ShapeMismatch("matrix must be square")
    return m


def identity_mat(n: int) -> Mat:
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def mat_mul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    if len(b) != n:
        raise ShapeMismatch(f"sizes differ: {len(a)} vs {len(b)}")
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_prod(ms: Sequence[Mat], n: int) -> Mat:
    out = identity_mat(n)
    for m in ms:
        out = mat_mul(out, m)
    return out


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def det(a: Mat) -> "Rat":
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(a)
    m = [list(row) for row in a]
    sign = 1
    d = ONE
    for j in range(n):
        p = next((i for i in range(j, n) if m[i][j] != 0), None)
        if p is None:
            return ZERO
        if p != j:
            m[j], m[p] = m[p], m[j]
            sign = -sign
        pivot = m[j][j]
        d *= pivot
        for i in range(j + 1, n):
            if m[i][j] != 0:
                f = m[i][j] / pivot
                for k in range(j, n):
                    m[i][k] -= f * m[j][k]
    return d if sign == 1 else -d


def mat_inv(a: Mat) -> Mat:
    """Inverse by Gauss-Jordan elimination; raises Singular."""
    n = len(a)
    m = [list(row) + [ONE if i == k else ZERO for k in range(n)]
         for i, row in enumerate(a)]
    for j in range(n):
        p = next((i for i in range(j, n) if m[i][j] != 0), None)
        if p is None:
            raise Singular("matrix is singular")
        m[j], m[p] = m[p], m[j]
        pivot = m[j][j]
        m[j] = [x / pivot for x in m[j]]
        for i in range(n):
            if i != j and m[i][j] != 0:
                f = m[i][j]
                m[i] = [x - f * y for x, y in zip(m[i], m[j])]
    return tuple(tuple(row[n:]) for row in m)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a (not necessarily square) exact matrix."""
    m = [list(row) for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    r = 0
    for j in range(n_cols):
        p = next((i for i in range(r, n_rows) if m[i][j] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pivot = m[r][j]
        for i in range(r + 1, n_rows):
            if m[i][j] != 0:
                f = m[i][j] / pivot
                for k in range(j, n_cols):
                    m[i][k] -= f * m[r][k]
        r += 1
        if r == n_rows:
            break
    return r


def minor(m: Mat, rows: Iterable[int], cols: Iterable[int]) -> "Rat":
    """Determinant of the submatrix on 1-based row/column index sets."""
    rows = sorted(rows)
    cols = sorted(cols)
    if len(rows) != len(cols) or not rows:
        raise ShapeMismatch("row and column sets must be nonempty and equal-sized")
    sub = tuple(tuple(m[i - 1][j - 1] for j in cols) for i in rows)
    return det(sub)


def is_upper_triangular(m: Mat) -> bool:
    return all(m[i][j] == 0 for i in range(len(m)) for j in range(i))


def is_lower_triangular(m: Mat) -> bool:
    return all(m[i][j] == 0 for i in range(len(m)) for j in range(i + 1, len(m)))


def is_upper_unitriangular(m: Mat) -> bool:
    return is_upper_triangular(m) and all(m[i][i] == 1 for i in range(len(m)))


# ---------------------------------------------------------------------------
# Chevalley generators and pinned Weyl representatives


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"index {i} not in 1..{n - 1}")


def gen_x(n: int, i: int, a) -> Mat:
    """x_i(a): identity plus a in entry (i, i+1)."""
    _check_index(n, i)
    rows = [list(row) for row in identity_mat(n)]
    rows[i - 1][i] = Rat(a)
    return tuple(tuple(row) for row in rows)


def gen_y(n: int, i: int, a) -> Mat:
    """y_i(a): identity plus a in entry (i+1, i); the transpose of x_i(a)."""
    _check_index(n, i)
    rows = [list(row) for row in identity_mat(n)]
    rows[i][i - 1] = Rat(a)
    return tuple(tuple(row) for row in rows)


@lru_cache(maxsize=None)
def rep_simple(n: int, i: int) -> Mat:
    """Pinned representative of s_i: y_i(1) x_i(-1) y_i(1), the block [[0,-1],[1,0]]."""
    _check_index(n, i)
    return mat_mul(mat_mul(gen_y(n, i, 1), gen_x(n, i, -1)), gen_y(n, i, 1))


@lru_cache(maxsize=None)
def rep_weyl(w: Perm) -> Mat:
    """Representative of w: product of rep_simple along the canonical reduced word.

    Independent of the reduced word, the pinned representatives satisfying
    the braid relations.
    """
    n = len(w)
    out = identity_mat(n)
    for i in weyl.reduced_word(w):
        out = mat_mul(out, rep_simple(n, i))
    return out


@lru_cache(maxsize=None)
def rep_weyl_inv(w: Perm) -> Mat:
    return mat_inv(rep_weyl(w))


def y_product(n: int, letters: Sequence[int], params: Sequence) -> Mat:
    """y_{letters[0]}(params[0]) * ... * y_{letters[-1]}(params[-1])."""
    if len(letters) != len(params):
        raise ShapeMismatch("letters and parameters differ in count")
    rows = identity_mat(n)
    for i, a in zip(letters, params):
        rows = mat_mul(rows, gen_y(n, i, a))
    return rows


def x_product(n: int, letters: Sequence[int], params: Sequence) -> Mat:
    if len(letters) != len(params):
        raise ShapeMismatch("letters and parameters differ in count")
    rows = identity_mat(n)
    for i, a in zip(letters, params):
        rows = mat_mul(rows, gen_x(n, i, a))
    return rows


# ---------------------------------------------------------------------------
# Factorizations


def bruhat_factor_plus(g: Mat) -> tuple[Mat, Perm, Mat]:
    """Factor g = b1 * rep_weyl(w) * b2 with b1, b2 upper triangular.

    The permutation is determined by the pivot pattern: processing columns
    left to right, the pivot of column j is the largest not-yet-used row
    with a nonzero entry, which realizes the jump pattern of the ranks of
    the lower-left submatrices g[i..n, 1..j].  Reconstruction is verified
    before returning.
    """
    n = len(g)
    m = [list(row) for row in g]
    b1 = [list(row) for row in identity_mat(n)]
    used = [False] * n
    images = [0] * n
    for j in range(n):
        p = max((i for i in range(n) if not used[i] and m[i][j] != 0), default=None)
        if p is None:
            raise Singular("matrix is singular")
        used[p] = True
        images[j] = p + 1
        # clear all rows above the pivot; row p is zero in columns < j, so
        # earlier columns are untouched
        for i in range(p):
            if m[i][j] != 0:
                f = m[i][j] / m[p][j]
                for k in range(j, n):
                    m[i][k] -= f * m[p][k]
                # b1 := b1 * (I + f e_{i,p})
                for r in range(n):
                    if b1[r][i] != 0:
                        b1[r][p] += f * b1[r][i]
    w = tuple(images)
    b1_m = tuple(tuple(row) for row in b1)
    n_m = tuple(tuple(row) for row in m)
    b2 = mat_mul(rep_weyl_inv(w), n_m)
    if not (is_upper_triangular(b1_m) and is_upper_triangular(b2)):
        raise Singular("Bruhat factorization produced a non-triangular factor")
    if mat_mul(b1_m, mat_mul(rep_weyl(w), b2)) != g:
        raise Singular("Bruhat factorization failed to reconstruct the input")
    return b1_m, w, b2


def bruhat_word_plus(g: Mat) -> Perm:
    """The w with g in B^+ rep(w) B^+ (the pivot pattern alone)."""
    return bruhat_factor_plus(g)[1]


def opposite_big_cell_factor(g: Mat) -> tuple[Mat, Mat]:
    """Split g * rep_weyl(w0)^{-1} = x * rest, x upper unitriangular, rest lower.

    Then x * B^- equals the Borel g * B^+, viewed in the big cell opposite
    B^-.  Raises NotInBigCell when a required trailing principal minor
    vanishes (the factorization does not exist).
    """
    n = len(g)
    w0 = weyl.longest_element(n)
    m = [list(row) for row in mat_mul(g, rep_weyl_inv(w0))]
    x = [list(row) for row in identity_mat(n)]
    for j in range(n - 1, -1, -1):
        if m[j][j] == 0:
            raise NotInBigCell("trailing principal minor vanishes")
        for i in range(j):
            if m[i][j] != 0:
                f = m[i][j] / m[j][j]
                for k in range(n):
                    m[i][k] -= f * m[j][k]
                # x := x * (I + f e_{i,j})
                for r in range(n):
                    if x[r][i] != 0:
                        x[r][j] += f * x[r][i]
    x_m = tuple(tuple(row) for row in x)
    rest = tuple(tuple(row) for row in m)
    if not (is_upper_unitriangular(x_m) and is_lower_triangular(rest)):
        raise NotInBigCell("big-cell factorization produced malformed factors")
    return x_m, rest


# ---------------------------------------------------------------------------
# Serialization: row-major arrays of rational strings


def mat_to_json(m: Mat) -> list[list[str]]:
    return [[rat_to_str(x) for x in row] for row in m]


def mat_from_json(rows: Sequence[Sequence[str]]) -> Mat:
    return mat(tuple(tuple(rat(x) for x in row) for row in rows))
