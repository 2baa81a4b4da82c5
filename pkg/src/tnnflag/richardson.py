"""Recursive positivity charts for the strata R_{w,w'} and the classifier.

The chart for a pair w <= w' is built by alternating two moves until the
pair collapses to w = w': "peeling" by a maximal length-additive v, which
transports R_{w,w'} isomorphically to R_{wv,w'v} without adding
coordinates, and "extending" along a simple reflection s with w <= ws and
w's <= w', which adds one coordinate through the map psi.  Evaluating the
chart on positive parameters lands in the totally nonnegative part of the
stratum; inverting it, when possible, recovers the coordinates of any
rational flag, and the classifier decides nonnegativity from the signs
after confirming an exact round trip.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

from . import flag, linalg, weyl
from .errors import (
    InternalInconsistency, LengthNotAdditive, NotComparable, NotInChartImage,
    ParamCountMismatch, TnnError, WrongCell, WrongStratum, ZeroParameter,
)
from .flag import BorelPt, CellIndex, act, b_minus, b_plus, borel_from, stratum
from .linalg import (
    Mat, Rat, bruhat_factor_plus, gen_x, mat_inv, mat_mul, rep_weyl,
    rep_weyl_inv, x_product, y_product,
)
from .weyl import Perm, Word


# ---------------------------------------------------------------------------
# The elementary maps


def phi_down(w: Perm, v: Perm, b: BorelPt) -> BorelPt:
    """The unique P with B^- --w--> P --v--> b, for b at position wv from B^-."""
    if weyl.length(weyl.multiply(w, v)) != weyl.length(w) + weyl.length(v):
        raise LengthNotAdditive(f"l({w} * {v}) != l + l")
    n = len(w)
    w0 = weyl.longest_element(n)
    b1, u, _b2 = bruhat_factor_plus(mat_mul(rep_weyl_inv(w0), b.rep))
    if u != weyl.multiply(w, v):
        raise WrongCell(f"point is at position {u} from B^-, expected {weyl.multiply(w, v)}")
    return borel_from(mat_mul(rep_weyl(w0), mat_mul(b1, rep_weyl(w))))


def phi_up(w: Perm, v: Perm, b: BorelPt) -> BorelPt:
    """The unique P with B^+ --w0 w v--> P --v^{-1}--> b, for b in C^+_w."""
    wv = weyl.multiply(w, v)
    if weyl.length(wv) != weyl.length(w) + weyl.length(v):
        raise LengthNotAdditive(f"l({w} * {v}) != l + l")
    n = len(w)
    w0 = weyl.longest_element(n)
    b1, u, _b2 = bruhat_factor_plus(b.rep)
    if u != weyl.multiply(w0, w):
        raise WrongCell(f"point is at position {u} from B^+, expected {weyl.multiply(w0, w)}")
    return borel_from(mat_mul(b1, rep_weyl(weyl.multiply(w0, wv))))


def pi(w: Perm, wp: Perm, s_index: int, b: BorelPt) -> BorelPt:
    """phi_down along (w's, s): sends R_{w,w'} into R_{w,w's} or R_{ws,w's}."""
    n = len(w)
    if not weyl.is_right_ascent(w, s_index):
        raise LengthNotAdditive(f"s_{s_index} does not lengthen {w}")
    if weyl.is_right_ascent(wp, s_index):
        raise LengthNotAdditive(f"s_{s_index} does not shorten {wp}")
    return phi_down(weyl.right_mult_simple(wp, s_index), weyl.simple(n, s_index), b)


# ---------------------------------------------------------------------------
# Key Example charts for R_{1,w'} and R_{w,w_0}


def key_chart_upper(wp: Perm) -> tuple[Word, Callable[[Sequence], BorelPt]]:
    """Reduced word of w0 w' w0 and params -> x-product * B^-, covering R_{1,w'}."""
    n = len(wp)
    w0 = weyl.longest_element(n)
    word = weyl.reduced_word(weyl.multiply(weyl.multiply(w0, wp), w0))

    def evaluate(params: Sequence) -> BorelPt:
        if len(params) != len(word):
            raise ParamCountMismatch(f"expected {len(word)} parameters")
        return act(x_product(n, word, params), b_minus(n))

    return word, evaluate


def key_chart_lower(w: Perm) -> tuple[Word, Callable[[Sequence], BorelPt]]:
    """Reduced word of w0 w and params -> y-product * B^+, covering R_{w,w_0}."""
    n = len(w)
    w0 = weyl.longest_element(n)
    word = weyl.reduced_word(weyl.multiply(w0, w))

    def evaluate(params: Sequence) -> BorelPt:
        if len(params) != len(word):
            raise ParamCountMismatch(f"expected {len(word)} parameters")
        return act(y_product(n, word, params), b_plus(n))

    return word, evaluate


# ---------------------------------------------------------------------------
# psi and its inverse


@lru_cache(maxsize=None)
def conjugator_word(w: Perm, strategy: str = weyl.SMALLEST) -> Word:
    """Reduced word of w0 w^{-1} w0, used to build the conjugating y-element."""
    w0 = weyl.longest_element(len(w))
    return weyl.reduced_word(
        weyl.multiply(weyl.multiply(w0, weyl.inverse(w)), w0), strategy
    )


@lru_cache(maxsize=None)
def _conjugator(n: int, y_word: Word) -> tuple[Mat, Mat]:
    y = y_product(n, y_word, [Rat(1)] * len(y_word))
    return y, mat_inv(y)


def _psi_with(y: Mat, y_inv: Mat, s_index: int, b: BorelPt, a) -> BorelPt:
    n = b.n
    if a == 0:
        raise ZeroParameter("chart parameters must be nonzero")
    b1 = act(y, b)
    x, _rest = linalg.opposite_big_cell_factor(b1.rep)
    ip = n - s_index  # w0 s_i w0 = s_{n-i}
    w0rep = rep_weyl(weyl.longest_element(n))
    return borel_from(mat_mul(y_inv, mat_mul(x, mat_mul(gen_x(n, ip, a), w0rep))))


def psi(w: Perm, wp: Perm, s_index: int, b: BorelPt, a) -> BorelPt:
    """One-parameter extension R_{w,w's} x R* -> R_{w,w'}.

    Conjugates b into R_{1,w's} by a fixed positive y, appends x_{i'}(a) to
    its big-cell witness, and conjugates back.  Satisfies pi(psi(b, a)) = b.
    """
    y, y_inv = _conjugator(len(w), conjugator_word(w))
    return _psi_with(y, y_inv, s_index, b, a)


def _psi_inv_with(
    y: Mat, y_inv: Mat, w: Perm, wp: Perm, s_index: int, b: BorelPt
) -> tuple[BorelPt, "Rat"]:
    n = b.n
    p = pi(w, wp, s_index, b)
    x_full, _ = linalg.opposite_big_cell_factor(act(y, b).rep)
    x_partial, _ = linalg.opposite_big_cell_factor(act(y, p).rep)
    residual = mat_mul(mat_inv(x_partial), x_full)
    ip = n - s_index
    a = residual[ip - 1][ip]
    if residual != gen_x(n, ip, a) or a == 0:
        raise NotInChartImage("residual is not a single x_{i'}(a) with a != 0")
    return p, a


def psi_inv(w: Perm, wp: Perm, s_index: int, b: BorelPt) -> tuple[BorelPt, "Rat"]:
    """Inverse of psi on its image: (pi(b), recovered parameter)."""
    y, y_inv = _conjugator(len(w), conjugator_word(w))
    return _psi_inv_with(y, y_inv, w, wp, s_index, b)


# ---------------------------------------------------------------------------
# Charts


@dataclass(frozen=True)
class Chart:
    """Recursive chart for R_{w,w'}: a base point wrapped in peel/extend steps."""

    index: CellIndex
    kind: str  # "base" | "peel" | "extend"
    dim: int
    inner: Optional["Chart"] = None
    v: Optional[Perm] = None          # peel
    word_v: Optional[Word] = None     # peel
    s_index: Optional[int] = None     # extend
    y_word: Optional[Word] = None     # extend

    def to_json(self) -> dict:
        data = {
            "w": weyl.perm_to_str(self.index.w),
            "wp": weyl.perm_to_str(self.index.wp),
            "node": self.kind,
            "dim": self.dim,
        }
        if self.kind == "peel":
            data["v"] = weyl.perm_to_str(self.v)
            data["word_v"] = list(self.word_v)
            data["inner"] = self.inner.to_json()
        elif self.kind == "extend":
            data["s"] = self.s_index
            data["y_word"] = list(self.y_word)
            data["inner"] = self.inner.to_json()
        return data


@lru_cache(maxsize=None)
def base_point(w: Perm) -> BorelPt:
    """The single point of R_{w,w}, a W-conjugate of B^+.

    The published construction states the point once as w0 w^{-1} * B^+ and
    once as w0 w * B^+; the two disagree as written, so both candidates are
    evaluated and the one whose stratum is (w, w) is taken, verified at
    construction time.
    """
    n = len(w)
    w0rep = rep_weyl(weyl.longest_element(n))
    for x in (w, weyl.inverse(w)):
        cand = borel_from(mat_mul(w0rep, rep_weyl(x)))
        idx = stratum(cand)
        if idx.w == w and idx.wp == w:
            return cand
    raise InternalInconsistency(f"no candidate base point for {w} verifies")


@lru_cache(maxsize=None)
def build_chart(w: Perm, wp: Perm, strategy: str = weyl.SMALLEST) -> Chart:
    """Build the chart for (w, w') by peeling and descent-pair extension."""
    if not weyl.bruhat_leq(w, wp):
        raise NotComparable(f"{w} is not <= {wp} in Bruhat order")
    index = CellIndex(w, wp)
    if w == wp:
        return Chart(index=index, kind="base", dim=0)
    v, word_v = weyl.peel(w, wp, strategy)
    if v != weyl.identity(len(w)):
        inner = build_chart(weyl.multiply(w, v), weyl.multiply(wp, v), strategy)
        return Chart(index=index, kind="peel", dim=inner.dim,
                     inner=inner, v=v, word_v=word_v)
    i = weyl.find_descent_pair(w, wp)
    inner = build_chart(w, weyl.right_mult_simple(wp, i), strategy)
    return Chart(index=index, kind="extend", dim=inner.dim + 1, inner=inner,
                 s_index=i, y_word=conjugator_word(w, strategy))


def eval_chart(chart: Chart, params: Sequence) -> BorelPt:
    """Evaluate the chart on nonzero rational parameters (innermost first)."""
    if len(params) != chart.dim:
        raise ParamCountMismatch(f"expected {chart.dim} parameters, got {len(params)}")
    params = [Rat(p) for p in params]
    if any(p == 0 for p in params):
        raise ZeroParameter("chart parameters must be nonzero")
    return _eval(chart, params)


def _eval(chart: Chart, params: Sequence) -> BorelPt:
    if chart.kind == "base":
        return base_point(chart.index.w)
    if chart.kind == "peel":
        return phi_down(chart.index.wp, chart.v, _eval(chart.inner, params))
    inner_pt = _eval(chart.inner, params[:-1])
    y, y_inv = _conjugator(len(chart.index.w), chart.y_word)
    return _psi_with(y, y_inv, chart.s_index, inner_pt, params[-1])


def invert_chart(chart: Chart, b: BorelPt) -> tuple:
    """Recover the chart coordinates of b; total inverse of eval_chart."""
    if stratum(b) != chart.index:
        raise WrongStratum(f"point lies in {stratum(b)}, chart is for {chart.index}")
    return _invert(chart, b)


def _invert(chart: Chart, b: BorelPt) -> tuple:
    if chart.kind == "base":
        if b != base_point(chart.index.w):
            raise NotInChartImage("point differs from the unique base point")
        return ()
    if chart.kind == "peel":
        return _invert(chart.inner, phi_up(chart.index.w, chart.v, b))
    y, y_inv = _conjugator(len(chart.index.w), chart.y_word)
    p, a = _psi_inv_with(y, y_inv, chart.index.w, chart.index.wp, chart.s_index, b)
    return _invert(chart.inner, p) + (a,)


# ---------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class ClassifyResult:
    """Stratum, recovered chart coordinates, and the nonnegativity verdict."""

    index: CellIndex
    coords: tuple
    nonneg: bool
    reason: str

    def to_json(self) -> dict:
        data = self.index.to_json()
        data["coords"] = [linalg.rat_to_str(c) for c in self.coords]
        data["nonneg"] = self.nonneg
        data["reason"] = self.reason
        return data


def classify(b: BorelPt, strategy: str = weyl.SMALLEST) -> ClassifyResult:
    """Locate b in its stratum and decide total nonnegativity.

    Inverts the stratum's chart and re-evaluates on the recovered
    coordinates; the verdict is positive only if the round trip reproduces
    b exactly and every coordinate is positive.
    """
    idx = stratum(b)
    chart = build_chart(idx.w, idx.wp, strategy)
    try:
        coords = _invert(chart, b)
    except InternalInconsistency:
        raise
    except TnnError as exc:
        return ClassifyResult(idx, (), False, type(exc).__name__)
    if eval_chart(chart, coords) != b:
        return ClassifyResult(idx, coords, False, "RoundTripMismatch")
    if any(c < 0 for c in coords):
        return ClassifyResult(idx, coords, False, "NegativeCoordinate")
    return ClassifyResult(idx, coords, True, "ok")
