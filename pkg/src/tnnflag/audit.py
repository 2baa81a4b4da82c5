"""Decomposition-level verification and machine-readable reports.

Two audits: one over the cell decomposition (census, totally nonnegative
sampling through subwords of w_0, chart round trips) and one over the
semigroup of lower unitriangular matrices with nonnegative minors, which
serves as a classical cross-oracle for the chart-based classifier.  Both
are deterministic under a fixed seed; every sampling task derives its own
RNG stream from (seed, task label), so results are independent of the
order in which tasks run.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from . import flag, linalg, richardson, weyl
from .errors import NotTNN, RankTooLarge
from .flag import act, b_plus, stratum
from .linalg import Mat, Rat, bruhat_factor_plus, gen_y, mat_mul, y_product
from .weyl import Perm


@dataclass
class AuditReport:
    n: int
    seed: int
    cell_census: list = field(default_factory=list)   # [(w_str, wp_str, dim)]
    samples_total: int = 0
    samples_passed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, failure: dict | None = None) -> None:
        self.samples_total += 1
        if ok:
            self.samples_passed += 1
        else:
            self.failures.append(failure)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "seed": self.seed,
            "cell_census": self.cell_census,
            "samples_total": self.samples_total,
            "samples_passed": self.samples_passed,
            "failures": self.failures,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _stream(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def _rand_pos_rat(rng: random.Random) -> "Rat":
    """Positive rational with numerator and denominator in 1..10."""
    return Rat(rng.randint(1, 10), rng.randint(1, 10))


def sample_tnn_flag(n: int, rng: random.Random, subset_mask: int) -> flag.BorelPt:
    """A flag act(u, B^+) with u a positive y-product along a subword of w_0.

    ``subset_mask`` selects letters of the fixed canonical reduced word of
    w_0; the full mask samples the open positive part, proper subwords the
    boundary strata R_{w, w_0}.
    """
    word = weyl.reduced_word(weyl.longest_element(n))
    letters = [i for k, i in enumerate(word) if subset_mask >> k & 1]
    params = [_rand_pos_rat(rng) for _ in letters]
    return act(y_product(n, letters, params), b_plus(n))


def mask_letters(n: int, subset_mask: int) -> list[int]:
    word = weyl.reduced_word(weyl.longest_element(n))
    return [i for k, i in enumerate(word) if subset_mask >> k & 1]


def _all_index_subsets(n: int, size: int):
    return itertools.combinations(range(1, n + 1), size)


def is_tnn_lower(u: Mat, rng: random.Random | None = None, sampled: int = 500) -> bool:
    """All square minors nonnegative; exhaustive for n <= 4, sampled above."""
    n = len(u)
    if n <= 4 or rng is None:
        for k in range(1, n + 1):
            for rows in _all_index_subsets(n, k):
                for cols in _all_index_subsets(n, k):
                    if linalg.minor(u, rows, cols) < 0:
                        return False
        return True
    for _ in range(sampled):
        k = rng.randint(1, n)
        rows = sorted(rng.sample(range(1, n + 1), k))
        cols = sorted(rng.sample(range(1, n + 1), k))
        if linalg.minor(u, rows, cols) < 0:
            return False
    return True


def semigroup_cell_of(u: Mat) -> Perm:
    """The w indexing the cell of the TNN semigroup that u belongs to."""
    n = len(u)
    if not linalg.is_lower_triangular(u) or any(u[i][i] != 1 for i in range(n)):
        raise NotTNN("matrix is not lower unitriangular")
    if not is_tnn_lower(u, rng=random.Random(0) if n > 4 else None):
        raise NotTNN("negative minor found")
    return bruhat_factor_plus(u)[1]


def audit_decomposition(n: int, samples: int, seed: int) -> AuditReport:
    """Census plus sampling audit of the cell decomposition."""
    if n > 4 or n > weyl.max_rank():
        raise RankTooLarge(f"n={n} exceeds the audit rank bound")
    report = AuditReport(n=n, seed=seed)
    w0 = weyl.longest_element(n)

    for w, wp in weyl.bruhat_pairs(n):
        chart = richardson.build_chart(w, wp)
        expected = weyl.length(wp) - weyl.length(w)
        report.cell_census.append(
            [weyl.perm_to_str(w), weyl.perm_to_str(wp), chart.dim]
        )
        report.record(chart.dim == expected, {
            "kind": "census_dim", "w": weyl.perm_to_str(w),
            "wp": weyl.perm_to_str(wp), "dim": chart.dim,
            "expected": expected,
        } if chart.dim != expected else None)

    word_len = weyl.length(w0)
    for mask in range(1 << word_len):
        rng = _stream(seed, f"mask:{mask}")
        v = weyl.demazure_product(n, mask_letters(n, mask))
        expected_idx = flag.CellIndex(weyl.multiply(w0, v), w0)
        for _ in range(samples):
            b = sample_tnn_flag(n, rng, mask)
            result = richardson.classify(b)
            ok = (
                result.nonneg
                and result.index == expected_idx
                and all(c > 0 for c in result.coords)
            )
            report.record(ok, None if ok else {
                "kind": "tnn_sample", "mask": mask,
                "borel_rep": linalg.mat_to_json(b.rep),
                "got": result.to_json(),
                "expected_w": weyl.perm_to_str(expected_idx.w),
                "expected_wp": weyl.perm_to_str(expected_idx.wp),
            })

    for w, wp in weyl.bruhat_pairs(n):
        rng = _stream(seed, f"roundtrip:{weyl.perm_to_str(w)}:{weyl.perm_to_str(wp)}")
        chart = richardson.build_chart(w, wp)
        params = tuple(_rand_pos_rat(rng) for _ in range(chart.dim))
        b = richardson.eval_chart(chart, params)
        ok = richardson.invert_chart(chart, b) == params
        report.record(ok, None if ok else {
            "kind": "roundtrip", "w": weyl.perm_to_str(w),
            "wp": weyl.perm_to_str(wp),
            "params": [linalg.rat_to_str(p) for p in params],
        })
    return report


def audit_semigroup(n: int, samples: int, seed: int) -> AuditReport:
    """Minor-nonnegativity and cell-recovery audit of the TNN semigroup."""
    if n > 5:
        raise RankTooLarge(f"semigroup audit supports n <= 5, got n={n}")
    report = AuditReport(n=n, seed=seed)
    w0 = weyl.longest_element(n)

    for w in weyl.all_perms(n):
        words = list(itertools.islice(weyl.all_reduced_words(w), 2))
        for widx, word in enumerate(words):
            rng = _stream(seed, f"cell:{weyl.perm_to_str(w)}:{widx}")
            for _ in range(samples):
                u = y_product(n, word, [_rand_pos_rat(rng) for _ in word])
                tnn = is_tnn_lower(u, rng=rng if n > 4 else None)
                ok = tnn and semigroup_cell_of(u) == w
                report.record(ok, None if ok else {
                    "kind": "semigroup_cell", "w": weyl.perm_to_str(w),
                    "word": list(word), "matrix": linalg.mat_to_json(u),
                })

    word0 = weyl.reduced_word(w0)
    rng = _stream(seed, "closure")
    for _ in range(samples):
        u1 = y_product(n, word0, [_rand_pos_rat(rng) for _ in word0])
        u2 = y_product(n, word0, [_rand_pos_rat(rng) for _ in word0])
        prod = mat_mul(u1, u2)
        ok = (
            is_tnn_lower(prod, rng=rng if n > 4 else None)
            and semigroup_cell_of(prod) == w0
        )
        report.record(ok, None if ok else {
            "kind": "closure", "matrix": linalg.mat_to_json(prod),
        })
    return report
