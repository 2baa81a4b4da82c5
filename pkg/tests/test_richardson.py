import random

import pytest

from conftest import rand_params, rand_rat
from tnnflag import linalg, richardson, weyl
from tnnflag.errors import (
    NotInBigCell, NotInChartImage, ParamCountMismatch, WrongStratum,
    ZeroParameter,
)
from tnnflag.flag import CellIndex, act, b_minus, b_plus, borel_from, stratum
from tnnflag.linalg import Rat, gen_x, gen_y, mat_mul, rep_weyl, y_product
from tnnflag.richardson import (
    base_point, build_chart, classify, conjugator_word, eval_chart,
    invert_chart, key_chart_lower, key_chart_upper, phi_down, phi_up, pi, psi,
    psi_inv,
)


def positive_point(w, wp, rng):
    chart = build_chart(w, wp)
    params = rand_params(rng, chart.dim, positive=True)
    return eval_chart(chart, params), params, chart


def splits(wp):
    """All (u, v) with wp = u*v and lengths additive, via subword suffixes."""
    n = len(wp)
    word = weyl.reduced_word(wp)
    for j in range(len(word) + 1):
        u = weyl.word_to_perm(n, word[:j])
        v = weyl.word_to_perm(n, word[j:])
        yield u, v


class TestPhiDown:
    def test_v_identity(self):
        b = act(gen_y(3, 1, 2), b_plus(3))
        wp = stratum(b).wp
        assert phi_down(wp, weyl.identity(3), b) == b

    def test_sl2_collapse(self):
        b = act(gen_y(2, 1, 1), b_plus(2))
        assert phi_down(weyl.identity(2), weyl.simple(2, 1), b) == b_minus(2)

    def test_phi_truncation_composes(self):
        # phi applied to a positive point of R_{1,w'} stays positive in R_{1,w'v}
        rng = random.Random(11)
        for wp in weyl.all_perms(3):
            word, evaluate = key_chart_upper(wp)
            b = evaluate(rand_params(rng, len(word), positive=True))
            for u, v in splits(wp):
                if v == weyl.identity(3):
                    continue
                image = phi_down(u, v, b)
                result = classify(image)
                assert result.nonneg
                assert result.index == CellIndex(weyl.identity(3), u)
                assert all(c > 0 for c in result.coords)


class TestPhiUp:
    def test_v_identity(self):
        b = act(gen_y(3, 2, 3), b_plus(3))
        w = stratum(b).w
        assert phi_up(w, weyl.identity(3), b) == b

    def test_sl2(self):
        b = act(gen_x(2, 1, 1), b_minus(2))
        assert phi_up(weyl.identity(2), weyl.simple(2, 1), b) == b_plus(2)

    def test_inverse_of_phi_down(self):
        rng = random.Random(12)
        for w, wp in weyl.bruhat_pairs(3):
            v, _ = weyl.peel(w, wp)
            if v == weyl.identity(3):
                continue
            wv, wpv = weyl.multiply(w, v), weyl.multiply(wp, v)
            inner_pt, _, _ = positive_point(wv, wpv, rng)
            outer = phi_down(wp, v, inner_pt)
            assert phi_up(w, v, outer) == inner_pt


class TestPi:
    def test_sl2(self):
        for a in (Rat(1), Rat(-2), Rat(5, 3)):
            b = act(gen_y(2, 1, a), b_plus(2))
            assert pi(weyl.identity(2), weyl.simple(2, 1), 1, b) == b_minus(2)

    def test_pi_keeps_positive_points_in_left_cell(self):
        rng = random.Random(13)
        w0 = weyl.longest_element(3)
        b, _, _ = positive_point(weyl.identity(3), w0, rng)
        for i in (1, 2):
            image = pi(weyl.identity(3), w0, i, b)
            assert stratum(image) == \
                CellIndex(weyl.identity(3), weyl.right_mult_simple(w0, i))

    def test_negative_point_can_jump(self):
        # with negative coordinates, pi may land in R_{ws,w's}
        w0 = weyl.longest_element(3)
        e = weyl.identity(3)
        chart = build_chart(e, w0)
        b = eval_chart(chart, (Rat(-10, 7), Rat(-5), Rat(-7, 2)))
        idx = stratum(pi(e, w0, 2, b))
        assert idx.w == weyl.simple(3, 2)
        assert idx.wp == weyl.right_mult_simple(w0, 2)


class TestKeyCharts:
    def test_upper_constant(self):
        word, evaluate = key_chart_upper(weyl.identity(2))
        assert word == () and evaluate(()) == b_minus(2)

    def test_upper_sl2(self):
        word, evaluate = key_chart_upper(weyl.simple(2, 1))
        b = evaluate((Rat(1),))
        assert b == act(gen_x(2, 1, 1), b_minus(2))

    def test_upper_stratum_exhaustive(self):
        rng = random.Random(15)
        for wp in weyl.all_perms(3):
            word, evaluate = key_chart_upper(wp)
            b = evaluate(rand_params(rng, len(word), positive=True))
            assert stratum(b) == CellIndex(weyl.identity(3), wp)

    def test_lower_constant(self):
        word, evaluate = key_chart_lower(weyl.longest_element(3))
        assert word == () and evaluate(()) == b_plus(3)

    def test_lower_sl2(self):
        word, evaluate = key_chart_lower(weyl.identity(2))
        assert evaluate((Rat(1),)) == act(gen_y(2, 1, 1), b_plus(2))

    def test_lower_stratum_exhaustive(self):
        rng = random.Random(16)
        for w in weyl.all_perms(3):
            word, evaluate = key_chart_lower(w)
            b = evaluate(rand_params(rng, len(word), positive=True))
            assert stratum(b) == CellIndex(w, weyl.longest_element(3))

    def test_param_count(self):
        word, evaluate = key_chart_lower(weyl.identity(3))
        with pytest.raises(ParamCountMismatch):
            evaluate((Rat(1),))


class TestPsi:
    def test_sl2_from_base(self):
        e, s1 = weyl.identity(2), weyl.simple(2, 1)
        for a in (Rat(2), Rat(-1, 3)):
            b = psi(e, s1, 1, b_minus(2), a)
            assert b == act(gen_x(2, 1, a), b_minus(2))

    def test_zero_parameter(self):
        with pytest.raises(ZeroParameter):
            psi(weyl.identity(2), weyl.simple(2, 1), 1, b_minus(2), 0)

    def test_diagram_commutes(self):
        # pi(psi(B, a)) = B for nonzero a of both signs
        rng = random.Random(17)
        for w, wp in weyl.bruhat_pairs(3):
            for i in range(1, 3):
                if not (weyl.is_right_ascent(w, i)
                        and not weyl.is_right_ascent(wp, i)):
                    continue
                wps = weyl.right_mult_simple(wp, i)
                b, _, _ = positive_point(w, wps, rng)
                for a in (rand_rat(rng, positive=True), -rand_rat(rng, positive=True)):
                    assert pi(w, wp, i, psi(w, wp, i, b, a)) == b

    def test_positive_extension_is_nonneg(self):
        rng = random.Random(18)
        w = weyl.simple(3, 2)
        wp = weyl.longest_element(3)
        wps = weyl.right_mult_simple(wp, 1)
        b, _, _ = positive_point(w, wps, rng)
        out = psi(w, wp, 1, b, Rat(3, 2))
        assert classify(out).nonneg


class TestPsiInv:
    def test_sl2(self):
        b = act(gen_y(2, 1, 1), b_plus(2))
        p, a = psi_inv(weyl.identity(2), weyl.simple(2, 1), 1, b)
        assert p == b_minus(2) and a == 1

    def test_roundtrip(self):
        rng = random.Random(19)
        for w, wp in weyl.bruhat_pairs(3):
            for i in range(1, 3):
                if not (weyl.is_right_ascent(w, i)
                        and not weyl.is_right_ascent(wp, i)):
                    continue
                wps = weyl.right_mult_simple(wp, i)
                b, _, _ = positive_point(w, wps, rng)
                a = rand_rat(rng)
                out = psi(w, wp, i, b, a)
                assert psi_inv(w, wp, i, out) == (b, a)

    def test_b_plus_not_in_cell(self):
        with pytest.raises((NotInBigCell, NotInChartImage)):
            psi_inv(weyl.identity(2), weyl.simple(2, 1), 1, b_plus(2))


class TestBasePoints:
    def test_b_plus_base(self):
        w0 = weyl.longest_element(3)
        assert base_point(w0) == b_plus(3)

    def test_all_verify(self):
        for n in (2, 3, 4):
            for w in weyl.all_perms(n):
                assert stratum(base_point(w)) == CellIndex(w, w)

    def test_base_points_are_weyl_conjugates(self):
        for n in (2, 3):
            bases = {base_point(w) for w in weyl.all_perms(n)}
            conjugates = {borel_from(rep_weyl(w)) for w in weyl.all_perms(n)}
            assert bases == conjugates


class TestCharts:
    def test_base_chart(self):
        w = weyl.simple(3, 1)
        chart = build_chart(w, w)
        assert chart.kind == "base" and chart.dim == 0
        assert eval_chart(chart, ()) == base_point(w)

    def test_sl2_chart(self):
        chart = build_chart(weyl.identity(2), weyl.simple(2, 1))
        assert chart.dim == 1
        assert chart.kind == "extend" and chart.inner.kind == "base"
        b = eval_chart(chart, (Rat(1),))
        assert b == act(gen_y(2, 1, 1), b_plus(2))

    def test_all_charts_n3(self):
        for w, wp in weyl.bruhat_pairs(3):
            chart = build_chart(w, wp)
            assert chart.dim == weyl.length(wp) - weyl.length(w)

    def test_param_validation(self):
        chart = build_chart(weyl.identity(2), weyl.simple(2, 1))
        with pytest.raises(ParamCountMismatch):
            eval_chart(chart, ())
        with pytest.raises(ZeroParameter):
            eval_chart(chart, (Rat(0),))

    def test_roundtrip_n3(self):
        rng = random.Random(20)
        for w, wp in weyl.bruhat_pairs(3):
            chart = build_chart(w, wp)
            for _ in range(5):
                params = rand_params(rng, chart.dim)
                b = eval_chart(chart, params)
                assert invert_chart(chart, b) == params
                assert eval_chart(chart, params) == b

    def test_wrong_stratum(self):
        chart = build_chart(weyl.identity(2), weyl.simple(2, 1))
        with pytest.raises(WrongStratum):
            invert_chart(chart, b_plus(2))

    def test_open_cell_matches_key_chart(self):
        # chart points of (e, w0) classify like key-chart points
        rng = random.Random(21)
        e = weyl.identity(3)
        w0 = weyl.longest_element(3)
        word, evaluate = key_chart_lower(e)
        b = evaluate(rand_params(rng, len(word), positive=True))
        result = classify(b)
        assert result.nonneg and result.index == CellIndex(e, w0)

    def test_serialization(self):
        chart = build_chart(weyl.identity(3), weyl.longest_element(3))
        data = chart.to_json()
        assert data["node"] in ("peel", "extend")
        assert data["dim"] == 3


class TestEquivariance:
    def test_phi_commutes_with_y_conjugation(self):
        # phi_down(w', v, y.B) = y.phi_down(w', v, B) for positive y-elements
        rng = random.Random(22)
        n = 3
        checked = 0
        for w, wpv_full in weyl.bruhat_pairs(n):
            for u, v in splits(wpv_full):
                if v == weyl.identity(n) or not weyl.bruhat_leq(w, wpv_full):
                    continue
                b, _, _ = positive_point(w, wpv_full, rng)
                yw = conjugator_word(w)
                y = y_product(n, yw, rand_params(rng, len(yw), positive=True))
                lhs = phi_down(u, v, act(y, b))
                rhs = act(y, phi_down(u, v, b))
                assert lhs == rhs
                checked += 1
        assert checked > 20


class TestClassify:
    def test_b_plus(self):
        result = classify(b_plus(3))
        w0 = weyl.longest_element(3)
        assert result.index == CellIndex(w0, w0)
        assert result.coords == () and result.nonneg

    def test_sl2_both_signs(self):
        pos = classify(act(gen_y(2, 1, 1), b_plus(2)))
        assert pos.nonneg and pos.coords == (1,)
        neg = classify(act(gen_y(2, 1, -1), b_plus(2)))
        assert not neg.nonneg and neg.coords == (-1,)
        assert neg.reason == "NegativeCoordinate"

    def test_sl3_open(self):
        u = mat_mul(mat_mul(gen_y(3, 1, 1), gen_y(3, 2, 1)), gen_y(3, 1, 1))
        result = classify(act(u, b_plus(3)))
        assert result.nonneg
        assert result.index == CellIndex(weyl.identity(3), weyl.longest_element(3))
        assert all(c > 0 for c in result.coords)

    def test_y_conjugation_preserves_verdict(self):
        rng = random.Random(23)
        n = 3
        for w, wp in weyl.bruhat_pairs(n):
            chart = build_chart(w, wp)
            if chart.dim == 0:
                continue
            params = list(rand_params(rng, chart.dim, positive=True))
            yw = conjugator_word(w)
            y = y_product(n, yw, rand_params(rng, len(yw), positive=True))
            b = eval_chart(chart, params)
            assert classify(act(y, b)).nonneg
            params[rng.randrange(chart.dim)] *= -1
            b_neg = eval_chart(chart, params)
            assert not classify(b_neg).nonneg
            assert not classify(act(y, b_neg)).nonneg

    def test_word_strategy_agnostic(self):
        rng = random.Random(24)
        for w, wp in weyl.bruhat_pairs(3):
            chart = build_chart(w, wp)
            for _ in range(3):
                params = rand_params(rng, chart.dim)
                b = eval_chart(chart, params)
                a = classify(b, weyl.SMALLEST)
                c = classify(b, weyl.LARGEST)
                assert a.nonneg == c.nonneg and a.index == c.index

    def test_result_serialization(self):
        result = classify(act(gen_y(2, 1, Rat(1, 3)), b_plus(2)))
        data = result.to_json()
        # the chart coordinate of the line span(1, a) is 1/a (the x-side
        # big-cell coordinate of the same point)
        assert data == {"w": "1,2", "wp": "2,1", "coords": ["3"],
                        "nonneg": True, "reason": "ok"}
