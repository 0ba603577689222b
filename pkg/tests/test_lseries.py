"""Truncated sums, Hurwitz-zeta continuation, L-evaluation, and zero scans.

Oracles:
  * frozen 20-digit constants computed once with mpmath at 30 dps and
    pinned below (closed forms where they exist);
  * live mpmath cross-checks on a seeded random sample of (s, x) points;
  * a brute-force complex power sum for ``partial_sum``;
  * the integral tail bound |sum_{n>N} chi(n) n^-s| <= N^(1-sigma)/(sigma-1)
    linking ``evaluate`` to ``partial_sum`` for sigma > 1.
"""

import math
import random

import mpmath
import pytest

from lseries_lab.characters import enumerate_characters, enumerate_real_characters
from lseries_lab.lseries import (
    ContinuationRangeError,
    LEvaluation,
    LPoint,
    NonRealCharacterError,
    PoleError,
    ScanGridError,
    _bisect_sign_change,
    _grouped_at_one,
    _hurwitz_with_error,
    as_lpoint,
    evaluate,
    hurwitz_zeta,
    partial_sum,
    scan_zeros,
)

# Frozen with mpmath at 30 dps.
ZETA_HALF = -1.4603545088095868129
PI2_OVER_6 = 1.6449340668482264365
PI2_OVER_2 = 4.9348022005446793094
PI_OVER_4 = 0.78539816339744830962
CATALAN = 0.91596559417721901505
PI_OVER_3SQRT3 = 0.60459978807807261686
HURWITZ_SPOTS = [
    # (s, x, frozen zeta(s, x))
    (2.0, 0.25, 17.197329154507110739 + 0j),
    (0.25, 0.7, -0.44334612182210816688 + 0j),
    (complex(0.5, 1.5), 0.3, -0.43282307215597124533 + 1.1259907364609443761j),
    (complex(-0.5, 2.0), 1.0, 0.2280949717165263298 - 0.14452917173371359642j),
    (complex(2.5, -1.0), 0.9, 1.4668602240047919294 + 0.12931524764710373424j),
]

CHI0_1 = enumerate_real_characters(1)[0]
CHI3 = enumerate_real_characters(3)[1]
CHI4 = enumerate_real_characters(4)[1]
CHI0_6 = enumerate_real_characters(6)[0]


def brute_partial_sum(chi, s, n_terms):
    s = complex(s)
    return sum(
        chi.value_complex(n) * n ** (-s)
        for n in range(1, n_terms + 1)
        if chi.values[n % chi.modulus] != 0
    )


class TestPartialSum:
    def test_small_exact(self):
        # 1 - 1/3 for chi mod 4 at s = 1, four terms
        assert partial_sum(CHI4, 1.0, 4) == complex(1 - 1 / 3, 0.0)

    def test_rejects_empty_sum(self):
        with pytest.raises(ValueError):
            partial_sum(CHI4, 2.0, 0)

    @pytest.mark.parametrize("s", [2.0, 0.5, complex(0.5, 1.0), complex(2.0, -3.0)])
    def test_matches_brute_force_complex_powers(self, s):
        for chi in enumerate_characters(5) + enumerate_characters(8):
            ours = partial_sum(chi, s, 200)
            brute = brute_partial_sum(chi, s, 200)
            assert abs(ours - brute) <= 1e-12 * max(1.0, abs(brute))

    def test_accepts_lpoint_complex_and_float(self):
        want = partial_sum(CHI4, LPoint(0.5, 0.0), 50)
        assert partial_sum(CHI4, 0.5, 50) == want
        assert partial_sum(CHI4, complex(0.5, 0.0), 50) == want

    def test_real_character_real_axis_is_real(self):
        value = partial_sum(CHI3, 0.25, 777)
        assert value.imag == 0.0


class TestAsLPoint:
    def test_coercions(self):
        assert as_lpoint(2) == LPoint(2.0, 0.0)
        assert as_lpoint(0.5) == LPoint(0.5, 0.0)
        assert as_lpoint(complex(0.5, 14.1)) == LPoint(0.5, 14.1)
        p = LPoint(1.5, -2.0)
        assert as_lpoint(p) is p

    def test_real_axis_flag(self):
        assert LPoint(0.3).on_real_axis
        assert not LPoint(0.3, 1e-12).on_real_axis


class TestHurwitzZeta:
    def test_riemann_specials(self):
        assert abs(hurwitz_zeta(2.0, 1.0) - PI2_OVER_6) < 1e-12
        assert abs(hurwitz_zeta(0.5, 1.0) - ZETA_HALF) < 1e-12
        assert abs(hurwitz_zeta(2.0, 0.5) - PI2_OVER_2) < 1e-12

    @pytest.mark.parametrize("s,x,want", HURWITZ_SPOTS)
    def test_frozen_spots(self, s, x, want):
        got = hurwitz_zeta(s, x, tol=1e-12)
        assert abs(got - want) <= 1e-12 * max(1.0, abs(want))

    def test_pole_at_one(self):
        for s in (1.0, 1, complex(1.0, 0.0), LPoint(1.0)):
            with pytest.raises(PoleError):
                hurwitz_zeta(s, 0.5)

    def test_continuation_range(self):
        with pytest.raises(ContinuationRangeError):
            hurwitz_zeta(-1.0, 0.5)
        with pytest.raises(ContinuationRangeError):
            hurwitz_zeta(complex(-2.0, 5.0), 0.5)

    @pytest.mark.parametrize("x", [0.0, -0.25, 1.0001, 2.0])
    def test_x_domain(self, x):
        with pytest.raises(ValueError):
            hurwitz_zeta(2.0, x)

    def test_x_equals_one_allowed(self):
        assert abs(hurwitz_zeta(2.0, 1.0) - PI2_OVER_6) < 1e-12

    def test_live_mpmath_cross_check_with_honest_error(self):
        mpmath.mp.dps = 30
        rng = random.Random(20240817)
        for _ in range(40):
            sigma = rng.uniform(-0.9, 4.0)
            t = rng.choice([0.0, rng.uniform(-3.0, 3.0)])
            x = rng.uniform(0.05, 1.0)
            s = LPoint(sigma, t)
            if sigma == 1.0 and t == 0.0:
                continue
            value, err, _ = _hurwitz_with_error(s, x, 1e-10)
            ref = mpmath.zeta(mpmath.mpc(sigma, t), x)
            actual = abs(complex(value) - complex(ref))
            assert actual <= 2.0 * err + 1e-12, (sigma, t, x, actual, err)

    def test_tighter_tolerance_tightens_the_answer(self):
        # sigma near 0 with small x is the hard corner for the default shift
        loose, loose_err, _ = _hurwitz_with_error(LPoint(0.05, 0.0), 0.05, 1e-6)
        tight, tight_err, _ = _hurwitz_with_error(LPoint(0.05, 0.0), 0.05, 1e-13)
        assert tight_err <= loose_err
        mpmath.mp.dps = 30
        ref = float(mpmath.zeta(0.05, 0.05))
        assert abs(tight - ref) <= 2.0 * tight_err + 1e-12


class TestEvaluate:
    def test_riemann_zeta_via_modulus_one(self):
        ev = evaluate(CHI0_1, 2.0, tol=1e-12)
        assert ev.method == "hurwitz"
        assert abs(ev.value - PI2_OVER_6) < 1e-12
        assert abs(ev.value - PI2_OVER_6) <= 2.0 * ev.err_estimate + 1e-14

    def test_riemann_zeta_critical_point(self):
        ev = evaluate(CHI0_1, 0.5, tol=1e-12)
        assert abs(ev.value - ZETA_HALF) < 1e-12

    def test_catalan_value(self):
        ev = evaluate(CHI4, 2.0, tol=1e-12)
        assert abs(ev.value - CATALAN) < 1e-12

    def test_grouped_at_one_chi4(self):
        ev = evaluate(CHI4, 1.0)
        assert ev.method == "grouped"
        assert abs(ev.value - PI_OVER_4) <= ev.err_estimate + 5e-16
        assert abs(ev.value - PI_OVER_4) < 1e-10
        assert ev.n_used == 64 * 4

    def test_grouped_at_one_chi3(self):
        ev = evaluate(CHI3, 1.0)
        assert ev.method == "grouped"
        assert abs(ev.value - PI_OVER_3SQRT3) < 1e-10

    def test_grouped_handles_complex_characters(self):
        # quartic character mod 5: compare against a huge direct partial sum
        chi = next(c for c in enumerate_characters(5) if not c.is_real)
        value, err, _ = _grouped_at_one(chi)
        direct = brute_partial_sum(chi, 1.0, 5 * 200_000)
        # the alternating-block direct sum itself is only O(1/N) accurate
        assert abs(value - direct) < 1e-5
        assert err < 1e-12

    def test_principal_euler_factors(self):
        # L(2, principal mod 6) = zeta(2) * (1 - 2^-2) * (1 - 3^-2) = pi^2 / 9
        ev = evaluate(CHI0_6, 2.0, tol=1e-12)
        want = PI2_OVER_6 * (1 - 0.25) * (1 - 1 / 9)
        assert abs(ev.value - want) < 1e-12
        assert abs(want - math.pi**2 / 9) < 1e-15

    def test_principal_pole(self):
        for chi in (CHI0_1, CHI0_6):
            with pytest.raises(PoleError):
                evaluate(chi, 1.0)

    def test_continuation_range(self):
        with pytest.raises(ContinuationRangeError):
            evaluate(CHI4, -1.5)

    def test_tail_bound_links_evaluate_to_partial_sum(self):
        n_terms = 2000
        for q in range(1, 11):
            for chi in enumerate_characters(q):
                for s in (2.5, complex(2.5, 1.0)):
                    sigma = complex(s).real
                    ev = evaluate(chi, s)
                    ps = partial_sum(chi, s, n_terms)
                    bound = n_terms ** (1.0 - sigma) / (sigma - 1.0)
                    assert abs(ev.value - ps) <= 2.0 * bound + 1e-9, (q, chi.index, s)

    def test_returns_evaluation_record(self):
        ev = evaluate(CHI4, 3.0)
        assert isinstance(ev, LEvaluation)
        assert ev.n_used >= 1
        assert ev.err_estimate >= 0.0


class TestBisection:
    def test_refines_simple_root(self):
        f = lambda x: x * x - 0.09
        root = _bisect_sign_change(f, 0.1, 0.9, f(0.1), f(0.9), 1e-12)
        assert abs(root - 0.3) < 1e-11

    def test_exact_zero_midpoint_returns_immediately(self):
        f = lambda x: x - 0.5
        root = _bisect_sign_change(f, 0.0, 1.0, -0.5, 0.5, 1e-15)
        assert root == 0.5


class TestScanZeros:
    def test_chi4_window_has_no_sign_change(self):
        result = scan_zeros(CHI4, 0.1, 0.9, 17)
        assert not result.found_sign_change
        assert result.brackets == ()
        assert len(result.sigmas) == 17
        assert result.min_abs > 0.0
        i = result.sigmas.index(result.argmin_sigma)
        assert result.min_abs == abs(result.values[i])
        assert all(math.isfinite(v) for v in result.values)

    def test_grid_is_uniform_and_inclusive(self):
        result = scan_zeros(CHI3, 0.2, 0.8, 4)
        assert result.sigmas == pytest.approx((0.2, 0.4, 0.6, 0.8))

    def test_rejects_complex_character(self):
        chi = next(c for c in enumerate_characters(5) if not c.is_real)
        with pytest.raises(NonRealCharacterError):
            scan_zeros(chi, 0.1, 0.9, 5)

    def test_rejects_thin_grid(self):
        with pytest.raises(ScanGridError):
            scan_zeros(CHI4, 0.1, 0.9, 1)

    @pytest.mark.parametrize("lo,hi", [(0.0, 0.9), (0.1, 1.0), (0.9, 0.1), (-0.2, 0.5)])
    def test_rejects_bad_window(self, lo, hi):
        with pytest.raises(ValueError):
            scan_zeros(CHI4, lo, hi, 5)

    def test_synthetic_sign_change_is_bracketed_and_refined(self, monkeypatch):
        root_at = 0.4371

        def fake_evaluate(chi, s, *, tol=1e-10):
            sigma = as_lpoint(s).sigma
            return LEvaluation(
                value=complex(sigma - root_at, 0.0),
                method="hurwitz",
                n_used=1,
                err_estimate=1e-15,
            )

        monkeypatch.setattr("lseries_lab.lseries.evaluate", fake_evaluate)
        result = scan_zeros(CHI4, 0.1, 0.9, 9, tol=1e-10)
        assert result.found_sign_change
        assert len(result.brackets) == 1
        bracket = result.brackets[0]
        assert bracket.lo < root_at < bracket.hi
        assert abs(bracket.root - root_at) < 1e-9

    def test_non_real_value_for_real_character_raises(self, monkeypatch):
        def fake_evaluate(chi, s, *, tol=1e-10):
            return LEvaluation(
                value=complex(0.5, 1.0), method="hurwitz", n_used=1, err_estimate=1e-15
            )

        monkeypatch.setattr("lseries_lab.lseries.evaluate", fake_evaluate)
        with pytest.raises(ArithmeticError):
            scan_zeros(CHI4, 0.1, 0.9, 3)
