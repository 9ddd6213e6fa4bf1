"""Pattern prediction: h, i, the corrected halving rule, verify()."""

from math import gcd

import pytest

from divpattern.curve import make_curve
from divpattern.ff import make_prime_field
from divpattern.frobclass import FrobeniusClass, classify
from divpattern.pattern import (
    OUT_OF_SCOPE_NOTE,
    PredictionError,
    h_func,
    i_func,
    i_func_uncorrected,
    predict,
    two_adic_valuation,
    verify,
)
from divpattern.polyring import FactorPattern

F17 = make_prime_field(17)
EXAMPLE = make_curve(F17, F17.elem(3), F17.elem(6))


def lcm(x, y):
    return x * y // gcd(x, y)


def test_h_values():
    assert [h_func(x) for x in range(1, 9)] == [1, 1, 3, 2, 5, 3, 7, 4]
    with pytest.raises(ValueError):
        h_func(0)


def test_two_adic_valuation():
    assert [two_adic_valuation(n) for n in (1, 2, 3, 4, 6, 8, 12, 40)] == [
        0, 1, 0, 2, 1, 3, 2, 3,
    ]


def test_i_corrected_values():
    assert i_func(2, 4) == 4          # valuations differ: plain lcm
    assert i_func(2, 2) == 1          # equal valuations: lcm / 2
    assert i_func(4, 4) == 2
    assert i_func(2, 6) == 3          # both even, equal valuation 1
    assert i_func(3, 5) == 15         # odd arguments untouched
    assert i_func(1, 2) == 2


def test_i_uncorrected_halves_any_even_pair():
    assert i_func_uncorrected(2, 4) == 2  # the wrong value
    assert i_func_uncorrected(2, 2) == 1
    assert i_func_uncorrected(3, 6) == 6


def test_i_functions_exhaustive_disagreement_locus():
    # they disagree exactly when both even and the 2-adic valuations differ
    for x in range(1, 65):
        for y in range(1, 65):
            same = i_func(x, y) == i_func_uncorrected(x, y)
            both_even = x % 2 == 0 and y % 2 == 0
            expected_same = not both_even or (
                two_adic_valuation(x) == two_adic_valuation(y)
            )
            assert same == expected_same, (x, y)
            # corrected value always divides lcm and is at least lcm/2
            assert lcm(x, y) % i_func(x, y) == 0
            assert 2 * i_func(x, y) >= lcm(x, y)


def test_predict_split_distinct_reference():
    fc = classify(EXAMPLE, 5)
    pred = predict(fc)
    assert not pred.out_of_scope
    assert pred.pattern.as_lists() == [[1, 2], [2, 1], [4, 2]]
    assert pred.uncorrected_differs
    assert list(pred.uncorrected_entries) == [(1, 2), (2, 1), (2, 4)]


def test_predict_jordan_formula():
    fc = FrobeniusClass("jordan", 5, trace=2, q_mod_l=1, alpha=4, rho=1)
    # hypothetical jordan instance with alpha = 4: h = 2, counts (5-1)/4 = 1
    pred = predict(fc)
    assert pred.pattern.as_lists() == [[2, 1], [10, 1]]


def test_predict_degree_sum_invariant():
    for l in (3, 5, 7):
        for alpha in range(1, l):
            if (l - 1) % alpha:
                continue
            for beta in range(1, l):
                if (l - 1) % beta or beta <= alpha:
                    continue
                fc = FrobeniusClass(
                    "split_distinct", l, trace=0, q_mod_l=1, alpha=alpha,
                    rho=1, beta=beta,
                )
                pred = predict(fc)
                assert pred.pattern.degree_sum == (l * l - 1) // 2


def test_predict_out_of_scope_classes():
    fc = FrobeniusClass("scalar", 5, trace=2, q_mod_l=1, alpha=1, rho=1)
    pred = predict(fc)
    assert pred.out_of_scope
    assert pred.pattern is None
    assert pred.note == OUT_OF_SCOPE_NOTE


def test_verify_reference_instance():
    report = verify(EXAMPLE, 5, seed=0)
    assert report.match is True
    assert report.trace == -3
    assert report.point_count == 21
    assert report.psi_degree == 12
    assert report.empirical.as_lists() == [[1, 2], [2, 1], [4, 2]]
    assert report.prediction.pattern == report.empirical


def test_verify_out_of_scope_has_no_match_flag():
    # p=13, a=0, b=2, l=3 world: pick any irreducible-class instance
    f13 = make_prime_field(13)
    import itertools

    for a, b in itertools.product(range(13), repeat=2):
        if (4 * a**3 + 27 * b**2) % 13 == 0:
            continue
        e = make_curve(f13, f13.elem(a), f13.elem(b))
        fc = classify(e, 3)
        if not fc.in_scope:
            report = verify(e, 3, seed=0)
            assert report.match is None
            assert report.prediction.out_of_scope
            assert report.empirical.degree_sum == 4
            return
    pytest.fail("no out-of-scope instance found")


def test_verify_timings_toggle():
    with_t = verify(EXAMPLE, 5, seed=0, collect_timings=True)
    without = verify(EXAMPLE, 5, seed=0, collect_timings=False)
    assert with_t.timings and "factor" in with_t.timings
    assert not without.timings


def test_pattern_merge_is_canonical():
    raw = [(2, 1), (1, 2), (2, 4)]
    assert FactorPattern.from_pairs(raw).as_lists() == [[1, 2], [2, 5]]
