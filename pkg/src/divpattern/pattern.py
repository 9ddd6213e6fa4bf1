"""Prediction of the factorization pattern of the l-th division polynomial.

For the two in-scope Frobenius classes the pattern follows directly from
the eigenvalue orders alpha and beta:

  distinct eigenvalue orders:
      ((h(alpha), (l-1)/2h(alpha)), (h(beta), (l-1)/2h(beta)),
       (i(alpha, beta), (l-1)^2 / 2 i(alpha, beta)))
  non-diagonalizable double eigenvalue:
      ((h(alpha), (l-1)/2h(alpha)), (h(alpha) l, (l-1)/2h(alpha)))

where h halves even arguments and i(x, y) is lcm(x, y), halved exactly
when x and y are both even *with equal 2-adic valuations*.  The variant
that halves whenever both arguments are even (kept here as
i_func_uncorrected) overpredicts splitting and is retained only as a
regression demonstration; see the worked example in the test-suite where
the two rules disagree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from math import lcm
from typing import Optional

from .curve import Curve, count_points
from .divpoly import psi_x
from .frobclass import (
    JORDAN,
    SPLIT_DISTINCT,
    FrobeniusClass,
    InvariantError,
    classify,
)
from .polyring import FactorPattern, factor, pattern_of

OUT_OF_SCOPE_NOTE = (
    "same-field case: all l-torsion points generate one extension; "
    "prediction out of scope"
)


def h_func(x: int) -> int:
    """x for odd x, x/2 for even x."""
    if x < 1:
        raise ValueError(f"h is defined for positive integers, got {x}")
    return x if x % 2 else x // 2


def two_adic_valuation(n: int) -> int:
    """Exponent of 2 in n; 0 for odd n."""
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def i_func(x: int, y: int) -> int:
    """Degree of factors from torsion lines off both eigenvector lines:
    lcm(x, y), halved when x, y are both even with equal 2-adic valuation."""
    if x < 1 or y < 1:
        raise ValueError("i is defined for positive integers")
    m = lcm(x, y)
    if x % 2 == 0 and y % 2 == 0 and two_adic_valuation(x) == two_adic_valuation(y):
        return m // 2
    return m


def i_func_uncorrected(x: int, y: int) -> int:
    """Uncorrected variant: halves the lcm whenever both arguments are even.
    Wrong when the 2-adic valuations differ; kept for regression demos only."""
    if x < 1 or y < 1:
        raise ValueError("i is defined for positive integers")
    m = lcm(x, y)
    if x % 2 == 0 and y % 2 == 0:
        return m // 2
    return m


class PredictionError(ValueError):
    pass


@dataclass(frozen=True)
class Prediction:
    frob: FrobeniusClass
    pattern: Optional[FactorPattern]          # None when out of scope
    out_of_scope: bool
    note: Optional[str] = None
    # regression-demo variant, kept in raw formula order (degrees may
    # repeat); populated only when it disagrees with the real prediction
    uncorrected_entries: Optional[tuple] = None

    @property
    def uncorrected_differs(self) -> bool:
        return self.uncorrected_entries is not None


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InvariantError(f"non-integral factor count {what}: {num}/{den}")
    return q


def _raw_entries(fc: FrobeniusClass, i_map) -> list:
    l = fc.l
    if fc.kind == SPLIT_DISTINCT:
        ha, hb = h_func(fc.alpha), h_func(fc.beta)
        im = i_map(fc.alpha, fc.beta)
        return [
            (ha, _exact_div(l - 1, 2 * ha, "for the order-alpha eigenline")),
            (hb, _exact_div(l - 1, 2 * hb, "for the order-beta eigenline")),
            (im, _exact_div((l - 1) ** 2, 2 * im, "for the mixed lines")),
        ]
    if fc.kind == JORDAN:
        ha = h_func(fc.alpha)
        n = _exact_div(l - 1, 2 * ha, "for the Jordan eigenline")
        return [(ha, n), (ha * l, n)]
    raise PredictionError(f"no prediction for class {fc.kind!r}")


def predict(fc: FrobeniusClass) -> Prediction:
    """Predicted factorization pattern of psi_l for an in-scope class;
    out-of-scope classes get an explicit marker instead of a pattern."""
    if not fc.in_scope:
        return Prediction(fc, None, True, note=OUT_OF_SCOPE_NOTE)
    pattern = FactorPattern.from_pairs(_raw_entries(fc, i_func))
    expected = (fc.l * fc.l - 1) // 2
    if pattern.degree_sum != expected:
        raise InvariantError(
            f"predicted pattern {pattern} sums to {pattern.degree_sum}, "
            f"expected {expected}"
        )
    raw_uncorrected = tuple(_raw_entries(fc, i_func_uncorrected))
    differs = FactorPattern.from_pairs(raw_uncorrected) != pattern
    return Prediction(
        fc,
        pattern,
        False,
        uncorrected_entries=raw_uncorrected if differs else None,
    )


@dataclass
class VerificationReport:
    """Outcome of one predict-then-factor run on a single (curve, l) pair."""

    curve: Curve
    l: int
    trace: int
    point_count: int
    psi_degree: int
    frob: FrobeniusClass
    prediction: Prediction
    empirical: FactorPattern
    match: Optional[bool]                     # None when out of scope
    timings: dict = dc_field(default_factory=dict)
    oracle: Optional[dict] = None


def verify(
    curve: Curve,
    l: int,
    seed: int = 0,
    with_oracle: bool = False,
    collect_timings: bool = True,
) -> VerificationReport:
    """Classify, predict when in scope, factor psi_l, and compare."""
    timings = {}

    def clock(name, fn):
        start = time.perf_counter()
        out = fn()
        if collect_timings:
            timings[name] = time.perf_counter() - start
        return out

    order = clock("count_points", lambda: count_points(curve))
    f = clock("divpoly", lambda: psi_x(curve, l))
    fc = clock(
        "classify", lambda: classify(curve, l, trace=order.trace, psi_xpart=f)
    )
    prediction = clock("predict", lambda: predict(fc))
    fz = clock("factor", lambda: factor(f, seed=seed))
    empirical = pattern_of(fz)
    match = None if prediction.out_of_scope else prediction.pattern == empirical
    report = VerificationReport(
        curve=curve,
        l=l,
        trace=order.trace,
        point_count=order.count,
        psi_degree=f.degree,
        frob=fc,
        prediction=prediction,
        empirical=empirical,
        match=match,
        timings=timings,
    )
    if with_oracle:
        from .oracle import oracle_report

        report.oracle = clock(
            "oracle",
            lambda: oracle_report(curve, l, seed=seed, factorization=fz),
        )
    return report
