"""Corpus scans: sweep curves and torsion indices, classify every
instance, verify the pattern prediction on every in-scope one, and archive
one witness per Frobenius class.

Curve iteration order is fixed (p ascending, then a, then b) so witness
archives and tallies are reproducible without a seed; the seed only feeds
the factorization randomness of the individual verifications.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from sympy import isprime

from .curve import Curve, CurveError, count_points
from .ff import make_prime_field
from .frobclass import (
    IRREDUCIBLE,
    JORDAN,
    SCALAR,
    SPLIT_DISTINCT,
    SPLIT_EQUAL_ORDERS,
    classify,
)
from .pattern import VerificationReport, verify
from .polyring import factor, pattern_of

ALL_KINDS = (SPLIT_DISTINCT, JORDAN, SCALAR, SPLIT_EQUAL_ORDERS, IRREDUCIBLE)


@dataclass
class ScanRecord:
    """One classified (curve, l) instance; patterns only when computed."""

    p: int
    a: int
    b: int
    l: int
    kind: str
    alpha: int
    match: Optional[bool] = None          # None unless fully verified
    predicted: Optional[Tuple[Tuple[int, int], ...]] = None
    empirical: Optional[Tuple[Tuple[int, int], ...]] = None
    psi_degree: Optional[int] = None
    error: Optional[str] = None


@dataclass
class ScanResult:
    p_min: int
    p_max: int
    l_set: Tuple[int, ...]
    quota: Optional[int]
    seed: int
    records: List[ScanRecord] = dc_field(default_factory=list)
    tallies: Dict[str, int] = dc_field(default_factory=dict)
    attempted: int = 0
    mismatches: List[ScanRecord] = dc_field(default_factory=list)
    witnesses: Dict[str, VerificationReport] = dc_field(default_factory=dict)
    errors: List[ScanRecord] = dc_field(default_factory=list)

    @property
    def missing_kinds(self) -> List[str]:
        return [k for k in ALL_KINDS if k not in self.tallies]


def scan(
    p_min: int,
    p_max: int,
    l_set,
    quota: Optional[int] = 10,
    seed: int = 0,
    keep_records: bool = True,
    progress=None,
) -> ScanResult:
    """Classify every nonsingular curve over F_p for p in [p_min, p_max]
    and every l in l_set (l != p); verify in-scope instances fully and a
    quota-limited sample of out-of-scope ones (empirical pattern only)."""
    l_set = tuple(sorted(set(int(l) for l in l_set)))
    for l in l_set:
        if l == 2 or not isprime(l):
            raise ValueError(f"l-set entries must be odd primes, got {l}")
    result = ScanResult(p_min, p_max, l_set, quota, seed)
    out_of_scope_done: Dict[str, int] = {}
    for p in range(max(p_min, 5), p_max + 1):
        if not isprime(p):
            continue
        field = make_prime_field(p)
        for a in range(p):
            for b in range(p):
                try:
                    curve = Curve(field, a, b)
                except CurveError:
                    continue  # singular
                order = count_points(curve)
                for l in l_set:
                    if l == p:
                        continue
                    result.attempted += 1
                    record = ScanRecord(p, a, b, l, "", 0)
                    try:
                        fc = classify(curve, l, trace=order.trace)
                        record.kind = fc.kind
                        record.alpha = fc.alpha
                        result.tallies[fc.kind] = result.tallies.get(fc.kind, 0) + 1
                        if fc.in_scope:
                            report = verify(curve, l, seed=seed, collect_timings=False)
                            record.match = report.match
                            record.predicted = report.prediction.pattern.entries
                            record.empirical = report.empirical.entries
                            record.psi_degree = report.psi_degree
                            if report.match is False:
                                result.mismatches.append(record)
                            if fc.kind not in result.witnesses:
                                result.witnesses[fc.kind] = report
                        else:
                            done = out_of_scope_done.get(fc.kind, 0)
                            if quota is None or done < quota:
                                out_of_scope_done[fc.kind] = done + 1
                                report = verify(
                                    curve, l, seed=seed, collect_timings=False
                                )
                                record.empirical = report.empirical.entries
                                record.psi_degree = report.psi_degree
                                if fc.kind not in result.witnesses:
                                    result.witnesses[fc.kind] = report
                    except Exception as exc:  # per-instance failures are recorded
                        record.error = f"{type(exc).__name__}: {exc}"
                        result.errors.append(record)
                    if keep_records:
                        result.records.append(record)
                if progress is not None:
                    progress(p, a, b)
    return result
