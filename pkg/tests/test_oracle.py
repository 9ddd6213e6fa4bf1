"""Explicit torsion-basis oracle: basis, matrix, conjugacy, orbits."""

import itertools

import pytest

from divpattern.curve import INFINITY, count_points, make_curve
from divpattern.divpoly import psi_x
from divpattern.ff import make_prime_field
from divpattern.frobclass import classify
from divpattern.oracle import (
    ORACLE_L_CAP,
    ORACLE_Q_CAP,
    OracleError,
    empirical_pattern_from_orbits,
    frobenius_matrix,
    minimal_pm_degree,
    conjugacy_class,
    oracle_report,
    splitting_degree,
    torsion_basis,
)
from divpattern.pattern import verify
from divpattern.polyring import factor

F17 = make_prime_field(17)
EXAMPLE = make_curve(F17, F17.elem(3), F17.elem(6))


def test_caps_enforced():
    with pytest.raises(OracleError):
        oracle_report(EXAMPLE, ORACLE_L_CAP + 4, seed=0)
    big = make_prime_field(211)
    assert big.cardinality > ORACLE_Q_CAP
    with pytest.raises(OracleError):
        oracle_report(make_curve(big, big.elem(1), big.elem(1)), 3, seed=0)


def test_torsion_basis_reference_curve():
    tb = torsion_basis(EXAMPLE, 5, seed=0)
    work = tb.ext_curve
    # both basis points have exact order 5
    for pt in (tb.P, tb.Q):
        assert work.scalar_mul(5, pt) is INFINITY
        assert pt is not INFINITY
    # independence: Q is not a multiple of P
    multiples = {work.scalar_mul(k, tb.P).key() for k in range(5)}
    assert tb.Q.key() not in multiples
    assert tb.splitting_n == 4


def test_splitting_degree_matches_group_order_divisibility():
    # N is minimal with l^2 | #E(F_{q^N}) and full torsion rational; check
    # the divisibility side over the reference curve
    from divpattern.ff import make_extension

    fz = factor(psi_x(EXAMPLE, 5), seed=0)
    n = splitting_degree(EXAMPLE, 5, factorization=fz)
    assert n == 4
    k = make_extension(F17, n)
    assert count_points(EXAMPLE.base_change(k)).count % 25 == 0


def test_frobenius_matrix_reference_trace_det():
    tb = torsion_basis(EXAMPLE, 5, seed=0)
    m = frobenius_matrix(tb)
    assert m.trace == (-3) % 5
    assert m.det == 17 % 5
    rows = m.rows
    assert (rows[0][0] + rows[1][1]) % 5 == m.trace
    assert (rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]) % 5 == m.det


def test_conjugacy_reference_is_diagonalizable_with_eigenvalues_3_4():
    m = frobenius_matrix(torsion_basis(EXAMPLE, 5, seed=0))
    conj = conjugacy_class(m)
    assert conj["kind"] == "split_distinct"
    assert sorted(conj["eigenvalues"]) == [3, 4]


def test_eigenbasis_orbit_degrees_match_h_values():
    # in the eigenbasis the orbit degrees are h(alpha) = 1, h(beta) = 2,
    # and the mixed vector needs i(alpha, beta) = 4
    m = frobenius_matrix(torsion_basis(EXAMPLE, 5, seed=0))
    conj = conjugacy_class(m)
    c = conj["transform"]
    v1 = (c[0][0], c[1][0])
    v2 = (c[0][1], c[1][1])
    mixed = ((v1[0] + v2[0]) % 5, (v1[1] + v2[1]) % 5)
    degrees = sorted(
        (minimal_pm_degree(m, v1), minimal_pm_degree(m, v2), minimal_pm_degree(m, mixed))
    )
    assert degrees == [1, 2, 4]


def test_minimal_pm_degree_scalar_matrix():
    from divpattern.oracle import FrobeniusMatrix

    m = FrobeniusMatrix(rows=((4, 0), (0, 4)), l=5)
    # 4 = -1 mod 5, so +-identification makes every vector degree 1
    for vec in ((1, 0), (0, 1), (1, 1), (2, 3)):
        assert minimal_pm_degree(m, vec) == 1


def test_orbit_pattern_equals_factorization_pattern_reference():
    tb = torsion_basis(EXAMPLE, 5, seed=0)
    m = frobenius_matrix(tb)
    pattern = empirical_pattern_from_orbits(tb, m)
    assert pattern.as_lists() == [[1, 2], [2, 1], [4, 2]]


def test_oracle_report_reference():
    report = oracle_report(EXAMPLE, 5, seed=0)
    assert report["splitting_degree"] == 4
    assert report["trace_mod_l"] == 2
    assert report["det_mod_l"] == 2
    assert report["orbit_pattern"] == [[1, 2], [2, 1], [4, 2]]
    assert report["conjugacy"]["kind"] == "split_distinct"


def test_oracle_seed_independence_of_facts():
    for seed in (0, 1, 17):
        report = oracle_report(EXAMPLE, 5, seed=seed)
        assert report["orbit_pattern"] == [[1, 2], [2, 1], [4, 2]]
        assert report["splitting_degree"] == 4
        assert report["conjugacy"]["kind"] == "split_distinct"
        assert sorted(report["conjugacy"]["eigenvalues"]) == [3, 4]


def test_oracle_three_way_agreement_sample():
    # orbit pattern == factorization pattern == prediction (when in scope),
    # and the conjugacy kind matches classify
    p = 13
    field = make_prime_field(p)
    checked = 0
    for a, b in itertools.product(range(p), repeat=2):
        if (4 * a**3 + 27 * b**2) % p == 0:
            continue
        e = make_curve(field, field.elem(a), field.elem(b))
        for l in (3, 5):
            report = verify(e, l, seed=0, with_oracle=True)
            oracle = report.oracle
            assert oracle["orbit_pattern"] == report.empirical.as_lists()
            fc = classify(e, l)
            assert oracle["conjugacy"]["kind"] == fc.kind
            assert oracle["trace_mod_l"] == fc.trace
            assert oracle["det_mod_l"] == fc.q_mod_l
            if fc.in_scope:
                assert report.match is True
            checked += 1
        if checked >= 40:
            break
    assert checked >= 40


def test_scalar_class_basis_construction():
    # scalar classes need the fallback second-factor lift; find one and
    # confirm an honest independent basis comes back
    p = 13
    field = make_prime_field(p)
    for a, b in itertools.product(range(p), repeat=2):
        if (4 * a**3 + 27 * b**2) % p == 0:
            continue
        e = make_curve(field, field.elem(a), field.elem(b))
        fc = classify(e, 3)
        if fc.kind != "scalar":
            continue
        tb = torsion_basis(e, 3, seed=0)
        work = tb.ext_curve
        multiples = {work.scalar_mul(k, tb.P).key() for k in range(3)}
        assert tb.Q.key() not in multiples
        m = frobenius_matrix(tb)
        assert conjugacy_class(m)["kind"] == "scalar"
        return
    pytest.fail("no scalar instance found")
