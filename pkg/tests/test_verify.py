from fractions import Fraction as F

import pytest

from gbrauer import tableaux as tb
from gbrauer.verify import (
    SeminormalLayer,
    content_function,
    coverage_summary,
    nazarov_identity_check,
    nazarov_suite,
    pq_lemma_checks,
    pq_scalar_values,
    run_relation_suite,
    seminormal_suite,
)


def _fails(reports):
    return [r for r in reports if r.status == "fail"]


def test_relation_suite_small(genset_cache):
    for n, delta in [(2, F(1)), (2, F(0)), (3, F(1)), (3, F(0)), (3, F(2))]:
        reports, complete = run_relation_suite(genset_cache(n, delta))
        assert complete
        assert _fails(reports) == [], (n, delta, _fails(reports)[:3])


def test_suite_selection(genset_cache):
    reports, complete = run_relation_suite(genset_cache(2, F(1)), ["braid"])
    assert complete and reports == []  # no admissible positions at two strands
    reports, _ = run_relation_suite(genset_cache(3, F(1)), ["untwist"])
    assert reports and not _fails(reports)
    with pytest.raises(ValueError):
        run_relation_suite(genset_cache(2, F(1)), ["nonsense"])


def test_essential_idempotent_sign_record(genset_cache):
    # the mixed-sign relation at a half-integer chain: the +2eps-mixed
    # convention holds, the rival one does not
    reports, _ = run_relation_suite(genset_cache(3, F(2)), ["essential-idempotent"])
    half = [r for r in reports if r.case.startswith("halfchain")]
    assert half, "expected a half-residue chain instance at delta=2"
    for r in half:
        assert r.status == "pass"
        assert "+2eps-mixed" in r.detail or "either" in r.detail


def test_diagonal_eps_example(genset_cache):
    # e(i) eps_1 e(i) = (-1)^(a_1) e(i) at the flat two-strand block
    gens = genset_cache(2, F(1))
    i = (F(0), F(0))
    a = tb.a_k(i, 1, F(1))
    assert a == 2
    assert gens.e[i] * gens.eps[1] * gens.e[i] == gens.e[i]


def test_braid_zero_cases_exact(genset_cache):
    gens = genset_cache(3, F(1))
    reports, _ = run_relation_suite(gens, ["braid"])
    zero_cases = [r for r in reports if "[zero]" in r.case or "[repeat]" in r.case]
    assert zero_cases
    assert all(r.status != "fail" for r in zero_cases)


def test_coverage_summary(genset_cache):
    reports, _ = run_relation_suite(genset_cache(2, F(1)))
    summary = coverage_summary(reports)
    assert summary["idempotent"][1] == 0
    # at two strands the commutation family has no nontrivial instance
    assert summary["commutation"][0] == 0


# -- seminormal layer ----------------------------------------------------------


def test_seminormal_n2():
    reports = seminormal_suite(2, F(1))
    assert not _fails(reports)


def test_seminormal_pole_cancellation():
    # at parameter 0 the class (-1/2, 1/2) is a sum of two idempotents with
    # poles that cancel
    layer = SeminormalLayer(2)
    t_up = ((1, 1, 1), (1, 1, 2))
    t_down = ((1, 1, 1), (-1, 1, 1))
    f_up, f_down = layer.idempotent(t_up), layer.idempotent(t_down)
    point = (F(0),)
    assert any(not c.regular_at(point) for c in f_up.coeffs.values())
    assert any(not c.regular_at(point) for c in f_down.coeffs.values())
    total = f_up + f_down
    assert all(c.regular_at(point) for c in total.coeffs.values())
    reports = seminormal_suite(2, F(0))
    assert not _fails(reports)


def test_seminormal_explicit_idempotent():
    # the two-strand contraction class: F = e_1 / x
    layer = SeminormalLayer(2)
    t = ((1, 1, 1), (-1, 1, 1))
    from gbrauer.exactarith import qx_x

    want = layer.alg.e(1).scale(qx_x().invert())
    assert layer.idempotent(t) == want


def test_seminormal_n3():
    reports = seminormal_suite(3, F(1))
    assert not _fails(reports)


# -- the two-variable identity ----------------------------------------------------


def test_nazarov_simplest():
    rep = nazarov_identity_check(((1, 1, 1), (-1, 1, 1)), 1)
    assert rep.status == "pass"


def test_nazarov_degenerate_empty_shape():
    # only one addable node below the cancelling pair
    t = ((1, 1, 1), (-1, 1, 1), (1, 1, 1), (-1, 1, 1))
    assert nazarov_identity_check(t, 3).status == "pass"


def test_nazarov_all_small():
    for n in (2, 3, 4):
        reports = nazarov_suite(n)
        assert reports and not _fails(reports)


# -- scalar lemmas ------------------------------------------------------------------


def test_pq_scalar_value_example():
    # flat two-strand block: P = 2d+1 evaluated at contents, Q = 1
    t = ((1, 1, 1), (-1, 1, 1))
    p, q = pq_scalar_values(t, 1, F(1))
    c1 = content_function(t[0])
    c2 = content_function(t[1])
    assert p == c1 - c2 + 1
    assert q == 1


def test_pq_lemmas_small():
    for n, delta in [(2, F(1)), (3, F(1)), (3, F(0)), (4, F(1))]:
        reports, coverage = pq_lemma_checks(n, delta)
        assert not _fails(reports), (n, delta)
        if n == 4 and delta == 1:
            assert all(v > 0 for v in coverage.values())


def test_sign_balance_n5():
    # the parity identity at balanced positions is pure combinatorics, so
    # it extends one size further than the algebra-level suites
    for delta in (F(0), F(1), F(2)):
        for seq in tb.residue_sequences(5, delta):
            for k in range(1, 5):
                if seq[k - 1] + seq[k] == 0 and tb.h_k(seq, k, delta) == 0:
                    if seq[k - 1] == 0:
                        assert (-1) ** tb.a_k(seq, k, delta) == 1
                    else:
                        other = seq[: k - 1] + (seq[k], seq[k - 1]) + seq[k + 1 :]
                        par = tb.a_k(seq, k, delta) + tb.a_k(other, k, delta)
                        assert (-1) ** par == 1
