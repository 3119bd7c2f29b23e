"""Acceptance gate: every criterion runs at exact-equality tolerance and
prints one pass/fail line.

The extended size-5 runs sit behind the GBRAUER_EXTENDED environment flag.
"""

import itertools
import os
import sys
import time
from fractions import Fraction as F

import pytest

from gbrauer import tableaux as tb
from gbrauer.basis import build_basis
from gbrauer.diagrams import BrauerAlgebra, all_diagrams
from gbrauer.cli import main as cli_main
from gbrauer.verify import (
    coverage_summary,
    nazarov_suite,
    pq_lemma_checks,
    run_relation_suite,
    seminormal_suite,
)

from conftest import DELTA_SET

EXTENDED = bool(os.environ.get("GBRAUER_EXTENDED"))
_DURATIONS: dict[int, float] = {}


def _announce(num: int, ok: bool, text: str):
    line = f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {text}\n"
    sys.__stdout__.write(line)
    sys.__stdout__.flush()
    assert ok, line


class _timed:
    def __init__(self, num):
        self.num = num

    def __enter__(self):
        self.t0 = time.monotonic()

    def __exit__(self, *exc):
        _DURATIONS[self.num] = _DURATIONS.get(self.num, 0.0) + time.monotonic() - self.t0


def test_criterion_1_diagram_counts():
    with _timed(1):
        got = [len(all_diagrams(n)) for n in range(1, 7)]
    _announce(1, got == [1, 3, 15, 105, 945, 10395], f"diagram counts n=1..6 = {got}")


def test_criterion_2_presentation_and_jm():
    ok = True
    with _timed(2):
        for n in range(2, 6):
            A = BrauerAlgebra(n, F(2))
            one = A.one()
            L = A.jm_elements()
            for k in range(1, n):
                sk, ek = A.s(k), A.e(k)
                ok &= sk * sk == one
                ok &= ek * ek == ek.scale(F(2))
                ok &= sk * ek == ek and ek * sk == ek
                ok &= (ek * (L[k - 1] + L[k])).is_zero()
                ok &= ((L[k - 1] + L[k]) * ek).is_zero()
                ok &= sk * L[k - 1] - L[k] * sk == ek - one
                ok &= L[k - 1] * sk - sk * L[k] == ek - one
                for r in range(1, n + 1):
                    if r not in (k, k + 1):
                        ok &= sk * L[r - 1] == L[r - 1] * sk
                        ok &= ek * L[r - 1] == L[r - 1] * ek
            for k in range(1, n - 1):
                ok &= A.s(k) * A.s(k + 1) * A.s(k) == A.s(k + 1) * A.s(k) * A.s(k + 1)
                ok &= A.e(k) * A.e(k + 1) * A.e(k) == A.e(k)
                ok &= A.e(k + 1) * A.e(k) * A.e(k + 1) == A.e(k + 1)
                ok &= A.s(k) * A.e(k + 1) * A.e(k) == A.s(k + 1) * A.e(k)
                ok &= A.e(k) * A.e(k + 1) * A.s(k) == A.e(k) * A.s(k + 1)
            for k in range(1, n):
                for r in range(k + 2, n):
                    ok &= A.s(k) * A.e(r) == A.e(r) * A.s(k)
                    ok &= A.e(k) * A.e(r) == A.e(r) * A.e(k)
                    ok &= A.s(k) * A.s(r) == A.s(r) * A.s(k)
            for a in range(n):
                for b in range(n):
                    ok &= L[a] * L[b] == L[b] * L[a]
    _announce(2, ok, "presentation and Jucys-Murphy relations exact for n <= 5")


def test_criterion_3_idempotent_system(genset_cache):
    ok = True
    detail = []
    with _timed(3):
        for n in range(1, 5):
            for delta in DELTA_SET:
                gens = genset_cache(n, delta)
                total = gens.alg.zero()
                for i in gens.resseqs:
                    ei = gens.e[i]
                    ok &= not ei.is_zero()
                    ok &= ei * ei == ei
                    total = total + ei
                ok &= total == gens.alg.one()
                for a, b in itertools.combinations(gens.resseqs, 2):
                    ok &= (gens.e[a] * gens.e[b]).is_zero()
                # vanishing exactly off the residue sequences
                count = 0
                values = [sorted(gens.res_values[k]) for k in range(1, n + 1)]
                for seq in itertools.product(*values):
                    if seq in gens.e:
                        continue
                    ok &= gens.projector_product(seq).is_zero()
                    count += 1
                    if count >= 40:
                        break
                for k in range(1, n + 1):
                    y = gens.y_elem(k)
                    if not y.is_zero():
                        order = gens.nilpotency_order(y)
                        ok &= order <= len(gens.alg.diagrams)
                detail.append(f"n={n},d={delta}:|I|={len(gens.resseqs)}")
    _announce(3, ok, "weight idempotents: unity, orthogonality, support, nilpotency "
                     f"({'; '.join(detail[-4:])})")


def test_criterion_4_relation_suite(genset_cache):
    fails = []
    cases = 0
    with _timed(4):
        for n in range(1, 5):
            for delta in DELTA_SET:
                reports, complete = run_relation_suite(genset_cache(n, delta))
                assert complete
                cases += len(reports)
                fails += [
                    (n, delta, r.suite, r.case) for r in reports if r.status == "fail"
                ]
    _announce(
        4,
        not fails,
        f"graded presentation relations: {cases} instances over n <= 4 x {len(DELTA_SET)} parameters"
        + (f"; failures {fails[:3]}" if fails else ""),
    )


@pytest.mark.skipif(not EXTENDED, reason="size-5 run is extended (set GBRAUER_EXTENDED=1)")
def test_criterion_4_extended_n5(genset_cache):
    reports, complete = run_relation_suite(genset_cache(5, F(1)))
    fails = [r for r in reports if r.status == "fail"]
    _announce(4, complete and not fails, f"extended size-5 relation suite: {len(reports)} instances")


def test_criterion_5_graded_basis(genset_cache):
    ok = True
    detail = []
    with _timed(5):
        for n in range(1, 5):
            want = 1
            for m in range(2 * n - 1, 0, -2):
                want *= m
            for delta in DELTA_SET:
                basis = build_basis(genset_cache(n, delta))
                ok &= len(basis.index) == want
                ok &= basis.rank_certificate() == want
                bad = basis.degree_identity_failures()
                ok &= not bad
                detail.append(f"n={n},d={delta}:rank={want}")
    _announce(5, ok, "graded basis: counts, exact rank, degree identity "
                     f"({detail[-1] if detail else ''})")


def test_criterion_6_worked_examples():
    with _timed(6):
        t6 = ((1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2), (-1, 2, 2), (-1, 1, 2))
        deg1 = tb.tableau_degree(t6, F(1))
        deg0 = tb.tableau_degree(t6, F(0))
        n9 = (
            (1, 1, 1), (-1, 1, 1), (1, 1, 1), (1, 2, 1), (1, 1, 2),
            (-1, 2, 1), (1, 1, 3), (-1, 1, 3), (-1, 1, 2),
        )
        pairs = tb.remove_pairs(n9)
        h = tb.head(n9)
        _chain, rhos = tb.standard_reduction(t6)
        ok = (
            deg1 == -1
            and deg0 == 0
            and pairs == [(1, 2), (4, 6), (7, 8), (5, 9)]
            and h == 1
            and rhos == [(4, 5), (4, 6)]
        )
    _announce(6, ok, f"worked examples: degrees ({deg1}, {deg0}), pairs {pairs}, "
                     f"head {h}, reduction data {rhos}")


def test_criterion_7_seminormal_layer():
    fails = []
    cases = 0
    for n, delta in [(2, F(0)), (2, F(1)), (3, F(0)), (3, F(1))]:
        reports = seminormal_suite(n, delta)
        cases += len(reports)
        fails += [(n, delta, r.case) for r in reports if r.status == "fail"]
    _announce(
        7,
        not fails,
        f"generic-parameter idempotent family: {cases} checks incl. the "
        "pole-cancelling class at parameter 0",
    )


@pytest.mark.skipif(not EXTENDED, reason="size-4 generic run is extended")
def test_criterion_7_extended_n4():
    reports = seminormal_suite(4, F(1))
    fails = [r for r in reports if r.status == "fail"]
    _announce(7, not fails, f"extended size-4 generic-parameter suite: {len(reports)} checks")


def test_criterion_8_two_variable_identity():
    fails = []
    cases = 0
    for n in range(2, 5):
        reports = nazarov_suite(n)
        cases += len(reports)
        fails += [r.case for r in reports if r.status == "fail"]
    _announce(8, not fails, f"two-variable partial-fraction identity: {cases} admissible instances")


def test_criterion_9_scalar_lemmas():
    fails = []
    cases = 0
    coverage = {"pq3-class-0": 0, "pq3-class--": 0, "pq3-class-+": 0}
    for n in range(2, 5):
        for delta in DELTA_SET:
            reports, cov = pq_lemma_checks(n, delta)
            cases += len(reports)
            fails += [(n, delta, r.suite, r.case) for r in reports if r.status == "fail"]
            for key, v in cov.items():
                coverage[key] += v
    all_branches = all(v > 0 for v in coverage.values())
    _announce(
        9,
        not fails and all_branches,
        f"scalar correction lemmas: {cases} instances, branch coverage {coverage}",
    )


def test_criterion_10_cli_determinism(tmp_path):
    cache = os.path.join(tmp_path, "cache")

    def run(argv):
        import io
        from contextlib import redirect_stdout

        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli_main(argv)
        return code, buf.getvalue()

    args = [
        "check", "--n", "3", "--delta", "1", "--cache-dir", cache,
        "--format", "structured",
    ]
    code1, out1 = run(args)
    code2, out2 = run(args)
    bargs = ["basis", "--n", "3", "--delta", "1", "--cache-dir", cache, "--format", "structured"]
    code3, out3 = run(bargs)
    code4, out4 = run(bargs)
    deterministic = out1 == out2 and out3 == out4 and code1 == code2 == 0 and code3 == code4 == 0
    budget = sum(_DURATIONS.get(k, 0.0) for k in range(1, 7))
    within = budget < 3600.0
    _announce(
        10,
        deterministic and within,
        f"CLI headless and diffable; criteria 1-6 ran in {budget:.1f}s (< 3600s)",
    )
