"""Command-line front end.

Subcommands: ``tableaux`` (enumeration with residues, degrees, heads and
reduction data), ``generators`` (build and cache a generator set),
``check`` (relation, scalar, partial-fraction and generic-parameter
suites), ``basis`` (graded basis with rank certificate and graded
dimensions) and ``export`` (basis records, optional structure constants).

All output is deterministic: identical configuration gives byte-identical
output.  With ``--out``, reports are written as delimited text and the
report path also renders a figure next to the output file.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from . import tableaux as tb
from .basis import GradedBasis, build_basis, poincare_string
from .exactarith import rational_from_string, rational_to_string
from .generators import (
    GeneratorSet,
    load_generator_set,
    save_generator_set,
)
from .linalg import RankDeficient
from .verify import (
    RELATION_SUITES,
    coverage_summary,
    nazarov_suite,
    pq_lemma_checks,
    run_relation_suite,
    seminormal_suite,
)

DEFAULT_MAX_N = 6


class CliError(Exception):
    pass


def _parse_delta(text: str) -> Fraction:
    try:
        return rational_from_string(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"delta must be an exact rational 'p/q': {exc}")


def _delta_slug(delta: Fraction) -> str:
    return rational_to_string(delta).replace("/", "_").replace("-", "m")


def format_node(node) -> str:
    sign, r, c = node
    return f"{'+' if sign > 0 else '-'}{r},{c}"


def format_tableau(t) -> str:
    return " ".join(format_node(node) for node in t)


def parse_tableau(text: str):
    nodes = []
    for bit in text.split():
        sign = 1 if bit[0] == "+" else -1
        if bit[0] in "+-":
            bit = bit[1:]
        r, c = bit.split(",")
        nodes.append((sign, int(r), int(c)))
    return tuple(nodes)


def _parse_shape(text: str):
    parts_txt, _, f_txt = text.partition("|")
    parts_txt = parts_txt.strip()
    shape = tuple(int(p) for p in parts_txt.split(",") if p) if parts_txt else ()
    f = None
    if f_txt:
        key, _, value = f_txt.partition("=")
        if key.strip() != "f":
            raise CliError(f"bad shape filter {text!r}; expected 'parts|f=m'")
        f = int(value)
    return shape, f


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cache_path(cache_dir, n, delta):
    return os.path.join(cache_dir, f"generators-n{n}-delta{_delta_slug(delta)}.json")


def obtain_generators(n, delta, cache_dir, quiet=False):
    """Load the generator set from cache, or build and cache it."""
    if cache_dir:
        path = _cache_path(cache_dir, n, delta)
        if os.path.exists(path):
            return load_generator_set(path)
    gens = GeneratorSet(n, delta)
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        save_generator_set(gens, _cache_path(cache_dir, n, delta))
    return gens


# -- tableaux ------------------------------------------------------------------


def cmd_tableaux(args):
    delta = _parse_delta(args.delta)
    n = args.n
    if args.degree_of:
        t = parse_tableau(args.degree_of)
        if len(t) != n or not tb.is_updown(t):
            raise CliError("not a valid up-down tableau of the requested size")
        total, steps = tb.tableau_degree(t, delta, breakdown=True)
        lines = [f"degree\t{total}", "steps\t" + ",".join(str(s) for s in steps)]
        _emit(lines, args.out)
        return 0
    tabs = tb.all_updown(n)
    if args.shape:
        shape, f = _parse_shape(args.shape)
        if f is not None and sum(shape) + 2 * f != n:
            raise CliError(f"|shape| + 2f != n for {args.shape!r}")
        tabs = [t for t in tabs if tb.final_shape(t) == shape]
    if args.residues:
        want = tuple(rational_from_string(v) for v in args.residues.split(","))
        tabs = [t for t in tabs if tb.residue_sequence(t, delta) == want]
    header = "tableau\tshape\tf\tresidues\tdegree\thead\treduction"
    lines = [header] if args.format == "structured" else []
    for t in tabs:
        shape, f = tb.cell_of(t)
        seq = tb.residue_sequence(t, delta)
        _chain, rhos = tb.standard_reduction(t)
        row = "\t".join(
            [
                format_tableau(t),
                ",".join(str(p) for p in shape) or "-",
                str(f),
                ",".join(rational_to_string(v) for v in seq),
                str(tb.tableau_degree(t, delta)),
                str(tb.head(t)),
                ";".join(f"{a},{b}" for a, b in rhos) or "-",
            ]
        )
        lines.append(row)
    if args.format == "text":
        lines.append(f"total\t{len(tabs)}")
    _emit(lines, args.out)
    return 0


# -- generators ------------------------------------------------------------------


def cmd_generators(args):
    delta = _parse_delta(args.delta)
    cache_dir = args.cache_dir or "gbrauer-cache"
    gens = GeneratorSet(args.n, delta)
    # certified before write: idempotency and partition of unity
    total = gens.alg.zero()
    for seq in gens.resseqs:
        if not (gens.e[seq] * gens.e[seq]) == gens.e[seq]:
            raise CliError(f"idempotency failed at {seq}")
        total = total + gens.e[seq]
    if not total == gens.alg.one():
        raise CliError("partition of unity failed")
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, args.n, delta)
    save_generator_set(gens, path)
    lines = [
        f"cache\t{path}",
        f"residue-sequences\t{len(gens.resseqs)}",
        f"projector-multiplicity\t{gens.exponent}",
    ]
    _emit(lines, args.out)
    return 0


# -- check -----------------------------------------------------------------------


_EXTRA_SUITES = ("nazarov", "seminormal", "scalar-lemmas")


def _suite_selection(text):
    if not text or text == "all":
        return list(RELATION_SUITES) + list(_EXTRA_SUITES)
    names = [s.strip() for s in text.split(",") if s.strip()]
    for name in names:
        if name == "relations":
            continue
        if name not in RELATION_SUITES and name not in _EXTRA_SUITES:
            raise CliError(f"unknown suite {name!r}")
    out = []
    for name in names:
        if name == "relations":
            out.extend(RELATION_SUITES)
        else:
            out.append(name)
    return out


def cmd_check(args):
    delta = _parse_delta(args.delta)
    n = args.n
    if n >= 5 and not args.extended:
        raise CliError("sizes 5 and up are an extended run; pass --extended")
    selection = _suite_selection(args.suite)
    deadline = time.monotonic() + args.max_seconds if args.max_seconds else None
    relation_names = [s for s in selection if s in RELATION_SUITES]
    reports = []
    complete = True
    if relation_names:
        gens = obtain_generators(n, delta, args.cache_dir)
        if args.jobs > 1:
            reports, complete = _parallel_relations(gens, relation_names, args.jobs, deadline)
        else:
            reports, complete = run_relation_suite(gens, relation_names, deadline)
    coverage_extra = {}
    for name in selection:
        if deadline is not None and time.monotonic() > deadline:
            complete = False
            break
        if name == "nazarov":
            reports.extend(nazarov_suite(n))
        elif name == "seminormal":
            reports.extend(seminormal_suite(n, delta))
        elif name == "scalar-lemmas":
            lemma_reports, coverage_extra = pq_lemma_checks(n, delta)
            reports.extend(lemma_reports)
    summary = coverage_summary(reports)
    fails = [r for r in reports if r.status == "fail"]
    lines = []
    if args.format == "structured":
        lines.append("suite\tcase\tstatus\tdetail")
        for r in reports:
            lines.append(f"{r.suite}\t{r.case}\t{r.status}\t{r.detail}")
    lines.append(f"config\tn={n} delta={rational_to_string(delta)} suites={','.join(selection)}")
    for name in sorted(summary):
        p, f, t = summary[name]
        flag = "" if p else "\tNO-NONTRIVIAL-INSTANCES"
        lines.append(f"suite-summary\t{name}\tpass={p}\tfail={f}\ttrivial={t}{flag}")
    for key in sorted(coverage_extra):
        lines.append(f"branch-coverage\t{key}\t{coverage_extra[key]}")
    if not complete:
        lines.append("status\tINCOMPLETE (time budget exhausted)")
    lines.append(f"result\t{'FAIL' if fails else 'PASS'}\tcases={len(reports)}\tfailures={len(fails)}")
    _emit(lines, args.out)
    if args.out:
        from .figures import render_suite_figure

        fig_path = os.path.splitext(args.out)[0] + ".png"
        render_suite_figure(
            summary, fig_path, f"relation suites n={n}, delta={rational_to_string(delta)}"
        )
    return 1 if fails or not complete else 0


_WORKER_GENS = None


def _relation_worker(name):
    reports, _ = run_relation_suite(_WORKER_GENS, [name])
    return name, reports


def _parallel_relations(gens, names, jobs, deadline):
    import multiprocessing as mp

    global _WORKER_GENS
    _WORKER_GENS = gens
    ctx = mp.get_context("fork")
    with ctx.Pool(processes=min(jobs, len(names))) as pool:
        results = dict(pool.map(_relation_worker, names))
    _WORKER_GENS = None
    reports = []
    for name in names:
        reports.extend(results[name])
    complete = deadline is None or time.monotonic() <= deadline
    return reports, complete


# -- basis -----------------------------------------------------------------------


def cmd_basis(args):
    delta = _parse_delta(args.delta)
    n = args.n
    if n >= 5 and not args.extended:
        raise CliError("sizes 5 and up are an extended run; pass --extended")
    gens = obtain_generators(n, delta, args.cache_dir)
    basis = GradedBasis(gens)
    try:
        rank = basis.rank_certificate()
        rank_msg = str(rank)
        ok = True
    except RankDeficient as exc:
        rank_msg = f"DEFICIENT ({exc})"
        ok = False
    hist = basis.poincare()
    bad_degrees = basis.degree_identity_failures() if ok else []
    lines = []
    if args.format == "structured":
        lines.append("cell\tf\ts\tt\tdegree")
        for (cell, si, ti) in basis.index:
            shape = ",".join(str(p) for p in cell[0]) or "-"
            lines.append(
                f"{shape}\t{cell[1]}\t{si}\t{ti}\t{basis.degrees[(cell, si, ti)]}"
            )
    lines.append(f"config\tn={n} delta={rational_to_string(delta)}")
    lines.append(f"count\t{len(basis.index)}")
    lines.append(f"rank\t{rank_msg}")
    lines.append(f"poincare\t{poincare_string(hist)}")
    lines.append(f"degree-identity\t{'PASS' if not bad_degrees else f'FAIL ({len(bad_degrees)})'}")
    _emit(lines, args.out)
    if args.out:
        from .figures import render_poincare_figure

        fig_path = os.path.splitext(args.out)[0] + ".png"
        render_poincare_figure(
            hist, fig_path, f"graded dimensions n={n}, delta={rational_to_string(delta)}"
        )
    return 0 if ok and not bad_degrees else 1


# -- export ----------------------------------------------------------------------


def cmd_export(args):
    delta = _parse_delta(args.delta)
    n = args.n
    gens = obtain_generators(n, delta, args.cache_dir)
    basis = GradedBasis(gens)
    lines = ["cell\tf\ts\tt\tdegree\telement"]
    for (cell, si, ti) in basis.index:
        elem = basis.elements[(cell, si, ti)]
        body = ";".join(
            "[" + ",".join(str(p + 1) for p in gens.alg.diagrams[d]) + "]:" + rational_to_string(c)
            for d, c in elem.items_sorted()
        )
        shape = ",".join(str(p) for p in cell[0]) or "-"
        lines.append(f"{shape}\t{cell[1]}\t{si}\t{ti}\t{basis.degrees[(cell, si, ti)]}\t{body}")
    if args.structure_constants:
        if n > 3:
            raise CliError("structure constants are only exported for n <= 3 (output size)")
        lines.append("structure\tleft\tright\tcoefficients")
        for a, ka in enumerate(basis.index):
            for b, kb in enumerate(basis.index):
                prod = basis.elements[ka] * basis.elements[kb]
                coeffs = basis.expand(prod)
                body = ";".join(
                    f"{basis.index.index(key)}:{rational_to_string(c)}"
                    for key, c in sorted(coeffs.items(), key=lambda kv: basis.index.index(kv[0]))
                )
                lines.append(f"structure\t{a}\t{b}\t{body or '0'}")
    _emit(lines, args.out)
    return 0


# -- entry point -------------------------------------------------------------------


def _add_common(p, with_suite=False):
    p.add_argument("--n", type=int, required=True, help="number of strands")
    p.add_argument("--delta", default="1", help="loop parameter, exact 'p/q'")
    p.add_argument("--cache-dir", default=None, help="generator cache directory")
    p.add_argument("--out", default=None, help="write the report to this file")
    p.add_argument(
        "--format", choices=("text", "structured"), default="text", help="report format"
    )
    p.add_argument("--max-seconds", type=float, default=None, help="time budget")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="size guard")
    if with_suite:
        p.add_argument(
            "--suite",
            default="all",
            help="comma list: relations, individual relation names, "
            "nazarov, seminormal, scalar-lemmas, or all",
        )


def build_parser():
    ap = argparse.ArgumentParser(prog="gbrauer", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tableaux", help="enumerate up-down tableaux")
    _add_common(p)
    p.add_argument("--shape", default=None, help="filter: 'parts|f=m', e.g. '2,1|f=1'")
    p.add_argument("--residues", default=None, help="filter: comma list of residues")
    p.add_argument("--degree-of", default=None, help="print the degree of one tableau")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("generators", help="build and cache the generator set")
    _add_common(p)
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("check", help="run verification suites")
    _add_common(p, with_suite=True)
    p.add_argument("--extended", action="store_true", help="allow sizes 5 and up")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("basis", help="graded basis, rank and graded dimensions")
    _add_common(p)
    p.add_argument("--extended", action="store_true", help="allow sizes 5 and up")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("export", help="export basis records")
    _add_common(p)
    p.add_argument(
        "--structure-constants",
        action="store_true",
        help="also export products of basis elements (n <= 3)",
    )
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.n < 0 or args.n > args.max_n:
        print(f"error: n must be between 0 and {args.max_n}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
