"""Command-line front end.

Exit status is 0 when every check passes, 1 on a mathematical failure and 2
when a resource guard trips.
"""

import argparse
import json
import sys

from petersonring import gkm, typea
from petersonring.polyring import DEFAULT_SPAIR_BUDGET, GuardError
from petersonring.polyring.hilbert import render_q
from petersonring.presentation import PresentationSpec, verify_presentation
from petersonring.report import plot_betti, suite_outputs, write_csv
from petersonring.rootsystem import DEFAULT_MAX_RANK, RootSystemError, build_root_system
from petersonring.suite import run_suite
from petersonring.weyl import BruhatGuardError, length, longest_parabolic, one_line

EXIT_PASS, EXIT_FAIL, EXIT_GUARD = 0, 1, 2


def parse_subset(text):
    """'1,3' -> {1, 3}; the empty string is the empty set."""
    text = (text or "").strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated index list: {text!r}")


def _emit(payload, fmt, text_lines):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _spec(args, parser):
    name = f"{args.type}{args.rank}"
    try:
        data = build_root_system(name, max_rank=max(DEFAULT_MAX_RANK, args.max_rank or 0))
    except RootSystemError as exc:
        parser.error(str(exc))
    I = frozenset(data.indices) if args.I is None else args.I
    try:
        return PresentationSpec(data, I, args.J)
    except ValueError as exc:
        parser.error(str(exc))


def cmd_present(args, parser):
    spec = _spec(args, parser)
    rep = verify_presentation(spec, args.spair_budget)
    lines = [f"{spec.label()}  [{rep.status}]",
             "ordinary generators:"]
    lines += [f"  {g}" for g in rep.ordinary_generators]
    lines.append("equivariant generators:")
    lines += [f"  {g}" for g in rep.equivariant_generators]
    lines.append(f"ordinary series: {render_q(rep.ordinary_series)}")
    lines.append("equivariant series: "
                 f"({render_q(rep.equivariant_series_numerator)})"
                 f"/({render_q(rep.equivariant_series_denominator)})")
    lines.append(f"regular sequence: {rep.regular_sequence}")
    lines.append("betti: " + ",".join(str(b) for b in rep.betti))
    lines += [f"FAIL {f}" for f in rep.failures]
    lines.append("PASS" if rep.passed else "FAIL")
    _emit(rep.to_json(), args.format, lines)
    if args.out:
        plot_betti({spec.label(): rep.betti}, f"{args.out}/betti.png", spec.label())
        write_csv(f"{args.out}/betti.csv",
                  [{"degree": 2 * k, "betti": b} for k, b in enumerate(rep.betti)],
                  ["degree", "betti"])
    return EXIT_PASS if rep.passed else EXIT_FAIL


def cmd_gkm(args, parser):
    spec = _spec(args, parser)
    rel = gkm.check_relations(spec)
    top = 2 * spec.codim + 4 if args.max_degree is None else args.max_degree
    iso = gkm.check_iso_degreewise(spec, top, args.spair_budget)
    payload = {"relations": rel.to_json(), "iso": iso.to_json(),
               "passed": rel.passed and iso.passed}
    lines = [spec.label(),
             "fixed points: " + " ".join(f"w_{k}" for k in rel.fixed_points),
             f"relations: {rel.generators_checked} generators"
             + (", quadratic identity" if rel.quadratic_checked else "")
             + (" PASS" if rel.passed else " FAIL")]
    lines += [f"  FAIL {f}" for f in rel.failures]
    for d in iso.degrees:
        lines.append(f"degree {d['degree']}: basis {d['basis_size']} rank {d['rank']}"
                     f" hilbert {d['hilbert_coefficient']}")
    lines.append("PASS" if payload["passed"] else "FAIL")
    _emit(payload, args.format, lines)
    return EXIT_PASS if payload["passed"] else EXIT_FAIL


def cmd_cells(args, parser):
    if args.example == "nonirreducible":
        rep = typea.analyze_example_nonirreducible()
        payload = rep.to_json()
        lines = [f"stratum K={s['K']} dim {s['dim']}: {s['equations']}" for s in rep.strata]
        lines.append(f"big cell equation: {rep.big_cell_equation} = 0")
        lines.append("factors: " + ", ".join(rep.factors))
        lines.append(f"components: {len(rep.components)}")
        lines.append(f"intersection: {rep.intersection}")
        lines += [f"limit: {lim}" for lim in rep.limits]
        lines.append(f"q^2 coefficient: {rep.top_degree_count}")
        _emit(payload, args.format, lines)
        return EXIT_PASS
    if args.n is None:
        parser.error("cells needs --n (or --example)")
    if args.K is not None:
        try:
            chart = typea.build_cell_chart(args.n, args.K)
        except ValueError as exc:
            parser.error(str(exc))
        payload = typea.chart_report(chart, args.J)
        ok = typea.verify_peterson_membership(chart, seed=args.seed)
        payload["membership"] = ok
        w = longest_parabolic(chart.K, typea.type_a_data(args.n))
        payload["w_K"], payload["length"] = one_line(w), length(w)
        lines = [chart.render(), f"dim {chart.dim}", f"w_K = {payload['w_K']}"]
        lines += [f"minor {j}: {e}" for j, e in payload["equations"].items()]
        lines.append(f"membership: {ok}")
        _emit(payload, args.format, lines)
        return EXIT_PASS if ok else EXIT_FAIL
    if args.a is None or args.b is None:
        parser.error("cells needs --K or both --a and --b")
    n, a, b = args.n, args.a, args.b
    try:
        got = typea.paving_poincare(n, a, b)
    except typea.ChartError as exc:
        parser.error(str(exc))
    expected = typea.expected_paving(n, b)
    cells = []
    extra = list(range(b + 1, n))
    for mask in range(1 << len(extra)):
        K = set(range(a, b + 1)) | {extra[i] for i in range(len(extra)) if mask >> i & 1}
        el = typea.interval_elimination(n, a, b, K)
        cells.append({"K": sorted(K), "dim": el.dim, "zero": sorted(el.substitution)})
    payload = {"n": n, "a": a, "b": b, "cells": cells, "paving": got,
               "expected": expected, "passed": got == expected}
    lines = [f"K={c['K']} dim {c['dim']} forced zero {c['zero']}" for c in cells]
    lines.append(f"paving: {render_q(got)}")
    lines.append("PASS" if got == expected else f"FAIL expected {render_q(expected)}")
    _emit(payload, args.format, lines)
    return EXIT_PASS if got == expected else EXIT_FAIL


def cmd_suite(args, parser):
    results = run_suite(args.max_rank or 4, args.jobs, args.spair_budget)
    passed = all(r.passed for r in results)
    payload = {"checks": [r.to_json() for r in results], "passed": passed}
    lines = ["check,passed,cases"]
    lines += [f"{r.name},{'PASS' if r.passed else 'FAIL'},{r.cases}" for r in results]
    if args.out:
        peterson = next((r.detail for r in results if r.name.startswith("1 ") and r.passed), [])
        files = suite_outputs(results, peterson, args.out)
        lines += [f"# wrote {f}" for f in files]
    _emit(payload, args.format, lines)
    return EXIT_PASS if passed else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="petersonring", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=["json", "text"], default="text")
        sp.add_argument("--seed", type=int, default=typea.SEED)
        sp.add_argument("--spair-budget", type=int, default=DEFAULT_SPAIR_BUDGET)
        sp.add_argument("--max-rank", type=int, default=None)
        sp.add_argument("--out", default=None, help="directory for CSV and PNG files")

    for name, fn in [("present", cmd_present), ("gkm", cmd_gkm)]:
        sp = sub.add_parser(name)
        sp.add_argument("--type", required=True)
        sp.add_argument("--rank", type=int, required=True)
        sp.add_argument("--I", type=parse_subset, default=None)
        sp.add_argument("--J", type=parse_subset, default=frozenset())
        sp.add_argument("--max-degree", type=int, default=None)
        common(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("cells")
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--K", type=parse_subset, default=None)
    sp.add_argument("--J", type=parse_subset, default=frozenset())
    sp.add_argument("--example", choices=["nonirreducible"])
    common(sp)
    sp.set_defaults(func=cmd_cells)

    sp = sub.add_parser("suite")
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_suite)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (GuardError, BruhatGuardError) as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except AssertionError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
