"""Command-line interface: parse group specs, run analyses, export graphs,
and sweep theorem verification across whole families."""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import InputError, ResourceLimitError, SpecSyntaxError
from .graph import PoeGraph, build_poe_graph
from .groups import GroupSpec
from .isomorphism import DEFAULT_NODE_BUDGET
from .primes import is_prime, perfect_power
from .report import SCHEMA_VERSION, dump_json, theorem_entry
from .spectral import spectrum_of_graph, verify_equitable_quotient, verify_spectrum
from .structure import connected_components
from .theorems import FAIL, Finding, merge_findings, verify_structure

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_RESOURCE = 2
EXIT_VERIFICATION = 3


# ---------------------------------------------------------------------------
# group-spec grammar:  spec := term ("x" term)* ; term := "Z" "(" INT ("^" INT)? ")"
# ---------------------------------------------------------------------------


def parse_group_spec(text: str, max_order: int | None = None) -> GroupSpec:
    factors: list[int] = []
    i = 0
    n = len(text)

    def skip_ws(j):
        while j < n and text[j].isspace():
            j += 1
        return j

    def parse_int(j):
        start = j
        while j < n and text[j].isdigit():
            j += 1
        if j == start:
            raise SpecSyntaxError("expected an integer", start)
        return int(text[start:j]), j

    i = skip_ws(i)
    while True:
        term_start = i
        if i >= n or text[i] not in "Zz":
            raise SpecSyntaxError("expected 'Z'", i)
        i = skip_ws(i + 1)
        if i >= n or text[i] != "(":
            raise SpecSyntaxError("expected '('", i)
        i = skip_ws(i + 1)
        base, i = parse_int(i)
        i = skip_ws(i)
        exponent = 1
        if i < n and text[i] == "^":
            i = skip_ws(i + 1)
            exponent, i = parse_int(i)
            i = skip_ws(i)
        if base < 2:
            raise SpecSyntaxError(f"cyclic factor base must be >= 2, got {base}", term_start)
        if exponent < 1:
            raise SpecSyntaxError(f"exponent must be >= 1, got {exponent}", term_start)
        if i >= n or text[i] != ")":
            raise SpecSyntaxError("expected ')'", i)
        i = skip_ws(i + 1)
        factors.append(base**exponent)
        if i >= n:
            break
        if text[i] not in "xX*":
            raise SpecSyntaxError("expected 'x' between factors", i)
        i = skip_ws(i + 1)
    return GroupSpec(factors, max_order=max_order)


def render_group_spec(g: GroupSpec) -> str:
    """Canonical text form: every factor in maximal-exponent notation."""
    terms = []
    for f in g.factors:
        a, b = perfect_power(f)
        terms.append(f"Z({f})" if b == 1 else f"Z({a}^{b})")
    return "x".join(terms)


def format_element(label) -> str:
    return "(" + ",".join(str(c) for c in label) + ")"


# ---------------------------------------------------------------------------
# analysis orchestration
# ---------------------------------------------------------------------------


@dataclass
class AnalysisOptions:
    no_spectrum: bool = False
    strict: bool = False
    max_order: int | None = None
    iso_budget: int = DEFAULT_NODE_BUDGET
    jobs: int = 1
    charpoly_cap: int = 512
    vertex_list_cap: int = 128


@dataclass
class Analysis:
    group: GroupSpec
    graph: PoeGraph
    components: list
    structure: object
    spectrum_checks: list = field(default_factory=list)
    spectrum: object = None
    timing: dict = field(default_factory=dict)

    def all_checks(self):
        return list(self.structure.checks) + list(self.spectrum_checks)

    def findings(self) -> list[Finding]:
        return list(self.structure.findings)

    def has_failure(self) -> bool:
        return any(c.verdict == FAIL for c in self.all_checks())


def analyze_group(g: GroupSpec, options: AnalysisOptions | None = None) -> Analysis:
    options = options or AnalysisOptions()
    t0 = time.perf_counter()
    graph = build_poe_graph(g)
    t1 = time.perf_counter()
    comps = connected_components(graph)
    structure = verify_structure(g, graph, comps, iso_budget=options.iso_budget)
    t2 = time.perf_counter()
    spectrum = None
    spectrum_checks = []
    if not options.no_spectrum:
        spectrum = spectrum_of_graph(
            graph, comps, charpoly_cap=options.charpoly_cap, jobs=options.jobs
        )
        spectrum_checks, spectrum = verify_spectrum(
            g, graph, comps, spectrum, charpoly_cap=options.charpoly_cap
        )
        q = g.total_order
        if q % 2 == 0 and is_prime(q // 2) and q // 2 != 2:
            spectrum_checks.append(verify_equitable_quotient(g, graph))
    t3 = time.perf_counter()
    timing = {
        "build_s": t1 - t0,
        "structure_s": t2 - t1,
        "spectrum_s": t3 - t2,
        "total_s": t3 - t0,
    }
    return Analysis(g, graph, comps, structure, spectrum_checks, spectrum, timing)


def report_document(analysis: Analysis, options: AnalysisOptions | None = None) -> dict:
    options = options or AnalysisOptions()
    g = analysis.group
    comps_json = []
    for comp in analysis.components:
        entry = {
            "index": comp.index,
            "size": comp.size,
            "n_edges": comp.n_edges,
            "regularity": comp.regularity,
            "bipartite": comp.is_bipartite,
            "has_triangle": comp.has_triangle,
            "order_profile": {str(k): v for k, v in sorted(comp.order_profile.items())},
        }
        labels = comp.labels()
        if len(labels) <= options.vertex_list_cap:
            entry["vertices"] = [format_element(lbl) for lbl in labels]
            entry["vertices_truncated"] = False
        else:
            entry["vertices"] = [
                format_element(lbl) for lbl in labels[: options.vertex_list_cap]
            ]
            entry["vertices_truncated"] = True
        comps_json.append(entry)

    spectrum_json = None
    if analysis.spectrum is not None:
        s = analysis.spectrum
        err = s.numeric_max_error
        spectrum_json = {
            "integer_eigenvalues": {str(k): v for k, v in s.integer_eigenvalues.items()},
            "residual_poly": list(s.residual),
            "quadratic_factors": [
                {"poly": list(q), "multiplicity": m} for q, m in s.quadratic_factors
            ],
            "partial": s.partial,
            "numeric_max_error": None if err is None or not math.isfinite(err) else err,
        }

    return {
        "schema": SCHEMA_VERSION,
        "group": {
            "spec": render_group_spec(g),
            "factors": list(g.factors),
            "order": g.total_order,
            "family": analysis.structure.family,
        },
        "components": comps_json,
        "spectrum": spectrum_json,
        "theorems": [theorem_entry(c) for c in analysis.all_checks()],
        "findings": [f.as_dict() for f in analysis.findings()],
        "timing": analysis.timing,
    }


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------


def export_dot(analysis: Analysis) -> str:
    graph = analysis.graph
    lines = ["graph poe {", "  node [shape=circle];"]
    for i, label in enumerate(graph.vertex_labels):
        order = int(graph.order_cache[i])
        lines.append(f'  v{i} [label="{format_element(label)}\\norder={order}"];')
    for u, v, prime in graph.edges():
        lines.append(f'  v{u} -- v{v} [label="p={prime}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_csv(analysis: Analysis, path) -> None:
    graph = analysis.graph
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([format_element(lbl) for lbl in graph.vertex_labels])
        for row in graph.adjacency_matrix():
            writer.writerow([int(x) for x in row])


# ---------------------------------------------------------------------------
# family sweeps
# ---------------------------------------------------------------------------

FAMILIES = (
    "elementary",
    "odd-prime-power",
    "two-power",
    "two-group-products",
    "even-odd-mixed",
    "odd-odd-mixed",
)

_SWEEP_DEFAULTS = {
    "elementary": {"p_max": 13, "n_max": 5, "max_order": 400},
    "odd-prime-power": {"p_max": 11, "n_max": 12, "max_order": 2500},
    "two-power": {"p_max": 2, "n_max": 12, "max_order": 4096},
    "two-group-products": {"p_max": 2, "n_max": 10, "max_order": 1024},
    "even-odd-mixed": {"p_max": 7, "n_max": 12, "max_order": 2000},
    "odd-odd-mixed": {"p_max": 7, "n_max": 12, "max_order": 2500},
}


def _odd_primes_upto(p_max: int) -> list[int]:
    return [p for p in range(3, p_max + 1) if is_prime(p)]


def _exponent_multisets(total_max: int):
    """Non-decreasing exponent tuples with sum <= total_max (2-group shapes)."""
    out = []

    def rec(prefix, remaining, minimum):
        for e in range(minimum, remaining + 1):
            tup = prefix + (e,)
            out.append(tup)
            rec(tup, remaining - e, e)

    rec((), total_max, 1)
    return out


def _mixed_orders(primes: list[int], max_order: int, base: int = 1):
    """All products base * prod(p_i^{e_i}) with every listed prime used."""
    results = []

    def rec(i, value, exponents):
        if i == len(primes):
            results.append((value, tuple(exponents)))
            return
        p = primes[i]
        v = value * p
        e = 1
        while v <= max_order:
            rec(i + 1, v, exponents + [e])
            v *= p
            e += 1

    rec(0, base, [])
    return results


def family_groups(family: str, p_max: int, n_max: int, max_order: int) -> list[GroupSpec]:
    groups: list[GroupSpec] = []
    if family == "elementary":
        for p in _odd_primes_upto(p_max):
            n = 1
            while p**n <= max_order and n <= n_max:
                groups.append(GroupSpec((p,) * n))
                n += 1
    elif family == "odd-prime-power":
        for p in _odd_primes_upto(p_max):
            n = 1
            while p**n <= max_order and n <= n_max:
                groups.append(GroupSpec([p**n]))
                n += 1
    elif family == "two-power":
        n = 2
        while 2**n <= max_order and n <= n_max:
            groups.append(GroupSpec([2**n]))
            n += 1
    elif family == "two-group-products":
        total_max = min(n_max, int(math.log2(max_order)))
        for exps in _exponent_multisets(total_max):
            groups.append(GroupSpec([2**e for e in exps]))
    elif family == "even-odd-mixed":
        odd = _odd_primes_upto(p_max)
        for r in range(1, len(odd) + 1):
            from itertools import combinations

            for primes in combinations(odd, r):
                n1 = 2
                while 2**n1 * math.prod(primes) <= max_order:
                    for order, _ in _mixed_orders(list(primes), max_order, base=2**n1):
                        groups.append(GroupSpec([order]))
                    n1 += 1
    elif family == "odd-odd-mixed":
        odd = _odd_primes_upto(p_max)
        from itertools import combinations

        for r in range(2, len(odd) + 1):
            for primes in combinations(odd, r):
                for order, _ in _mixed_orders(list(primes), max_order):
                    groups.append(GroupSpec([order]))
    else:
        raise InputError(f"unknown family {family!r}; choose from {FAMILIES}")
    unique = {g.factors: g for g in groups}
    return [unique[k] for k in sorted(unique)]


@dataclass
class SweepResult:
    family: str
    analyses: list[Analysis]
    findings: list[Finding]

    def verdict_table(self) -> dict[str, dict[str, int]]:
        table: dict[str, dict[str, int]] = {}
        for analysis in self.analyses:
            for check in analysis.all_checks():
                row = table.setdefault(
                    check.check_id, {"pass": 0, "fail": 0, "hypothesis-not-met": 0}
                )
                row[check.verdict] += 1
        return dict(sorted(table.items()))

    def failures(self):
        out = []
        for analysis in self.analyses:
            for check in analysis.all_checks():
                if check.verdict == FAIL:
                    out.append((render_group_spec(analysis.group), check))
        return out


def run_family_sweep(
    family: str,
    p_max: int | None = None,
    n_max: int | None = None,
    max_order: int | None = None,
    options: AnalysisOptions | None = None,
) -> SweepResult:
    defaults = _SWEEP_DEFAULTS[family]
    p_max = p_max if p_max is not None else defaults["p_max"]
    n_max = n_max if n_max is not None else defaults["n_max"]
    max_order = max_order if max_order is not None else defaults["max_order"]
    options = options or AnalysisOptions()
    groups = family_groups(family, p_max, n_max, max_order)
    jobs = max(1, options.jobs)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            analyses = list(pool.map(lambda g: analyze_group(g, options), groups))
    else:
        analyses = [analyze_group(g, options) for g in groups]
    analyses.sort(key=lambda a: (a.group.total_order, a.group.factors))
    findings = merge_findings(
        f for analysis in analyses for f in analysis.findings()
    )
    return SweepResult(family, analyses, findings)


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------


def _print_analysis_summary(analysis: Analysis, out=sys.stdout) -> None:
    g = analysis.group
    print(f"group     : {render_group_spec(g)} (order {g.total_order})", file=out)
    print(f"family    : {analysis.structure.family}", file=out)
    sizes = sorted(c.size for c in analysis.components)
    print(f"components: {len(sizes)} with sizes {sizes}", file=out)
    if analysis.spectrum is not None:
        s = analysis.spectrum
        ints = ", ".join(f"[{k}]^{v}" for k, v in s.integer_eigenvalues.items())
        print(f"spectrum  : {{{ints}}} residual degree {len(s.residual) - 1}", file=out)
    print("theorems  :", file=out)
    for check in analysis.all_checks():
        print(f"  {check.check_id:32s} {check.verdict}", file=out)
    for finding in analysis.findings():
        print(f"finding   : {finding.finding_id} -> {finding.verdict}", file=out)


def cmd_analyze(args) -> int:
    options = AnalysisOptions(
        no_spectrum=args.no_spectrum,
        strict=args.strict,
        max_order=args.max_order,
        iso_budget=args.iso_budget,
        jobs=args.jobs,
    )
    g = parse_group_spec(args.spec, max_order=args.max_order)
    analysis = analyze_group(g, options)
    if args.json:
        print(dump_json(report_document(analysis, options)))
    else:
        _print_analysis_summary(analysis)
    if options.strict and analysis.has_failure():
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_export(args) -> int:
    options = AnalysisOptions(max_order=args.max_order)
    g = parse_group_spec(args.spec, max_order=args.max_order)
    analysis = analyze_group(g, options)
    if args.format == "dot":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(export_dot(analysis))
    elif args.format == "json":
        dump_json(report_document(analysis, options), path=args.out)
    elif args.format == "csv":
        export_csv(analysis, args.out)
    else:
        raise InputError(f"unknown export format {args.format!r}")
    print(f"wrote {args.format} to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    options = AnalysisOptions(strict=args.strict, jobs=args.jobs)
    result = run_family_sweep(
        args.family,
        p_max=args.p_max,
        n_max=args.n_max,
        max_order=args.max_order,
        options=options,
    )
    print(f"family {args.family}: {len(result.analyses)} groups analyzed")
    table = result.verdict_table()
    width = max((len(k) for k in table), default=10) + 2
    print(f"{'check':{width}s} {'pass':>6s} {'fail':>6s} {'hyp-n/a':>8s}")
    for check_id, row in table.items():
        print(
            f"{check_id:{width}s} {row['pass']:>6d} {row['fail']:>6d} "
            f"{row['hypothesis-not-met']:>8d}"
        )
    for finding in result.findings:
        print(f"finding: {finding.finding_id} -> {finding.verdict}")
    if args.out:
        document = {
            "schema": SCHEMA_VERSION,
            "family": args.family,
            "groups": [render_group_spec(a.group) for a in result.analyses],
            "verdicts": table,
            "findings": [f.as_dict() for f in result.findings],
        }
        dump_json(document, path=args.out)
        print(f"wrote aggregate report to {args.out}")
    failures = result.failures()
    for spec, check in failures[:10]:
        print(f"FAIL {spec}: {check.check_id}")
    if args.strict and failures:
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_count(args) -> int:
    g = parse_group_spec(args.spec, max_order=args.max_order)
    count = g.count_elements_of_order(args.order)
    print(count)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poe",
        description="Prime-order-element graphs of finite Abelian groups: "
        "analysis, exports, and theorem verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-order", type=int, default=None, help="order cap override")

    p_analyze = sub.add_parser("analyze", help="analyze one group")
    p_analyze.add_argument("spec", help="group spec, e.g. 'Z(2^3)xZ(9)'")
    p_analyze.add_argument("--no-spectrum", action="store_true")
    p_analyze.add_argument("--strict", action="store_true")
    p_analyze.add_argument("--iso-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p_analyze.add_argument("--jobs", type=int, default=1)
    p_analyze.add_argument("--json", action="store_true", help="print the JSON report")
    common(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_export = sub.add_parser("export", help="export a graph or report to a file")
    p_export.add_argument("spec")
    p_export.add_argument("--format", choices=("dot", "json", "csv"), required=True)
    p_export.add_argument("--out", required=True)
    common(p_export)
    p_export.set_defaults(func=cmd_export)

    p_verify = sub.add_parser("verify", help="sweep a family of groups")
    p_verify.add_argument("family", choices=FAMILIES)
    p_verify.add_argument("--p-max", type=int, default=None)
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--strict", action="store_true")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--out", default=None, help="write aggregate JSON report")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_count = sub.add_parser("count", help="count elements of a given order")
    p_count.add_argument("spec")
    p_count.add_argument("--order", type=int, required=True)
    common(p_count)
    p_count.set_defaults(func=cmd_count)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
