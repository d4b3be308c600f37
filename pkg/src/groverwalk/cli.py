"""
Command-line front end: ``groverwalk {spectrum,period,pst,verify}``.

Graph selectors::

    uc:N | cycle:N | complete:N | circulant:N:s1,s2,... |
    named:hamming:S:T | named:kbip:M | named:ktri:M | file:PATH

Exit codes: 0 success, 1 usage, 2 validation, 3 internal-consistency failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

import numpy as np

from . import __version__
from .errors import ConsistencyError, GraphValidationError
from .graphs import CirculantSpec, Graph, cayley, named_graph, read_edge_list, unitary_cayley_spec
from .periodicity import TAU_MAX, period_bruteforce, period_spectral
from .pst import TAU_MAX_PST, pst_bruteforce, pst_criterion_circulant
from .report import RunReport, num
from .spectra import SpectrumReport, circulant_spectrum, numeric_spectrum, spectral_map, uc_spectrum
from .verify import (
    BRUTEFORCE_N_MAX,
    SPECTRAL_N_MAX,
    sweep_circulant_criterion,
    sweep_integral_regular,
    sweep_uc_periodicity,
    sweep_uc_pst,
)
from .walk import build_operators

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_CONSISTENCY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def resolve_selector(selector: str) -> tuple[Graph, CirculantSpec | None, str]:
    """Turn a selector string into ``(graph, circulant spec or None, kind)``."""
    kind, _, rest = selector.partition(":")
    try:
        if kind == "file":
            if not rest:
                raise UsageError("file selector needs a path")
            return read_edge_list(rest), None, kind
        parts = rest.split(":")
        if kind == "uc":
            spec = unitary_cayley_spec(int(parts[0]))
            return cayley(spec), spec, kind
        if kind == "cycle":
            n = int(parts[0])
            if n < 3:
                raise ValueError("cycle needs n >= 3")
            spec = CirculantSpec(n, frozenset({1, n - 1}))
            return cayley(spec), spec, kind
        if kind == "complete":
            n = int(parts[0])
            spec = CirculantSpec(n, frozenset(range(1, n)))
            return cayley(spec), spec, kind
        if kind == "circulant":
            n = int(parts[0])
            conn = frozenset(int(s) % n for s in parts[1].split(",") if s)
            spec = CirculantSpec(n, conn)
            return cayley(spec), spec, kind
        if kind == "named":
            family, params = parts[0], [int(p) for p in parts[1:]]
            names = {"hamming": "hamming", "kbip": "complete_bipartite", "ktri": "complete_tripartite"}
            if family not in names:
                raise UsageError(f"unknown named family {family!r}")
            return named_graph(names[family], params), None, kind
    except (IndexError, ValueError) as exc:
        if isinstance(exc, GraphValidationError):
            raise
        raise UsageError(f"bad selector {selector!r}: {exc}") from exc
    raise UsageError(f"unknown selector kind {kind!r}")


def _spectrum_payload(s: SpectrumReport) -> dict[str, Any]:
    return {
        "exact": s.exact,
        "eigenvalues": [{"value": num(v), "multiplicity": num(k)} for v, k in s.eigenvalues],
    }


def _spectra(g: Graph, spec: CirculantSpec | None, kind: str, ops=None) -> tuple[SpectrumReport, SpectrumReport]:
    if kind == "uc":
        adj = uc_spectrum(spec.n)
    elif spec is not None:
        adj = circulant_spectrum(spec)
    else:
        adj = numeric_spectrum(g.adjacency)
    k = g.regular_degree()
    if adj.exact and k is not None:
        disc = adj.scaled(1.0 / k, "discriminant")
    else:
        ops = ops or build_operators(g)
        disc = numeric_spectrum(ops.discriminant, source="discriminant")
    return adj, disc


def _tolerances(args) -> dict[str, str]:
    return {
        "identity": num(args.tol_identity),
        "amplitude": num(args.tol_amplitude),
        "cluster": num(args.tol_cluster),
    }


def _graph_info(g: Graph) -> dict[str, Any]:
    k = g.regular_degree()
    return {
        "vertices": num(g.n),
        "edges": num(g.m),
        "regular_degree": None if k is None else num(k),
        "bipartite": g.is_bipartite,
    }


def cmd_spectrum(args) -> tuple[RunReport, int]:
    g, spec, kind = resolve_selector(args.target)
    adj, disc = _spectra(g, spec, kind)
    if not adj.exact:
        adj = numeric_spectrum(g.adjacency, args.tol_cluster)
    evo = spectral_map(list(disc.multiset()), g.m, g.n, g.is_bipartite)
    evo = SpectrumReport(evo.eigenvalues, disc.exact, "evolution")
    results = {
        "graph": _graph_info(g),
        "adjacency": _spectrum_payload(adj),
        "discriminant": _spectrum_payload(disc),
        "evolution": {**_spectrum_payload(evo), "unit": "angle_rad"},
    }
    table = [
        {"matrix": name, "value": num(v), "multiplicity": num(k), "exact": s.exact}
        for name, s in (("adjacency", adj), ("discriminant", disc), ("evolution", evo))
        for v, k in s.eigenvalues
    ]
    return RunReport("spectrum", args.target, {}, results, _tolerances(args), __version__, table), EXIT_OK


def cmd_period(args) -> tuple[RunReport, int]:
    g, spec, kind = resolve_selector(args.target)
    ops = build_operators(g, tol=args.tol_identity)
    _, disc = _spectra(g, spec, kind, ops)
    sp = period_spectral(disc, g.m, g.n, g.is_bipartite, tol=args.tol_identity)
    bf = period_bruteforce(ops, args.tau_max, args.tol_identity)
    if sp.periodic and not bf.periodic and sp.period > args.tau_max:
        agreement = "inconclusive"  # period lies beyond the brute-force horizon
    else:
        agreement = "agree" if (sp.periodic, sp.period) == (bf.periodic, bf.period) else "disagree"
    results = {
        "graph": _graph_info(g),
        "spectral": {"periodic": sp.periodic, "period": None if sp.period is None else num(sp.period)},
        "bruteforce": {"periodic": bf.periodic, "period": None if bf.period is None else num(bf.period)},
        "periodic": sp.periodic,
        "period": None if sp.period is None else num(sp.period),
        "agreement": agreement,
        "evidence": [
            {"angle": num(theta), "order": None if q is None else num(q)} for theta, q in sp.evidence
        ],
    }
    table = [{"method": r.method, "periodic": r.periodic, "period": r.period} for r in (sp, bf)]
    code = EXIT_CONSISTENCY if agreement == "disagree" else EXIT_OK
    inputs = {"tau_max": num(args.tau_max)}
    return RunReport("period", args.target, inputs, results, _tolerances(args), __version__, _strs(table)), code


def cmd_pst(args) -> tuple[RunReport, int]:
    g, spec, kind = resolve_selector(args.target)
    ops = build_operators(g, tol=args.tol_identity)
    tau_max = args.tau_max
    if tau_max is None:
        _, disc = _spectra(g, spec, kind, ops)
        sp = period_spectral(disc, g.m, g.n, g.is_bipartite, tol=args.tol_identity)
        tau_max = sp.period if sp.periodic else TAU_MAX_PST
    certs = pst_bruteforce(ops, tau_max, args.tol_amplitude)
    results: dict[str, Any] = {
        "graph": _graph_info(g),
        "tau_max": num(tau_max),
        "certificates": [
            {"source": num(c.source), "target": num(c.target), "time": num(c.time),
             "phase": num(c.phase.real), "phase_imag": num(c.phase.imag), "method": c.method}
            for c in sorted(certs, key=lambda c: c.key())
        ],
    }
    code = EXIT_OK
    if spec is not None:
        n = spec.n
        mu = np.asarray(circulant_spectrum(spec).indexed) / spec.degree
        diag = []
        predicted = set()
        for tau in range(1, tau_max + 1):
            # u - v is all that matters; report the antipodal difference (or 1 for odd n)
            d = n // 2 if n % 2 == 0 else 1
            r = pst_criterion_circulant(spec, d, 0, tau, args.tol_amplitude, mu)
            if r.holds:
                predicted |= {(tau, u, (u + d) % n) for u in range(n)}
            diag.append({"tau": num(tau), "u_minus_v": num(d), "antipodal": r.antipodal,
                         "unimodular": r.all_unimodular, "alternating": r.alternating,
                         "holds": r.holds, "margin": num(r.margin), "near_degenerate": r.near_degenerate})
        found = {c.key() for c in certs}
        results["criterion"] = diag
        results["criterion_matches_bruteforce"] = predicted == found
        if predicted != found:
            code = EXIT_CONSISTENCY
    table = [{"source": c["source"], "target": c["target"], "time": c["time"], "phase": c["phase"]}
             for c in results["certificates"]]
    inputs = {"tau_max": None if args.tau_max is None else num(args.tau_max)}
    return RunReport("pst", args.target, inputs, results, _tolerances(args), __version__, table), code


def _strs(rows: list[dict[str, Any]]) -> list[dict[str, Any]]:
    def conv(v):
        if isinstance(v, bool) or v is None or isinstance(v, str):
            return v
        if isinstance(v, (int, float, np.integer, np.floating)):
            return num(v.item() if isinstance(v, np.generic) else v)
        if isinstance(v, (list, tuple)):
            return [conv(x) for x in v]
        if isinstance(v, dict):
            return {k: conv(x) for k, x in v.items()}
        return str(v)

    return [conv(r) for r in rows]


def cmd_verify(args) -> tuple[RunReport, int]:
    suite, n_max = args.suite, args.n_max
    if n_max > SPECTRAL_N_MAX:
        raise UsageError(f"n_max {n_max} exceeds the spectral sweep guard {SPECTRAL_N_MAX}")
    if suite == "thm46" and n_max > BRUTEFORCE_N_MAX:
        raise UsageError(f"thm46 brute-forces every n; n_max must be <= {BRUTEFORCE_N_MAX}")
    if suite in ("thm42", "all") and n_max < 4:
        raise UsageError("thm42 needs n_max >= 4")
    rows: list[dict[str, Any]] = []
    summary = {}
    suites = ["thm36", "thm42", "thm46", "sec5"] if suite == "all" else [suite]
    for name in suites:
        if name == "thm36":
            part = sweep_uc_periodicity(n_max, args.jobs)
        elif name == "thm42":
            part = sweep_circulant_criterion(args.trials, min(n_max, 20), args.seed, jobs=args.jobs)
        elif name == "thm46":
            part = sweep_uc_pst(min(n_max, BRUTEFORCE_N_MAX))
        else:
            part = sweep_integral_regular()
        for r in part:
            r["suite"] = name
        summary[name] = {"passed": all(r["passed"] for r in part), "rows": num(len(part))}
        rows += part
    failed = [r for r in rows if not r["passed"]]
    results = {
        "suites": summary,
        "passed": not failed,
        "counterexample": _strs(failed[:1])[0] if failed else None,
    }
    inputs = {"suite": suite, "n_max": num(n_max), "trials": num(args.trials), "seed": num(args.seed)}
    code = EXIT_OK if not failed else EXIT_CONSISTENCY
    table = [{"suite": r.pop("suite"), **r} for r in rows]
    return RunReport("verify", None, inputs, results, _tolerances(args), __version__, _strs(table)), code


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="groverwalk", description="Grover walk periodicity and perfect state transfer.")
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--tol-identity", type=float, default=1e-9)
    common.add_argument("--tol-amplitude", type=float, default=1e-7)
    common.add_argument("--tol-cluster", type=float, default=1e-6)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("spectrum", parents=[common], help="adjacency, discriminant and evolution spectra")
    s.add_argument("target")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("period", parents=[common], help="spectral and brute-force period")
    s.add_argument("target")
    s.add_argument("--tau-max", type=int, default=TAU_MAX)
    s.set_defaults(func=cmd_period)

    s = sub.add_parser("pst", parents=[common], help="perfect state transfer certificates")
    s.add_argument("target")
    s.add_argument("--tau-max", type=int, default=None, help="default: the period, or 100 if not periodic")
    s.set_defaults(func=cmd_pst)

    s = sub.add_parser("verify", parents=[common], help="verification sweeps (suite names are part of the CLI contract)")
    s.add_argument("suite", choices=["thm36", "thm42", "thm46", "sec5", "all"])
    s.add_argument("--n-max", type=int, default=30)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.func(args)
    except UsageError as exc:
        print(f"groverwalk: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphValidationError, FileNotFoundError) as exc:
        print(f"groverwalk: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ConsistencyError as exc:
        print(f"groverwalk: consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except ValueError as exc:
        print(f"groverwalk: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report.to_csv(), end="")
    else:
        print(report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
