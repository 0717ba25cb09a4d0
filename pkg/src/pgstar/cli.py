"""Command-line front end.

Subcommands: ``compute`` (analyze a graph file), ``family`` (build a
named family member and compare against its closed form), ``suspend``
(build and analyze a suspension, with predictions where a classification
applies) and ``verify`` (run a named verification sweep).

Exit codes: 0 success / sweep passed, 1 sweep mismatch, 2 usage or parse
error, 3 enumeration cap exceeded.  JSON output renders potentially
large integers as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import families, verification
from .analysis import AnalysisReport, analyze
from .graphs import (
    MIS_ENUMERATION_LIMIT,
    CameronWalkerSpec,
    EnumerationLimitError,
    Graph,
    cameron_walker,
    complete_multipartite,
    cycle_graph,
    path_graph,
    suspension,
)
from .graphio import ParseError, load_graph

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

JOBS_ENV_VAR = "PGSTAR_JOBS"


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by every subcommand."""

    output: str = "text"
    jobs: int = 1
    enum_cap: int = MIS_ENUMERATION_LIMIT
    seed: int = verification.DEFAULT_SEED

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("parallelism degree must be >= 1")
        if self.enum_cap < 1:
            raise ValueError("enumeration cap must be >= 1")


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV_VAR, "1")))
    except ValueError:
        return 1


def report_to_dict(n: int, rep: AnalysisReport) -> dict:
    return {
        "n": n,
        "alpha": rep.alpha,
        "independence_polynomial": [str(c) for c in rep.ind_poly.coeffs],
        "p_at_minus_one": str(rep.p_minus_one),
        "multiplicity": rep.multiplicity,
        "a_invariant": rep.a_invariant,
        "h_polynomial": [str(c) for c in rep.h_poly.coeffs],
        "h_degree": rep.h_degree,
        "h_top": str(rep.h_top),
        "pseudo_gorenstein": rep.pseudo_gorenstein,
        "pseudo_gorenstein_star": rep.pseudo_gorenstein_star,
    }


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def render_report_text(n: int, rep: AnalysisReport, indent: str = "") -> str:
    rows = [
        ("n", str(n)),
        ("alpha", str(rep.alpha)),
        ("independence poly", rep.ind_poly.format("x")),
        ("P(-1)", str(rep.p_minus_one)),
        ("multiplicity of -1", str(rep.multiplicity)),
        ("a-invariant", str(rep.a_invariant)),
        ("h-polynomial", rep.h_poly.format("t")),
        ("h degree", str(rep.h_degree)),
        ("h top (deg alpha)", str(rep.h_top)),
        ("pseudo-Gorenstein", _yesno(rep.pseudo_gorenstein)),
        ("pseudo-Gorenstein*", _yesno(rep.pseudo_gorenstein_star)),
    ]
    width = max(len(k) for k, _ in rows) + 2
    return "\n".join(f"{indent}{k + ':':<{width}}{v}" for k, v in rows)


def _emit(payload: dict, text: str, config: RunConfig) -> None:
    if config.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# -- family construction ----------------------------------------------------


def _parse_int_list(raw: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"could not parse {what} {raw!r}; expected e.g. '1,2,3'") from None


def _parse_core_edges(raw: str) -> list[tuple[int, int]]:
    edges = []
    for tok in raw.split(","):
        tok = tok.strip()
        if not tok:
            continue
        parts = tok.split(":")
        if len(parts) != 2:
            raise ValueError(f"core edge {tok!r} must look like 'i:j'")
        edges.append((int(parts[0]), int(parts[1])))
    return edges


def _cw_spec_from_args(args) -> CameronWalkerSpec:
    if args.core_x is None or args.core_y is None or not args.core_edges:
        raise ValueError(
            "family 'cameron-walker' needs --core-x, --core-y, --core-edges, --leaves"
        )
    return CameronWalkerSpec(
        core_x=args.core_x,
        core_y=args.core_y,
        core_edges=tuple(_parse_core_edges(args.core_edges)),
        leaves=tuple(_parse_int_list(args.leaves or "", "--leaves")),
        triangles=tuple(
            _parse_int_list(args.triangles, "--triangles")
            if args.triangles
            else [0] * args.core_y
        ),
    )


def _build_family(args) -> tuple[Graph, dict]:
    """Returns the graph and a JSON-friendly parameter echo."""
    name = args.family
    if name in ("path", "cycle"):
        if args.n is None:
            raise ValueError(f"--n is required for family {name!r}")
        g = path_graph(args.n) if name == "path" else cycle_graph(args.n)
        return g, {"n": args.n}
    if name == "multipartite":
        if not args.parts:
            raise ValueError("--parts is required for family 'multipartite'")
        parts = _parse_int_list(args.parts, "--parts")
        return complete_multipartite(parts), {"parts": parts}
    spec = _cw_spec_from_args(args)
    return cameron_walker(spec), {
        "core_x": spec.core_x,
        "core_y": spec.core_y,
        "core_edges": [list(e) for e in spec.core_edges],
        "leaves": list(spec.leaves),
        "triangles": list(spec.triangles),
    }


def _family_prediction(args) -> dict:
    """Closed-form predictions, keyed like the computed report."""
    name = args.family
    if name == "path":
        return {
            "p_at_minus_one": str(families.p_value(args.n)),
            "pseudo_gorenstein_star": families.path_is_pg_star(args.n),
        }
    if name == "cycle":
        return {
            "p_at_minus_one": str(families.c_value(args.n)),
            "pseudo_gorenstein_star": families.cycle_is_pg_star(args.n),
        }
    if name == "multipartite":
        parts = _parse_int_list(args.parts, "--parts")
        closed = families.multipartite_closed_poly(parts)
        return {
            "independence_polynomial": [str(c) for c in closed.coeffs],
            "pseudo_gorenstein_star": families.multipartite_is_pg_star(parts),
        }
    counts = families.cw_counts(_cw_spec_from_args(args))
    return {
        "p_at_minus_one": str(families.cw_minus_one(counts)),
        "alpha": families.cw_alpha(counts),
        "multiplicity": 0,
        "pseudo_gorenstein_star": families.cw_is_pg_star(counts),
    }


def _agreement(predicted: dict, computed: dict) -> bool:
    comparable = set(predicted) & set(computed)
    return all(predicted[k] == computed[k] for k in comparable)


# -- subcommands -------------------------------------------------------------


def cmd_compute(args, config: RunConfig) -> int:
    g = load_graph(args.input, args.format)
    rep = analyze(g)
    payload = report_to_dict(g.n, rep)
    _emit(payload, render_report_text(g.n, rep), config)
    return EXIT_OK


def cmd_family(args, config: RunConfig) -> int:
    g, params = _build_family(args)
    rep = analyze(g)
    computed = report_to_dict(g.n, rep)
    predicted = _family_prediction(args)
    agreement = _agreement(predicted, computed)
    payload = {
        "family": args.family,
        "parameters": params,
        "computed": computed,
        "predicted": predicted,
        "agreement": agreement,
    }
    text = "\n".join(
        [
            f"family: {args.family} {params}",
            render_report_text(g.n, rep),
            "prediction:",
            *(f"  {k}: {v}" for k, v in predicted.items()),
            f"agreement: {_yesno(agreement)}",
        ]
    )
    _emit(payload, text, config)
    return EXIT_OK


def _set_roles(g: Graph, members: frozenset[int]) -> list[str]:
    roles = []
    if g.is_vertex_cover(members):
        roles.append("vertex-cover")
    if g.is_independent(members):
        roles.append("independent")
        if g.is_maximal_independent(members):
            roles.append("maximal-independent")
    return roles or ["neither"]


def _suspension_prediction(args, g: Graph, members: frozenset[int], roles) -> dict | None:
    # family-specific classifications only apply when the base was built
    # from --family, never to file-loaded graphs
    base_family = None if args.input else args.family
    full = members == frozenset(g.vertices)
    if full and base_family == "cycle":
        return {"pseudo_gorenstein_star": families.full_susp_cycle_is_pg_star(args.n)}
    if full and base_family == "path":
        return {"pseudo_gorenstein_star": families.full_susp_path_is_pg_star(args.n)}
    if "maximal-independent" in roles and base_family == "cycle":
        if args.n == 3:
            return {"h_top": "-1", "pseudo_gorenstein_star": False}
        params = families.cycle_mis_susp_params(args.n, members)
        return {
            "h_top": str(families.cycle_mis_susp_top_coeff(params)),
            "pseudo_gorenstein_star": families.cycle_mis_susp_is_pg_star(params),
        }
    if "maximal-independent" in roles and base_family == "path":
        params = families.path_mis_susp_params(args.n, members)
        outcome = families.path_mis_susp_classify(params)
        predicted = {
            "a_invariant_zero": outcome.a_zero,
            "pseudo_gorenstein_star": outcome.pg_star,
        }
        if outcome.top_coeff is not None:
            predicted["h_top"] = str(outcome.top_coeff)
        return predicted
    if "vertex-cover" in roles:
        base_rep = analyze(g)
        n_s = g.n - len(members)
        case = families.vc_suspension_prediction(n_s, base_rep.alpha)
        predicted = {"case": case}
        if case == families.PRESERVED:
            predicted["pseudo_gorenstein_star"] = base_rep.pseudo_gorenstein_star
        elif case == families.NEVER_PG_STAR and base_rep.pseudo_gorenstein_star:
            predicted["pseudo_gorenstein_star"] = False
            predicted["h_top"] = "-1"
        elif case == families.FULL_SUSPENSION_CASE:
            predicted["p_at_minus_one"] = str(base_rep.p_minus_one - 1)
        return predicted
    return None


def cmd_suspend(args, config: RunConfig) -> int:
    if args.input:
        g = load_graph(args.input, args.format)
    else:
        g, _ = _build_family(args)
    if args.full:
        members = frozenset(g.vertices)
    else:
        if not args.set:
            raise ValueError("provide --set '1,3,...' or --full")
        members = frozenset(_parse_int_list(args.set, "--set"))
    if not members:
        raise ValueError("attachment set must be nonempty")
    roles = _set_roles(g, members)
    h = suspension(g, members)
    rep = analyze(h)
    computed = report_to_dict(h.n, rep)
    predicted = _suspension_prediction(args, g, members, roles)
    if predicted is not None:
        comparable = dict(computed)
        comparable["a_invariant_zero"] = rep.a_invariant == 0
        agreement = _agreement(predicted, comparable)
    else:
        agreement = None
    payload = {
        "base_n": g.n,
        "attachment": sorted(members),
        "roles": roles,
        "computed": computed,
        "predicted": predicted,
        "agreement": agreement,
    }
    lines = [
        f"suspension over {sorted(members)} (roles: {', '.join(roles)})",
        render_report_text(h.n, rep),
    ]
    if predicted is not None:
        lines.append("prediction:")
        lines.extend(f"  {k}: {v}" for k, v in predicted.items())
        lines.append(f"agreement: {_yesno(agreement)}")
    _emit(payload, "\n".join(lines), config)
    return EXIT_OK


def _or_default(value, default):
    return default if value is None else value


def _run_sweep(args, config: RunConfig) -> verification.VerifyOutcome:
    jobs = config.jobs
    t = args.theorem
    if t == "cycles":
        return verification.verify_cycles(_or_default(args.max_n, 40), jobs)
    if t == "paths":
        return verification.verify_paths(_or_default(args.max_n, 40), jobs)
    if t == "sequences":
        return verification.verify_sequences(_or_default(args.max_n, 60), jobs)
    if t == "multipartite":
        return verification.verify_multipartite(args.max_parts, args.max_part_size, jobs)
    if t == "cameron-walker":
        return verification.verify_cameron_walker(
            _or_default(args.count, 50), args.max_vertices, config.seed, jobs
        )
    if t == "vc-suspension":
        return verification.verify_vc_suspension(
            _or_default(args.count, 100), _or_default(args.max_n, 8), config.seed, jobs
        )
    if t == "full-suspension":
        return verification.verify_full_suspension(_or_default(args.max_n, 36), jobs)
    if t == "cycle-mis-suspension":
        return verification.verify_cycle_mis_suspension(
            _or_default(args.max_n, 18), jobs, config.enum_cap
        )
    if t == "path-mis-suspension":
        return verification.verify_path_mis_suspension(
            _or_default(args.max_n, 18), jobs, config.enum_cap
        )
    # deg-via-ord
    return verification.verify_deg_via_ord(
        _or_default(args.random, 500),
        _or_default(args.max_n, 10),
        config.seed,
        args.exhaustive_n,
        jobs,
    )


def cmd_verify(args, config: RunConfig) -> int:
    outcome = _run_sweep(args, config)
    if config.output == "json":
        print(json.dumps(outcome.to_dict(), indent=2))
    else:
        status = "PASS" if outcome.passed else "FAIL"
        print(
            f"theorem {outcome.theorem}: {outcome.instances} instances, "
            f"{len(outcome.mismatches)} mismatches -> {status}"
            + (f" (seed {outcome.seed})" if outcome.seed is not None else "")
        )
        for m in outcome.mismatches:
            print(f"  {m.instance}: expected {m.expected}, got {m.got}")
    return EXIT_OK if outcome.passed else EXIT_MISMATCH


# -- argument parsing ---------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument(
        "--jobs",
        type=int,
        default=None,
        help=f"worker processes (default: ${JOBS_ENV_VAR} or 1)",
    )
    p.add_argument("--enum-cap", type=int, default=MIS_ENUMERATION_LIMIT)
    p.add_argument("--seed", type=int, default=verification.DEFAULT_SEED)


def _add_family_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=None, help="size for path/cycle")
    p.add_argument("--parts", default=None, help="multipartite part sizes, e.g. 2,3")
    p.add_argument("--core-x", type=int, default=None)
    p.add_argument("--core-y", type=int, default=None)
    p.add_argument("--core-edges", default=None, help="e.g. 1:1,2:1")
    p.add_argument("--leaves", default=None, help="per-X leaf counts, e.g. 1,2")
    p.add_argument("--triangles", default=None, help="per-Y triangle counts, e.g. 0,1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgstar",
        description="Exact independence polynomials, h-polynomials and "
        "pseudo-Gorenstein* classification of finite simple graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="analyze a graph from a file")
    p.add_argument("input")
    p.add_argument("--format", choices=("auto", "edge-list", "graph6"), default="auto")
    _add_common(p)
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("family", help="build a family member and check its closed form")
    p.add_argument(
        "family", choices=("path", "cycle", "multipartite", "cameron-walker")
    )
    _add_family_options(p)
    _add_common(p)
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("suspend", help="analyze a suspension over an attachment set")
    p.add_argument("--input", default=None, help="base graph file")
    p.add_argument("--format", choices=("auto", "edge-list", "graph6"), default="auto")
    p.add_argument(
        "--family",
        choices=("path", "cycle", "multipartite", "cameron-walker"),
        default=None,
        help="build the base graph from a family instead of a file",
    )
    _add_family_options(p)
    p.add_argument("--set", default=None, help="attachment vertices, e.g. 1,3")
    p.add_argument("--full", action="store_true", help="attach to every vertex (cone)")
    _add_common(p)
    p.set_defaults(handler=cmd_suspend)

    p = sub.add_parser("verify", help="run a named verification sweep")
    p.add_argument(
        "theorem",
        choices=(
            "cycles",
            "paths",
            "sequences",
            "multipartite",
            "cameron-walker",
            "vc-suspension",
            "full-suspension",
            "cycle-mis-suspension",
            "path-mis-suspension",
            "deg-via-ord",
        ),
    )
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--random", type=int, default=None, help="random corpus size")
    p.add_argument("--count", type=int, default=None, help="random instance count")
    p.add_argument("--max-parts", type=int, default=4)
    p.add_argument("--max-part-size", type=int, default=5)
    p.add_argument("--max-vertices", type=int, default=16)
    p.add_argument("--exhaustive-n", type=int, default=6)
    _add_common(p)
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            output=args.output,
            jobs=args.jobs if args.jobs is not None else _default_jobs(),
            enum_cap=args.enum_cap,
            seed=args.seed,
        )
        return args.handler(args, config)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
