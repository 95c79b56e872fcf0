"""Command line interface: ``diss {exact,bound,certify,extremal,survey,generate}``.

Exit codes: 0 success, 2 input error, 3 budget or cycle cap exceeded,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import generators
from .bounds import E0_ROWS, bounds_report, bound_e1, bound_e1_packing, rational_json
from .constructive import certify_bound_set
from .cycles import DEFAULT_CYCLE_CAP, DEFAULT_PACKING_LIMIT, is_cycle_disjoint
from .errors import (
    BudgetExceeded,
    CycleCapExceeded,
    GraphFormatError,
    InvariantViolation,
    NotApplicableError,
    PackingLimitExceeded,
)
from .extremal import is_extremal_tree, membership_in_C, random_member
from .graph import Graph, is_connected, is_tree, parse_graph, parse_graph6_lines, write_graph
from .solver import SearchLimits, diss_exact, is_dissociation_set

log = logging.getLogger("dissociation")

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INVARIANT = 0, 2, 3, 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None
    gen: str | None
    format: str
    budget_nodes: int
    budget_ms: float | None
    cycle_cap: int
    packing_limit: int
    seed: int | None
    emit: str
    out: str | None
    packing: bool = False
    all: bool = False
    check: bool = False
    timing: bool = True
    samples: int = 1
    jobs: int = 1

    def __post_init__(self):
        for name in ("budget_nodes", "cycle_cap", "packing_limit", "samples", "jobs"):
            if getattr(self, name) <= 0:
                raise ValueError(f"--{name.replace('_', '-')} must be positive")
        if self.budget_ms is not None and self.budget_ms <= 0:
            raise ValueError("--budget-ms must be positive")

    @property
    def limits(self) -> SearchLimits:
        return SearchLimits(max_nodes=self.budget_nodes, max_ms=self.budget_ms)


def fmt_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} (≈{float(x):.3f})"


def read_graphs(path: str | None, fmt: str) -> list[Graph]:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text()
    if fmt == "auto":
        fmt = _sniff(path, text)
    if fmt in ("graph6", "g6"):
        graphs = parse_graph6_lines(text)
        if not graphs:
            raise GraphFormatError("no graphs in input")
        return graphs
    return [parse_graph(text, fmt)]


def _sniff(path: str | None, text: str) -> str:
    if path and Path(path).suffix in (".g6", ".graph6"):
        return "graph6"
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        toks = body.split()
        if len(toks) == 1 and not toks[0].isdigit():
            return "graph6"
        return "edge-list"
    return "edge-list"


# ---------------------------------------------------------------------------
# commands


def cmd_exact(cfg: RunConfig, g: Graph) -> dict:
    start = time.perf_counter()
    cert = diss_exact(g, cfg.limits)
    elapsed = (time.perf_counter() - start) * 1000.0
    if not is_dissociation_set(g, cert.vertices):
        raise InvariantViolation("solver witness is not a dissociation set")
    report = {
        "n": g.n,
        "m": g.m,
        "diss": cert.size,
        "witness": list(cert.vertices),
        "verified": True,
    }
    if cfg.timing:
        report["elapsed"] = round(elapsed / 1000.0, 6)
    return report


def cmd_bound(cfg: RunConfig, g: Graph) -> dict:
    if cfg.all:
        return bounds_report(g, cfg.cycle_cap, cfg.packing_limit).to_json()
    if cfg.packing:
        value = bound_e1_packing(g, cfg.cycle_cap, cfg.packing_limit)
        name = "e1_packing"
    else:
        value = bound_e1(g, cfg.cycle_cap)
        name = "e1"
    report = {
        "n": g.n,
        "m": g.m,
        name: rational_json(value),
        "text": fmt_rational(value),
    }
    if cfg.check:
        cert = diss_exact(g, cfg.limits)
        slack = cert.size - value
        report.update(
            diss=cert.size, slack=rational_json(slack), tight=slack == 0
        )
    return report


def cmd_certify(cfg: RunConfig, g: Graph) -> dict:
    cert = certify_bound_set(g)
    verified = is_dissociation_set(g, cert.vertices)
    if not verified:
        raise InvariantViolation("constructive witness is not a dissociation set")
    bound = bound_e1(g, cfg.cycle_cap)
    if cert.size < bound:
        raise InvariantViolation(f"witness of size {cert.size} is below the bound {bound}")
    return {
        "n": g.n,
        "m": g.m,
        "bound": rational_json(bound),
        "bound_text": fmt_rational(bound),
        "size": cert.size,
        "witness": list(cert.vertices),
        "verified": verified,
    }


def cmd_extremal(cfg: RunConfig, g: Graph) -> dict:
    bound = bound_e1(g, cfg.cycle_cap)
    cert = diss_exact(g, cfg.limits)
    tight = cert.size == bound
    report: dict = {
        "n": g.n,
        "m": g.m,
        "bound": rational_json(bound),
        "diss": cert.size,
        "tight": tight,
        "extremal": tight,
        "tree": is_tree(g),
    }
    if report["tree"]:
        report["tree_extremal"] = is_extremal_tree(g)
    if not is_connected(g):
        report["membership"] = "not applicable: not connected"
    elif not is_cycle_disjoint(g):
        report["membership"] = "not applicable: not cycle-disjoint"
    else:
        trace = membership_in_C(g)
        report["membership"] = "member" if trace is not None else "non-member"
        if trace is not None:
            report["trace"] = trace.to_json()
        if (trace is not None) != tight:
            raise InvariantViolation("membership disagrees with tightness")
    return report


SURVEY_FIELDS = ["index", "graph6", "n", "m", "k", "c1", "nu1"]
for _name in ("e1", "e1_packing") + E0_ROWS + ("slack",):
    SURVEY_FIELDS += [f"{_name}_num", f"{_name}_den", f"{_name}_float"]
SURVEY_FIELDS += ["diss", "tight", "certified"]


def _rational_cells(prefix: str, x: Fraction | None) -> dict:
    if x is None:
        return {f"{prefix}_num": "", f"{prefix}_den": "", f"{prefix}_float": ""}
    return {
        f"{prefix}_num": x.numerator,
        f"{prefix}_den": x.denominator,
        f"{prefix}_float": f"{float(x):.6f}",
    }


def survey_row(args) -> dict:
    index, g, limits, cap, packing_limit = args
    rep = bounds_report(g, cap, packing_limit)
    cert = diss_exact(g, limits)
    certified = certify_bound_set(g)
    if not is_dissociation_set(g, certified.vertices) or certified.size < rep.e1:
        raise InvariantViolation(f"graph {index}: constructive certificate failed")
    row = {
        "index": index,
        "graph6": write_graph(g, "graph6"),
        "n": rep.n,
        "m": rep.m,
        "k": rep.k,
        "c1": rep.c1,
        "nu1": "" if rep.nu1 is None else rep.nu1,
    }
    for name in ("e1", "e1_packing") + E0_ROWS:
        row.update(_rational_cells(name, getattr(rep, name)))
    slack = cert.size - rep.e1
    row.update(_rational_cells("slack", slack))
    row.update(diss=cert.size, tight=int(slack == 0), certified=certified.size)
    return row


def survey_graphs(cfg: RunConfig) -> list[Graph]:
    if cfg.gen is None:
        return read_graphs(cfg.input, cfg.format)
    kind, *params = cfg.gen.split(":")
    if kind in ("exhaustive", "labeled"):
        order = int(params[0])
        if kind == "labeled":
            return list(generators.all_labeled_graphs(order))
        return [g for n in range(order + 1) for g in generators.atlas_graphs(n)]
    if cfg.seed is None:
        raise ValueError("--seed is required for randomized generators")
    rng = random.Random(cfg.seed)
    n = int(params[0])
    graphs = []
    for i in range(cfg.samples):
        if kind == "gnp":
            graphs.append(generators.gnp(n, float(params[1]), rng))
        elif kind == "tree":
            graphs.append(generators.random_tree(n, rng))
        elif kind == "cactus":
            graphs.append(generators.random_cactus(n, rng))
        elif kind in ("member-C", "member-T"):
            graphs.append(random_member(kind[-1], n, rng.randrange(2**32))[0])
        else:
            raise ValueError(f"unknown generator {kind!r}")
    return graphs


def cmd_survey(cfg: RunConfig) -> str:
    graphs = survey_graphs(cfg)
    jobs = [(i, g, cfg.limits, cfg.cycle_cap, cfg.packing_limit) for i, g in enumerate(graphs)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            rows = list(pool.map(survey_row, jobs, chunksize=16))
    else:
        rows = [survey_row(j) for j in jobs]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SURVEY_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    log.info("survey: %d graphs, %d tight", len(rows), sum(r["tight"] for r in rows))
    return buf.getvalue()


def cmd_generate(cfg: RunConfig, family: str, size: int) -> dict:
    if cfg.seed is None:
        raise ValueError("--seed is required for generate")
    g, trace = random_member(family, size, cfg.seed)
    return {
        "graph6": write_graph(g, "graph6"),
        "edge_list": write_graph(g, "edge-list"),
        "trace": trace.to_json(),
    }


# ---------------------------------------------------------------------------
# rendering and entry point


def _render(cfg: RunConfig, reports: list[dict]) -> str:
    if cfg.emit == "json":
        payload = reports[0] if len(reports) == 1 else reports
        return json.dumps(payload, sort_keys=True, ensure_ascii=False) + "\n"
    if cfg.emit == "csv":
        keys = sorted({k for r in reports for k in r})
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        writer.writeheader()
        for r in reports:
            writer.writerow({k: _flat(v) for k, v in r.items()})
        return buf.getvalue()
    lines = []
    for r in reports:
        if "text" in r:
            lines.append(r["text"])
        else:
            lines.append(" ".join(f"{k}={_flat(r[k])}" for k in sorted(r)))
    return "\n".join(lines) + "\n"


def _flat(v) -> str:
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return str(Fraction(v["num"], v["den"]))
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _write(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="graph file (edge-list or graph6); '-' for stdin")
    common.add_argument("--format", default="auto", choices=["auto", "graph6", "edge-list"])
    common.add_argument("--budget-nodes", type=int, default=1_000_000)
    common.add_argument("--budget-ms", type=float, default=None)
    common.add_argument("--cycle-cap", type=int, default=DEFAULT_CYCLE_CAP)
    common.add_argument("--packing-limit", type=int, default=DEFAULT_PACKING_LIMIT)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--emit", default="json", choices=["json", "text", "csv"])
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--no-timing", action="store_true", help="omit elapsed time")

    parser = argparse.ArgumentParser(prog="diss", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("exact", parents=[common], help="exact dissociation number")
    p = sub.add_parser("bound", parents=[common], help="n - (m + k + c1)/3 and friends")
    p.add_argument("--packing", action="store_true", help="use the disjoint packing number")
    p.add_argument("--all", action="store_true", help="full bound report")
    p.add_argument("--check", action="store_true", help="also solve exactly and report slack")
    sub.add_parser("certify", parents=[common], help="polynomial-time set meeting the bound")
    sub.add_parser("extremal", parents=[common], help="tightness and family membership")
    p = sub.add_parser("survey", parents=[common], help="CSV sweep over many graphs")
    p.add_argument("--gen", default=None,
                   help="gnp:N:P | tree:N | cactus:N | member-C:N | member-T:N | "
                        "exhaustive:N | labeled:N")
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p = sub.add_parser("generate", parents=[common], help="random member of T or C")
    p.add_argument("--family", default="C", choices=["T", "C"])
    p.add_argument("--size", type=int, default=12)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=os.environ.get("DISS_LOG", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            input=args.input,
            gen=getattr(args, "gen", None),
            format=args.format,
            budget_nodes=args.budget_nodes,
            budget_ms=args.budget_ms,
            cycle_cap=args.cycle_cap,
            packing_limit=args.packing_limit,
            seed=args.seed,
            emit=args.emit,
            out=args.out,
            packing=getattr(args, "packing", False),
            all=getattr(args, "all", False),
            check=getattr(args, "check", False),
            timing=not args.no_timing,
            samples=getattr(args, "samples", 1),
            jobs=getattr(args, "jobs", 1),
        )
        if cfg.command == "survey":
            _write(cfg, cmd_survey(cfg))
            return EXIT_OK
        if cfg.command == "generate":
            _write(cfg, _render(cfg, [cmd_generate(cfg, args.family, args.size)]))
            return EXIT_OK
        graphs = read_graphs(cfg.input, cfg.format)
        handler = {
            "exact": cmd_exact,
            "bound": cmd_bound,
            "certify": cmd_certify,
            "extremal": cmd_extremal,
        }[cfg.command]
        _write(cfg, _render(cfg, [handler(cfg, g) for g in graphs]))
        return EXIT_OK
    except (GraphFormatError, NotApplicableError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        inc = exc.incumbent
        lower = inc.size if inc is not None else None
        print(f"budget exceeded: {exc}; best lower bound {lower}", file=sys.stderr)
        sys.stdout.write(json.dumps({
            "error": "budget-exceeded",
            "message": str(exc),
            "lower_bound": lower,
            "incumbent": list(inc.vertices) if inc is not None else None,
        }, sort_keys=True) + "\n")
        return EXIT_BUDGET
    except (CycleCapExceeded, PackingLimitExceeded) as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
