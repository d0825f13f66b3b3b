"""Command-line entry point.

Exit status: 0 when a question was answered (either way), 1 for a
structured failure or an undecided answer, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .certificates import validate_berge_cycle, validate_loose_walk, validate_matching
from .constructions import ConstructionSheet, complete, loose_cycle_graph, make_huv, sample_with_floor, two_cliques
from .errors import HgParseError, ProcedureFailure, SizeLimitError
from .hypergraph import Hypergraph, degree_profile
from .io import dump_json, read_hg, write_hg

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _config(args: argparse.Namespace) -> dict:
    skip = {"func"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in skip:
            continue
        out[k] = str(v) if isinstance(v, Path) else v
    return out


def _emit(args: argparse.Namespace, payload: dict, rows: list[dict] | None = None) -> None:
    doc = {"schema_version": SCHEMA_VERSION, "version": __version__, "config": _config(args)}
    doc.update(payload)
    if args.format == "json":
        sys.stdout.write(dump_json(doc))
    elif args.format == "csv":
        buf = io.StringIO()
        buf.write("# " + json.dumps({"schema_version": SCHEMA_VERSION, "config": doc["config"]}, sort_keys=True) + "\n")
        table = rows if rows is not None else [{k: v for k, v in payload.items() if not isinstance(v, (dict, list))}]
        if table:
            writer = csv.DictWriter(buf, fieldnames=list(table[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(table)
        sys.stdout.write(buf.getvalue())
    else:
        for key, value in doc.items():
            text = json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else value
            sys.stdout.write(f"{key}: {text}\n")


def _load(path: Path) -> Hypergraph:
    try:
        return read_hg(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except HgParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


# subcommands ----------------------------------------------------------------------------------


def cmd_gen(args) -> int:
    kind = args.kind
    try:
        if kind == "huv":
            h, sheet = make_huv(args.r, args.n, args.v, verify=args.verify)
        else:
            if kind == "complete":
                h, name, params = complete(args.r, args.n), f"complete_{args.r}_{args.n}", {"r": args.r, "n": args.n}
            elif kind == "two-cliques":
                h, name, params = two_cliques(args.n), f"two_cliques_{args.n}", {"n": args.n}
            elif kind == "loose-cycle":
                h, name, params = loose_cycle_graph(args.r, args.k), f"loose_cycle_{args.r}_{args.k}", {"r": args.r, "k": args.k}
            else:
                h = sample_with_floor(args.r, args.n, args.t, args.p, args.seed)
                name = f"random_{args.r}_{args.n}_t{args.t}_s{args.seed}"
                params = {"r": args.r, "n": args.n, "t": args.t, "p": args.p, "seed": args.seed}
            sheet = ConstructionSheet(name, params, degree_profile(h).delta_pos_codeg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    name = args.name or sheet.name
    hg_path = out_dir / f"{name}.hg"
    sheet_path = out_dir / f"{name}.sheet.json"
    write_hg(h, hg_path, comment=sheet.name)
    sheet_path.write_text(dump_json({"schema_version": SCHEMA_VERSION, **sheet.to_dict()}))
    _emit(args, {"hg_file": str(hg_path), "sheet_file": str(sheet_path), "sheet": sheet.to_dict()})
    return 0


def cmd_analyze(args) -> int:
    h = _load(args.file)
    prof = degree_profile(h)
    _emit(args, {"r": h.r, "n": h.n, "edges": len(h), "profile": prof.to_dict()})
    return 0


def cmd_solve(args) -> int:
    from .solvers import solve

    h = _load(args.file)
    try:
        res = solve(h, args.structure, deadline_ms=args.deadline_ms, force=args.force, max_paths=args.max_paths)
    except SizeLimitError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, res.to_dict())
    return 0 if res.answer in ("yes", "no") else 1


def _procedure_output(args, hypotheses: bool, cert, log: list[str], failure: ProcedureFailure | None = None,
                      validation: dict | None = None) -> int:
    payload = {
        "hypotheses_met": hypotheses,
        "answer": "yes" if cert is not None else "failure",
        "certificate": cert.to_dict() if cert is not None else None,
        "stage_log": list(log),
    }
    if failure is not None:
        payload["failure_stage"] = failure.stage
    if validation is not None:
        payload["validation"] = validation
    _emit(args, payload)
    return 0 if cert is not None else 1


def cmd_lift(args) -> int:
    from .procedures import berge_hypotheses_met, berge_lift

    h = _load(args.file)
    log: list[str] = []
    try:
        cycle = berge_lift(h, log=log)
    except ProcedureFailure as exc:
        return _procedure_output(args, berge_hypotheses_met(h), None, log, exc)
    rep = validate_berge_cycle(h, cycle, strengthened=True)
    return _procedure_output(args, berge_hypotheses_met(h), cycle, log, validation=rep.to_dict())


def cmd_pm_extend(args) -> int:
    from .procedures import (
        perfect_matching_via_augmentation,
        perfect_matching_via_extenders,
        pm3_hypotheses_met,
        pmr_hypotheses_met,
    )

    h = _load(args.file)
    log: list[str] = []
    if h.r == 3:
        m, hyp = perfect_matching_via_extenders(h, log=log), pm3_hypotheses_met(h)
    else:
        m, hyp = perfect_matching_via_augmentation(h, log=log), pmr_hypotheses_met(h)
    rep = validate_matching(h, m, perfect=True).to_dict() if m is not None else None
    return _procedure_output(args, hyp, m, log, validation=rep)


def cmd_absorb_demo(args) -> int:
    from .procedures import absorb, build_absorbing_path

    h = _load(args.file) if args.file else complete(3, args.n)
    if h.r != 3:
        raise UsageError("absorb-demo needs a 3-graph")
    if args.u_size % 2:
        raise UsageError("--u-size must be even")
    log: list[str] = []
    try:
        a = build_absorbing_path(h, args.blocks, args.seed)
        log.append(f"absorbing path with {len(a.path)} vertices and {len(a.blocks)} blocks")
        rest = sorted(set(range(h.n)) - a.vertices)
        if args.u_size > len(rest):
            raise UsageError(f"only {len(rest)} vertices lie outside the absorbing path")
        u = sorted(random.Random(args.seed).sample(rest, args.u_size))
        log.append(f"absorbing {u}")
        q = absorb(h, a, u)
    except ProcedureFailure as exc:
        log.extend(exc.log)
        log.append(str(exc))
        return _procedure_output(args, True, None, log, exc)
    rep = validate_loose_walk(h, q).to_dict()
    rep["endpoints_preserved"] = q.endpoints == a.endpoints
    rep["vertex_set_exact"] = set(q.vertices) == set(a.vertices) | set(u)
    return _procedure_output(args, True, q, log, validation=rep)


def cmd_assemble(args) -> int:
    from .procedures import assemble_loose_hc, loose_hypotheses_met

    h = _load(args.file)
    if h.r != 3 or h.n % 2:
        raise UsageError("assemble needs a 3-graph on an even number of vertices")
    log: list[str] = []
    hyp = loose_hypotheses_met(h, args.epsilon)
    try:
        cyc = assemble_loose_hc(h, args.epsilon, args.seed, log=log,
                                absorb_capacity_fraction=args.absorb_capacity_fraction)
    except ProcedureFailure as exc:
        return _procedure_output(args, hyp, None, log, exc)
    rep = validate_loose_walk(h, cyc, hamiltonian=True).to_dict()
    return _procedure_output(args, hyp, cyc, log, validation=rep)


def _scan_one(job: tuple) -> dict:
    from .lab import exact_threshold

    r, n, structure, sample, count, seed = job
    rep = exact_threshold(r, n, structure, sample=sample, count=count, seed=seed)
    return rep.to_dict()


def _pool_map(fn, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def cmd_scan(args) -> int:
    from .solvers import canonical_structure

    try:
        structure = canonical_structure(args.structure)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    jobs = [(args.r, n, structure, args.sample, args.count, args.seed) for n in sorted(set(args.n))]
    try:
        reports = _pool_map(_scan_one, jobs, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out_dir = Path(args.out) if args.out else None
    rows = []
    for rep in reports:
        witness_file = ""
        if out_dir is not None and rep["witness"] is not None:
            out_dir.mkdir(parents=True, exist_ok=True)
            path = out_dir / f"witness_{rep['r']}_{rep['n']}_{rep['structure']}.hg"
            w = Hypergraph(rep["r"], rep["n"], rep["witness"]["edges"])
            write_hg(w, path, comment=f"delta+ = {rep['witness']['delta_pos']}, lacks {rep['structure']}")
            witness_file = str(path)
        rep["witness_file"] = witness_file
        rows.append({
            "r": rep["r"], "n": rep["n"], "structure": rep["structure"],
            "threshold_lower": rep["threshold_lower"], "threshold_upper": rep["threshold_upper"],
            "method": rep["method"], "witness_file": witness_file,
        })
    _emit(args, {"reports": reports}, rows)
    return 0


def _report_one(job: tuple) -> dict:
    from .lab import tightness_report

    theorem, n, r, samples, seed, epsilon = job
    return tightness_report(theorem, [n], r=r, samples=samples, seed=seed, epsilon=epsilon)


def cmd_report(args) -> int:
    from .lab import THEOREMS

    if args.theorem not in THEOREMS:
        raise UsageError(f"unknown theorem id {args.theorem!r}")
    jobs = [(args.theorem, n, args.r, args.samples, args.seed, args.epsilon) for n in sorted(set(args.n))]
    parts = _pool_map(_report_one, jobs, args.jobs)
    rows = [row for p in parts for row in p["rows"]]
    report = {"theorem": args.theorem, "r": parts[0]["r"] if parts else args.r,
              "regime_empty": all(p["regime_empty"] for p in parts), "rows": rows}
    flat = [{"n": row["n"], "threshold": row["threshold"], "regime_empty": row["regime_empty"],
             "construction_answer": row.get("construction", {}).get("structure", ""),
             "samples_yes": row.get("samples", {}).get("yes", 0),
             "samples_no": row.get("samples", {}).get("no", 0),
             "discrepancies": len(row["discrepancies"])} for row in rows]
    _emit(args, {"report": report}, flat)
    return 1 if any(row["discrepancies"] for row in rows) else 0


# parser -------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for batch subcommands")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")

    parser = argparse.ArgumentParser(prog="poscodeg", description="Positive co-degree hypergraph toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a construction or random instance")
    p.add_argument("kind", choices=("huv", "complete", "two-cliques", "loose-cycle", "random"))
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--n", type=int, default=9)
    p.add_argument("--v", type=int, default=0, help="size of the strongly independent part (huv)")
    p.add_argument("--k", type=int, default=3, help="number of edges (loose-cycle)")
    p.add_argument("--t", type=int, default=0, help="co-degree floor (random)")
    p.add_argument("--p", type=float, default=0.5, help="edge probability (random)")
    p.add_argument("--verify", action="store_true", help="confirm absence claims with the exact solvers")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--name", default=None, help="file stem (defaults to the sheet name)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", parents=[common], help="degree profile of a .hg file")
    p.add_argument("file", type=Path)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", parents=[common], help="exact solver")
    p.add_argument("file", type=Path)
    p.add_argument("--structure", required=True,
                   choices=("pm", "berge-hc", "loose-hc", "c43-tiling", "path-tiling",
                            "perfect-matching", "hamiltonian-cycle"))
    p.add_argument("--deadline-ms", type=float, default=None)
    p.add_argument("--force", action="store_true", help="lift the instance-size guardrails")
    p.add_argument("--max-paths", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("lift", parents=[common], help="Berge Hamiltonian cycle by lifting")
    p.add_argument("file", type=Path)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("pm-extend", parents=[common], help="perfect matching by augmentation")
    p.add_argument("file", type=Path)
    p.set_defaults(func=cmd_pm_extend)

    p = sub.add_parser("absorb-demo", parents=[common], help="build an absorbing path and absorb a random set")
    p.add_argument("file", type=Path, nargs="?", default=None)
    p.add_argument("--n", type=int, default=16, help="vertex count of the complete host when no file is given")
    p.add_argument("--blocks", type=int, default=1)
    p.add_argument("--u-size", type=int, default=2)
    p.set_defaults(func=cmd_absorb_demo)

    p = sub.add_parser("assemble", parents=[common], help="loose Hamiltonian cycle by absorption")
    p.add_argument("file", type=Path)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.add_argument("--absorb-capacity-fraction", type=float, default=None)
    p.set_defaults(func=cmd_assemble)

    p = sub.add_parser("scan", parents=[common], help="exact or sampled threshold")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--structure", required=True)
    p.add_argument("--sample", action="store_true")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--out", default=None, help="directory for witness .hg files")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("report", parents=[common], help="tightness report")
    p.add_argument("--theorem", required=True, help="pm3 | pm-r | berge-hc | loose-hc")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--epsilon", type=float, default=0.1)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
