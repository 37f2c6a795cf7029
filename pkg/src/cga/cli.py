"""Command-line interface: ``cga <command> ...``.

Commands
  classes       classify the conjugacy classes of S_n or A_n
  centralizer   generators, order and commutativity of a centralizer
  component     connected component of the class-restricted commuting graph
  cover         the structural abelian cover of a fixed-long-cycle slice
  reps-search   search for non-commuting representatives of the obstruction groups
  verify        run registered claim checks
  schema        print the JSON schema of ``--json`` documents

Configuration precedence: flags > environment (CGA_CAP, CGA_JOBS,
CGA_CACHE_DIR) > JSON config file (``--config``) > defaults.

Exit status: 0 success, 1 a claim failed, 2 usage error, 3 resource cap hit.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

from .comgraph.components import (
    ComponentTooLarge,
    analyze_large_component,
    analyze_vertex_set,
    component_of,
)
from .comgraph.graph import CommutingGraph, VertexSet
from .comgraph.slices import (
    InvalidSliceDegree,
    check_kind,
    forced_first,
    members_meeting,
    noncommuting_reps_search,
    obstruction_groups,
    slice_vertices,
    structural_cover_family,
    symmetrized_groups,
)
from .groups import (
    DEFAULT_CAP,
    CapExceeded,
    ClassLabel,
    GroupSpec,
    centralizer_gens,
    centralizer_order,
    class_label_of,
    classify_classes,
    is_abelian,
    lies_in_abelian_centralizer,
)
from .perm import CycleParseError, CycleType, cycle_type, parse_cycles, render_cycles
from .schema import REPORT_SCHEMA, SCHEMA_VERSION
from .validate import check_cover
from .verify import FAIL, UNDECIDED, UnknownClaim, plan, run_task

log = logging.getLogger("cga")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

# Components above this size skip the exact bitset solvers and get bounds
# from the sparse path instead.
EXACT_COMPONENT_LIMIT = 3000


class UsageError(Exception):
    pass


# ------------------------------------------------ configuration

@dataclass
class Config:
    cap: int = DEFAULT_CAP
    jobs: int = field(default_factory=lambda: os.cpu_count() or 1)
    cache_dir: str = field(default_factory=lambda: str(Path.home() / ".cache" / "cga"))
    deterministic: bool = True
    sources: dict = field(default_factory=dict)  # setting -> where it came from

    def to_dict(self) -> dict:
        return {"cap": self.cap, "jobs": self.jobs, "cache_dir": self.cache_dir,
                "deterministic": self.deterministic, "sources": dict(self.sources)}


_ENV = {"cap": "CGA_CAP", "jobs": "CGA_JOBS", "cache_dir": "CGA_CACHE_DIR"}


def _coerce(key: str, value, origin: str):
    if key in ("cap", "jobs"):
        try:
            v = int(value)
        except (TypeError, ValueError):
            raise UsageError(f"{origin}: {key} must be an integer, got {value!r}") from None
        if v < 1:
            raise UsageError(f"{origin}: {key} must be positive, got {v}")
        return v
    if key == "deterministic":
        if not isinstance(value, bool):
            raise UsageError(f"{origin}: deterministic must be true or false")
        return value
    return str(value)


def load_config(args: argparse.Namespace, environ=None) -> Config:
    """Merge defaults, config file, environment and flags (later wins)."""
    environ = os.environ if environ is None else environ
    cfg = Config()
    for key in ("cap", "jobs", "cache_dir", "deterministic"):
        cfg.sources[key] = "default"
    path = getattr(args, "config", None)
    if path:
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file {path}: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError(f"config file {path} must hold a JSON object")
        unknown = set(data) - {"cap", "jobs", "cache_dir", "deterministic"}
        if unknown:
            raise UsageError(f"config file {path}: unknown keys {sorted(unknown)}")
        for key, value in data.items():
            setattr(cfg, key, _coerce(key, value, f"config file {path}"))
            cfg.sources[key] = "config"
    for key, var in _ENV.items():
        if environ.get(var):
            setattr(cfg, key, _coerce(key, environ[var], f"environment {var}"))
            cfg.sources[key] = "env"
    for key in ("cap", "jobs", "cache_dir"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, _coerce(key, value, f"--{key.replace('_', '-')}"))
            cfg.sources[key] = "flag"
    return cfg


# ------------------------------------------------ component cache

def cache_path(cache_dir: str, group: str, n: int, label: str, seed: str) -> Path:
    digest = hashlib.sha256(seed.encode()).hexdigest()[:16]
    safe = label.replace("+", "p").replace("/", "_")
    return Path(cache_dir) / f"{group}{n}_{safe}_{digest}.txt"


def write_component_cache(path: Path, vs: VertexSet, params: dict) -> Path:
    """One header line (JSON after '# '), then one element per line."""
    path.parent.mkdir(parents=True, exist_ok=True)
    header = {"schema_version": SCHEMA_VERSION, **params, "degree": vs.degree, "size": len(vs)}
    tmp = path.with_suffix(".tmp")
    tmp.write_text("# " + json.dumps(header, sort_keys=True) + "\n" + "\n".join(vs.to_lines()) + "\n")
    tmp.replace(path)
    return path


def read_component_cache(path: Path, label: Optional[ClassLabel] = None) -> tuple:
    """(header, VertexSet) from a cache file; raises ValueError if malformed."""
    lines = Path(path).read_text().splitlines()
    if not lines or not lines[0].startswith("# "):
        raise ValueError(f"{path}: missing header line")
    header = json.loads(lines[0][2:])
    if header.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"{path}: schema_version {header.get('schema_version')!r} is not {SCHEMA_VERSION}")
    vs = VertexSet.from_lines(lines[1:], header["degree"], label)
    if len(vs) != header["size"]:
        raise ValueError(f"{path}: header says {header['size']} elements, found {len(vs)}")
    return header, vs


# ------------------------------------------------ helpers

def _spec(group: str, n: int) -> GroupSpec:
    if n < 1:
        raise UsageError(f"n must be at least 1, got {n}")
    return GroupSpec.alt(n) if group == "alt" else GroupSpec.sym(n)


def _parse_perm(text: str, n: int):
    try:
        return parse_cycles(text, n)
    except (CycleParseError, ValueError) as exc:
        raise UsageError(f"cannot parse permutation {text!r} on {n} points: {exc}") from None


def parse_class_text(text: str, n: int) -> tuple:
    """'6-3-3-2', or with a trailing '+'/'-' naming one half of a split class."""
    text = text.strip()
    tag = None
    if text.endswith("+"):
        tag, text = "plus", text[:-1]
    elif text.endswith("-"):
        tag, text = "minus", text[:-1]
    try:
        return CycleType.parse(text, n), tag
    except ValueError as exc:
        raise UsageError(f"bad class {text!r}: {exc}") from None


def _payload(kind: str, params: dict, data: dict, wall: float) -> dict:
    return {"payload": kind, "parameters": params, "data": data, "wall_time": round(wall, 6)}


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


# ------------------------------------------------ commands
# Each returns (reports, exit_status, plain-text lines).

def cmd_classes(args, cfg: Config) -> tuple:
    spec = _spec(args.group, args.n)
    t0 = time.perf_counter()
    try:
        table = classify_classes(spec, cfg.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for r in table.records:
        rows.append({"label": str(r.label), "size": r.size,
                     "in_Ya": r.in_ya, "witness": render_cycles(r.witness) if r.witness else None,
                     "representative": render_cycles(r.representative), "method": r.method,
                     "centralizer_order": r.centralizer_order,
                     "abelian_centralizer": r.abelian_centralizer})
    yb = [str(r.label) for r in table.yb]
    undecided = [str(r.label) for r in table.undecided]
    data = {"group": args.group, "n": args.n, "classes": rows, "Yb": yb, "undecided": undecided}
    lines = [f"{'class':<16} {'size':>12} {'in Y_a':<9} witness"]
    for row in rows:
        mark = {True: "yes", False: "no", None: "undecided"}[row["in_Ya"]]
        lines.append(f"{row['label']:<16} {row['size']:>12} {mark:<9} {row['witness'] or '-'}")
    lines.append(f"Y_b classes: {', '.join(yb) if yb else '(none)'}")
    if undecided:
        lines.append(f"undecided (cap {cfg.cap}): {', '.join(undecided)}")
    status = EXIT_CAP if undecided else EXIT_OK
    params = {"group": args.group, "n": args.n, "cap": cfg.cap}
    return [_payload("classes", params, data, time.perf_counter() - t0)], status, lines


def cmd_centralizer(args, cfg: Config) -> tuple:
    spec = _spec(args.group, args.n)
    g = _parse_perm(args.perm, args.n)
    if not spec.contains(g):
        raise UsageError(f"{args.perm} is not in {'A' if spec.is_alt else 'S'}_{args.n}")
    t0 = time.perf_counter()
    c = centralizer_gens(g, spec)
    order = centralizer_order(g, spec)
    abelian = is_abelian(c)
    member = lies_in_abelian_centralizer(g, spec, cfg.cap)
    data = {"element": render_cycles(g), "cycle_type": str(cycle_type(g)),
            "generators": [render_cycles(x) for x in c.generators], "order": order,
            "abelian": abelian, "in_Ya": member.in_ya,
            "witness": render_cycles(member.witness) if member.witness else None,
            "membership_method": member.method}
    lines = [f"element      {data['element']}  (type {data['cycle_type']})",
             f"order        {order}",
             f"abelian      {abelian}",
             "generators   " + (" ".join(data["generators"]) or "()"),
             f"in Y_a       {member.in_ya}" + (f"  witness {data['witness']}" if data["witness"] else "")]
    params = {"group": args.group, "n": args.n, "perm": args.perm}
    return [_payload("centralizer", params, data, time.perf_counter() - t0)], EXIT_OK, lines


def cmd_component(args, cfg: Config) -> tuple:
    spec = _spec(args.group, args.n)
    seed = _parse_perm(args.seed, args.n)
    if not spec.contains(seed):
        raise UsageError(f"seed {args.seed} is not in {'A' if spec.is_alt else 'S'}_{args.n}")
    ctype, tag = parse_class_text(args.class_, args.n)
    label = class_label_of(seed, spec)
    if label.cycle_type != ctype or (tag is not None and label.split_tag != tag):
        raise UsageError(f"seed {args.seed} has class {label}, not {args.class_}")
    t0 = time.perf_counter()
    path = cache_path(cfg.cache_dir, args.group, args.n, str(label), render_cycles(seed))
    cache_params = {"group": args.group, "n": args.n, "class": str(label), "seed": render_cycles(seed)}
    vs = None
    from_cache = False
    if path.exists() and not args.refresh:
        try:
            header, vs = read_component_cache(path, label)
            from_cache = seed in set(vs.elements)
            if not from_cache:
                vs = None
        except (ValueError, KeyError, CycleParseError) as exc:
            log.warning("ignoring unreadable cache %s: %s", path, exc)
            vs = None
    if vs is None:
        try:
            vs = component_of(seed, spec, label, cfg.cap, budget=args.max_size)
        except ComponentTooLarge as exc:
            raise CapExceeded(args.max_size, "component") from exc
        write_component_cache(path, vs, cache_params)
    data = {"group": args.group, "n": args.n, "class": str(label), "seed": render_cycles(seed),
            "size": len(vs), "cache_path": str(path), "from_cache": from_cache}
    if len(vs) <= args.exact_limit:
        a = analyze_vertex_set(vs, spec, CommutingGraph.build(vs), cfg.cap)
        data.update({"delta": a.delta, "Delta": a.Delta, "status": a.status, "edges": a.edges,
                     "independent_certificate": [render_cycles(x) for x in a.independent_certificate],
                     "cover_certificate": [[render_cycles(x) for x in grp.generators]
                                           for grp in a.cover_certificate]})
        summary = f"delta = {a.delta}, Delta = {a.Delta} ({a.status})"
    else:
        if label.split_tag is not None:
            raise UsageError(f"component of {len(vs)} elements in a split class exceeds "
                             f"--exact-limit {args.exact_limit}")
        b = analyze_large_component(seed, spec, label, cfg.cap)
        data.update({"delta_lower": b.delta_lower, "Delta_lower": b.Delta_lower,
                     "Delta_upper": b.Delta_upper, "max_clique": b.max_clique,
                     "status": b.status, "edges": b.edges,
                     "independent_certificate": [render_cycles(x) for x in b.independent_certificate],
                     "cover_certificate": [[render_cycles(x) for x in c] for c in b.cover_certificate]})
        if b.certified:
            data["delta"] = data["Delta"] = b.delta_lower
        summary = (f"{b.delta_lower} <= delta <= Delta, {b.Delta_lower} <= Delta <= {b.Delta_upper}"
                   f" ({b.status})")
    lines = [f"class {label} in {'A' if spec.is_alt else 'S'}_{args.n}, seed {render_cycles(seed)}",
             f"component size {len(vs)}" + (" (from cache)" if from_cache else ""),
             summary, f"elements cached at {path}"]
    params = {"group": args.group, "n": args.n, "class": args.class_, "seed": args.seed}
    return [_payload("component", params, data, time.perf_counter() - t0)], EXIT_OK, lines


def _check_kind(kind: str, n: int) -> None:
    try:
        check_kind(kind, n)
    except InvalidSliceDegree as exc:
        raise UsageError(str(exc)) from None


def cmd_cover(args, cfg: Config) -> tuple:
    _check_kind(args.kind, args.n)
    t0 = time.perf_counter()
    vs = slice_vertices(args.kind, args.n)
    fam = structural_cover_family(args.kind, args.n)
    problems = check_cover(list(vs.elements), [list(m.generators) for m in fam.members], args.n, cfg.cap)
    sizes = sorted({len(m) for m in members_meeting(fam, vs)})
    data = {"kind": args.kind, "n": args.n, "slice_size": len(vs), "members": len(fam.members),
            "description": fam.description, "intersection_sizes": sizes,
            "valid_abelian_cover": not problems, "problems": problems[:10]}
    if args.list:
        data["generators"] = [[render_cycles(x) for x in m.generators] for m in fam.members]
    lines = [f"slice of {len(vs)} elements ({args.kind}, n = {args.n})",
             f"{len(fam.members)} groups: {fam.description}",
             f"each meets the slice in {', '.join(map(str, sizes))} elements",
             "valid abelian cover" if not problems else "INVALID: " + problems[0]]
    if args.list:
        lines += ["  " + " ".join(g) for g in data["generators"]]
    params = {"kind": args.kind, "n": args.n}
    return [_payload("cover", params, data, time.perf_counter() - t0)], EXIT_OK, lines


def cmd_reps_search(args, cfg: Config) -> tuple:
    _check_kind(args.kind, args.n)
    if not 1 <= args.groups <= 9:
        raise UsageError(f"--groups must be between 1 and 9, got {args.groups}")
    t0 = time.perf_counter()
    cands = slice_vertices(args.kind, args.n, power_closed=True)
    if args.symmetry_reduction:
        groups = obstruction_groups(args.kind, args.n)[:args.groups]
        res = noncommuting_reps_search(groups, cands, {0: forced_first(args.kind, args.n)})
        mode = "first representative forced, candidates merged by cyclic subgroup"
    else:
        groups = symmetrized_groups(args.kind, args.n, args.groups)
        res = noncommuting_reps_search(groups, cands, None, symmetry_reduction=False)
        mode = "full search over the groups and their images under (1,4)(2,5)(3,6)"
    data = {"kind": args.kind, "n": args.n, "groups": len(groups), "mode": mode,
            "feasible": res.feasible,
            "assignment": [render_cycles(x) for x in res.assignment] if res.feasible else None,
            "dead_ends": res.dead_ends, "nodes": res.nodes, "cache_hits": res.cache_hits,
            "candidates_per_group": res.candidates_per_group,
            "stuck_histogram": {str(k): v for k, v in sorted(res.stuck_histogram.items())},
            "trace": [{"assigned": a, "stuck_group": s} for a, s in res.trace[:args.trace]],
            "trace_truncated": res.trace_truncated or len(res.trace) > args.trace}
    lines = [f"{len(groups)} groups, {args.kind}, n = {args.n}; {mode}",
             f"candidates per group: {res.candidates_per_group}"]
    if res.feasible:
        lines.append("feasible:")
        lines += [f"  a_{i + 1} = {x}" for i, x in enumerate(data["assignment"])]
    else:
        lines.append(f"infeasible: {res.dead_ends} dead ends, {res.nodes} nodes, "
                     f"{res.cache_hits} cache hits")
        lines.append("dead ends by first group left without a candidate: "
                     + ", ".join(f"{k}: {v}" for k, v in data["stuck_histogram"].items()))
        for step in data["trace"]:
            lines.append(f"  {' '.join(step['assigned'])}  -> group {step['stuck_group']} stuck")
        if data["trace_truncated"]:
            lines.append("  ... (trace truncated)")
    params = {"kind": args.kind, "n": args.n, "groups": args.groups,
              "symmetry_reduction": args.symmetry_reduction}
    return [_payload("reps-search", params, data, time.perf_counter() - t0)], EXIT_OK, lines


def _run_task(task: tuple) -> list:
    claim_id, params, pattern, cap, symmetry_reduction = task
    return run_task(claim_id, params, pattern, cap, symmetry_reduction)


def _verify_status(reports: list) -> int:
    if any(r.result == FAIL for r in reports):
        return EXIT_FAIL
    if any(r.result == UNDECIDED and "cap" in r.evidence for r in reports):
        return EXIT_CAP
    return EXIT_OK


def _report_line(r) -> str:
    params = ", ".join(f"{k}={v}" for k, v in r.parameters.items())
    return f"{r.result.upper():<9} {r.claim_id:<36} {params:<28} {r.wall_time:8.2f}s  {r.summary}"


def iter_verify(args, cfg: Config):
    """Yield reports in claim_id order, running tasks in parallel when jobs > 1."""
    try:
        tasks = plan(args.pattern, args.n)
    except UnknownClaim as exc:
        raise UsageError(str(exc)) from None
    tasks.sort(key=lambda t: (t[0].claim_id, sorted((k, str(v)) for k, v in t[1].items())))
    work = [(c.claim_id, p, args.pattern, cfg.cap, args.symmetry_reduction) for c, p in tasks]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=min(cfg.jobs, len(work))) as pool:
            for reports in pool.map(_run_task, work):
                yield from sorted(reports, key=lambda r: r.sort_key)
    else:
        for w in work:
            yield from sorted(_run_task(w), key=lambda r: r.sort_key)


def cmd_verify(args, cfg: Config, out) -> tuple:
    if args.jsonl:
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, "invocation": args._invocation,
                              "started_at": _now()}) + "\n")
        out.flush()
    reports = []
    for r in iter_verify(args, cfg):
        reports.append(r)
        if args.jsonl:
            out.write(json.dumps(r.to_dict(), default=str) + "\n")
            out.flush()
        elif not args.json:
            out.write(_report_line(r) + "\n")
            out.flush()
    reports.sort(key=lambda r: r.sort_key)
    status = _verify_status(reports)
    counts = {k: sum(1 for r in reports if r.result == k) for k in ("pass", "fail", "undecided")}
    lines = [f"{len(reports)} reports: {counts['pass']} pass, {counts['fail']} fail, "
             f"{counts['undecided']} undecided"]
    return [r.to_dict() for r in reports], status, lines


# ------------------------------------------------ parser and entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help="largest subgroup to enumerate (env CGA_CAP; default 10^6)")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes (env CGA_JOBS; default: all cores)")
    common.add_argument("--cache-dir", dest="cache_dir", default=None,
                        help="component cache directory (env CGA_CACHE_DIR)")
    common.add_argument("--config", default=None, help="JSON config file with cap/jobs/cache_dir")
    common.add_argument("--json", action="store_true", help="write one JSON report document")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="cga", description="Abelian covers and commuting graphs of symmetric and alternating groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def group_args(p):
        p.add_argument("--group", choices=("sym", "alt"), default="alt")
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("classes", parents=[common], help="classify conjugacy classes by Y_a / Y_b")
    group_args(p)

    p = sub.add_parser("centralizer", parents=[common], help="centralizer of a permutation")
    group_args(p)
    p.add_argument("perm", help='cycle notation, e.g. "(1,2,3)(4,5)"')

    p = sub.add_parser("component", parents=[common], help="commuting-graph component and delta/Delta")
    group_args(p)
    p.add_argument("--class", dest="class_", required=True, help='cycle type such as "6-3-3-2"')
    p.add_argument("--seed", required=True, help="element of the class, in cycle notation")
    p.add_argument("--refresh", action="store_true", help="ignore an existing cache file")
    p.add_argument("--max-size", dest="max_size", type=int, default=200_000,
                   help="give up (exit 3) on larger components")
    p.add_argument("--exact-limit", dest="exact_limit", type=int, default=EXACT_COMPONENT_LIMIT,
                   help="largest component handed to the exact solvers; bigger ones get bounds")

    for name, helptext in (("cover", "structural abelian cover of a slice"),
                           ("reps-search", "non-commuting representative search")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--kind", choices=("even", "odd"), default="even")
        if name == "cover":
            p.add_argument("--list", action="store_true", help="print every member's generators")
        else:
            p.add_argument("--groups", type=int, default=9, help="use only the first N groups")
            p.add_argument("--no-symmetry-reduction", dest="symmetry_reduction", action="store_false")
            p.add_argument("--trace", type=int, default=20, help="trace lines to print")

    p = sub.add_parser("verify", parents=[common], help="run claim checks")
    p.add_argument("pattern", nargs="?", default="all", help="'all', a claim id or a sub-claim id")
    p.add_argument("--n", type=int, default=None, help="run at this degree instead of the defaults")
    p.add_argument("--jsonl", action="store_true", help="stream a header and one report per line")
    p.add_argument("--no-symmetry-reduction", dest="symmetry_reduction", action="store_false")

    sub.add_parser("schema", help="print the JSON schema of report documents")
    return parser


COMMANDS = {"classes": cmd_classes, "centralizer": cmd_centralizer, "component": cmd_component,
            "cover": cmd_cover, "reps-search": cmd_reps_search}


def main(argv: Optional[list] = None, out=None, environ=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "schema":
        out.write(json.dumps(REPORT_SCHEMA, indent=2) + "\n")
        return EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    started = _now()
    try:
        cfg = load_config(args, environ)
        args._invocation = {"argv": argv, "command": args.command, "config": cfg.to_dict()}
        if args.command == "verify":
            reports, status, lines = cmd_verify(args, cfg, out)
        else:
            reports, status, lines = COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"cga {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cga {args.command}: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except BrokenPipeError:  # e.g. output piped into head
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    if args.json:
        doc = {"schema_version": SCHEMA_VERSION, "invocation": args._invocation,
               "started_at": started, "finished_at": _now(), "exit_status": status,
               "reports": reports}
        out.write(json.dumps(doc, indent=2, default=str) + "\n")
    elif not getattr(args, "jsonl", False):
        for line in lines:
            out.write(line + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
