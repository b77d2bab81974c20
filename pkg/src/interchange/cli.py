"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
The default worker count for ``search`` comes from ``INTERCHANGE_JOBS``.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .bounds import bounds_report, l_c, l_c_star
from .cuts import CutSystem, construct_3d, cut_voltage, symmetric_genus, validate_cut_system
from .embedding import EmbeddedGraph, euler_genus, hamiltonian_faces, is_simple_complete_bipartite
from .errors import DomainError, InterchangeError
from .render import to_dot, transition_svg
from .search import default_jobs, enumerate_min_genus
from .transition import (
    TransitionGraph,
    cycle_profile,
    genus_from_cycles,
    optimal_transition_graph,
    same_transition_graph,
    tg_to_voltage,
    voltage_to_tg,
)
from .voltage import VoltageGraph, derive_embedding, two_face_hamiltonian_lifts

COMMANDS = ("bounds", "construct", "construct3d", "verify", "verify3d", "search", "export", "report")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: list[int] = field(default_factory=list)
    input: Path | None = None
    output: Path | None = None
    format: str | None = None
    options: dict[str, Any] = field(default_factory=dict)


def parse_n(text: str) -> list[int]:
    """``"7"`` or ``"3..10"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
            if a > b:
                raise ValueError
            return list(range(a, b + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n")


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2)


def _table(rows: list[dict[str, Any]], cols: Sequence[str]) -> str:
    cells = [[("-" if r.get(c) is None else str(r.get(c))) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c) for i, c in enumerate(cols)]
    line = "  ".join(c.rjust(w) for c, w in zip(cols, widths))
    body = ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join([line, *body])


def _single_n(cfg: RunConfig) -> int:
    if len(cfg.n) != 1:
        raise UsageError(f"{cfg.command} takes a single n")
    return cfg.n[0]


# ---------------------------------------------------------------------------
# claims


def embedding_claims(vg: VoltageGraph) -> dict[str, Any]:
    emb = derive_embedding(vg)
    return {
        "genus": euler_genus(emb),
        "hamiltonian_faces": len(hamiltonian_faces(emb)),
        "two_face_hamiltonian": bool(two_face_hamiltonian_lifts(vg)),
        "bijective": vg.is_bijective(),
        "simple_complete_bipartite": is_simple_complete_bipartite(emb.graph, vg.modulus),
    }


def cut_claims(cs: CutSystem) -> dict[str, Any]:
    vg = cut_voltage(cs)
    claims: dict[str, Any] = {
        "base_genus": euler_genus(cs.base),
        "arcs": cs.arc_count,
        "symmetric_genus": symmetric_genus(cs),
        "bijective": vg.is_bijective(),
    }
    if vg.is_bijective():
        emb = derive_embedding(vg)
        claims["derived_genus"] = euler_genus(emb)
        claims["hamiltonian_face"] = bool(hamiltonian_faces(emb))
    return claims


def _diff(stored: dict[str, Any], fresh: dict[str, Any]) -> list[str]:
    out = []
    for k, v in stored.items():
        if k not in fresh:
            out.append(f"- {k}: claimed {v!r}, not recomputable for this document")
        elif fresh[k] != v:
            out.append(f"- {k}: claimed {v!r}, recomputed {fresh[k]!r}")
    return out


def _read_json(path: Path) -> dict[str, Any]:
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InterchangeError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InterchangeError(f"{path} does not hold a JSON object")
    return data


# ---------------------------------------------------------------------------
# commands


def cmd_bounds(cfg: RunConfig) -> int:
    rows = [bounds_report(n).to_dict() for n in cfg.n]
    if cfg.format == "json":
        _emit(_dump(rows), cfg.output)
    else:
        cols = ["n", "l_c", "l_c_star", "l_c_star_attainable", "l_c_star_tilde", "branch_l_c", "p1", "pq", "g1g2"]
        _emit(_table(rows, cols), cfg.output)
    return 0


def cmd_construct(cfg: RunConfig) -> int:
    n = _single_n(cfg)
    tg = optimal_transition_graph(n)
    vg = tg_to_voltage(tg)
    doc = vg.to_dict()
    doc["transition"] = tg.to_dict()
    doc["claims"] = embedding_claims(vg)
    if cfg.format == "transition":
        doc = {**tg.to_dict(), "claims": {"genus": genus_from_cycles(tg)}}
    _emit(_dump(doc), cfg.output)
    if cfg.output is not None:
        print(f"n={n}: genus {doc['claims']['genus']} written to {cfg.output}", file=sys.stderr)
    return 0


def _verify_document(data: dict[str, Any]) -> tuple[dict[str, Any], list[str]]:
    """Recompute claims for any supported document kind; return (fresh, problems)."""
    problems: list[str] = []
    if "curves" in data:
        cs = CutSystem.from_dict(data)
        report = validate_cut_system(cs)
        if not report.ok:
            return {}, [f"- {v}" for v in report.violations]
        return cut_claims(cs), problems
    if "alpha" in data:
        vg = VoltageGraph.from_dict(data)
        fresh = embedding_claims(vg)
        if "transition" in data:
            tg = TransitionGraph.from_dict(data["transition"])
            if not (vg.is_dipole() and same_transition_graph(voltage_to_tg(vg), tg)):
                problems.append("- transition: does not describe the stored voltage graph")
        return fresh, problems
    if "solid" in data:
        tg = TransitionGraph.from_dict(data)
        vg = tg_to_voltage(tg)
        fresh = embedding_claims(vg)
        fresh["cycle_genus"] = genus_from_cycles(tg)
        fresh["cycle_profile"] = [list(p) for p in cycle_profile(tg)]
        if fresh["cycle_genus"] != fresh["genus"]:
            problems.append(f"- cycle_genus {fresh['cycle_genus']} differs from face-traced genus {fresh['genus']}")
        return fresh, problems
    emb = EmbeddedGraph.from_dict(data)
    return {"genus": euler_genus(emb), "hamiltonian_faces": len(hamiltonian_faces(emb))}, problems


def _verify(cfg: RunConfig, want_cut: bool | None) -> int:
    if cfg.input is None:
        raise UsageError(f"{cfg.command} needs an input file")
    data = _read_json(cfg.input)
    if want_cut and "curves" not in data:
        raise InterchangeError(f"{cfg.input} is not a cut system")
    fresh, problems = _verify_document(data)
    problems += _diff(data.get("claims", {}), fresh)
    print(_dump(fresh))
    if problems:
        print(f"verification failed for {cfg.input}:", file=sys.stderr)
        for p in problems:
            print(p, file=sys.stderr)
        return 1
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    return _verify(cfg, None)


def cmd_verify3d(cfg: RunConfig) -> int:
    return _verify(cfg, True)


def cmd_construct3d(cfg: RunConfig) -> int:
    n = _single_n(cfg)
    cs = construct_3d(n)
    doc = cs.to_dict()
    doc["claims"] = cut_claims(cs)
    _emit(_dump(doc), cfg.output)
    if n == 4:
        print(
            "note: n=4 is exceptional; no cut system below genus 4 has bijective voltages, "
            "so this is the stored genus-4 witness (torus base, one arc)",
            file=sys.stderr,
        )
    return 0


def cmd_search(cfg: RunConfig) -> int:
    n = _single_n(cfg)
    o = cfg.options
    progress = None
    if o.get("progress"):
        def progress(done: int, total: int) -> None:
            print(f"\r{done}/{total} partitions", end="" if done < total else "\n", file=sys.stderr)
    res = enumerate_min_genus(
        n,
        require_ham=not o.get("no_ham", False),
        symmetry_reduction=not o.get("no_reduce", False),
        jobs=o.get("jobs"),
        checkpoint=o.get("checkpoint"),
        allow_big=o.get("allow_big", False),
        progress=progress,
    )
    _emit(_dump(res.to_dict()), cfg.output)
    return 0


def _load_any(data: dict[str, Any]) -> tuple[str, Any]:
    if "curves" in data:
        return "cut", CutSystem.from_dict(data)
    if "alpha" in data:
        return "voltage", VoltageGraph.from_dict(data)
    if "solid" in data:
        return "transition", TransitionGraph.from_dict(data)
    if "transition" in data:
        return "transition", TransitionGraph.from_dict(data["transition"])
    return "embedding", EmbeddedGraph.from_dict(data)


def cmd_export(cfg: RunConfig) -> int:
    if cfg.input is None:
        raise UsageError("export needs --in")
    data = _read_json(cfg.input)
    kind, obj = _load_any(data)
    fmt = cfg.format or "dot"
    derived = cfg.options.get("derived", False)
    if kind == "cut":
        obj, kind = cut_voltage(obj), "voltage"
    if fmt == "svg":
        if "transition" in data and kind == "voltage":
            obj, kind = TransitionGraph.from_dict(data["transition"]), "transition"
        if kind == "voltage" and obj.is_dipole():
            obj, kind = voltage_to_tg(obj), "transition"
        if kind != "transition":
            raise UsageError("svg export draws transition graphs only")
        _emit(transition_svg(obj), cfg.output)
        return 0
    if kind == "transition":
        obj, kind = tg_to_voltage(obj), "voltage"
    if kind == "voltage":
        emb = derive_embedding(obj) if derived else obj.base
    else:
        emb = obj
    if fmt == "dot":
        _emit(to_dot(emb), cfg.output)
    elif fmt == "json":
        _emit(_dump(emb.to_dict()), cfg.output)
    else:
        raise UsageError(f"unknown export format {fmt!r}")
    return 0


def report_rows(ns: Sequence[int], search_max: int) -> list[dict[str, Any]]:
    rows = []
    for n in ns:
        row: dict[str, Any] = {"n": n, "l_c": None, "construction_genus": None, "search_min_genus": None}
        if n >= 3:
            row["l_c"] = l_c(n)
            row["construction_genus"] = euler_genus(derive_embedding(tg_to_voltage(optimal_transition_graph(n))))
            if n <= search_max:
                row["search_min_genus"] = enumerate_min_genus(n).min_genus
        row["l_c_star"] = l_c_star(n)
        row["construct3d_genus"] = symmetric_genus(construct_3d(n))
        rows.append(row)
    return rows


def cmd_report(cfg: RunConfig) -> int:
    ns = cfg.n or list(range(2, 13))
    if min(ns) < 2:
        raise DomainError("report needs n >= 2")
    rows = report_rows(ns, cfg.options.get("search_max", 7))
    if cfg.format == "json":
        _emit(_dump(rows), cfg.output)
    else:
        _emit(_table(rows, ["n", "l_c", "construction_genus", "search_min_genus", "l_c_star", "construct3d_genus"]), cfg.output)
    return 0


HANDLERS: dict[str, Callable[[RunConfig], int]] = {
    "bounds": cmd_bounds,
    "construct": cmd_construct,
    "construct3d": cmd_construct3d,
    "verify": cmd_verify,
    "verify3d": cmd_verify3d,
    "search": cmd_search,
    "export": cmd_export,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="interchange", description="Symmetric K_{n,n} interchange embeddings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bounds", help="tabulate genus bounds")
    s.add_argument("--n", type=parse_n, required=True, help="N or A..B")
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.add_argument("--out", type=Path)

    s = sub.add_parser("construct", help="optimal cyclically symmetric embedding")
    s.add_argument("--n", type=parse_n, required=True)
    s.add_argument("--format", choices=("voltage", "transition"), default="voltage")
    s.add_argument("--out", type=Path)

    s = sub.add_parser("construct3d", help="cut system for three-dimensional rotational symmetry")
    s.add_argument("--n", type=parse_n, required=True)
    s.add_argument("--out", type=Path)

    for name, help_text in (("verify", "recompute the claims in a JSON file"), ("verify3d", "validate a cut system file")):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("input", type=Path)

    s = sub.add_parser("search", help="exhaustive minimum genus search")
    s.add_argument("--n", type=parse_n, required=True)
    s.add_argument("--no-ham", action="store_true", help="drop the Hamiltonian-face requirement")
    s.add_argument("--no-reduce", action="store_true", help="disable symmetry reduction")
    s.add_argument("--jobs", type=int, default=None, help="worker processes (default $INTERCHANGE_JOBS or 1)")
    s.add_argument("--checkpoint", type=Path)
    s.add_argument("--allow-big", action="store_true", help="permit n = 9")
    s.add_argument("--progress", action="store_true")
    s.add_argument("--out", type=Path)

    s = sub.add_parser("export", help="DOT, SVG or JSON rendering")
    s.add_argument("--in", dest="input", type=Path, required=True)
    s.add_argument("--format", choices=("dot", "svg", "json"), default="dot")
    s.add_argument("--derived", action="store_true", help="export the derived embedding instead of the base")
    s.add_argument("--out", type=Path)

    s = sub.add_parser("report", help="acceptance table")
    s.add_argument("--n", type=parse_n, default=None)
    s.add_argument("--search-max", type=int, default=7)
    s.add_argument("--format", choices=("table", "json"), default="table")
    s.add_argument("--out", type=Path)
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    opts = {
        k: getattr(ns, k)
        for k in ("no_ham", "no_reduce", "jobs", "checkpoint", "allow_big", "progress", "derived", "search_max")
        if hasattr(ns, k)
    }
    if opts.get("jobs") is not None and opts["jobs"] < 1:
        raise UsageError("--jobs must be at least 1")
    return RunConfig(
        command=ns.command,
        n=getattr(ns, "n", None) or [],
        input=getattr(ns, "input", None),
        output=getattr(ns, "out", None),
        format=getattr(ns, "format", None),
        options=opts,
    )


def run(cfg: RunConfig) -> int:
    if cfg.command not in HANDLERS:
        raise UsageError(f"unknown command {cfg.command!r}")
    return HANDLERS[cfg.command](cfg)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "search" and args.jobs is None:
            args.jobs = default_jobs()
        return run(config_from_args(args))
    except (UsageError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except InterchangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
