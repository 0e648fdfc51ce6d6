"""ImpLab command line.

Subcommands:
  classify INPUT                  interval test, impropriety, weight, balance, BAL form
  mfisg --p P --max-n N           minimal forbidden interval subgraphs of the p-improper class
  bal build|check|verify          BAL_k construction, recognition and forward verification
  verify-theorems --max-n N       structure checks over every connected interval graph

INPUT is a file path, '-' for stdin, or an inline graph (K4, K1,3, P5, C5,
S2,2,2, an adjacency list like "0-1,1-2", or graph6).

Exit codes: 0 success, 1 property violation or fixture mismatch, 2 usage or parse error.
"""
import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from src import config
from src.agents.bal_agent import BalAgent
from src.agents.classification_agent import ClassificationAgent
from src.agents.mfisg_agent import MfisgAgent
from src.agents.theorem_agent import TheoremAgent
from src.bal import BalSpec
from src.codec import graph6_encode, graph6_stream_encode, load_graph, parse_graph
from src.errors import ImpLabError
from src.graph import Graph
from src.impropriety import IntervalModel, ascii_diagram
from src.utils import safe_name, to_ndjson
from src.visualize import create_graph_figure, create_interval_diagram, write_svg

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    command: str
    source: Optional[str] = None
    fmt: str = "text"
    p: int = 1
    max_n: int = 7
    fixtures: Optional[str] = None
    jobs: int = config.DEFAULT_JOBS
    guard_override: bool = False
    verbose: bool = False
    action: Optional[str] = None
    k: Optional[int] = None
    parts: Optional[str] = None
    output: Optional[str] = None
    forward: int = 0

    def __post_init__(self):
        if self.jobs < 1:
            raise ImpLabError("--jobs must be at least 1")
        if self.max_n < 1:
            raise ImpLabError("--max-n must be at least 1")

    def guard(self, default: int) -> Optional[int]:
        return None if self.guard_override else default

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            source=getattr(args, "input", None),
            fmt=args.format,
            p=getattr(args, "p", 1),
            max_n=getattr(args, "max_n", 7),
            fixtures=getattr(args, "fixtures", None),
            jobs=args.jobs,
            guard_override=args.guard_override,
            verbose=args.verbose,
            action=getattr(args, "action", None),
            k=getattr(args, "k", None),
            parts=getattr(args, "parts", None),
            output=args.output,
            forward=getattr(args, "forward", 0),
        )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text", "svg", "graph6"], default="text")
    common.add_argument("--jobs", type=int, default=config.DEFAULT_JOBS, help="worker processes")
    common.add_argument("--guard-override", action="store_true", help="lift the size guards")
    common.add_argument("--verbose", action="store_true", help="progress messages on stderr")
    common.add_argument("--output", default=None, help="file for svg output")

    ap = argparse.ArgumentParser(prog="implab", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify one graph")
    c.add_argument("input")

    m = sub.add_parser("mfisg", parents=[common], help="enumerate MFISGs")
    m.add_argument("--p", type=int, required=True)
    m.add_argument("--max-n", type=int, default=7)
    m.add_argument("--fixtures", default=None,
                   help=f"compare with a fixture set ({', '.join(config.FIXTURE_FILES)}) or a graph6 file")

    b = sub.add_parser("bal", parents=[common], help="BAL_k graphs")
    b.add_argument("action", choices=["build", "check", "verify"])
    b.add_argument("input", nargs="?", default=None, help="graph for 'check'")
    b.add_argument("--k", type=int, default=None)
    b.add_argument("--parts", default=None, help='comma separated parts, e.g. "K2,K2" or "K1,3,P3"')

    t = sub.add_parser("verify-theorems", parents=[common], help="run the structure checks exhaustively")
    t.add_argument("--max-n", type=int, default=6)
    t.add_argument("--forward", type=int, default=0, help="also verify this many random BAL specs")
    return ap


def _read_input(source: str) -> Graph:
    if source == "-":
        return parse_graph(sys.stdin.read())
    return load_graph(source)


def _status_printer(cfg: RunConfig):
    if not cfg.verbose:
        return None
    return lambda message: print(message, file=sys.stderr)


def _emit_json(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _svg_path(cfg: RunConfig, stem: str) -> Path:
    if cfg.output:
        return Path(cfg.output)
    return config.ensure_data_dir() / f"implab_{safe_name(stem)}.svg"


def cmd_classify(cfg: RunConfig) -> int:
    g = _read_input(cfg.source)
    agent = ClassificationAgent()
    agent.set_status_callback(_status_printer(cfg))
    record = agent.classify_one(cfg.source, g, strict=True)

    if cfg.fmt == "json":
        _emit_json(record)
    elif cfg.fmt == "graph6":
        print(record["graph6"])
    elif cfg.fmt == "svg":
        if record["interval"]:
            model = IntervalModel.from_dict(record["model"])
            center = record["basepoints"][0] if record.get("basepoints") else None
            fig = create_interval_diagram(model, g, center, title=f"{record['graph6']}: imp {record['imp']}")
        else:
            fig = create_graph_figure(g, record["witness"]["vertices"], title=f"{record['witness']['kind']} witness")
        print(write_svg(fig, _svg_path(cfg, record["graph6"])))
    else:
        print(_classify_text(record))
    return EXIT_OK


def _classify_text(record: dict) -> str:
    lines = [f"graph6: {record['graph6']}", f"vertices: {record['n']}  edges: {record['edges']}"]
    if not record["interval"]:
        w = record["witness"]
        lines.append(f"interval: no ({w['kind']} {' '.join(str(v) for v in w['vertices'])})")
        return "\n".join(lines)
    lines.append("interval: yes")
    lines.append(f"imp: {record['imp']}  wt: {record['wt']}")
    if record.get("connected"):
        lines.append(f"balanced: {record['balanced']}  critical: {record['critical']}")
        lines.append(f"basepoints: {' '.join(str(v) for v in record['basepoints']) or '-'}")
        lines.append(f"bal: {record['bal_describe'] or 'no (' + record['bal_form']['reason'] + ')'}")
        lines.append(f"classification: {record['classification']}")
    lines.append(ascii_diagram(IntervalModel.from_dict(record["model"])))
    return "\n".join(lines)


def cmd_mfisg(cfg: RunConfig) -> int:
    agent = MfisgAgent(cfg.p, cfg.max_n, jobs=cfg.jobs, guard=cfg.guard(config.MAX_ENUM_N))
    agent.set_status_callback(_status_printer(cfg))
    agent.run(fixtures=cfg.fixtures)

    if cfg.fmt == "json":
        sys.stdout.write(to_ndjson(r.to_dict() for r in agent.records))
    elif cfg.fmt == "graph6":
        sys.stdout.write(graph6_stream_encode(r.graph for r in agent.records))
    else:
        for r in agent.records:
            print(f"{r.label}\tn={r.n}\timp={r.imp}\t{r.classification}\t{r.name}".rstrip())
        print(f"{len(agent.records)} MFISGs for p={cfg.p} up to {cfg.max_n} vertices")

    c = agent.comparison
    if c is None:
        return EXIT_OK
    print(f"{len(c['matched'])}/{c['total']} matched", file=sys.stderr if cfg.fmt != "text" else sys.stdout)
    return EXIT_OK if c["ok"] else EXIT_VIOLATION


def _spec_from(cfg: RunConfig) -> BalSpec:
    if cfg.k is None or not cfg.parts:
        raise ImpLabError(f"bal {cfg.action} needs --k and --parts")
    return BalSpec.from_text(cfg.k, cfg.parts)


def cmd_bal(cfg: RunConfig) -> int:
    agent = BalAgent(guard=cfg.guard(config.BAL_VERIFY_MAX_ORDER))
    agent.set_status_callback(_status_printer(cfg))

    if cfg.action == "build":
        spec = _spec_from(cfg)
        g, z = agent.build(spec)
        if cfg.fmt == "json":
            _emit_json({"schema": config.SCHEMA_VERSION, "spec": spec.to_dict(), "describe": spec.describe(),
                        "graph6": graph6_encode(g), "center": z})
        elif cfg.fmt == "svg":
            print(write_svg(create_graph_figure(g, [z], title=spec.describe()), _svg_path(cfg, spec.describe())))
        else:
            print(graph6_encode(g))
        return EXIT_OK

    if cfg.action == "check":
        if cfg.source is None:
            raise ImpLabError("bal check needs an input graph")
        result = agent.check(_read_input(cfg.source))
        if isinstance(result, BalSpec):
            if cfg.fmt == "json":
                _emit_json({"bal": True, "describe": result.describe(), **result.to_dict()})
            else:
                print(result.describe())
            return EXIT_OK
        if cfg.fmt == "json":
            _emit_json(result.to_dict())
        else:
            print(f"not BAL: {result.reason}")
        return EXIT_VIOLATION

    result = agent.verify(_spec_from(cfg))
    if cfg.fmt == "json":
        _emit_json(result.to_dict())
    else:
        print(result.message)
    return EXIT_OK if result.passed else EXIT_VIOLATION


def cmd_verify_theorems(cfg: RunConfig) -> int:
    agent = TheoremAgent(cfg.max_n, jobs=cfg.jobs, guard=cfg.guard(config.MAX_ENUM_N))
    agent.set_status_callback(_status_printer(cfg))
    summary = agent.run(forward_samples=cfg.forward)
    failures = agent.failures()

    if cfg.fmt == "json":
        _emit_json({
            "schema": config.SCHEMA_VERSION,
            "max_n": cfg.max_n,
            "summary": summary.to_dict(orient="records"),
            "failures": failures.to_dict(orient="records"),
        })
    else:
        print(summary.to_string(index=False))
        for _, row in failures.iterrows():
            print(f"FAIL {row['theorem']} {row['graph6']}: {row['message']}")
    return EXIT_VIOLATION if len(failures) else EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "mfisg": cmd_mfisg,
    "bal": cmd_bal,
    "verify-theorems": cmd_verify_theorems,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.command](cfg)
    except ImpLabError as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        return EXIT_USAGE
