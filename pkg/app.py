"""
linkage-lab - Exact Linkage Workbench
Command-line entry point: run scripts, check a corpus, browse the run archive.
"""
import argparse
import logging
import os
import sys
from logging.handlers import RotatingFileHandler

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pandas as pd

import config
from core import database
from core.dsl import parse_session
from core.errors import LinkageLabError, SessionError
from providers import script_files
from services.session_runner import RunOptions, run

log = logging.getLogger("linkage_lab")


# ── Logging ─────────────────────────────────────────────

def setup_logging(verbose: bool = False):
    handlers = [logging.StreamHandler(sys.stderr)]
    if config.LOG_TO_FILE:
        os.makedirs(config.DATA_DIR, exist_ok=True)
        handlers.append(RotatingFileHandler(config.LOG_FILE, maxBytes=5 * 1024 * 1024, backupCount=3))
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING),
        format="%(asctime)s [%(name)s] %(levelname)s: %(message)s",
        handlers=handlers,
    )


# ── Rendering ───────────────────────────────────────────

def render_text(report: dict) -> str:
    """Plain-text view of a JSON report."""
    lines = [f"script: {report.get('script') or '<stdin>'}"]
    for r in report["results"]:
        mark = {"ok": "ok  ", "failed": "FAIL", "error": "ERR "}.get(r["status"], r["status"])
        lines.append(f"[{mark}] {r['index']:>3}  {r['command']}")
        if "error" in r:
            lines.append(f"        error: {r['error']}")
        if "value" in r:
            lines.append(f"        value: {r['value']}")
        if "ideal" in r:
            lines.append(f"        {r['name']} = {', '.join(r['ideal'])}")
        verification = r.get("report")
        if verification:
            lines.append(f"        {verification['theorem']}: {verification['conclusion']}")
            for h in verification["hypotheses"]:
                flag = "" if h["passed"] is None else (" yes" if h["passed"] else " no")
                lines.append(f"          - {h['name']} ({h['status']}){flag}")
            for name, value in verification["values"].items():
                if not isinstance(value, dict):
                    lines.append(f"          {name} = {value}")
            if "error" in verification:
                lines.append(f"          error: {verification['error']}")
    lines.append(f"exit code: {report['exit_code']}")
    return "\n".join(lines)


# ── Commands ────────────────────────────────────────────

def _options(args) -> RunOptions:
    return RunOptions(
        n_max=args.nmax,
        s_max=args.smax,
        j_depth=args.jdepth,
        field=args.field,
    )


def run_script(path: str, options: RunOptions, archive: bool = False):
    """Parse and run one script; returns the Report."""
    text = script_files.read_script(path)
    report = run(parse_session(text), options, script=path)
    if archive:
        database.init_db()
        run_id = database.save_run(report, script_files.script_digest(text))
        log.info(f"archived {path} as run {run_id}")
    return report


def cmd_run(args) -> int:
    try:
        report = run_script(args.file, _options(args), archive=args.archive)
    except SessionError as e:
        print(f"{args.file}: {e}", file=sys.stderr)
        return 2
    except (OSError, LinkageLabError) as e:
        log.error(f"run failed for {args.file}: {e}")
        print(f"{args.file}: {e}", file=sys.stderr)
        return 2
    data = report.to_dict()
    if args.json:
        script_files.write_report(data, args.json)
    if not args.quiet:
        print(render_text(data))
    return report.exit_code


def cmd_check_all(args) -> int:
    try:
        paths = script_files.discover_scripts(args.directory)
    except FileNotFoundError as e:
        print(str(e), file=sys.stderr)
        return 2
    rows = []
    for path in paths:
        try:
            report = run_script(path, _options(args), archive=args.archive)
            code = report.exit_code
            counts = {s: sum(1 for r in report.results if r.status == s) for s in ("ok", "failed", "error")}
        except (OSError, LinkageLabError) as e:
            log.error(f"{path}: {e}")
            code, counts = 2, {"ok": 0, "failed": 0, "error": 1}
        rows.append({"script": os.path.basename(path), **counts, "exit_code": code})
    if not rows:
        print(f"no {config.SCRIPT_SUFFIX} scripts in {args.directory}")
        return 0
    table = pd.DataFrame(rows, columns=["script", "ok", "failed", "error", "exit_code"])
    if not args.quiet:
        print(table.to_string(index=False))
    return int(table["exit_code"].max())


def cmd_history(args) -> int:
    database.init_db()
    if args.run is not None or args.script:
        return _show_run(args)
    runs = database.get_runs(args.limit)
    if not runs:
        print("no archived runs")
        return 0
    table = pd.DataFrame(runs, columns=["id", "created_at", "script", "commands", "ok", "exit_code", "engine_version"])
    print(table.to_string(index=False))
    return 0


def _show_run(args) -> int:
    """Per-command results of one archived run, by id or as the latest run of a script."""
    run_id = args.run
    if run_id is None:
        last = database.get_last_run(args.script)
        if last is None:
            print(f"no archived runs of {args.script}", file=sys.stderr)
            return 2
        run_id = last["id"]
        print(f"run {run_id}: {last['script']} (exit {last['exit_code']}, {last['created_at']})")
    results = database.get_run_results(run_id)
    if not results:
        print(f"no results for run {run_id}", file=sys.stderr)
        return 2
    table = pd.DataFrame(results, columns=["command_index", "status", "command"])
    print(table.to_string(index=False))
    return 0


# ── Argument parsing ────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linkage-lab", description="Exact workbench for links of ideals.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    budgets = argparse.ArgumentParser(add_help=False)
    budgets.add_argument("--nmax", type=int, default=config.DEFAULT_NMAX, help="reduction-number search budget")
    budgets.add_argument("--smax", type=int, default=config.DEFAULT_SMAX, help="Hilbert-Samuel table budget")
    budgets.add_argument("--jdepth", type=int, default=config.DEFAULT_JDEPTH, help="canonical colon depth")
    budgets.add_argument("--field", default=None, help="override every ring's field, e.g. QQ or FF(32003)")
    budgets.add_argument("--archive", action="store_true", help="store the run in the archive")
    budgets.add_argument("--quiet", action="store_true", help="no rendering on stdout")

    p_run = sub.add_parser("run", parents=[budgets], help="run one script")
    p_run.add_argument("file")
    p_run.add_argument("--json", metavar="OUT", help="write the JSON report here")
    p_run.set_defaults(handler=cmd_run)

    p_all = sub.add_parser("check-all", parents=[budgets], help="run every script in a directory")
    p_all.add_argument("directory", nargs="?", default=config.CORPUS_DIR)
    p_all.set_defaults(handler=cmd_check_all)

    p_hist = sub.add_parser("history", help="list archived runs")
    p_hist.add_argument("--limit", type=int, default=20)
    which = p_hist.add_mutually_exclusive_group()
    which.add_argument("--run", type=int, metavar="ID", help="show the commands of one run")
    which.add_argument("--script", metavar="PATH", help="show the latest run of a script")
    p_hist.set_defaults(handler=cmd_history)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
