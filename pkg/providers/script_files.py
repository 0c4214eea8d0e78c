"""
Script file provider.
File I/O only: reads .lnk scripts, lists corpus directories, writes JSON reports.
No parsing and no computation here.
"""
import hashlib
import json
import logging
import os
from typing import Any, Dict, List

import config

log = logging.getLogger("linkage_lab.providers.script_files")


def read_script(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    log.debug(f"read {len(text)} characters from {path}")
    return text


def script_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def discover_scripts(directory: str) -> List[str]:
    """All scripts directly inside `directory`, in name order."""
    if not os.path.isdir(directory):
        raise FileNotFoundError(f"not a directory: {directory}")
    names = sorted(n for n in os.listdir(directory) if n.endswith(config.SCRIPT_SUFFIX))
    return [os.path.join(directory, n) for n in names]


def dump_report(report: Dict[str, Any]) -> str:
    # Sorted keys keep identical runs byte-identical.
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_report(report: Dict[str, Any], path: str):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_report(report))
    log.info(f"report written to {path}")
