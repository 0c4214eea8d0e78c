"""
linkage-lab - Run Archive
SQLite-based storage for session runs and their per-command results.
"""
import json
import os
import sqlite3
import threading
from contextlib import contextmanager

import config

_local = threading.local()


def get_connection():
    """Get thread-local database connection."""
    if not hasattr(_local, "conn") or _local.conn is None:
        os.makedirs(os.path.dirname(os.path.abspath(config.DB_PATH)), exist_ok=True)
        _local.conn = sqlite3.connect(config.DB_PATH, check_same_thread=False)
        _local.conn.row_factory = sqlite3.Row
        _local.conn.execute("PRAGMA journal_mode=WAL")
        _local.conn.execute("PRAGMA synchronous=NORMAL")
    return _local.conn


def close_connection():
    conn = getattr(_local, "conn", None)
    if conn is not None:
        conn.close()
        _local.conn = None


@contextmanager
def get_db():
    conn = get_connection()
    try:
        yield conn
        conn.commit()
    except Exception:
        conn.rollback()
        raise


def init_db():
    """Initialize archive tables."""
    with get_db() as db:
        db.executescript("""
            CREATE TABLE IF NOT EXISTS runs (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                script TEXT,
                digest TEXT,
                exit_code INTEGER NOT NULL,
                engine_version TEXT,
                created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            );

            CREATE TABLE IF NOT EXISTS results (
                run_id INTEGER NOT NULL REFERENCES runs(id) ON DELETE CASCADE,
                command_index INTEGER NOT NULL,
                command TEXT NOT NULL,
                status TEXT NOT NULL,   -- ok / failed / error
                payload TEXT,           -- JSON
                PRIMARY KEY (run_id, command_index)
            );

            CREATE INDEX IF NOT EXISTS idx_runs_script ON runs(script, created_at);
        """)


# ── Runs ────────────────────────────────────────────────────

def save_run(report, digest=None):
    """Store a session Report; returns the new run id."""
    with get_db() as db:
        cur = db.execute(
            "INSERT INTO runs (script, digest, exit_code, engine_version) VALUES (?, ?, ?, ?)",
            (report.script, digest, report.exit_code, config.ENGINE_VERSION)
        )
        run_id = cur.lastrowid
        db.executemany(
            "INSERT INTO results (run_id, command_index, command, status, payload) VALUES (?, ?, ?, ?, ?)",
            [(run_id, r.index, r.command, r.status, json.dumps(r.payload, sort_keys=True))
             for r in report.results]
        )
    return run_id


def get_runs(limit=20):
    with get_db() as db:
        rows = db.execute("""
            SELECT r.id, r.script, r.exit_code, r.engine_version, r.created_at,
                   COUNT(x.command_index) AS commands,
                   SUM(CASE WHEN x.status = 'ok' THEN 1 ELSE 0 END) AS ok
            FROM runs r LEFT JOIN results x ON x.run_id = r.id
            GROUP BY r.id
            ORDER BY r.id DESC LIMIT ?
        """, (limit,)).fetchall()
        return [dict(r) for r in rows]


def get_run_results(run_id):
    with get_db() as db:
        rows = db.execute(
            "SELECT * FROM results WHERE run_id = ? ORDER BY command_index",
            (run_id,)
        ).fetchall()
        out = []
        for row in rows:
            r = dict(row)
            r["payload"] = json.loads(r["payload"]) if r["payload"] else {}
            out.append(r)
        return out


def get_last_run(script):
    with get_db() as db:
        row = db.execute(
            "SELECT * FROM runs WHERE script = ? ORDER BY id DESC LIMIT 1",
            (script,)
        ).fetchone()
        return dict(row) if row else None
