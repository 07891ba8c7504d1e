"""Check records, the JSON report (schema 1) and its Markdown rendering.

The Markdown text is produced from the JSON document only, so both files
always describe the same run.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

SCHEMA = 1


def _clean(value):
    """Make a value JSON-safe: non-finite floats become strings, tuples become lists."""
    if isinstance(value, float):
        return value if math.isfinite(value) else repr(value)
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return value


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    identity: str
    mode: str
    samples: int
    max_residual: float
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "suite": self.suite,
            "identity": self.identity,
            "mode": self.mode,
            "samples": self.samples,
            "max_residual": _clean(float(self.max_residual)),
            "passed": bool(self.passed),
            "detail": _clean(self.detail),
        }


def build_report(config: dict, checks) -> dict:
    rows = sorted((c.to_json() for c in checks), key=lambda c: c["name"])
    failed = [c["name"] for c in rows if not c["passed"]]
    return {
        "schema": SCHEMA,
        "config": _clean(config),
        "summary": {"total": len(rows), "passed": len(rows) - len(failed), "failed": failed},
        "checks": rows,
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _fmt_residual(r) -> str:
    return r if isinstance(r, str) else f"{r:.3e}"


def to_markdown(report: dict) -> str:
    cfg = report["config"]
    summary = report["summary"]
    lines = [
        "# Verification report",
        "",
        f"schema {report['schema']}; suite `{cfg.get('suite')}`, mode `{cfg.get('mode')}`, "
        f"seed {cfg.get('seed')}, ell {cfg.get('ell')}, m {cfg.get('m')}",
        "",
        f"**{summary['passed']} of {summary['total']} checks passed.**",
        "",
        "| check | identity | mode | samples | max residual | result |",
        "|---|---|---|---:|---:|---|",
    ]
    for c in report["checks"]:
        status = "pass" if c["passed"] else "FAIL"
        lines.append(f"| `{c['name']}` | {c['identity']} | {c['mode']} | {c['samples']} | "
                     f"{_fmt_residual(c['max_residual'])} | {status} |")
    tables = [c for c in report["checks"] if "table" in c["detail"]]
    for c in tables:
        t = c["detail"]["table"]
        lines += ["", f"## `{c['name']}`", "", "| " + " | ".join(t["columns"]) + " |",
                  "|" + "---:|" * len(t["columns"])]
        for row in t["rows"]:
            lines.append("| " + " | ".join(_fmt_residual(v) if isinstance(v, float) else str(v)
                                           for v in row) + " |")
        for key, value in sorted(c["detail"].items()):
            if key != "table":
                lines.append(f"\n{key}: {value}")
    if summary["failed"]:
        lines += ["", "## Failures", ""]
        for c in report["checks"]:
            if not c["passed"]:
                extra = {k: v for k, v in c["detail"].items() if k != "table"}
                lines.append(f"- `{c['name']}`: {json.dumps(extra, sort_keys=True)}")
    return "\n".join(lines) + "\n"
