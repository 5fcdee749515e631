"""Serialization of verification reports as JSON, TSV or plain text."""

from __future__ import annotations

import json

from .sweep import VerificationReport

__all__ = ["to_json", "to_tsv", "to_text", "render"]

TSV_COLUMNS = ("theorem", "pair", "k", "expected", "actual", "witness")


def to_json(report: VerificationReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def to_tsv(report: VerificationReport) -> str:
    """One row per failing (pair, theorem, k) cell; a clean run is just the header."""
    lines = ["\t".join(TSV_COLUMNS)]
    for f in report.failures:
        k = "" if f["k"] is None else str(f["k"])
        lines.append("\t".join([
            f["theorem"], f["pair"], k, f["expected_text"], f["actual_text"],
            json.dumps(f["witness"], separators=(",", ":")),
        ]))
    return "\n".join(lines) + "\n"


def to_text(report: VerificationReport) -> str:
    cfg = report.config
    out = [
        f"max_total={cfg.max_total} oracle_bound={cfg.oracle_bound} "
        f"theorems={','.join(cfg.theorems)}",
    ]
    if cfg.sample is not None:
        out.append(f"sample count={cfg.sample[0]} seed={cfg.sample[1]} total={cfg.sample_total}")
    for theorem, r in report.rollup.items():
        status = "ok" if r["failures"] == 0 else "FAIL"
        out.append(f"{theorem:<20} {r['cases']:>9} cases {r['failures']:>6} failures  {status}")
    for f in report.failures:
        out.append(f"FAIL {f['theorem']} {f['pair']} k={f['k']}: "
                   f"closed form {f['expected_text']} vs brute force {f['actual_text']}")
    out.append(f"cases_checked={report.cases_checked} failures={len(report.failures)} "
               f"elapsed_ms={report.elapsed_ms}")
    return "\n".join(out) + "\n"


def render(report: VerificationReport, fmt: str) -> str:
    return {"json": to_json, "tsv": to_tsv, "text": to_text}[fmt](report)
