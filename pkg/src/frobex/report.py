"""JSON report assembly and CSV matrix dumps.

Schema "frobex-report/1".  Reports are deterministic for a fixed config and
seed: timing data is segregated under the top-level "timing" key, which
consumers exclude from byte-comparison.
"""

from __future__ import annotations

import json
import os

from . import __version__
from .linalg import Matrix

REPORT_SCHEMA_ID = "frobex-report/1"

REPORT_SCHEMA_DOC = """\
frobex-report/1
{
  "schema": "frobex-report/1",
  "artifact_version": str,
  "name": str,                  # config-derived run name
  "seed": int,
  "checks_requested": [str],
  "instance": {                 # family summary
    "algebra": str, "dimension": int, "free_rank_declared": int, ...
  },
  "characters": [
    {
      "label": str,
      "assignment": {var: canonical scalar text},
      "gram": {"rank": int, "symmetric": bool, "full_rank": bool},
      "nakayama": {
        "is_identity": bool, "round_trip": bool, "multiplicative": bool,
        "generator_images": [{"name": str, "kind": str, "ok": bool,
                               "scale": str?, "sign": str?}],
        "failures": [str]
      },
      "dual": {"inverse_verified": bool?, "pair_diagonal": bool,
                "units": [str], "failures": [str]},
      "hypothesis": {"checked": int, "failures": int, "log": [entry]},
      "claims": {...per-family claim results...},
      "centre": {"degrees": [int], "dimensions": [int],
                  "expected": [int], "ok": bool}?,
      "passed": bool,
      "csv": {"gram": path, "nakayama": path}?   # present with --csv
    }
  ],
  "passed": bool,
  "timing": {...}               # excluded from determinism comparison
}
All scalar values use the canonical text rendering "a0 + a1*z + a2*z^2"
with rationals as "p/q".
"""


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1, ensure_ascii=True) + "\n"


def write_report(out_dir: str, name: str, report: dict) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{name}.json")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(report))
    return path


def write_matrix_csv(out_dir: str, name: str, matrix: Matrix) -> str:
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{name}.csv")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(matrix.to_csv())
    return path


def assemble(name, seed, checks, instance_summary, character_sections, timing) -> dict:
    return {
        "schema": REPORT_SCHEMA_ID,
        "artifact_version": __version__,
        "name": name,
        "seed": seed,
        "checks_requested": list(checks),
        "instance": instance_summary,
        "characters": character_sections,
        "passed": all(sec.get("passed") for sec in character_sections),
        "timing": timing,
    }
