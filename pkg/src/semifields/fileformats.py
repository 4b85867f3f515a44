"""Function-table text files and the JSON report layout.

A function table file is::

    PFN 1 p=<p> n=<n>
    <f(0)>
    <f(1)>
    ...

with one decimal output index per input index, p**n lines in total.
"""
from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .fn_analysis import VecFn

HEADER = re.compile(r"^PFN 1 p=(\d+) n=(\d+)$")

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "semifields invariant report",
    "type": "object",
    "required": ["family", "parameters", "verdicts", "diff_spectrum", "nuclei", "gamma_rank",
                 "tool_version"],
    "properties": {
        "family": {"type": "string"},
        "parameters": {
            "type": "object",
            "required": ["p"],
            "properties": {
                "p": {"type": "integer"}, "m": {"type": "integer"}, "k": {"type": "integer"},
                "r": {"type": "integer"}, "s": {"type": "integer"}, "i": {"type": "integer"},
                "alpha": {"type": "integer"}, "c": {"type": "integer"},
                "modulus": {"type": "array", "items": {"type": "integer"}},
            },
        },
        "p": {"type": "integer"},
        "n": {"type": "integer"},
        "verdicts": {
            "type": "object",
            "properties": {
                "planar": {"type": ["boolean", "null"]},
                "apn": {"type": ["boolean", "null"]},
                "axioms": {"type": ["object", "null"]},
            },
        },
        "diff_spectrum": {"type": ["object", "null"],
                          "additionalProperties": {"type": "integer"}},
        "nuclei": {
            "type": ["object", "null"],
            "required": ["left", "middle", "right", "nucleus"],
            "properties": {
                "left": {"type": "integer"}, "middle": {"type": "integer"},
                "right": {"type": "integer"}, "nucleus": {"type": "integer"},
                "predicted_middle": {"type": ["integer", "null"]},
                "predicted_nucleus": {"type": ["integer", "null"]},
            },
        },
        "gamma_rank": {"type": ["integer", "null"]},
        "tool_version": {"type": "string"},
        "timing": {"type": "object"},
    },
}


def write_function_table(f: VecFn, path) -> None:
    lines = [f"PFN 1 p={f.p} n={f.n}"] + [str(int(v)) for v in f.table]
    Path(path).write_text("\n".join(lines) + "\n")


def parse_function_table(text: str) -> VecFn:
    lines = text.split()
    header = " ".join(lines[:4]) if lines else ""
    m = HEADER.match(header)
    if not m:
        raise ValueError(f"bad header {header!r}; expected 'PFN 1 p=<p> n=<n>'")
    p, n = int(m.group(1)), int(m.group(2))
    body = lines[4:]
    if len(body) != p**n:
        raise ValueError(f"expected {p**n} data lines, found {len(body)}")
    return VecFn(p, n, np.array([int(v) for v in body], dtype=np.int64))


def read_function_table(path) -> VecFn:
    return parse_function_table(Path(path).read_text())


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def validate_report(report: dict) -> None:
    import jsonschema

    jsonschema.validate(report, REPORT_SCHEMA)
