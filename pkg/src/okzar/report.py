"""Canonical JSON reports: every coordinate is an exact "p/q" string and every
collection is sorted, so identical inputs render byte-identical output."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .expressions import divisor_label, format_divisor
from .variety import VarietyData, ZariskiChamber, d_coordinates


def fmt_q(x) -> str:
    return str(Fraction(x))


def fmt_vec(v: Sequence) -> list[str]:
    return [fmt_q(x) for x in v]


def fmt_vecs(vs) -> list[list[str]]:
    return [fmt_vec(v) for v in vs]


def render(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def ray_annotation(v: VarietyData, ray: Sequence, level_dim: int) -> str:
    nu = ",".join(fmt_q(x) for x in ray[:level_dim])
    return f"({nu} | {divisor_label(v, ray[level_dim:])})"


def chamber_entry(v: VarietyData, ch: ZariskiChamber) -> dict:
    return {
        "support": list(ch.support),
        "generators": ch.generator_labels(),
        "rays": fmt_vecs(sorted(ch.generators)),
        "ineqs": fmt_vecs(ch.cone.ineqs),
    }


def divisor_entry(v: VarietyData, coords: Sequence, text: str | None = None) -> dict:
    dc = d_coordinates(v, coords)
    entry = {
        "e_coords": fmt_vec(coords),
        "d_coords": fmt_vec(dc),
        "e_expr": format_divisor([Fraction(x) for x in coords], "E"),
        "d_expr": format_divisor(dc, "D"),
        "label": divisor_label(v, coords),
    }
    if text is not None:
        entry["input"] = text
    return entry
