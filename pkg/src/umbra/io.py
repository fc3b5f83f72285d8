"""Parsing and rendering of exact values for files and command-line arguments."""

from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any

from .symtensor import SiteSpace


def frac(text) -> Fraction:
    return Fraction(str(text).strip())


def render(x) -> str:
    return str(Fraction(x))


def _read_source(text: str) -> str:
    """A value given inline or as a path to a file holding it."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            return fh.read()
    return text


def parse_fraction_list(text: str) -> list[Fraction]:
    """``"2,1/2,-3"``, a JSON list, or a file containing either."""
    raw = _read_source(text).strip()
    if raw.startswith("["):
        try:
            return [frac(v) for v in json.loads(raw)]
        except json.JSONDecodeError:
            # bare p/q entries are not valid JSON
            raw = raw.strip("[]")
    if raw.startswith("{"):
        obj = json.loads(raw)
        if "coeffs" in obj:
            return [frac(v) for v in obj["coeffs"]]
        raise ValueError("expected a list of fractions")
    if not raw:
        return []
    return [frac(v) for v in raw.replace("\n", ",").split(",") if v.strip()]


def parse_int_list(text: str) -> list[int]:
    out = []
    for v in parse_fraction_list(text):
        if v.denominator != 1:
            raise ValueError(f"expected an integer, got {v}")
        out.append(int(v))
    return out


def load_json(text: str) -> Any:
    return json.loads(_read_source(text))


def parse_sites(text: str | None, m: int | None = None) -> SiteSpace:
    """Sites from ``{"m": .., "weights": [..]}``, a weight list, or just a count."""
    if text is None:
        return SiteSpace(m or 1)
    raw = _read_source(text).strip()
    if raw.startswith("{"):
        obj = json.loads(raw)
        weights = tuple(frac(w) for w in obj.get("weights", ()))
        return SiteSpace(int(obj.get("m", len(weights))), weights)
    weights = tuple(parse_fraction_list(raw))
    if len(weights) == 1 and m is None and weights[0].denominator == 1 and "," not in raw and not os.path.isfile(text):
        # a bare integer is a site count with unit weights
        return SiteSpace(int(weights[0]))
    return SiteSpace(len(weights), weights)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def csv_line(values) -> str:
    return ",".join(render(v) for v in values)
