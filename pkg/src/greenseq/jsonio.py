"""
JSON readers shared by the command line tools.

Module entries in sequence files may be a module name from the enumerated
indecomposables (``"S1"``, ``"1>2"``), a string spec ``{"walk": [...], "start": i}``
or an explicit module ``{"dims": [...], "arrows": {...}}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .paths import PLPath
from .quivercore import Quiver
from .repmod import (
    Representation,
    StringSpec,
    default_pool,
    representation_from_dict,
    string_module,
)


def read_json(path) -> object:
    return json.loads(Path(path).read_text())


def load_quiver(path) -> Quiver:
    return Quiver.from_dict(read_json(path))


def module_from_entry(q: Quiver, entry, max_dim: int = 8) -> Representation:
    if isinstance(entry, str):
        return default_pool(q, max_dim).by_name(entry)
    if "walk" in entry:
        return string_module(q, StringSpec.from_dict(q, entry))
    return representation_from_dict(q, entry)


def load_module(q: Quiver, path) -> Representation:
    return module_from_entry(q, read_json(path))


def load_sequence(q: Quiver, path) -> list[Representation]:
    data = read_json(path)
    if isinstance(data, dict):
        data = data.get("sequence", data.get("modules"))
    return [module_from_entry(q, e) for e in data]


def load_path(path) -> PLPath:
    return PLPath.from_dict(read_json(path))


def parse_b(spec: str, q: Quiver) -> tuple:
    """``classical`` (valuations), ``ones``, or comma-separated rationals."""
    if spec == "classical":
        return tuple(Fraction(v) for v in q.valuations)
    if spec == "ones":
        return tuple(Fraction(1) for _ in range(q.n))
    return tuple(Fraction(x) for x in spec.split(","))


def jsonable(x):
    """Convert Fractions (and nested containers of them) to strings for JSON output."""
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, (list, tuple)):
        return [jsonable(y) for y in x]
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    if hasattr(x, "p") and hasattr(x, "r"):
        return str(x)
    return x
