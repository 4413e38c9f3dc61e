"""Line-oriented wire formats: one JSON object or CSV record per object.

Configurations travel as {"n_cols": N, "rows": [c_1, ..., c_2N]},
collections as {"family": tag, "n_ambient": N, "sets": [[...], ...]},
polynomials as {"variety": tag, "n_ambient": N, "coeffs_ascending": [...]}.
Histograms are plain value,count CSV. All indices are 1-based to match the
tableau conventions.
"""

from __future__ import annotations

import json
from typing import IO, Iterable

from .configurations import (
    DellacConfiguration,
    MalformedConfiguration,
    validate_configuration,
)
from .flags import Family, IndexCollection, validate_collection
from .poincare import Polynomial

CONFIG_CSV_HEADER = "n_cols,rows"
HISTOGRAM_CSV_HEADER = "value,count"


class ParseError(ValueError):
    """Malformed or invalid serialized object; the message carries the position."""


def _fail(message: str, lineno: int | None) -> None:
    prefix = f"line {lineno}: " if lineno is not None else ""
    raise ParseError(prefix + message)


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _int_list(value, what: str, lineno: int | None) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        _fail(f"{what} must be a list of integers, got {value!r}", lineno)
    return value


# -- configurations ----------------------------------------------------------

def config_to_dict(cfg: DellacConfiguration) -> dict:
    return {"n_cols": cfg.n_cols, "rows": list(cfg.row_to_col)}


def config_from_dict(obj, lineno: int | None = None) -> DellacConfiguration:
    if not isinstance(obj, dict):
        _fail(f"expected an object, got {type(obj).__name__}", lineno)
    unknown = set(obj) - {"n_cols", "rows"}
    if unknown:
        _fail(f"unknown keys {sorted(unknown)}", lineno)
    n_cols = obj.get("n_cols")
    if not isinstance(n_cols, int) or isinstance(n_cols, bool):
        _fail(f"n_cols must be an integer, got {n_cols!r}", lineno)
    rows = _int_list(obj.get("rows"), "rows", lineno)
    cfg = DellacConfiguration(n_cols, tuple(rows))
    try:
        problems = validate_configuration(cfg)
    except MalformedConfiguration as exc:
        _fail(str(exc), lineno)
    if problems:
        _fail("; ".join(problems), lineno)
    return cfg


def config_to_line(cfg: DellacConfiguration) -> str:
    return _compact(config_to_dict(cfg))


def config_from_line(line: str, lineno: int | None = None) -> DellacConfiguration:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        _fail(f"invalid JSON ({exc.msg} at column {exc.colno})", lineno)
    return config_from_dict(obj, lineno)


def config_to_csv_row(cfg: DellacConfiguration) -> str:
    return f"{cfg.n_cols},{' '.join(map(str, cfg.row_to_col))}"


def config_from_csv_row(row: str, lineno: int | None = None) -> DellacConfiguration:
    head, sep, tail = row.partition(",")
    if not sep:
        _fail("expected 'n_cols,rows'", lineno)
    try:
        n_cols = int(head)
        rows = [int(field) for field in tail.split()]
    except ValueError:
        _fail(f"non-integer field in {row!r}", lineno)
    return config_from_dict({"n_cols": n_cols, "rows": rows}, lineno)


def write_configurations(
    stream: IO[str], cfgs: Iterable[DellacConfiguration], fmt: str = "json"
) -> int:
    """Write one configuration per line; returns the count."""
    count = 0
    if fmt == "json":
        for cfg in cfgs:
            stream.write(config_to_line(cfg) + "\n")
            count += 1
    elif fmt == "csv":
        stream.write(CONFIG_CSV_HEADER + "\n")
        for cfg in cfgs:
            stream.write(config_to_csv_row(cfg) + "\n")
            count += 1
    else:
        raise ValueError(f"unknown configuration format {fmt!r}")
    return count


def read_configurations(stream: IO[str]) -> list[DellacConfiguration]:
    """Read a line-oriented configuration file, JSON lines or CSV
    (recognized by its header)."""
    cfgs = []
    csv_mode = False
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line:
            continue
        if lineno == 1 and line == CONFIG_CSV_HEADER:
            csv_mode = True
            continue
        if csv_mode:
            cfgs.append(config_from_csv_row(line, lineno))
        else:
            cfgs.append(config_from_line(line, lineno))
    return cfgs


# -- collections -------------------------------------------------------------

def collection_to_dict(collection: IndexCollection) -> dict:
    return {
        "family": collection.family.value,
        "n_ambient": collection.n_ambient,
        "sets": collection.as_sorted_lists(),
    }


def collection_from_dict(obj, lineno: int | None = None) -> IndexCollection:
    if not isinstance(obj, dict):
        _fail(f"expected an object, got {type(obj).__name__}", lineno)
    unknown = set(obj) - {"family", "n_ambient", "sets"}
    if unknown:
        _fail(f"unknown keys {sorted(unknown)}", lineno)
    try:
        family = Family.from_tag(obj.get("family"))
    except ValueError as exc:
        _fail(str(exc), lineno)
    n_ambient = obj.get("n_ambient")
    if not isinstance(n_ambient, int) or isinstance(n_ambient, bool):
        _fail(f"n_ambient must be an integer, got {n_ambient!r}", lineno)
    raw_sets = obj.get("sets")
    if not isinstance(raw_sets, list):
        _fail(f"sets must be a list of lists, got {raw_sets!r}", lineno)
    sets = tuple(
        frozenset(_int_list(entry, f"sets[{i}]", lineno))
        for i, entry in enumerate(raw_sets)
    )
    collection = IndexCollection(family, n_ambient, sets)
    try:
        problems = validate_collection(collection)
    except ValueError as exc:
        _fail(str(exc), lineno)
    if problems:
        _fail("; ".join(problems), lineno)
    return collection


def collection_to_line(collection: IndexCollection) -> str:
    return _compact(collection_to_dict(collection))


def collection_from_line(line: str, lineno: int | None = None) -> IndexCollection:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        _fail(f"invalid JSON ({exc.msg} at column {exc.colno})", lineno)
    return collection_from_dict(obj, lineno)


# -- polynomials and histograms ----------------------------------------------

def polynomial_to_dict(family: Family, n_ambient: int, poly: Polynomial) -> dict:
    return {
        "variety": family.value,
        "n_ambient": n_ambient,
        "coeffs_ascending": list(poly.coeffs),
    }


def polynomial_from_dict(obj, lineno: int | None = None) -> tuple[Family, int, Polynomial]:
    if not isinstance(obj, dict):
        _fail(f"expected an object, got {type(obj).__name__}", lineno)
    try:
        family = Family.from_tag(obj.get("variety"))
    except ValueError as exc:
        _fail(str(exc), lineno)
    n_ambient = obj.get("n_ambient")
    coeffs = _int_list(obj.get("coeffs_ascending"), "coeffs_ascending", lineno)
    try:
        poly = Polynomial(tuple(coeffs))
    except ValueError as exc:
        _fail(str(exc), lineno)
    return family, n_ambient, poly


def histogram_to_csv_lines(counts: dict[int, int]) -> list[str]:
    lines = [HISTOGRAM_CSV_HEADER]
    lines.extend(f"{value},{counts[value]}" for value in sorted(counts))
    return lines
