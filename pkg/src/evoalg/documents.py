"""The algebra file format.

A document is UTF-8 JSON with exactly these keys:

* ``field``: ``"Q"`` or ``{"prime": p}``
* ``dim``: the dimension n
* ``basis``: optional list of n distinct labels (default ``e1..en``)
* ``squares``: map from basis label to a sparse column, itself a map from
  basis label to a scalar string, giving the coordinates of that basis
  vector's square.  Absent entries are zero; absent columns are zero squares.

Unknown keys are rejected, scalar strings must parse in the declared field,
and scalars serialise back as exact strings.
"""

from __future__ import annotations

import json

from .algebra import EvolutionAlgebra
from .errors import InputError
from .fields import QQ, PrimeField

__all__ = [
    "algebra_from_document",
    "algebra_to_document",
    "dumps_document",
    "load_algebra",
    "parse_field_descriptor",
]

_ALLOWED_KEYS = {"field", "dim", "basis", "squares"}


def parse_field_descriptor(obj):
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"prime"}:
        p = obj["prime"]
        if not isinstance(p, int):
            raise InputError(f"prime modulus must be an integer, got {p!r}")
        return PrimeField(p)
    raise InputError(f'field must be "Q" or {{"prime": p}}, got {obj!r}')


def algebra_from_document(doc) -> EvolutionAlgebra:
    if not isinstance(doc, dict):
        raise InputError("algebra document must be a JSON object")
    unknown = set(doc) - _ALLOWED_KEYS
    if unknown:
        raise InputError(f"unknown document keys: {sorted(unknown)}")
    for key in ("field", "dim", "squares"):
        if key not in doc:
            raise InputError(f"missing document key {key!r}")
    field = parse_field_descriptor(doc["field"])
    n = doc["dim"]
    if not isinstance(n, int) or n < 1:
        raise InputError(f"dim must be a positive integer, got {n!r}")
    labels = doc.get("basis", [f"e{i + 1}" for i in range(n)])
    if (
        not isinstance(labels, list)
        or len(labels) != n
        or len(set(labels)) != n
        or not all(isinstance(x, str) for x in labels)
    ):
        raise InputError(f"basis must list {n} distinct labels")
    index = {lab: i for i, lab in enumerate(labels)}

    squares_doc = doc["squares"]
    if not isinstance(squares_doc, dict):
        raise InputError("squares must map labels to sparse columns")
    squares = [[field.zero] * n for _ in range(n)]
    for lab, column in squares_doc.items():
        if lab not in index:
            raise InputError(f"unknown basis label {lab!r} in squares")
        if not isinstance(column, dict):
            raise InputError(f"square of {lab!r} must map labels to scalars")
        i = index[lab]
        for target, text in column.items():
            if target not in index:
                raise InputError(f"unknown basis label {target!r} in square of {lab!r}")
            if isinstance(text, str):
                value = field.parse(text)
            elif isinstance(text, int):
                value = field.from_int(text)
            else:
                raise InputError(
                    f"scalar for {lab!r} -> {target!r} must be a string, got {text!r}"
                )
            squares[i][index[target]] = value
    return EvolutionAlgebra(field, squares, labels)


def algebra_to_document(algebra) -> dict:
    squares = {}
    for i, row in enumerate(algebra.squares):
        column = {
            algebra.labels[j]: algebra.field.format(x)
            for j, x in enumerate(row)
            if x
        }
        if column:
            squares[algebra.labels[i]] = column
    return {
        "field": algebra.field.json_descriptor(),
        "dim": algebra.n,
        "basis": list(algebra.labels),
        "squares": squares,
    }


def dumps_document(algebra) -> str:
    return json.dumps(algebra_to_document(algebra), indent=2) + "\n"


def load_algebra(path) -> EvolutionAlgebra:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from exc
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from exc
    return algebra_from_document(doc)
