"""CSV and JSON encodings for matrices and sequence tables.

Big values always travel as decimal strings; rationals as "p/q".
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .matrices import IntMatrix, MatrixError


def matrix_to_csv(a: IntMatrix) -> str:
    return "".join(",".join(str(x) for x in r) + "\n" for r in a.rows)


def matrix_from_csv(text: str) -> IntMatrix:
    rows = [[int(x) for x in line.split(",")] for line in text.splitlines() if line.strip()]
    return IntMatrix.from_rows(rows)


def matrix_to_dict(a: IntMatrix) -> dict:
    return {"rows": a.n_rows, "cols": a.n_cols, "entries": [str(x) for x in a.entries]}


def matrix_from_dict(d: dict) -> IntMatrix:
    try:
        return IntMatrix(int(d["rows"]), int(d["cols"]), tuple(int(x) for x in d["entries"]))
    except (KeyError, TypeError) as e:
        raise MatrixError(f"malformed matrix object: {e}") from None


def matrix_to_json(a: IntMatrix) -> str:
    return json.dumps(matrix_to_dict(a))


def matrix_from_json(text: str) -> IntMatrix:
    return matrix_from_dict(json.loads(text))


def format_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(format_value(x) for x in v) + "]"
    return str(v)


def parse_value(text: str):
    """Inverse of format_value for scalars: int when possible, else Fraction."""
    return int(text) if "/" not in text else Fraction(text)


def table_to_csv(pairs: Iterable[tuple[int, object]]) -> str:
    return "index,value\n" + "".join(f"{i},{format_value(v)}\n" for i, v in pairs)


def table_to_json(pairs: Iterable[tuple[int, object]]) -> str:
    return json.dumps([format_value(v) for _, v in pairs])


def triangle_to_csv(rows: Sequence[Sequence[int]]) -> str:
    return "".join(",".join(str(x) for x in r) + "\n" for r in rows)


def triangle_to_json(rows: Sequence[Sequence[int]]) -> str:
    return json.dumps([[str(x) for x in r] for r in rows])
