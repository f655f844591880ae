"""JSON instance files: sets, dense function tables and quadratic forms.

Rationals are written as reduced "p/q" strings (plain integers as "p"),
+inf as null. Function values are listed densely in lexicographic box order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from dca.errors import DCAError, InstanceFormatError
from dca.lattice.function import DiscreteFunction
from dca.lattice.points import IntegerBox, LatticeSet
from dca.lattice.values import INF, format_value, to_extended

KINDS = ("set", "function", "quadratic")


@dataclass(frozen=True)
class QuadraticForm:
    matrix: tuple
    y_block: tuple
    c: tuple | None = None

    @property
    def dim(self) -> int:
        return len(self.matrix)


def _fail(path: str, message: str):
    raise InstanceFormatError(path, message)


def _int(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(path, f"expected an integer, got {value!r}")
    return value


def _rational(value, path):
    if isinstance(value, bool) or isinstance(value, float):
        _fail(path, f"expected an integer or a \"p/q\" string, got {value!r}")
    try:
        return to_extended(value)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        _fail(path, f"bad rational {value!r}: {e}")


def _finite(value, path):
    v = _rational(value, path)
    if v is INF:
        _fail(path, "matrix entries must be finite")
    return v


def _list(value, path, length=None):
    if not isinstance(value, list):
        _fail(path, f"expected a list, got {type(value).__name__}")
    if length is not None and len(value) != length:
        _fail(path, f"expected {length} entries, got {len(value)}")
    return value


def _point(value, path, dim):
    return tuple(_int(c, f"{path}[{i}]") for i, c in enumerate(_list(value, path, dim)))


def parse_instance(data):
    """dict -> LatticeSet | DiscreteFunction | QuadraticForm."""
    if not isinstance(data, dict):
        _fail("$", "top level must be an object")
    kind = data.get("kind")
    if kind not in KINDS:
        _fail("$.kind", f"expected one of {KINDS}, got {kind!r}")
    dim = _int(data.get("dim"), "$.dim")
    if dim < 1:
        _fail("$.dim", "dimension must be at least 1")

    try:
        if kind == "set":
            points = _list(data.get("points"), "$.points")
            if not points:
                _fail("$.points", "a set needs at least one point")
            return LatticeSet(dim, frozenset(_point(p, f"$.points[{i}]", dim) for i, p in enumerate(points)))

        if kind == "function":
            box_data = data.get("box")
            if not isinstance(box_data, dict):
                _fail("$.box", "expected an object with lo and hi")
            box = IntegerBox(_point(box_data.get("lo"), "$.box.lo", dim), _point(box_data.get("hi"), "$.box.hi", dim))
            values = _list(data.get("values"), "$.values", box.size)
            table = {x: _rational(v, f"$.values[{i}]") for i, (x, v) in enumerate(zip(box, values))}
            return DiscreteFunction(box, table)

        rows = _list(data.get("matrix"), "$.matrix", dim)
        matrix = tuple(
            tuple(_finite(v, f"$.matrix[{i}][{j}]") for j, v in enumerate(_list(row, f"$.matrix[{i}]", dim)))
            for i, row in enumerate(rows))
        y_block = tuple(_int(i, f"$.y_block[{k}]") for k, i in enumerate(_list(data.get("y_block", list(range(dim))), "$.y_block")))
        c = data.get("c")
        if c is not None:
            c = tuple(_finite(v, f"$.c[{i}]") for i, v in enumerate(_list(c, "$.c", dim)))
        return QuadraticForm(matrix, y_block, c)
    except InstanceFormatError:
        raise
    except DCAError as e:
        _fail("$", str(e))


def serialize_instance(obj) -> dict:
    if isinstance(obj, LatticeSet):
        return {"kind": "set", "dim": obj.dim, "points": [list(p) for p in obj.sorted()]}
    if isinstance(obj, DiscreteFunction):
        return {
            "kind": "function",
            "dim": obj.dim,
            "box": {"lo": list(obj.box.lo), "hi": list(obj.box.hi)},
            "values": [format_value(obj(x)) for x in obj.box],
        }
    if isinstance(obj, QuadraticForm):
        data = {
            "kind": "quadratic",
            "dim": obj.dim,
            "matrix": [[format_value(Fraction(v)) for v in row] for row in obj.matrix],
            "y_block": list(obj.y_block),
        }
        if obj.c is not None:
            data["c"] = [format_value(Fraction(v)) for v in obj.c]
        return data
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def loads_instance(text: str, source: str = "<string>"):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(f"{source}: line {e.lineno} column {e.colno}", e.msg) from None
    try:
        return parse_instance(data)
    except InstanceFormatError as e:
        raise InstanceFormatError(f"{source}: {e.location}", e.message) from None


def load_instance(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InstanceFormatError(str(path), f"cannot read file: {e.strerror}") from None
    return loads_instance(text, str(path))


def dumps_instance(obj) -> str:
    return json.dumps(serialize_instance(obj), indent=2, sort_keys=True) + "\n"
