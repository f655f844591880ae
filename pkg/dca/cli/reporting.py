"""ReportFile documents: check reports, witnesses and certificates as JSON."""

from __future__ import annotations

import json
from fractions import Fraction

from dca import __version__
from dca.checks.quadratic import QuadraticVerdict
from dca.checks.report import CheckReport, ViolationWitness
from dca.geometry.hull import ConvexCombination, Halfspace
from dca.lattice.values import INF, format_value


def to_jsonable(value):
    if value is INF:
        return None
    if isinstance(value, bool) or isinstance(value, int) or isinstance(value, str) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_value(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return [to_jsonable(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, ConvexCombination):
        return combination_json(value)
    if isinstance(value, Halfspace):
        return {"type": "halfspace", "normal": to_jsonable(value.normal), "offset": to_jsonable(value.offset)}
    raise TypeError(f"cannot encode {type(value).__name__}")


def from_jsonable(value):
    """Inverse of to_jsonable for witness payloads: null is +inf, lists become tuples."""
    if value is None:
        return INF
    if isinstance(value, list):
        return tuple(from_jsonable(v) for v in value)
    if isinstance(value, dict):
        if value.get("type") == "combination":
            return combination_from_json(value)
        if value.get("type") == "halfspace":
            return Halfspace(from_jsonable(value["normal"]), Fraction(value["offset"]))
        return {k: from_jsonable(v) for k, v in value.items()}
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            return value
    return value


def combination_json(combo: ConvexCombination) -> dict:
    return {
        "type": "combination",
        "target": to_jsonable(combo.target),
        "support": [{"point": to_jsonable(p), "weight": format_value(w)} for p, w in combo.support],
    }


def combination_from_json(data) -> ConvexCombination:
    target = tuple(Fraction(c) for c in data["target"])
    support = tuple((tuple(int(Fraction(c)) for c in item["point"]), Fraction(item["weight"]))
                    for item in data["support"])
    return ConvexCombination(target, support)


def witness_json(witness: ViolationWitness) -> dict:
    return {
        "kind": witness.kind,
        "points": to_jsonable(witness.points),
        "values": to_jsonable(witness.values),
        "detail": to_jsonable(witness.detail),
        "info": to_jsonable(witness.info),
    }


def witness_from_json(data) -> ViolationWitness:
    detail = data.get("detail")
    info = from_jsonable(data.get("info") or {})
    return ViolationWitness(
        data["kind"],
        tuple(from_jsonable(p) for p in data["points"]),
        tuple(from_jsonable(v) for v in data.get("values", [])),
        detail=None if detail is None else from_jsonable(detail),
        info=info,
    )


def report_json(report: CheckReport) -> dict:
    return {
        "property": report.property,
        "verdict": report.verdict,
        "witness": None if report.witness is None else witness_json(report.witness),
        "pairs_checked": report.pairs_checked,
        "elapsed": round(report.elapsed, 6),
        "notes": list(report.notes),
    }


def quadratic_json(verdict: QuadraticVerdict) -> dict:
    return {"property": "quadratic", "y_block": list(verdict.y_block), "criteria": verdict.as_dict()}


def report_file(command, reports, extra=None) -> dict:
    """The document written by ``dca check`` and ``dca examples``."""
    data = {
        "tool": "dca",
        "version": __version__,
        "command": list(command),
        "reports": [quadratic_json(r) if isinstance(r, QuadraticVerdict) else report_json(r) for r in reports],
    }
    if extra:
        data.update(extra)
    return data


def dumps(document) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def render_text(reports) -> str:
    lines = []
    for r in reports:
        if isinstance(r, QuadraticVerdict):
            for name, flag in r.as_dict().items():
                lines.append(f"quadratic {name}: {'yes' if flag else 'no'}")
            continue
        lines.append(f"{r.property}: {'true' if r.verdict else 'false'} ({r.pairs_checked} checked)")
        for note in r.notes:
            lines.append(f"  note: {note}")
        if r.witness is not None:
            w = r.witness
            points = ", ".join(str(tuple(format_value(c) for c in p)) for p in w.points)
            values = ", ".join(str(format_value(v)) if v is not INF else "inf" for v in w.values)
            lines.append(f"  witness {w.kind}: {points}" + (f" values [{values}]" if values else ""))
    return "\n".join(lines) + "\n"
