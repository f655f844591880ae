"""Named transforms for ``dca transform``: each reads instances and returns a document."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import click

from dca.cli.instances import serialize_instance
from dca.cli.reporting import combination_json, to_jsonable
from dca.errors import UnknownNameError
from dca.ops import (
    SegmentBox,
    add_functions,
    conjugate,
    convolve,
    extend_with_penalty,
    minimize_via_projection,
    minkowski_sum,
    penalty_distance,
    project_fn,
    project_set,
    segment_sum_certificate,
)

logger = logging.getLogger("dca.cli")


@dataclass(frozen=True)
class Transform:
    name: str
    inputs: tuple  # instance kinds, one per file
    run: Callable  # (objects, options) -> JSON document
    needs: tuple = ()  # required options


def _require(options, name, key):
    if options.get(key) is None:
        raise click.UsageError(f"transform {name} needs --{key.replace('_', '-')}")
    return options[key]


def _extend(objs, o):
    result = extend_with_penalty(objs[0], o["kind"], o["a"], o["box"])
    logger.info(f"extension agrees with f on dom f for a >= {result.threshold}")
    document = serialize_instance(result.function)
    document["threshold"] = to_jsonable(result.threshold)
    return document


def _minimize(objs, o):
    point, value = minimize_via_projection(objs[0], o["keep"])
    return {"kind": "minimum", "point": list(point), "value": to_jsonable(value)}


def _segment_certificate(objs, o):
    segment = SegmentBox(o["axis"], o["lo"], o["hi"])
    combo = segment_sum_certificate(objs[0], segment, o["point"])
    return {"kind": "certificate", "segment": {"axis": segment.axis, "lo": segment.lo, "hi": segment.hi},
            **combination_json(combo)}


TRANSFORMS = {
    t.name: t
    for t in (
        Transform("project-set", ("set",), lambda objs, o: serialize_instance(project_set(objs[0], o["keep"])), ("keep",)),
        Transform("project-fn", ("function",), lambda objs, o: serialize_instance(project_fn(objs[0], o["keep"])), ("keep",)),
        Transform("minkowski", ("set", "set"), lambda objs, o: serialize_instance(minkowski_sum(*objs))),
        Transform("convolve", ("function", "function"), lambda objs, o: serialize_instance(convolve(*objs))),
        Transform("conjugate", ("function",), lambda objs, o: serialize_instance(conjugate(objs[0], o["box"])), ("box",)),
        Transform("penalty", ("set",),
                  lambda objs, o: serialize_instance(penalty_distance(objs[0], o["kind"], o["a"], o["box"])),
                  ("kind", "a", "box")),
        Transform("extend", ("function",), _extend, ("kind", "a", "box")),
        Transform("add", ("function", "function"), lambda objs, o: serialize_instance(add_functions(*objs))),
        Transform("minimize", ("function",), _minimize, ("keep",)),
        Transform("segment-certificate", ("set",), _segment_certificate, ("axis", "lo", "hi", "point")),
    )
}


def get_transform(name: str) -> Transform:
    try:
        return TRANSFORMS[name]
    except KeyError:
        raise UnknownNameError(f"Unsupported transform: {name}; expected one of {sorted(TRANSFORMS)}") from None


def run_transform(name: str, objects, options) -> dict:
    transform = get_transform(name)
    for key in transform.needs:
        _require(options, name, key)
    return transform.run(objects, options)
