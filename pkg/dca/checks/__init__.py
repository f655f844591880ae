import random
from dataclasses import dataclass
from typing import Callable

from dca.errors import UnknownNameError

from .chain import CHAIN, classify_chain
from .integral import check_argmin_characterization, check_fn_integrally_convex, random_probes
from .midpoint import check_fn_lnat, check_fn_midpoint, check_parallelogram, midpoint_violation
from .quadratic import QuadraticVerdict, classify_quadratic, diagonally_dominant
from .replay import replay_witness
from .report import WITNESS_KINDS, CheckReport, CheckTimer, ViolationWitness
from .sets import check_set_integrally_convex, check_set_midpoint, find_hole
from .structure import check_fn_separable, check_fn_submodular


@dataclass(frozen=True)
class Check:
    """A named check: the instance kind it reads and how to run it.

    ``run(subject, options)`` returns a list of CheckReports, or a
    QuadraticVerdict for the matrix criteria.
    """

    name: str
    subject: str  # "set", "function" or "quadratic"
    run: Callable


def _argmin(f, options):
    probes = options.get("probe_vectors")
    if probes is None:
        rng = random.Random(options.get("seed", 0))
        probes = random_probes(rng, f.dim, options.get("probes", 20))
    return [check_argmin_characterization(f, probes)]


CHECKS = {
    c.name: c
    for c in (
        Check("integrally-convex-set", "set", lambda s, o: [check_set_integrally_convex(s)]),
        Check("dmc-set", "set", lambda s, o: [check_set_midpoint(s, "dmc")]),
        Check("lnat-set", "set", lambda s, o: [check_set_midpoint(s, "lnat")]),
        Check("integrally-convex-fn", "function", lambda f, o: [check_fn_integrally_convex(f)]),
        Check("midpoint-fn", "function", lambda f, o: [check_fn_midpoint(f, o.get("mode") or "global")]),
        Check("submodular-fn", "function", lambda f, o: [check_fn_submodular(f)]),
        Check("lnat-fn", "function", lambda f, o: [check_fn_lnat(f)]),
        Check("separable-fn", "function", lambda f, o: [check_fn_separable(f)]),
        Check("parallelogram", "function", lambda f, o: [check_parallelogram(f, o.get("mode") or "global")]),
        Check("argmin-ic", "function", _argmin),
        Check("chain", "function", lambda f, o: [report for _, report in classify_chain(f)]),
        Check("quadratic", "quadratic", lambda q, o: classify_quadratic(q.matrix, q.y_block)),
    )
}


def get_check(name: str) -> Check:
    try:
        return CHECKS[name]
    except KeyError:
        raise UnknownNameError(f"Unsupported check: {name}; expected one of {sorted(CHECKS)}") from None
