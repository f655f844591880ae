from __future__ import annotations

import logging

from dca.checks.integral import check_fn_integrally_convex
from dca.checks.midpoint import check_fn_lnat, check_fn_midpoint
from dca.checks.structure import check_fn_separable
from dca.errors import InconsistentChainError
from dca.lattice.function import DiscreteFunction

logger = logging.getLogger("dca.checks")

# strongest first; each class is contained in the next
CHAIN = (
    ("separable", check_fn_separable),
    ("lnat", check_fn_lnat),
    ("global-dmc", lambda f: check_fn_midpoint(f, "global")),
    ("local-dmc", lambda f: check_fn_midpoint(f, "local")),
    ("integrally-convex", check_fn_integrally_convex),
)


def classify_chain(f: DiscreteFunction) -> list:
    """[(class name, CheckReport)] from strongest to weakest class."""
    results = [(name, check(f)) for name, check in CHAIN]
    verdicts = [report.verdict for _, report in results]
    for i, (name, report) in enumerate(results):
        if not report:
            continue
        broken = [results[j][0] for j in range(i + 1, len(results)) if not verdicts[j]]
        if broken:
            logger.error(f"chain inconsistency: {name} accepted but {broken} rejected")
            raise InconsistentChainError(f"{name} holds but the weaker {', '.join(broken)} fails")
    return results
