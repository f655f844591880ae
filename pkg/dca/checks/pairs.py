import itertools

from dca.lattice.points import linf_distance


def ordered_pairs(points, accept=lambda distance: distance >= 1):
    """Pairs x < y sorted by (||x - y||_inf, x, y); ``accept`` filters on the distance."""
    points = sorted(points)
    keyed = []
    for x, y in itertools.combinations(points, 2):
        distance = linf_distance(x, y)
        if accept(distance):
            keyed.append((distance, x, y))
    keyed.sort()
    return [(x, y) for _, x, y in keyed]


def lex_pairs(points):
    return list(itertools.combinations(sorted(points), 2))
