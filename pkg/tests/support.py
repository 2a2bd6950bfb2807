"""Shared brute-force oracles for the test suite."""

from functools import lru_cache


@lru_cache(maxsize=None)
def _search(a: int, pos: tuple) -> bool:
    """Can a*l - sum pos_i l_i be written in lines, conics and exceptional lines?

    Exhaustive search over conic subtractions; a residual with
    sum of positive coefficients <= a is finished off by lines.
    """
    if sum(pos) <= a:
        return True
    if a < 2 or len(pos) < 3:
        return False
    nxt = set()
    r = len(pos)
    for i in range(r):
        for j in range(i + 1, r):
            for k in range(j + 1, r):
                new = list(pos)
                for t in (i, j, k):
                    new[t] = max(new[t] - 1, 0)
                nxt.add(tuple(sorted(new, reverse=True)))
    return any(_search(a - 2, key) for key in nxt)


def quadric_in_cone(a: int, bs) -> bool:
    """Brute-force membership of a*l - sum b_i l_i in the quadric curve cone."""
    if a < 0:
        return False
    pos = tuple(sorted((max(b, 0) for b in bs), reverse=True))
    return _search(a, pos)
