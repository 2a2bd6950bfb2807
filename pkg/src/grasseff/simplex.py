"""Exact rational LP feasibility for conic combinations.

Decides whether a target vector is a nonnegative combination of given
generators, by a phase-1 simplex over Fraction with Bland's anti-cycling
rule. Failure comes with a Farkas certificate: a functional nonnegative on
every generator and strictly negative on the target. Exactly one of witness
or certificate is produced, and both are re-verified by substitution before
being returned.
"""

from __future__ import annotations

from fractions import Fraction


class SimplexError(RuntimeError):
    pass


def _to_frac(v):
    return [x if isinstance(x, Fraction) else Fraction(x) for x in v]


def solve_nonneg_combination(generators, target):
    """Find x >= 0 with sum x_i g_i = target, or a separating functional.

    Returns ("witness", [x_i]) or ("certificate", [phi_j]).
    """
    gens = [_to_frac(g) for g in generators]
    b = _to_frac(target)
    dim = len(b)
    if any(len(g) != dim for g in gens):
        raise SimplexError("dimension mismatch")
    n = len(gens)

    # rows of A are coordinates, columns 0..n-1 the generators
    A = [[gens[j][i] for j in range(n)] for i in range(dim)]
    flips = [False] * dim
    for i in range(dim):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
            flips[i] = True

    # phase-1 tableau: columns [generators | artificials], minimize sum of artificials
    ncols = n + dim
    tab = [A[i] + [Fraction(1) if j == i else Fraction(0) for j in range(dim)] + [b[i]]
           for i in range(dim)]
    basis = [n + i for i in range(dim)]
    cost = [Fraction(0)] * (ncols + 1)
    # reduced costs c_j - z_j for c = (0,...,0,1,...,1)
    for j in range(ncols):
        cj = Fraction(1) if j >= n else Fraction(0)
        cost[j] = cj - sum(tab[i][j] for i in range(dim))
    cost[ncols] = -sum(row[ncols] for row in tab)

    def pivot(r, c):
        inv = Fraction(1) / tab[r][c]
        tab[r] = [x * inv for x in tab[r]]
        for i in range(dim):
            if i != r and tab[i][c] != 0:
                f = tab[i][c]
                tab[i] = [a - f * p for a, p in zip(tab[i], tab[r])]
        if cost[c] != 0:
            f = cost[c]
            for j in range(ncols + 1):
                cost[j] -= f * tab[r][j]
        basis[r] = c

    while True:
        entering = next((j for j in range(ncols) if cost[j] < 0), None)
        if entering is None:
            break
        ratios = [(tab[i][ncols] / tab[i][entering], basis[i], i)
                  for i in range(dim) if tab[i][entering] > 0]
        if not ratios:
            raise SimplexError("phase-1 problem unbounded; should be impossible")
        _, _, leaving = min(ratios)  # Bland: lowest basis index among min ratios
        pivot(leaving, entering)

    objective = -cost[ncols]
    if objective == 0:
        # drive any degenerate artificials out of the basis
        for i in range(dim):
            if basis[i] >= n:
                c = next((j for j in range(n) if tab[i][j] != 0), None)
                if c is not None:
                    pivot(i, c)
        x = [Fraction(0)] * n
        for i in range(dim):
            if basis[i] < n:
                x[basis[i]] = tab[i][ncols]
        _check_witness(gens, _to_frac(target), x)
        return "witness", x

    # Farkas certificate from the dual values y_r = 1 - (reduced cost of artificial r)
    y = [Fraction(1) - cost[n + r] for r in range(dim)]
    phi = [-y[i] if not flips[i] else y[i] for i in range(dim)]
    _check_certificate(gens, _to_frac(target), phi)
    return "certificate", phi


def _check_witness(gens, target, x):
    for i in range(len(target)):
        if sum(xj * g[i] for xj, g in zip(x, gens)) != target[i]:
            raise SimplexError("internal: witness fails substitution")
    if any(xj < 0 for xj in x):
        raise SimplexError("internal: witness has a negative coefficient")


def _check_certificate(gens, target, phi):
    for g in gens:
        if sum(p * gi for p, gi in zip(phi, g)) < 0:
            raise SimplexError("internal: certificate negative on a generator")
    if sum(p * t for p, t in zip(phi, target)) >= 0:
        raise SimplexError("internal: certificate not separating")
