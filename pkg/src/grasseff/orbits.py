"""Orbits of the two-flag triangular group on G(k, 2k) and G(k, 2k+s).

Orbits are indexed by incidence matrices (dimensions of intersections with
the sums F_i + G_j of two transverse partial flags); each realizable matrix
decodes to a distinguished representative spanned by vectors f_i + g_j with
no basis vector reused. Includes exact orbit dimensions via the Lie algebra
stabilizer condition and a finite-field enumeration used as an oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from grasseff.linalg import rank, reduce_mod, rref


class OrbitError(ValueError):
    pass


@dataclass(frozen=True)
class IncidenceMatrix:
    """(k+1) x (k+1) matrix of intersection dimensions, indices 0..k."""

    k: int
    entries: tuple  # tuple of k+1 rows, each a tuple of k+1 ints

    def __post_init__(self):
        k = self.k
        e = self.entries
        if len(e) != k + 1 or any(len(row) != k + 1 for row in e):
            raise OrbitError("expected a %dx%d matrix" % (k + 1, k + 1))
        if e[0][0] != 0:
            raise OrbitError("entry (0,0) must be 0")
        if e[k][k] > k:
            raise OrbitError("entry (k,k) exceeds k")
        for i in range(k + 1):
            for j in range(k + 1):
                if e[i][j] < 0:
                    raise OrbitError("negative entry at (%d,%d)" % (i, j))
                if i > 0 and e[i][j] - e[i - 1][j] not in (0, 1):
                    raise OrbitError("column step at (%d,%d) not 0 or 1" % (i, j))
                if j > 0 and e[i][j] - e[i][j - 1] not in (0, 1):
                    raise OrbitError("row step at (%d,%d) not 0 or 1" % (i, j))

    @property
    def subspace_dim(self) -> int:
        return self.entries[self.k][self.k]

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def to_json(self) -> list:
        return [list(row) for row in self.entries]


@dataclass(frozen=True)
class OrbitRepresentative:
    """Pairs (i, j) meaning the span of the vectors f_i + g_j; index 0 drops the summand."""

    k: int
    pairs: tuple  # canonically sorted tuple of (i, j)

    def __post_init__(self):
        k = self.k
        if tuple(sorted(self.pairs)) != self.pairs:
            raise OrbitError("pairs must be sorted")
        fs, gs = [], []
        for i, j in self.pairs:
            if not (0 <= i <= k and 0 <= j <= k):
                raise OrbitError("pair (%d,%d) out of range" % (i, j))
            if (i, j) == (0, 0):
                raise OrbitError("pair (0,0) denotes the zero vector")
            if i > 0:
                fs.append(i)
            if j > 0:
                gs.append(j)
        if len(set(fs)) != len(fs) or len(set(gs)) != len(gs):
            raise OrbitError("a flag basis vector is reused across pairs")

    @property
    def subspace_dim(self) -> int:
        return len(self.pairs)

    def to_json(self) -> list:
        return [list(p) for p in self.pairs]


def make_representative(k: int, pairs) -> OrbitRepresentative:
    return OrbitRepresentative(k, tuple(sorted(tuple(p) for p in pairs)))


def incidence_of_representative(rep: OrbitRepresentative, k: int | None = None) -> IncidenceMatrix:
    """entry(i,j) = number of pairs with both indices dominated by (i,j)."""
    if k is None:
        k = rep.k
    if k != rep.k:
        raise OrbitError("representative lives in k=%d, asked for k=%d" % (rep.k, k))
    entries = tuple(
        tuple(sum(1 for (a, b) in rep.pairs if a <= i and b <= j) for j in range(k + 1))
        for i in range(k + 1))
    return IncidenceMatrix(k, entries)


def representative_from_incidence(inc: IncidenceMatrix) -> OrbitRepresentative:
    """Greedy peeling: repeatedly take the first nonzero residual entry (row-major).

    Each chosen pair (i,j) removes the rectangle of ones with corners (i,j)
    and (k,k). A residual that goes negative or ends nonzero is not the
    incidence profile of any subspace.
    """
    k = inc.k
    res = [list(row) for row in inc.entries]
    pairs = []
    for _ in range(inc.subspace_dim):
        hit = next(((i, j) for i in range(k + 1) for j in range(k + 1) if res[i][j] != 0), None)
        if hit is None:
            raise OrbitError("invalid incidence profile: residual exhausted early")
        i, j = hit
        pairs.append((i, j))
        for a in range(i, k + 1):
            for b in range(j, k + 1):
                res[a][b] -= 1
                if res[a][b] < 0:
                    raise OrbitError("invalid incidence profile: negative residual at (%d,%d)"
                                     % (a, b))
    if any(x != 0 for row in res for x in row):
        raise OrbitError("invalid incidence profile: nonzero residual after peeling")
    rep = make_representative(k, pairs)
    if incidence_of_representative(rep).entries != inc.entries:
        raise OrbitError("invalid incidence profile: peeling does not reproduce the matrix")
    return rep


def enumerate_orbits(k: int, subspace_dim: int) -> list[OrbitRepresentative]:
    """All orbit representatives of subspace_dim-planes, deduplicated by incidence."""
    if not (0 <= subspace_dim <= k):
        raise OrbitError("need 0 <= subspace_dim <= k")
    candidates = [(i, j) for i in range(k + 1) for j in range(k + 1) if (i, j) != (0, 0)]
    seen = {}
    for combo in itertools.combinations(candidates, subspace_dim):
        fs = [i for i, _ in combo if i > 0]
        gs = [j for _, j in combo if j > 0]
        if len(set(fs)) != len(fs) or len(set(gs)) != len(gs):
            continue
        rep = make_representative(k, combo)
        key = incidence_of_representative(rep).entries
        if key not in seen:
            seen[key] = rep
    return sorted(seen.values(), key=lambda r: r.pairs)


# ---------------------------------------------------------------------------
# orbit dimensions via the Lie algebra stabilizer condition

def _lie_positions(k: int, s: int) -> list[tuple[int, int]]:
    """Free entries of the Lie algebra: two triangular k-blocks, full side
    columns over the last s coordinates, and a triangular s-block."""
    n = 2 * k + s
    pos = []
    for i in range(n):
        for j in range(n):
            if i < k and j < k and i <= j:
                pos.append((i, j))
            elif k <= i < 2 * k and k <= j < 2 * k and i <= j:
                pos.append((i, j))
            elif j >= 2 * k and i < 2 * k:
                pos.append((i, j))
            elif i >= 2 * k and j >= 2 * k and i <= j:
                pos.append((i, j))
    return pos


def group_dimension(k: int, s: int = 0) -> int:
    return len(_lie_positions(k, s))


def _rep_vectors(rep: OrbitRepresentative, n: int) -> list[list[Fraction]]:
    k = rep.k
    vecs = []
    for i, j in rep.pairs:
        v = [Fraction(0)] * n
        if i > 0:
            v[i - 1] = Fraction(1)
        if j > 0:
            v[k + j - 1] = Fraction(1)
        vecs.append(v)
    return vecs


def orbit_dimension(rep: OrbitRepresentative, k: int | None = None, s: int = 0) -> int:
    """dim B - dim Stab_B(W), as the rank of the map X -> (X.w mod W)_w."""
    if k is None:
        k = rep.k
    if k != rep.k:
        raise OrbitError("representative lives in k=%d, asked for k=%d" % (rep.k, k))
    if s < 0:
        raise OrbitError("s must be nonnegative")
    n = 2 * k + s
    basis = _rep_vectors(rep, n)
    basis_r = rref(basis)
    rows = []
    for (i, j) in _lie_positions(k, s):
        # E_ij applied to each spanning vector, reduced modulo the subspace
        row = []
        for w in basis:
            image = [Fraction(0)] * n
            image[i] = w[j]
            row.extend(reduce_mod(image, basis_r))
        rows.append(row)
    return rank(rows)


def dense_orbit_dimension_check(k: int, d: int) -> dict:
    """Compare dim of the d-block triangular group with dim G(k, dk)."""
    if k < 1 or d < 2:
        raise OrbitError("need k >= 1 and d >= 2")
    dim_b = d * k * (k + 1) // 2
    dim_g = (d - 1) * k * k
    if dim_b < dim_g:
        verdict = "no dense orbit possible"
    elif dim_b == dim_g:
        verdict = "boundary case"
    else:
        verdict = "no obstruction"
    return {"k": k, "d": d, "dim_b": dim_b, "dim_g": dim_g, "verdict": verdict}


# ---------------------------------------------------------------------------
# finite-field oracle

def ff_rank(matrix, q: int) -> int:
    """Rank over F_q (q prime) by Gaussian elimination."""
    m = [[x % q for x in row] for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] % q != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], q - 2, q)
        m[r] = [(x * inv) % q for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] % q != 0:
                f = m[i][c]
                m[i] = [(a - f * b) % q for a, b in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def ff_subspaces(n: int, d: int, q: int):
    """All d-dimensional subspaces of F_q^n, one RREF basis matrix each."""
    for pivots in itertools.combinations(range(n), d):
        free = [c for c in range(n)
                if c not in pivots and any(c > p for p in pivots)]
        free_slots = [(r, c) for r in range(d) for c in free if c > pivots[r]]
        for values in itertools.product(range(q), repeat=len(free_slots)):
            m = [[0] * n for _ in range(d)]
            for r, p in enumerate(pivots):
                m[r][p] = 1
            for (r, c), v in zip(free_slots, values):
                m[r][c] = v
            yield m


def ff_incidence(basis, k: int, q: int) -> IncidenceMatrix:
    """Incidence matrix of the row span of basis inside F_q^{2k}."""
    d = len(basis)
    entries = []
    for i in range(k + 1):
        row = []
        for j in range(k + 1):
            # flag vectors: e_0..e_{i-1} for F_i, e_k..e_{k+j-1} for G_j
            stack = [list(b) for b in basis]
            for p in range(i):
                v = [0] * (2 * k)
                v[p] = 1
                stack.append(v)
            for p in range(j):
                v = [0] * (2 * k)
                v[k + p] = 1
                stack.append(v)
            row.append(d + i + j - ff_rank(stack, q))
        entries.append(tuple(row))
    return IncidenceMatrix(k, tuple(entries))


def ff_orbit_counts(k: int, d: int, q: int) -> dict:
    """Map incidence entries -> number of F_q-rational d-planes realizing them."""
    counts: dict = {}
    for basis in ff_subspaces(2 * k, d, q):
        key = ff_incidence(basis, k, q).entries
        counts[key] = counts.get(key, 0) + 1
    return counts


def oracle_check(k: int, d: int, qs=(2, 3)) -> dict:
    """Compare enumerate_orbits against the finite-field enumeration.

    The realized incidence sets must agree across all fields and with the
    combinatorial enumeration; disagreement is reported, not repaired.
    """
    combinatorial = {incidence_of_representative(rep).entries
                     for rep in enumerate_orbits(k, d)}
    per_field = {q: set(ff_orbit_counts(k, d, q)) for q in qs}
    agree = all(per_field[q] == combinatorial for q in qs)
    return {
        "k": k,
        "dim": d,
        "orbit_count": len(combinatorial),
        "fields": sorted(qs),
        "agree": agree,
    }
