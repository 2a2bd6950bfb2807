"""The Chow ring of G(k, n): Pieri, Giambelli, duality pairing, Plucker degree.

Products route through the Giambelli determinant and iterated Pieri rather
than Littlewood-Richardson tableaux; correctness is testable by Poincare
duality. All coefficients are Python ints (arbitrary precision).
"""

from __future__ import annotations

import math
import threading
import warnings
from dataclasses import dataclass
from functools import lru_cache

from grasseff.partitions import BoxedPartition, dual, enumerate_box, make_partition


class ChowError(ValueError):
    pass


@dataclass(frozen=True)
class GrassCtx:
    """The Grassmannian G(k, n) of k-planes in an n-dimensional space."""

    k: int
    n: int

    def __post_init__(self):
        if not (self.n > self.k >= 1):
            raise ChowError("need n > k >= 1, got k=%d n=%d" % (self.k, self.n))
        if self.k < 2 or self.w < 2:
            warnings.warn(
                "G(%d,%d) falls outside the standing assumption k >= 2, n-k >= 2"
                % (self.k, self.n),
                stacklevel=2,
            )

    @property
    def w(self) -> int:
        return self.n - self.k

    @property
    def dim(self) -> int:
        return self.k * self.w

    def partition(self, parts) -> BoxedPartition:
        return make_partition(parts, self.k, self.w)

    def point_class_partition(self) -> BoxedPartition:
        return BoxedPartition((self.w,) * self.k, self.k, self.w)

    def line_class_partition(self) -> BoxedPartition:
        """Index of the one-dimensional Schubert class (w, ..., w, w-1)."""
        return BoxedPartition((self.w,) * (self.k - 1) + (self.w - 1,), self.k, self.w)


class ChowClass:
    """A homogeneous integer combination of Schubert classes of one codimension."""

    __slots__ = ("ctx", "codim", "coeffs")

    def __init__(self, ctx: GrassCtx, codim: int, coeffs: dict):
        if not (0 <= codim <= ctx.dim):
            # classes beyond the box are identically zero; normalize to that
            coeffs = {}
        for lam in coeffs:
            if lam.size != codim or lam.box_k != ctx.k or lam.box_w != ctx.w:
                raise ChowError("partition %s does not live in codim %d of G(%d,%d)"
                                % (lam, codim, ctx.k, ctx.n))
        self.ctx = ctx
        self.codim = codim
        self.coeffs = {lam: c for lam, c in coeffs.items() if c != 0}

    def __eq__(self, other):
        return (isinstance(other, ChowClass) and self.ctx == other.ctx
                and self.codim == other.codim and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx, self.codim, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ChowClass") -> "ChowClass":
        if self.ctx != other.ctx or (self.coeffs and other.coeffs and self.codim != other.codim):
            raise ChowError("cannot add classes from different contexts or degrees")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return ChowClass(self.ctx, self.codim if self.coeffs or not other.coeffs else other.codim, out)

    def __neg__(self):
        return ChowClass(self.ctx, self.codim, {l: -c for l, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ChowClass":
        return ChowClass(self.ctx, self.codim, {l: c * v for l, v in self.coeffs.items()})

    def coefficient(self, lam: BoxedPartition):
        return self.coeffs.get(lam, 0)

    def terms_sorted(self):
        """Terms in the canonical (reverse-lexicographic) basis order."""
        return sorted(self.coeffs.items(), key=lambda t: tuple(-p for p in t[0].parts))

    def to_json(self) -> dict:
        return {
            "k": self.ctx.k,
            "n": self.ctx.n,
            "codim": self.codim,
            "terms": [{"lambda": lam.to_json(), "c": c} for lam, c in self.terms_sorted()],
        }

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join("%d*s%s" % (c, lam) for lam, c in self.terms_sorted())


def class_from_json(data: dict) -> ChowClass:
    ctx = GrassCtx(int(data["k"]), int(data["n"]))
    coeffs = {}
    for term in data["terms"]:
        lam = ctx.partition(term["lambda"])
        coeffs[lam] = coeffs.get(lam, 0) + int(term["c"])
    return ChowClass(ctx, int(data["codim"]), coeffs)


def zero(ctx: GrassCtx, codim: int) -> ChowClass:
    return ChowClass(ctx, codim, {})


def unit(ctx: GrassCtx) -> ChowClass:
    return sigma(ctx, ())


def sigma(ctx: GrassCtx, parts) -> ChowClass:
    lam = ctx.partition(parts)
    return ChowClass(ctx, lam.size, {lam: 1})


def pieri(ctx: GrassCtx, special: int, mu: BoxedPartition) -> ChowClass:
    """sigma_special * sigma_mu as the multiplicity-free interlacing sum.

    The sum runs over nu with mu_i <= nu_i <= mu_{i-1} (mu_0 := w) and
    |nu| = special + |mu|.
    """
    if not (0 <= special <= ctx.w):
        raise ChowError("not a special class in this box: size %d > %d" % (special, ctx.w))
    target = special + mu.size
    out = {}
    for nu_parts in _interlacings(mu.parts, ctx.w, special):
        nu = BoxedPartition(nu_parts, ctx.k, ctx.w)
        out[nu] = out.get(nu, 0) + 1
    return ChowClass(ctx, target, out)


def _interlacings(mu: tuple[int, ...], w: int, extra: int):
    """All nu >= mu interlacing mu with |nu| - |mu| = extra."""
    k = len(mu)

    def rec(i, remaining):
        if i == k:
            if remaining == 0:
                yield ()
            return
        cap = w if i == 0 else mu[i - 1]  # nu_i <= mu_{i-1}, mu_0 := w
        hi = min(cap, mu[i] + remaining)
        for nu_i in range(mu[i], hi + 1):
            for rest in rec(i + 1, remaining - (nu_i - mu[i])):
                yield (nu_i,) + rest

    yield from rec(0, extra)


@lru_cache(maxsize=None)
def _giambelli_monomials(parts: tuple[int, ...], w: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Signed monomials of the Giambelli determinant for sigma_parts.

    Entry (i, j) of the k x k matrix is sigma_{parts[i] + j - i}; entries with
    index < 0 or > w are the zero class and prune the expansion. Each monomial
    is a tuple of special sizes with sigma_0 factors dropped.
    """
    k = len(parts)
    out: list[tuple[int, tuple[int, ...]]] = []

    def expand(row, used_cols, sign, mono):
        if row == k:
            out.append((sign, tuple(sorted((m for m in mono if m != 0), reverse=True))))
            return
        for j in range(k):
            if used_cols & (1 << j):
                continue
            entry = parts[row] + j - row
            if entry < 0 or entry > w:
                continue
            # parity of the permutation built column by column
            inversions = bin(used_cols >> (j + 1)).count("1")
            expand(row + 1, used_cols | (1 << j), sign * (-1) ** inversions, mono + (entry,))

    expand(0, 0, 1, ())
    return tuple(out)


def giambelli(lam: BoxedPartition) -> list[tuple[int, tuple[int, ...]]]:
    """Determinant expansion of sigma_lam as signed products of special sizes."""
    return list(_giambelli_monomials(lam.parts, lam.box_w))


# product memo: written under a lock, read freely; entries are immutable
_product_cache: dict = {}
_product_lock = threading.Lock()


def _sigma_product(ctx: GrassCtx, lam: BoxedPartition, mu: BoxedPartition) -> ChowClass:
    key = (ctx.k, ctx.n, lam.parts, mu.parts)
    hit = _product_cache.get(key)
    if hit is not None:
        return hit
    acc: dict[BoxedPartition, int] = {}
    for sign, mono in _giambelli_monomials(lam.parts, ctx.w):
        cur = ChowClass(ctx, mu.size, {mu: 1})
        for size in mono:
            nxt: dict[BoxedPartition, int] = {}
            for nu, c in cur.coeffs.items():
                for rho, d in pieri(ctx, size, nu).coeffs.items():
                    nxt[rho] = nxt.get(rho, 0) + c * d
            cur = ChowClass(ctx, cur.codim + size, nxt)
            if cur.is_zero():
                break
        for nu, c in cur.coeffs.items():
            acc[nu] = acc.get(nu, 0) + sign * c
    result = ChowClass(ctx, lam.size + mu.size, acc)
    with _product_lock:
        _product_cache[key] = result
    return result


def multiply(a: ChowClass, b: ChowClass) -> ChowClass:
    """Bilinear product; classes exceeding the box vanish."""
    if a.ctx != b.ctx:
        raise ChowError("classes live on different Grassmannians")
    codim = a.codim + b.codim
    if codim > a.ctx.dim:
        return zero(a.ctx, codim)
    acc: dict[BoxedPartition, int] = {}
    for lam, c in a.coeffs.items():
        for mu, d in b.coeffs.items():
            for nu, e in _sigma_product(a.ctx, lam, mu).coeffs.items():
                acc[nu] = acc.get(nu, 0) + c * d * e
    return ChowClass(a.ctx, codim, acc)


def pair(a: ChowClass, b: ChowClass) -> int:
    """Coefficient of the point class in a * b; requires complementary degrees."""
    if a.ctx != b.ctx:
        raise ChowError("classes live on different Grassmannians")
    if a.codim + b.codim != a.ctx.dim:
        raise ChowError("degree mismatch: %d + %d != %d" % (a.codim, b.codim, a.ctx.dim))
    return multiply(a, b).coefficient(a.ctx.point_class_partition())


def degree_closed(ctx: GrassCtx) -> int:
    """Plucker degree by the closed factorial formula."""
    num = math.factorial(ctx.dim)
    for i in range(1, ctx.k + 1):
        num *= math.factorial(i - 1)
    den = 1
    for i in range(1, ctx.k + 1):
        den *= math.factorial(ctx.w + i - 1)
    if num % den != 0:
        raise ChowError("internal: degree formula did not divide evenly")
    return num // den


def degree_pieri(ctx: GrassCtx) -> int:
    """Plucker degree as sigma_1^{k(n-k)}, folded one Pieri step at a time."""
    cur = unit(ctx)
    for _ in range(ctx.dim):
        acc: dict[BoxedPartition, int] = {}
        for nu, c in cur.coeffs.items():
            for rho, d in pieri(ctx, 1, nu).coeffs.items():
                acc[rho] = acc.get(rho, 0) + c * d
        cur = ChowClass(ctx, cur.codim + 1, acc)
    return cur.coefficient(ctx.point_class_partition())


def degree(ctx: GrassCtx) -> int:
    """Plucker degree, computed two independent ways; they must agree."""
    d1 = degree_closed(ctx)
    d2 = degree_pieri(ctx)
    if d1 != d2:
        raise ChowError("internal: closed-formula degree %d != iterated-Pieri degree %d" % (d1, d2))
    return d1


def dual_class(ctx: GrassCtx, lam: BoxedPartition) -> BoxedPartition:
    return dual(lam)


def basis(ctx: GrassCtx, codim: int) -> list[BoxedPartition]:
    return enumerate_box(ctx.k, ctx.w, codim)
