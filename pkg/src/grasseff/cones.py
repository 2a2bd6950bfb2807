"""Polyhedral cone toolkit and the constructive decomposition procedures.

Covers: exact membership with dual certificates, the two-point divisor cone
on G(k, 2k), the inductive span decompositions for blow-up classes, the
quadric curve-cone reduction for blow-ups of G(2, 4) at up to 7 points, the
three-cycle reduction on G(2, 5) for up to 4 points, and the r = 3 class on
G(2, 4) that leaves the span of the Schubert classes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from grasseff import chow
from grasseff.blowup import BlowupClass, BlowupCtx, blow_class
from grasseff.chow import GrassCtx
from grasseff.simplex import solve_nonneg_combination


class ConeError(ValueError):
    pass


class DecompositionError(ConeError):
    """Raised when a constructive decomposition's inequality precondition fails."""


@dataclass(frozen=True)
class ConeSpec:
    """A cone given by generators over a labeled rational basis."""

    dim: int
    basis_labels: tuple[str, ...]
    labels: tuple[str, ...]
    generators: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def build(dim, basis_labels, labeled_generators) -> "ConeSpec":
        seen = {}
        for label, vec in labeled_generators:
            vec = tuple(Fraction(x) for x in vec)
            if len(vec) != dim:
                raise ConeError("generator %s has wrong dimension" % label)
            if vec not in seen:
                seen[vec] = label
        items = list(seen.items())
        return ConeSpec(dim, tuple(basis_labels),
                        tuple(lbl for _, lbl in items),
                        tuple(vec for vec, _ in items))


@dataclass(frozen=True)
class MembershipResult:
    verdict: str  # "in-span" or "not-in-span"
    witness: tuple | None          # coefficients per generator, summing to the query
    certificate: tuple | None      # functional >= 0 on generators, < 0 on the query

    @property
    def is_member(self) -> bool:
        return self.verdict == "in-span"


def cone_membership(cone: ConeSpec, v) -> MembershipResult:
    """Exact LP feasibility with a Farkas certificate on failure."""
    v = tuple(Fraction(x) for x in v)
    if len(v) != cone.dim:
        raise ConeError("vector has dimension %d, cone has %d" % (len(v), cone.dim))
    kind, data = solve_nonneg_combination(cone.generators, v)
    if kind == "witness":
        return MembershipResult("in-span", tuple(data), None)
    return MembershipResult("not-in-span", None, tuple(data))


def facet_normals_3d(cone: ConeSpec) -> list[tuple[int, int, int]]:
    """Facet normals of a full 3-dimensional cone, as primitive integer vectors."""
    if cone.dim != 3:
        raise ConeError("facet enumeration implemented for dimension 3 only")
    gens = cone.generators

    def cross(u, w):
        return (u[1] * w[2] - u[2] * w[1],
                u[2] * w[0] - u[0] * w[2],
                u[0] * w[1] - u[1] * w[0])

    normals = set()
    for u, w in itertools.combinations(gens, 2):
        n = cross(u, w)
        if n == (0, 0, 0):
            continue
        for cand in (n, tuple(-x for x in n)):
            if all(sum(c * g for c, g in zip(cand, gen)) >= 0 for gen in gens):
                on_face = [g for g in gens if sum(c * x for c, x in zip(cand, g)) == 0]
                if len(on_face) >= 2:
                    normals.add(_primitive(cand))
    return sorted(normals)


def _primitive(vec):
    nums = [Fraction(x) for x in vec]
    den = math.lcm(*(f.denominator for f in nums))
    ints = [int(f * den) for f in nums]
    g = math.gcd(*(abs(x) for x in ints))
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# two-point divisor cone on G(k, 2k)

def thm44_generators(k: int) -> ConeSpec:
    """Generators of the divisor cone for two general points on G(k, 2k).

    Basis (H, E_1, E_2); a class aH - b_1 E_1 - b_2 E_2 is the vector
    (a, -b_1, -b_2). Generators: E_1, E_2 and H - m E_1 - (k - m) E_2.
    """
    if k < 2:
        raise ConeError("need k >= 2")
    gens = [("E1", (0, 1, 0)), ("E2", (0, 0, 1))]
    for m in range(k + 1):
        gens.append(("H-%dE1-%dE2" % (m, k - m), (1, -m, -(k - m))))
    return ConeSpec.build(3, ("H", "E1", "E2"), gens)


def lemma41_decompose(k: int, a: int, b1: int, b2: int) -> list[tuple[str, int]]:
    """Write (a, -b1, -b2) as a nonnegative combination of e_i and beta_m.

    beta_m = e_0 - m e_1 - (k - m) e_2. Requires a, b1, b2 >= 0 and
    k*a >= b1 + b2; induction on a, each peel preserving the inequality.
    """
    if k < 1:
        raise ConeError("need k >= 1")
    if a < 0 or b1 < 0 or b2 < 0:
        raise DecompositionError("outside dual-cone region: negative coefficient")
    if k * a < b1 + b2:
        raise DecompositionError("outside dual-cone region: %d*%d < %d + %d" % (k, a, b1, b2))
    terms: dict[str, int] = {}
    r1, r2 = b1, b2
    for _ in range(a):
        m = min(r1, k)
        label = "beta_%d" % m
        terms[label] = terms.get(label, 0) + 1
        r1 -= m
        r2 -= k - m
    # the peels remove k from (b1 + b2) each round, so both residuals end <= 0
    if r1 > 0 or r2 > 0:
        raise ConeError("internal: greedy peel left positive residual")
    if r1 < 0:
        terms["e1"] = -r1
    if r2 < 0:
        terms["e2"] = -r2
    return sorted(terms.items())


def lemma41_vector(k: int, label: str) -> tuple[int, int, int]:
    """Coordinate vector of a lemma41 generator label in the (e0, e1, e2) basis."""
    if label == "e0":
        return (1, 0, 0)
    if label == "e1":
        return (0, 1, 0)
    if label == "e2":
        return (0, 0, 1)
    if label.startswith("beta_"):
        m = int(label.split("_")[1])
        return (1, -m, -(k - m))
    raise ConeError("unknown label %r" % label)


# ---------------------------------------------------------------------------
# span decomposition for blow-up classes

def lemma42_decompose(c: BlowupClass) -> list[tuple[tuple, object]]:
    """Decompose c into sigma_lam - E_i, E_i and bare sigma_lam terms.

    Requires a_lam >= 0, b_i >= 0 and sum a_lam >= sum b_i. Induction on the
    number of points: at each step the coefficients a'_lam with total b_r are
    drawn greedily from the largest a_lam.

    Term keys: ("sigma-E", lam, i), ("E", i), ("sigma", lam).
    """
    coeffs = dict(c.ambient.coeffs)
    if any(v < 0 for v in coeffs.values()):
        raise DecompositionError("ambient coefficients must be nonnegative")
    bs = list(c.exc)
    if any(b < 0 for b in bs):
        raise DecompositionError("exceptional coefficients must be nonnegative")
    total_a, total_b = sum(coeffs.values()), sum(bs)
    if total_a < total_b:
        raise DecompositionError("sum of ambient coefficients falls short by %s"
                                 % (total_b - total_a))
    out: dict[tuple, object] = {}
    for i in range(len(bs) - 1, -1, -1):
        need = bs[i]
        while need > 0:
            lam = max(coeffs, key=lambda l: (coeffs[l], l.parts))
            take = min(coeffs[lam], need)
            key = ("sigma-E", lam, i)
            out[key] = out.get(key, 0) + take
            coeffs[lam] -= take
            if coeffs[lam] == 0:
                del coeffs[lam]
            need -= take
    for lam, v in coeffs.items():
        if v != 0:
            out[("sigma", lam)] = v
    return sorted(out.items(), key=lambda t: repr(t[0]))


def lemma42_term_class(bctx: BlowupCtx, grading: str, m: int, key: tuple) -> BlowupClass:
    """The BlowupClass a lemma42 term key denotes."""
    ctx = bctx.ctx
    codim = m if grading == "codim" else ctx.dim - m
    zero_amb = chow.zero(ctx, codim)
    if key[0] == "sigma":
        return BlowupClass(bctx, grading, m, chow.ChowClass(ctx, codim, {key[1]: 1}),
                           tuple([0] * bctx.r))
    if key[0] == "E":
        exc = [0] * bctx.r
        exc[key[1]] = -1
        return BlowupClass(bctx, grading, m, zero_amb, tuple(exc))
    if key[0] == "sigma-E":
        exc = [0] * bctx.r
        exc[key[2]] = 1
        return BlowupClass(bctx, grading, m, chow.ChowClass(ctx, codim, {key[1]: 1}),
                           tuple(exc))
    raise ConeError("unknown term key %r" % (key,))


# ---------------------------------------------------------------------------
# S-generation bounds

def sgen_bound(ctx: GrassCtx, cycle_dim: int) -> int:
    """Largest r for which the dimension-1 or -2 cone is known span-generated.

    Base bound binom(n, k) - k(n-k); curves gain one more point when the
    Plucker degree is at least base + 1.
    """
    if cycle_dim not in (1, 2):
        raise ConeError("cycle_dim must be 1 or 2")
    base = math.comb(ctx.n, ctx.k) - ctx.dim
    if cycle_dim == 1 and chow.degree(ctx) >= base + 1:
        return base + 1
    return base


def very_general_curve_bound(ctx: GrassCtx) -> int:
    """Sharp curve bound for very general points: the Plucker degree."""
    return chow.degree(ctx)


# ---------------------------------------------------------------------------
# quadric curve decomposition (blow-ups of G(2,4) at r <= 7 points)

def _violated_inequality(a: int, bs: list[int], r: int):
    """Name an inequality of the applicable family violated by (a, bs), if any."""
    pos = [max(b, 0) for b in bs]
    if r <= 6:
        for i, j in itertools.combinations(range(r), 2):
            rest = sum(pos[t] for t in range(r) if t not in (i, j))
            if 2 * a < 2 * pos[i] + 2 * pos[j] + rest:
                return "2a >= 2b_%d + 2b_%d + sum of the rest (2*%d < %d)" % (
                    i + 1, j + 1, a, 2 * pos[i] + 2 * pos[j] + rest)
        return None
    for subset in itertools.combinations(range(r), 5):
        s = sum(pos[t] for t in subset)
        if a < s:
            return "a >= b_%s (%d < %d)" % ("+b_".join(str(t + 1) for t in subset), a, s)
    return None


def quadric_curve_decompose(a: int, bs) -> dict[tuple, int]:
    """Decompose a*l - sum b_i l_i into lines, conics and exceptional lines.

    Conics 2l - l_i - l_j - l_k are subtracted greedily on the three largest
    current coefficients, at most floor(a/2) times, until the residual has
    a' >= sum of its positive coefficients; the residual is then lines.
    Negative coefficients (given or produced) are absorbed by l_i terms.

    Term keys: ("ell",), ("ell_i", i), ("line", i) for l - l_i,
    ("conic", i, j, k).
    """
    bs = list(bs)
    r = len(bs)
    if r > 7:
        raise ConeError("at most 7 points supported")
    if a < 0:
        raise DecompositionError("negative line coefficient")
    out: dict[tuple, int] = {}
    cur = [b for b in bs]
    limit = a // 2
    used = 0
    cur_a = a

    # keep peeling conics while three positive coefficients remain
    while sum(1 for b in cur if b > 0) >= 3 and used < limit and cur_a >= 2:
        order = sorted(range(r), key=lambda i: (-cur[i], i))
        i, j, k = sorted(order[:3])
        key = ("conic", i, j, k)
        out[key] = out.get(key, 0) + 1
        for t in (i, j, k):
            cur[t] -= 1
        cur_a -= 2
        used += 1

    if sum(max(b, 0) for b in cur) > cur_a:
        name = _violated_inequality(a, bs, r)
        if name is None:
            raise ConeError("internal: greedy stalled although the inequality family holds")
        raise DecompositionError("violated inequality: " + name)

    for i, b in enumerate(cur):
        if b > 0:
            out[("line", i)] = out.get(("line", i), 0) + b
            cur_a -= b
        elif b < 0:
            out[("ell_i", i)] = out.get(("ell_i", i), 0) - b
    if cur_a > 0:
        out[("ell",)] = cur_a
    return out


def quadric_term_vector(key: tuple, r: int) -> tuple:
    """Coordinates (a, b_1..b_r) of a quadric decomposition term, b as stored."""
    a, bs = 0, [0] * r
    if key[0] == "ell":
        a = 1
    elif key[0] == "ell_i":
        bs[key[1]] = -1
    elif key[0] == "line":
        a, bs[key[1]] = 1, 1
    elif key[0] == "conic":
        a = 2
        for t in key[1:]:
            bs[t] = 1
    else:
        raise ConeError("unknown term key %r" % (key,))
    return (a, *bs)


def quadric_resum(terms: dict[tuple, int], r: int) -> tuple:
    total = [0] * (r + 1)
    for key, c in terms.items():
        vec = quadric_term_vector(key, r)
        total = [t + c * v for t, v in zip(total, vec)]
    return tuple(total)


# ---------------------------------------------------------------------------
# three-cycles on G(2,5) blown up at r <= 4 points

def g25_threecycle_decompose(a21: int, a3: int, bs) -> dict[tuple, int]:
    """Decompose a21*s21 + a3*s3 - sum b_i E_i (3-cycles on blown-up G(2,5)).

    Requires everything nonnegative, at most 4 points, and the inequality
    2*a21 + a3 >= sum b_i. Peels s21 - 2E_i off the largest coefficient,
    handles odd remainders with s21 - E_i - E_j, then falls back to s3 - E_i.

    Term keys: ("s21-2E", i), ("s21-E-E", i, j), ("s3-E", i),
    ("s21",), ("s3",), ("E", i).
    """
    bs = list(bs)
    r = len(bs)
    if r > 4:
        raise ConeError("at most 4 points supported")
    if a21 < 0 or a3 < 0 or any(b < 0 for b in bs):
        raise DecompositionError("coefficients must be nonnegative")
    if 2 * a21 + a3 < sum(bs):
        raise DecompositionError("violated inequality: 2a_21 + a_3 >= sum b_i (%d < %d)"
                                 % (2 * a21 + a3, sum(bs)))
    out: dict[tuple, int] = {}

    def bump(key, c=1):
        out[key] = out.get(key, 0) + c

    while any(b > 0 for b in bs):
        i1 = max(range(r), key=lambda i: (bs[i], -i))
        b1 = bs[i1]
        if b1 >= 2 and 2 * a21 >= b1:
            q = b1 // 2
            bump(("s21-2E", i1), q)
            a21 -= q
            bs[i1] -= 2 * q
        elif b1 >= 2:  # 2*a21 < b1: exhaust s21 against this point, then use s3
            if a21 > 0:
                bump(("s21-2E", i1), a21)
                bs[i1] -= 2 * a21
                a21 = 0
            bump(("s3-E", i1), bs[i1])
            a3 -= bs[i1]
            bs[i1] = 0
        else:  # b1 == 1
            others = [i for i in range(r) if i != i1 and bs[i] > 0]
            if a21 > 0 and others:
                i2 = min(others)
                bump(("s21-E-E", min(i1, i2), max(i1, i2)))
                a21 -= 1
                bs[i1] -= 1
                bs[i2] -= 1
            elif a3 > 0:
                bump(("s3-E", i1))
                a3 -= 1
                bs[i1] -= 1
            else:  # a3 == 0: overshoot with s21 - 2E and return the spare E
                bump(("s21-2E", i1))
                bump(("E", i1))
                a21 -= 1
                bs[i1] -= 1
        if a21 < 0 or a3 < 0:
            raise ConeError("internal: greedy drove a coefficient negative")
    if a21 > 0:
        bump(("s21",), a21)
    if a3 > 0:
        bump(("s3",), a3)
    return out


def g25_term_vector(key: tuple, r: int) -> tuple:
    """Coordinates (a21, a3, b_1..b_r) of a g25 decomposition term."""
    a21 = a3 = 0
    bs = [0] * r
    kind = key[0]
    if kind == "s21":
        a21 = 1
    elif kind == "s3":
        a3 = 1
    elif kind == "E":
        bs[key[1]] = -1
    elif kind == "s21-2E":
        a21, bs[key[1]] = 1, 2
    elif kind == "s21-E-E":
        a21 = 1
        bs[key[1]], bs[key[2]] = 1, 1
    elif kind == "s3-E":
        a3, bs[key[1]] = 1, 1
    else:
        raise ConeError("unknown term key %r" % (key,))
    return (a21, a3, *bs)


def g25_resum(terms: dict[tuple, int], r: int) -> tuple:
    total = [0] * (r + 2)
    for key, c in terms.items():
        vec = g25_term_vector(key, r)
        total = [t + c * v for t, v in zip(total, vec)]
    return tuple(total)


def sgen_cycle_cone(ctx: GrassCtx, cycle_dim: int, r: int) -> ConeSpec:
    """Span of Schubert classes for dimension-1 or -2 cycles on a blow-up at r points.

    Each generating Schubert cycle passes through one general point, so the
    generators are sigma, sigma - E_i, and E_i with unit coefficients.
    """
    if cycle_dim not in (1, 2):
        raise ConeError("cycle_dim must be 1 or 2")
    codim = ctx.dim - cycle_dim
    sigmas = chow.basis(ctx, codim)
    dim = len(sigmas) + r
    gens = []
    for idx, lam in enumerate(sigmas):
        base = [0] * dim
        base[idx] = 1
        gens.append(("s%s" % (lam,), tuple(base)))
        for i in range(r):
            vec = list(base)
            vec[len(sigmas) + i] = -1
            gens.append(("s%s-E%d" % (lam, i + 1), tuple(vec)))
    for i in range(r):
        vec = [0] * dim
        vec[len(sigmas) + i] = 1
        gens.append(("E%d" % (i + 1), tuple(vec)))
    labels = ["s%s" % (lam,) for lam in sigmas] + ["E%d" % (i + 1) for i in range(r)]
    return ConeSpec.build(dim, tuple(labels), gens)


def blowup_cycle_vector(cls: BlowupClass) -> tuple:
    """(a_lam in basis order, -b_1, ..., -b_r) for membership in sgen_cycle_cone."""
    ctx = cls.bctx.ctx
    sigmas = chow.basis(ctx, cls.codim)
    return tuple(cls.ambient.coefficient(lam) for lam in sigmas) \
        + tuple(-b for b in cls.exc)


# ---------------------------------------------------------------------------
# the r = 3 class on G(2,4) outside the span of the Schubert classes

def g24_sgen_cone(r: int) -> ConeSpec:
    """Generators of the span of Schubert classes for 2-cycles on blown-up G(2,4).

    Basis (s2, s11, E_1..E_r); each sigma passes through one general point, so
    sigma - E_i enters with coefficient 1 only.
    """
    dim = 2 + r
    gens = []
    for idx, name in ((0, "s2"), (1, "s11")):
        base = [0] * dim
        base[idx] = 1
        gens.append((name, tuple(base)))
        for i in range(r):
            vec = list(base)
            vec[2 + i] = -1
            gens.append(("%s-E%d" % (name, i + 1), tuple(vec)))
    for i in range(r):
        vec = [0] * dim
        vec[2 + i] = 1
        gens.append(("E%d" % (i + 1), tuple(vec)))
    labels = ["s2", "s11"] + ["E%d" % (i + 1) for i in range(r)]
    return ConeSpec.build(dim, tuple(labels), gens)


def g24_nonspan_witness():
    """The quadric-surface class s2 + s11 - E_1 - E_2 - E_3 and its certificate.

    Returns (BlowupClass, MembershipResult) with a verified separating
    functional against the r = 3 S-generation generators.
    """
    ctx = GrassCtx(2, 4)
    bctx = BlowupCtx(ctx, 3, "general")
    amb = chow.sigma(ctx, (2,)) + chow.sigma(ctx, (1, 1))
    cls = blow_class(bctx, "dim", 2, amb, (1, 1, 1))
    result = cone_membership(g24_sgen_cone(3), (1, 1, -1, -1, -1))
    return cls, result


def g24_class_vector(cls: BlowupClass) -> tuple:
    """(a_2, a_11, -b_1, ..., -b_r) coordinates for the membership cone."""
    ctx = cls.bctx.ctx
    a2 = cls.ambient.coefficient(ctx.partition((2,)))
    a11 = cls.ambient.coefficient(ctx.partition((1, 1)))
    return (a2, a11, *(-b for b in cls.exc))
