"""Degree-d Fano verification: the blown-up-plane lattice and the null divisors.

Works in the rank-11 lattice with basis {h, e_1..e_N, f_1..f_{10-N}}, N = 9-d,
intersection form diag(1, -1, ..., -1). The distinguished class
D = h - (1/3) sum e_i - sqrt(q') f_1 - sqrt(q) sum_{j>=2} f_j has D^2 = 0
identically in q once q' = (9-N)(1/9 - q); everything is checked in exact
rational / two-radical arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from grasseff.radicals import RadCtx, RadicalNumber


class DelPezzoError(ValueError):
    pass


@dataclass(frozen=True)
class Pic10Class:
    """Coefficients over {h, e_1..e_N, f_1..f_{10-N}}; entries rational or radical."""

    N: int
    h: object
    e: tuple
    f: tuple

    def __post_init__(self):
        if not (1 <= self.N <= 8):
            raise DelPezzoError("N must be between 1 and 8")
        if len(self.e) != self.N or len(self.f) != 10 - self.N:
            raise DelPezzoError("expected %d e's and %d f's" % (self.N, 10 - self.N))


def rational_class(N: int, h=0, e=None, f=None) -> Pic10Class:
    e = tuple(Fraction(x) for x in (e or [0] * N))
    f = tuple(Fraction(x) for x in (f or [0] * (10 - N)))
    return Pic10Class(N, Fraction(h), e, f)


def _mul(x, y):
    # RadicalNumber absorbs Fractions on either side
    if isinstance(x, RadicalNumber) or isinstance(y, RadicalNumber):
        return x * y if isinstance(x, RadicalNumber) else y * x
    return x * y


def intersect(x: Pic10Class, y: Pic10Class):
    """Intersection number under the form h^2 = 1, e_i^2 = f_j^2 = -1."""
    if x.N != y.N:
        raise DelPezzoError("classes live in different lattices")
    total = _mul(x.h, y.h)
    for a, b in zip(x.e, y.e):
        total = total - _mul(a, b)
    for a, b in zip(x.f, y.f):
        total = total - _mul(a, b)
    return total


def qprime_of(N: int, q: Fraction) -> Fraction:
    return (9 - N) * (Fraction(1, 9) - q)


def admissible_q_interval(N: int) -> tuple[Fraction, Fraction]:
    """Open interval of admissible q = delta^2 values."""
    return (Fraction(8 - N, 9 * (9 - N)), Fraction(1, 9))


def build_D_delta(N: int, q) -> Pic10Class:
    """h - (1/3) sum e_i - sqrt(q') f_1 - sqrt(q) f_j (j >= 2), with q' tied to q."""
    q = Fraction(q)
    lo, hi = admissible_q_interval(N)
    if not (lo < q < hi):
        raise DelPezzoError(
            "q outside the open interval: need sqrt((8-N)/(9(9-N))) < delta < 1/3, "
            "i.e. %s < q < %s" % (lo, hi))
    ctx = RadCtx(q, qprime_of(N, q))
    e = tuple(ctx.rational(Fraction(-1, 3)) for _ in range(N))
    f = (ctx.root_qp(-1),) + tuple(ctx.root_q(-1) for _ in range(9 - N))
    return Pic10Class(N, ctx.rational(1), e, f)


def d_squared_symbolic(N: int) -> tuple[Fraction, Fraction]:
    """Coefficients (constant, q) of D^2 as a polynomial in formal q; both must vanish."""
    # D^2 = 1 - N/9 - q' - (9-N) q with q' = (9-N)(1/9 - q)
    const = 1 - Fraction(N, 9) - Fraction(9 - N, 9)
    linear = Fraction(9 - N) - Fraction(9 - N)
    return (const, linear)


def _sign(x) -> int:
    if isinstance(x, RadicalNumber):
        return x.sign()
    return 0 if x == 0 else (1 if x > 0 else -1)


def _check(name, ok, value=None):
    entry = {"name": name, "status": "pass" if ok else "fail"}
    if value is not None:
        entry["value"] = repr(value)
    return entry


def verify_nef_conditions(N: int, q) -> dict:
    """The exact positivity checks that make D nonnegative on K-negative classes.

    The K-nonnegative half of nefness needs the blown-up-plane interpolation
    conjecture; it is recorded as an assumption, never computed.
    """
    q = Fraction(q)
    D = build_D_delta(N, q)
    qp = qprime_of(N, q)
    checks = [
        _check("D.D == 0", _sign(intersect(D, D)) == 0),
        _check("D.h > 0", _sign(intersect(D, _basis(N, "h"))) > 0),
    ]
    for i in range(N):
        checks.append(_check("D.e%d > 0" % (i + 1),
                             _sign(intersect(D, _basis(N, "e", i))) > 0))
    for j in range(10 - N):
        checks.append(_check("D.f%d > 0" % (j + 1),
                             _sign(intersect(D, _basis(N, "f", j))) > 0))
    checks.append(_check("9q < 1", 9 * q < 1, 9 * q))
    checks.append(_check("9q' < 1", 9 * qp < 1, 9 * qp))
    const, linear = d_squared_symbolic(N)
    checks.append(_check("D.D == 0 identically in q", const == 0 and linear == 0))
    return {
        "N": N,
        "q": str(q),
        "qp": str(qp),
        "checks": checks,
        "assumptions": ["SHGH"],
        "ok": all(c["status"] == "pass" for c in checks),
    }


def _basis(N: int, kind: str, idx: int = 0) -> Pic10Class:
    if kind == "h":
        return rational_class(N, h=1)
    e = [0] * N
    f = [0] * (10 - N)
    if kind == "e":
        e[idx] = 1
    else:
        f[idx] = 1
    return rational_class(N, e=e, f=f)


def check_lemma65(D: Pic10Class, kernel_gens, gamma_gens, sample_eff_gens) -> dict:
    """Exact evaluation of the extremality conditions on given generator lists.

    (2) D.C = 0 on the kernel; (3) D.C > 0 on Gamma; for (1) only the
    computable part: D^2 = 0, D.h > 0, D.g >= 0 on the sampled effective
    classes, equality allowed only for rational multiples of D's rational
    projection. Full nefness over the whole effective cone is assumed (SHGH).
    """
    checks = [
        _check("D.D == 0", _sign(intersect(D, D)) == 0),
        _check("D.h > 0", _sign(intersect(D, _basis(D.N, "h"))) > 0),
    ]
    for idx, c in enumerate(kernel_gens):
        val = intersect(D, c)
        checks.append(_check("kernel[%d]: D.C == 0" % idx, _sign(val) == 0, val))
    for idx, c in enumerate(gamma_gens):
        val = intersect(D, c)
        checks.append(_check("gamma[%d]: D.C > 0" % idx, _sign(val) > 0, val))
    for idx, c in enumerate(sample_eff_gens):
        val = intersect(D, c)
        s = _sign(val)
        ok = s > 0 or (s == 0 and _is_rational_multiple_of_projection(D, c))
        checks.append(_check("effective sample[%d]: D.C >= 0" % idx, ok, val))
    return {
        "N": D.N,
        "checks": checks,
        "assumptions": ["SHGH"],
        "ok": all(c["status"] == "pass" for c in checks),
    }


def _is_rational_multiple_of_projection(D: Pic10Class, c: Pic10Class) -> bool:
    # rational projection of D: drop the radical f-coefficients
    proj = [D.h] + list(D.e)
    vec = [c.h] + list(c.e)
    if any(not isinstance(x, Fraction) for x in proj):
        proj = [x.a if isinstance(x, RadicalNumber) else x for x in proj]
    if any(x != 0 for x in c.f):
        return False
    pivot = next(((p, v) for p, v in zip(proj, vec) if p != 0), None)
    if pivot is None:
        return all(v == 0 for v in vec)
    ratio = Fraction(pivot[1]) / pivot[0]
    return all(Fraction(v) == ratio * p for p, v in zip(proj, vec))


@dataclass(frozen=True)
class FanoCase:
    """One row of the degree table: a Fano with -K = (dim-1)H and d = H^dim."""

    name: str
    degree: int
    kernel_e_indices: tuple       # i's for kernel h - 3e_i, or () when custom
    gamma_f_indices: tuple        # j's for gamma h - 3f_j, as printed
    kernel_kind: str = "h-3e"     # "h-3e", "e-e", "h-e-e-e"
    gamma_kind: str = "h-3f"      # "h-3f", "mixed-p2p2", "e-f"

    @property
    def N(self) -> int:
        return 9 - self.degree


FANO_TABLE = (
    FanoCase("grass25", 5, (1, 2, 3, 4), (1, 2, 3, 4, 5, 6)),
    FanoCase("quadric_intersection", 4, (1, 2, 3, 4, 5), (1, 2, 3, 4, 5)),
    FanoCase("cubic", 3, (1, 2, 3, 4, 5, 6), (1, 2, 3, 4)),
    FanoCase("p2xp2", 6, (), (), kernel_kind="e-e", gamma_kind="mixed-p2p2"),
    FanoCase("p1p1p1", 6, (1, 2, 3), (), kernel_kind="h-e-e-e", gamma_kind="e-f"),
    FanoCase("double_cover", 2, (1, 2, 3, 4, 5, 6, 7), (1, 2, 3)),
    # gamma range kept as printed in the source table even though only
    # 10 - N = 2 f-classes exist; out-of-range indices are dropped with a note
    FanoCase("sextic", 1, tuple(range(1, 9)), (2, 3, 4)),
    FanoCase("blowup_p3", 7, (1, 2), (1, 2, 3, 4, 5, 6, 7, 8)),
)


def fano_case(name: str) -> FanoCase:
    for case in FANO_TABLE:
        if case.name == name:
            return case
    raise DelPezzoError("unknown case %r; known: %s"
                        % (name, ", ".join(c.name for c in FANO_TABLE)))


def _h_minus_3(N: int, kind: str, idx: int) -> Pic10Class:
    e = [0] * N
    f = [0] * (10 - N)
    (e if kind == "e" else f)[idx - 1] = -3
    return rational_class(N, h=1, e=e, f=f)


def kernel_classes(case: FanoCase) -> list[Pic10Class]:
    N = case.N
    if case.kernel_kind == "h-3e":
        return [_h_minus_3(N, "e", i) for i in case.kernel_e_indices]
    if case.kernel_kind == "e-e":
        out = []
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if i != j:
                    e = [0] * N
                    e[i - 1], e[j - 1] = 1, -1
                    out.append(rational_class(N, e=e))
        return out
    if case.kernel_kind == "h-e-e-e":
        e = [-1] * N
        return [rational_class(N, h=1, e=e)]
    raise DelPezzoError("unknown kernel kind %r" % case.kernel_kind)


def gamma_classes(case: FanoCase) -> tuple[list[Pic10Class], list[int]]:
    """Gamma generators and the list of printed indices that had to be dropped."""
    N = case.N
    nf = 10 - N
    if case.gamma_kind == "h-3f":
        kept = [j for j in case.gamma_f_indices if 1 <= j <= nf]
        dropped = [j for j in case.gamma_f_indices if not (1 <= j <= nf)]
        return [_h_minus_3(N, "f", j) for j in kept], dropped
    if case.gamma_kind == "e-f":
        out = []
        for i in range(1, N + 1):
            for j in range(1, nf + 1):
                e = [0] * N
                f = [0] * nf
                e[i - 1], f[j - 1] = 1, -1
                out.append(rational_class(N, e=e, f=f))
        return out, []
    if case.gamma_kind == "mixed-p2p2":
        out = []
        for i in range(1, N + 1):
            for j in range(1, nf + 1):
                e = [0] * N
                f = [0] * nf
                e[i - 1], f[j - 1] = 1, -1
                out.append(rational_class(N, e=e, f=f))
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                for m in range(1, nf + 1):
                    e = [0] * N
                    f = [0] * nf
                    e[i - 1] = e[j - 1] = -1
                    f[m - 1] = -1
                    out.append(rational_class(N, h=1, e=e, f=f))
        return out, []
    raise DelPezzoError("unknown gamma kind %r" % case.gamma_kind)


def sample_effective_classes(N: int) -> list[Pic10Class]:
    """A spot-check list of effective classes: the basis and the (-1)-lines."""
    out = [_basis(N, "h")]
    labels = [("e", i) for i in range(N)] + [("f", j) for j in range(10 - N)]
    for kind, idx in labels:
        out.append(_basis(N, kind, idx))
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            e = [0] * N
            f = [0] * (10 - N)
            for kind, idx in (labels[a], labels[b]):
                (e if kind == "e" else f)[idx] = -1
            out.append(rational_class(N, h=1, e=e, f=f))
    return out


def verify_case(name: str, q) -> dict:
    """Full report for one table row at one admissible q."""
    case = fano_case(name)
    N = case.N
    D = build_D_delta(N, q)
    nef = verify_nef_conditions(N, q)
    kern = kernel_classes(case)
    gamma, dropped = gamma_classes(case)
    lemma = check_lemma65(D, kern, gamma, sample_effective_classes(N))
    report = {
        "case": name,
        "degree": case.degree,
        "N": N,
        "q": str(Fraction(q)),
        "checks": nef["checks"] + lemma["checks"],
        "assumptions": ["SHGH"],
        "ok": nef["ok"] and lemma["ok"],
    }
    if dropped:
        report["dropped_gamma_indices"] = dropped
        report["notes"] = ["printed gamma indices beyond the %d available f-classes "
                           "were skipped" % (10 - N)]
    return report


def sample_admissible_q(N: int, count: int = 5) -> list[Fraction]:
    """Evenly spread rationals strictly inside the admissible interval."""
    lo, hi = admissible_q_interval(N)
    return [lo + (hi - lo) * Fraction(t, count + 1) for t in range(1, count + 1)]


def h0_count(n: int, d: int) -> dict:
    """Sections of the index-(n-1) polarization and the residual system dimension."""
    if n < 3 or not (1 <= d <= 8):
        raise DelPezzoError("need n >= 3 and 1 <= d <= 8")
    return {"h0": n + d - 1, "residual_dim": n - 2}
