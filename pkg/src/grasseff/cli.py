"""Command-line front end: JSON in, canonical JSON out.

Exit codes: 0 success, 2 usage or malformed input, 3 negative mathematical
verdict (e.g. not-in-span, failed check), 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from grasseff import blowup, chow, cones, delpezzo, jsonio, multiplicity, orbits, ring_io, verify
from grasseff.chow import ChowError, GrassCtx
from grasseff.simplex import SimplexError

CACHE_ENV = "GRASSEFF_RING_CACHE"


class UsageError(ValueError):
    pass


def _parse_parts(text: str) -> tuple:
    text = text.strip()
    if not text or text in ("0", "()"):
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError("partition %r is not a comma-separated integer list" % text)


def _emit(obj) -> None:
    print(jsonio.canonical_dumps(obj))


def _load_json(path: str, what: str) -> object:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError("cannot read %s file %r: %s" % (what, path, exc))


def _maybe_load_cache(k: int, n: int) -> None:
    cache_dir = os.environ.get(CACHE_ENV)
    if not cache_dir:
        return
    path = os.path.join(cache_dir, "ring_%d_%d.json" % (k, n))
    if os.path.exists(path):
        ring_io.load_ring(path)


def _ctx(args) -> GrassCtx:
    return GrassCtx(args.k, args.n)


def cmd_product(args) -> int:
    ctx = _ctx(args)
    _maybe_load_cache(args.k, args.n)
    a = chow.sigma(ctx, _parse_parts(args.a))
    b = chow.sigma(ctx, _parse_parts(args.b))
    _emit(chow.multiply(a, b).to_json())
    return 0


def cmd_pieri(args) -> int:
    ctx = _ctx(args)
    mu = ctx.partition(_parse_parts(args.mu))
    _emit(chow.pieri(ctx, args.special, mu).to_json())
    return 0


def cmd_giambelli(args) -> int:
    ctx = _ctx(args)
    lam = ctx.partition(_parse_parts(args.lam))
    monomials = [{"sign": sign, "sizes": list(mono)} for sign, mono in chow.giambelli(lam)]
    _emit({"k": args.k, "n": args.n, "lambda": lam.to_json(), "monomials": monomials})
    return 0


def cmd_degree(args) -> int:
    _maybe_load_cache(args.k, args.n)
    _emit({"degree": chow.degree(_ctx(args))})
    return 0


def cmd_mult(args) -> int:
    ctx = _ctx(args)
    lam = ctx.partition(_parse_parts(args.lam))
    mu = ctx.partition(_parse_parts(args.mu))
    _emit({"multiplicity": multiplicity.rz_multiplicity(ctx, lam, mu)})
    return 0


def _load_cone(path: str) -> cones.ConeSpec:
    data = _load_json(path, "generator")
    try:
        if isinstance(data, dict):
            gens = [(g["label"], [jsonio.parse_frac(x) for x in g["vector"]])
                    for g in data["generators"]]
            dim = int(data.get("dim", len(gens[0][1])))
            basis = data.get("basis", ["x%d" % i for i in range(dim)])
        else:
            gens = [("g%d" % i, [jsonio.parse_frac(x) for x in vec])
                    for i, vec in enumerate(data)]
            dim = len(gens[0][1])
            basis = ["x%d" % i for i in range(dim)]
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise UsageError("malformed generator file: missing or bad field (%s)" % exc)
    return cones.ConeSpec.build(dim, tuple(basis), gens)


def _load_vector(path: str) -> tuple:
    data = _load_json(path, "class")
    if isinstance(data, dict):
        data = data.get("vector")
    if not isinstance(data, list):
        raise UsageError("malformed class file: expected field 'vector' or a JSON array")
    return tuple(jsonio.parse_frac(x) for x in data)


def _membership_report(cone, result) -> dict:
    out = {"verdict": result.verdict}
    if result.witness is not None:
        out["witness"] = {label: jsonio.frac_str(x)
                          for label, x in zip(cone.labels, result.witness) if x != 0}
    if result.certificate is not None:
        out["certificate"] = [jsonio.frac_str(x) for x in result.certificate]
    return out


def cmd_cone_check(args) -> int:
    cone = _load_cone(args.generators)
    v = _load_vector(args.cls)
    result = cones.cone_membership(cone, v)
    _emit(_membership_report(cone, result))
    return 0 if result.is_member else 3


def _blowup_class_from_json(data: dict) -> blowup.BlowupClass:
    try:
        ctx = GrassCtx(int(data["k"]), int(data["n"]))
        grading = data.get("grading", "dim")
        m = int(data["m"])
        codim = m if grading == "codim" else ctx.dim - m
        coeffs = {}
        for term in data.get("terms", []):
            lam = ctx.partition(term["lambda"])
            coeffs[lam] = coeffs.get(lam, 0) + int(term["c"])
        exc = tuple(int(x) for x in data["exc"])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError("malformed class file: missing or bad field (%s)" % exc)
    bctx = blowup.BlowupCtx(ctx, len(exc), data.get("configuration", "general"))
    return blowup.BlowupClass(bctx, grading, m, chow.ChowClass(ctx, codim, coeffs), exc)


def cmd_cone_sgen(args) -> int:
    ctx = _ctx(args)
    bound = cones.sgen_bound(ctx, args.dim)
    out = {"k": args.k, "n": args.n, "r": args.r, "cycle_dim": args.dim,
           "bound": bound, "bound_satisfied": args.r <= bound}
    if args.cls is None:
        _emit(out)
        return 0
    cls = _blowup_class_from_json(_load_json(args.cls, "class"))
    if cls.bctx.r != args.r or cls.bctx.ctx != ctx:
        raise UsageError("class file does not match --k/--n/--r")
    cone = cones.sgen_cycle_cone(ctx, args.dim, args.r)
    result = cones.cone_membership(cone, cones.blowup_cycle_vector(cls))
    out.update(_membership_report(cone, result))
    _emit(out)
    return 0 if result.is_member else 3


def cmd_orbits_list(args) -> int:
    records = []
    for rep in orbits.enumerate_orbits(args.k, args.dim):
        records.append({
            "pairs": rep.to_json(),
            "incidence": orbits.incidence_of_representative(rep).to_json(),
            "dimension": orbits.orbit_dimension(rep, s=args.s),
        })
    _emit({"k": args.k, "dim": args.dim, "s": args.s, "orbits": records})
    return 0


def cmd_orbits_check(args) -> int:
    reports = [orbits.oracle_check(args.k, d) for d in range(args.k + 1)]
    _emit({"k": args.k, "reports": reports})
    return 0 if all(rep["agree"] for rep in reports) else 4


def cmd_delpezzo_verify(args) -> int:
    try:
        q = Fraction(args.q)
    except (ValueError, ZeroDivisionError):
        raise UsageError("--q must be a rational like 1/10")
    report = delpezzo.verify_case(args.case, q)
    _emit(report)
    return 0 if report["ok"] else 3


def cmd_verify(args) -> int:
    report = verify.run_all()
    _emit(report)
    return 0 if report["ok"] else 4


def cmd_export_ring(args) -> int:
    out = args.out
    if out is None:
        cache_dir = os.environ.get(CACHE_ENV)
        if cache_dir is None:
            raise UsageError("give --out or set %s" % CACHE_ENV)
        os.makedirs(cache_dir, exist_ok=True)
        out = os.path.join(cache_dir, "ring_%d_%d.json" % (args.k, args.n))
    ctx = _ctx(args)
    if ctx.dim > args.cap:
        raise UsageError("k(n-k) = %d exceeds the cap %d" % (ctx.dim, args.cap))
    table = ring_io.export_ring(args.k, args.n, out, cap=args.cap)
    _emit({"path": out, "basis_size": sum(len(v) for v in table["basis"].values())})
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="grasseff", description="exact Schubert calculus and cone toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def kn(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("product", help="product of two Schubert classes")
    kn(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("pieri", help="special class times a Schubert class")
    kn(p)
    p.add_argument("--special", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("giambelli", help="determinant expansion of a Schubert class")
    kn(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_giambelli)

    p = sub.add_parser("degree", help="degree in the wedge-coordinate embedding")
    kn(p)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("mult", help="multiplicity of a Schubert variety along a cell")
    kn(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("cone", help="cone membership and span-generation checks")
    csub = p.add_subparsers(dest="cone_command", required=True)
    pc = csub.add_parser("check", help="membership against explicit generators")
    pc.add_argument("--generators", required=True)
    pc.add_argument("--class", dest="cls", required=True)
    pc.set_defaults(func=cmd_cone_check)
    ps = csub.add_parser("sgen", help="span-generation bound and optional class test")
    kn(ps)
    ps.add_argument("--r", type=int, required=True)
    ps.add_argument("--dim", type=int, required=True, choices=(1, 2))
    ps.add_argument("--class", dest="cls", default=None)
    ps.set_defaults(func=cmd_cone_sgen)

    p = sub.add_parser("orbits", help="triangular-group orbit enumeration")
    osub = p.add_subparsers(dest="orbits_command", required=True)
    po = osub.add_parser("list", help="all orbits with incidence and dimension")
    po.add_argument("--k", type=int, required=True)
    po.add_argument("--dim", type=int, required=True)
    po.add_argument("--s", type=int, default=0)
    po.set_defaults(func=cmd_orbits_list)
    pk = osub.add_parser("check", help="finite-field oracle comparison")
    pk.add_argument("--k", type=int, required=True)
    pk.set_defaults(func=cmd_orbits_check)

    p = sub.add_parser("delpezzo", help="degree-table verification")
    dsub = p.add_subparsers(dest="delpezzo_command", required=True)
    pd = dsub.add_parser("verify", help="verify one table row at a rational q")
    pd.add_argument("--case", required=True)
    pd.add_argument("--q", required=True)
    pd.set_defaults(func=cmd_delpezzo_verify)

    for name in ("verify", "verify-paper"):
        p = sub.add_parser(name, help="run the built-in verification suite")
        p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-ring", help="write the full multiplication table")
    kn(p)
    p.add_argument("--out", default=None)
    p.add_argument("--cap", type=int, default=16)
    p.set_defaults(func=cmd_export_ring)

    return parser


def run_subcommand(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(jsonio.canonical_dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except (ChowError, ValueError) as exc:
        if isinstance(exc, (cones.DecompositionError,)):
            print(jsonio.canonical_dumps({"error": str(exc)}), file=sys.stderr)
            return 3
        if "internal" in str(exc):
            print(jsonio.canonical_dumps({"error": str(exc)}), file=sys.stderr)
            return 4
        print(jsonio.canonical_dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except SimplexError as exc:
        print(jsonio.canonical_dumps({"error": str(exc)}), file=sys.stderr)
        return 4


def main() -> None:
    sys.exit(run_subcommand(sys.argv[1:]))


if __name__ == "__main__":
    main()
