"""Export and reimport of the full multiplication table of A*(G(k, n))."""

from __future__ import annotations

import json

from grasseff import chow
from grasseff.chow import ChowError, GrassCtx


def ring_table(k: int, n: int, cap: int = 16) -> dict:
    """Basis per grade and all structure constants sigma_lam * sigma_mu."""
    ctx = GrassCtx(k, n)
    if ctx.dim > cap:
        raise ChowError("k(n-k) = %d exceeds the cap %d" % (ctx.dim, cap))
    basis = {str(m): [list(lam.trimmed()) for lam in chow.basis(ctx, m)]
             for m in range(ctx.dim + 1)}
    products = []
    for m1 in range(ctx.dim + 1):
        for m2 in range(m1, ctx.dim + 1 - m1):
            for lam in chow.basis(ctx, m1):
                for mu in chow.basis(ctx, m2):
                    prod = chow.multiply(chow.sigma(ctx, lam.parts), chow.sigma(ctx, mu.parts))
                    products.append({
                        "a": list(lam.trimmed()),
                        "b": list(mu.trimmed()),
                        "terms": [{"lambda": list(nu.trimmed()), "c": c}
                                  for nu, c in prod.terms_sorted()],
                    })
    return {"k": k, "n": n, "basis": basis, "products": products}


def export_ring(k: int, n: int, path: str, cap: int = 16) -> dict:
    table = ring_table(k, n, cap)
    with open(path, "w") as fh:
        json.dump(table, fh, sort_keys=True, separators=(",", ":"))
    return table


def load_ring(path: str) -> dict:
    """Reimport an exported table into the product cache; returns the table."""
    with open(path) as fh:
        table = json.load(fh)
    ctx = GrassCtx(int(table["k"]), int(table["n"]))
    for rec in table["products"]:
        lam = ctx.partition(rec["a"])
        mu = ctx.partition(rec["b"])
        coeffs = {ctx.partition(t["lambda"]): int(t["c"]) for t in rec["terms"]}
        result = chow.ChowClass(ctx, lam.size + mu.size, coeffs)
        with chow._product_lock:
            chow._product_cache[(ctx.k, ctx.n, lam.parts, mu.parts)] = result
            chow._product_cache[(ctx.k, ctx.n, mu.parts, lam.parts)] = result
    return table
