import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasseff import chow
from grasseff.chow import ChowError, GrassCtx
from grasseff.partitions import dual, enumerate_box

G24 = GrassCtx(2, 4)
G25 = GrassCtx(2, 5)
G36 = GrassCtx(3, 6)


def all_boxes(max_dim):
    out = []
    for k in range(1, max_dim + 1):
        for w in range(1, max_dim // k + 1):
            out.append((k, w))
    return out


def make_ctx(k, w):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return GrassCtx(k, k + w)


def test_ctx_basic():
    assert G24.w == 2 and G24.dim == 4
    assert G36.dim == 9
    with pytest.raises(ChowError):
        GrassCtx(3, 3)


def test_pieri_square_of_hyperplane():
    out = chow.pieri(G24, 1, G24.partition((1,)))
    assert out == chow.sigma(G24, (2,)) + chow.sigma(G24, (1, 1))


def test_pieri_respects_box():
    out = chow.pieri(G24, 2, G24.partition((2, 1)))
    assert out.is_zero()


def test_pieri_interlacing_cap():
    # nu_2 is capped by mu_1 = 1, so no horizontal strip of size 2 fits the box
    out = chow.pieri(G24, 2, G24.partition((1, 1)))
    assert out.is_zero()


def test_hyperplane_cube_g25():
    s1 = chow.sigma(G25, (1,))
    cube = chow.multiply(chow.multiply(s1, s1), s1)
    assert cube == chow.sigma(G25, (3,)) + chow.sigma(G25, (2, 1)).scale(2)


def test_giambelli_hook():
    # sigma_{2,1} = sigma_2 sigma_1 - sigma_3 as a signed monomial list
    monos = chow.giambelli(G25.partition((2, 1)))
    assert sorted(monos) == [(-1, (3,)), (1, (2, 1))]


def test_multiply_unit_identity():
    for parts in [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]:
        s = chow.sigma(G24, parts)
        assert chow.multiply(s, chow.unit(G24)) == s


def test_pair_known_g24():
    assert chow.pair(chow.sigma(G24, (2,)), chow.sigma(G24, (2,))) == 1
    assert chow.pair(chow.sigma(G24, (1, 1)), chow.sigma(G24, (1, 1))) == 1
    assert chow.pair(chow.sigma(G24, (2,)), chow.sigma(G24, (1, 1))) == 0
    with pytest.raises(ChowError):
        chow.pair(chow.sigma(G24, (1,)), chow.sigma(G24, (1,)))


def test_self_dual_codim3_g25():
    # both codimension-3 classes of the 2x3 box are self-dual
    for parts in [(2, 1), (3,)]:
        s = chow.sigma(G25, parts)
        assert chow.pair(s, s) == 1
    assert chow.pair(chow.sigma(G25, (2, 1)), chow.sigma(G25, (3,))) == 0


def test_degree_table():
    assert chow.degree(G24) == 2
    assert chow.degree(G25) == 5
    assert chow.degree(G36) == 42
    assert chow.degree_closed(G24) == chow.degree_pieri(G24) == 2


def test_duality_small_boxes():
    for k, w in all_boxes(8):
        ctx = make_ctx(k, w)
        for m in range(ctx.dim + 1):
            for lam in chow.basis(ctx, m):
                for mu in chow.basis(ctx, ctx.dim - m):
                    expected = 1 if mu == dual(lam) else 0
                    assert chow.pair(chow.sigma(ctx, lam.parts),
                                     chow.sigma(ctx, mu.parts)) == expected


def test_product_out_of_box_is_zero():
    top = chow.sigma(G24, (2, 2))
    assert chow.multiply(top, chow.sigma(G24, (1,))).is_zero()


def test_mismatched_contexts_rejected():
    with pytest.raises(ChowError):
        chow.multiply(chow.sigma(G24, (1,)), chow.sigma(G25, (1,)))


parts_2x3 = st.sampled_from([lam.parts for m in range(7) for lam in enumerate_box(2, 3, m)])
parts_3x3 = st.sampled_from([lam.parts for m in range(10) for lam in enumerate_box(3, 3, m)])


@settings(deadline=None, max_examples=60)
@given(parts_2x3, parts_2x3)
def test_product_commutes_2x3(pa, pb):
    a, b = chow.sigma(G25, pa), chow.sigma(G25, pb)
    assert chow.multiply(a, b) == chow.multiply(b, a)


@settings(deadline=None, max_examples=40)
@given(parts_3x3, parts_3x3, parts_3x3)
def test_product_associates_3x3(pa, pb, pc):
    a, b, c = (chow.sigma(G36, p) for p in (pa, pb, pc))
    assert chow.multiply(chow.multiply(a, b), c) == chow.multiply(a, chow.multiply(b, c))


@settings(deadline=None, max_examples=60)
@given(parts_2x3, parts_2x3)
def test_product_coefficients_nonnegative(pa, pb):
    out = chow.multiply(chow.sigma(G25, pa), chow.sigma(G25, pb))
    assert all(c > 0 for c in out.coeffs.values())
    assert all(lam.size == sum(pa) + sum(pb) for lam in out.coeffs)


def test_json_round_trip():
    cls = chow.sigma(G25, (2, 1)).scale(3) + chow.sigma(G25, (3,))
    assert chow.class_from_json(cls.to_json()) == cls
