import itertools

import pytest

from grasseff import chow, cones
from grasseff.blowup import BlowupCtx, blow_class
from grasseff.chow import GrassCtx
from grasseff.cones import ConeSpec, DecompositionError, cone_membership

from support import quadric_in_cone

G24 = GrassCtx(2, 4)
G25 = GrassCtx(2, 5)


# ---------------------------------------------------------------------------
# generic membership

def test_membership_witness_and_certificate():
    cone = ConeSpec.build(2, ("x", "y"), [("a", (1, 0)), ("b", (1, 1))])
    hit = cone_membership(cone, (3, 2))
    assert hit.is_member and hit.witness == (1, 2)
    miss = cone_membership(cone, (0, 1))
    assert not miss.is_member
    assert sum(p * v for p, v in zip(miss.certificate, (0, 1))) < 0


def test_build_dedupes_generators():
    cone = ConeSpec.build(2, ("x", "y"), [("a", (1, 0)), ("b", (1, 0))])
    assert cone.labels == ("a",)


# ---------------------------------------------------------------------------
# two-point divisor cone

def test_facet_normals_of_two_point_cone():
    for k in (2, 3, 5):
        cone = cones.thm44_generators(k)
        assert cones.facet_normals_3d(cone) == sorted(
            [(1, 0, 0), (k, 1, 0), (k, 0, 1), (k, 1, 1)])


def test_lemma41_examples():
    assert cones.lemma41_decompose(2, 1, 2, 0) == [("beta_2", 1)]
    assert cones.lemma41_decompose(2, 2, 1, 2) == [("beta_0", 1), ("beta_1", 1), ("e2", 1)]
    with pytest.raises(DecompositionError):
        cones.lemma41_decompose(2, 1, 2, 1)
    with pytest.raises(DecompositionError):
        cones.lemma41_decompose(3, 2, -1, 0)


def test_lemma41_grid_resums_and_matches_membership():
    for k in (2, 3):
        cone = cones.thm44_generators(k)
        for a in range(5):
            for b1 in range(2 * k + 1):
                for b2 in range(2 * k + 1):
                    target = (a, -b1, -b2)
                    if k * a >= b1 + b2:
                        terms = cones.lemma41_decompose(k, a, b1, b2)
                        total = (0, 0, 0)
                        for label, c in terms:
                            vec = cones.lemma41_vector(k, label)
                            total = tuple(t + c * v for t, v in zip(total, vec))
                        assert total == target
                        assert cone_membership(cone, target).is_member
                    else:
                        with pytest.raises(DecompositionError):
                            cones.lemma41_decompose(k, a, b1, b2)
                        res = cone_membership(cone, target)
                        assert not res.is_member
                        assert sum(p * t for p, t in zip(res.certificate, target)) < 0


# ---------------------------------------------------------------------------
# span decompositions for blow-up classes

def test_lemma42_resums():
    bctx = BlowupCtx(G25, 3)
    amb = chow.sigma(G25, (2, 1)).scale(3) + chow.sigma(G25, (3,)).scale(2)
    cls = blow_class(bctx, "dim", 3, amb, (2, 1, 1))
    terms = cones.lemma42_decompose(cls)
    total = blow_class(bctx, "dim", 3, chow.zero(G25, cls.codim), (0, 0, 0))
    for key, c in terms:
        total = total.add(cones.lemma42_term_class(bctx, "dim", 3, key).scale(c))
    assert total.ambient == cls.ambient and total.exc == cls.exc


def test_lemma42_requires_inequality():
    bctx = BlowupCtx(G24, 2)
    cls = blow_class(bctx, "dim", 2, chow.sigma(G24, (2,)), (1, 1))
    with pytest.raises(DecompositionError):
        cones.lemma42_decompose(cls)


def test_sgen_bounds():
    assert cones.sgen_bound(G24, 2) == 2
    assert cones.sgen_bound(G24, 1) == 2
    assert cones.sgen_bound(G25, 2) == 4
    assert cones.sgen_bound(G25, 1) == 5
    assert cones.very_general_curve_bound(G25) == 5


# ---------------------------------------------------------------------------
# quadric curve decompositions

def quadric_ok(a, bs):
    r = len(bs)
    pos = [max(b, 0) for b in bs]
    if r <= 6:
        return all(2 * a >= 2 * pos[i] + 2 * pos[j] + sum(pos) - pos[i] - pos[j]
                   for i, j in itertools.combinations(range(r), 2)) if r >= 2 \
            else a >= sum(pos)
    return all(a >= sum(pos[t] for t in sub) for sub in itertools.combinations(range(r), 5))


def test_quadric_worked_example():
    terms = cones.quadric_curve_decompose(5, [2, 2, 1, 1])
    assert terms == {("conic", 0, 1, 2): 1, ("conic", 0, 1, 3): 1, ("ell",): 1}
    assert cones.quadric_resum(terms, 4) == (5, 2, 2, 1, 1)


def test_quadric_negative_coefficients_absorbed():
    terms = cones.quadric_curve_decompose(1, [-2, 1])
    assert terms == {("line", 1): 1, ("ell_i", 0): 2}
    assert cones.quadric_resum(terms, 2) == (1, -2, 1)


def test_quadric_violation_names_inequality():
    with pytest.raises(DecompositionError, match="violated inequality"):
        cones.quadric_curve_decompose(3, [1, 1, 1, 1, 1])
    with pytest.raises(DecompositionError, match="violated inequality"):
        cones.quadric_curve_decompose(4, [1, 1, 1, 1, 1, 1, 1])


def test_quadric_matches_brute_force_oracle():
    for r in range(0, 7):
        for a in range(0, 7):
            for bs in itertools.combinations_with_replacement(range(a + 1), r):
                bs = tuple(sorted(bs, reverse=True))
                expected = quadric_in_cone(a, bs)
                try:
                    terms = cones.quadric_curve_decompose(a, bs)
                except DecompositionError:
                    assert not expected, (a, bs)
                    continue
                assert expected, (a, bs)
                assert cones.quadric_resum(terms, r) == (a, *bs)


def test_quadric_r7_inequality_grid():
    # the 5-subset inequalities are sufficient but not necessary (a conic
    # through 3 of the 7 points violates them); failures must match the oracle
    for a in range(0, 7):
        for bs in itertools.combinations_with_replacement(range(min(a, 3) + 1), 7):
            bs = tuple(sorted(bs, reverse=True))
            try:
                terms = cones.quadric_curve_decompose(a, bs)
            except DecompositionError:
                assert not quadric_ok(a, bs), (a, bs)
                assert not quadric_in_cone(a, bs), (a, bs)
                continue
            assert cones.quadric_resum(terms, 7) == (a, *bs)


def test_quadric_success_iff_in_cone_even_beyond_inequality():
    # the stated inequality family is sufficient but decompose also covers
    # anything the search oracle certifies; mismatches are bugs either way
    sample = [(6, (3, 3, 3, 3)), (6, (3, 3, 3, 3, 3)), (4, (2, 2, 2, 2, 2, 2))]
    for a, bs in sample:
        assert quadric_in_cone(a, bs) == quadric_ok(a, bs)


# ---------------------------------------------------------------------------
# three-cycles on blown-up G(2,5)

def test_g25_threecycle_grid_resums():
    for a21 in range(4):
        for a3 in range(4):
            for bs in itertools.product(range(4), repeat=3):
                if 2 * a21 + a3 >= sum(bs):
                    terms = cones.g25_threecycle_decompose(a21, a3, bs)
                    assert cones.g25_resum(terms, 3) == (a21, a3, *bs)
                    assert all(c > 0 for c in terms.values())
                else:
                    with pytest.raises(DecompositionError):
                        cones.g25_threecycle_decompose(a21, a3, bs)


def test_g25_threecycle_rejects_bad_input():
    with pytest.raises(cones.ConeError):
        cones.g25_threecycle_decompose(1, 1, [0, 0, 0, 0, 0])
    with pytest.raises(DecompositionError):
        cones.g25_threecycle_decompose(-1, 0, [0])


# ---------------------------------------------------------------------------
# the r = 3 class outside the span on G(2,4)

def test_g24_nonspan_witness():
    cls, result = cones.g24_nonspan_witness()
    assert cones.g24_class_vector(cls) == (1, 1, -1, -1, -1)
    assert result.verdict == "not-in-span"
    cone = cones.g24_sgen_cone(3)
    phi = result.certificate
    for gen in cone.generators:
        assert sum(p * g for p, g in zip(phi, gen)) >= 0
    assert sum(p * v for p, v in zip(phi, (1, 1, -1, -1, -1))) < 0


def test_g24_same_class_two_points_in_span():
    res = cone_membership(cones.g24_sgen_cone(2), (1, 1, -1, -1))
    assert res.is_member
    cone = cones.g24_sgen_cone(2)
    total = [0] * 4
    for x, gen in zip(res.witness, cone.generators):
        total = [t + x * g for t, g in zip(total, gen)]
    assert tuple(total) == (1, 1, -1, -1)


def test_sgen_cycle_cone_membership_roundtrip():
    bctx = BlowupCtx(G24, 2)
    cls = blow_class(bctx, "dim", 2,
                     chow.sigma(G24, (2,)).scale(2) + chow.sigma(G24, (1, 1)), (1, 1))
    cone = cones.sgen_cycle_cone(G24, 2, 2)
    res = cone_membership(cone, cones.blowup_cycle_vector(cls))
    assert res.is_member
