import random
from fractions import Fraction

import pytest

from so32cr.scalars import GQ
from so32cr.linalg import Matrix, Subspace
from so32cr.so32 import Alg, GRADES
from so32cr.carriers import Carrier, endo_complex_matrix
from so32cr.cochains import Cochain, act_on_cochain, coboundary, cochain_dim
from so32cr.prolong import (
    FullTorsion,
    STEP_CARRIERS,
    beta_gauge_response,
    beta_gauge_variation,
    cochain_of_endo,
    endo_of_cochain,
    frame_conditions,
    gauge_image,
    gl2_endo,
    invariant_inner_product,
    l1_endo,
    l1_subspace,
    normalization_space,
    normalize_ctorsion,
    prolong_all,
    prolong_step0,
    prolong_step1,
    prolong_step2,
    prolong_step3,
    rotation_action_matrix,
    step3_component_equations,
)

I = GQ(0, 1)


def flat_endo(m):
    return tuple(x for r in m.rows for x in r)


def test_prolongation_dimensions():
    assert [s.dim for s in prolong_all()] == [2, 2, 1, 0]


def test_step0_generators():
    s = prolong_step0()
    b1, b2 = s.generators
    z1 = endo_complex_matrix(s.carrier, b1)
    # B1: e^-2 -> -2e^-2, e^-1(10) -> -e^-1(10), e^0(10) -> 0
    assert z1[0, 0] == GQ(-2)
    assert z1[1, 1] == GQ(-1)
    assert all(z1[r, 3].is_zero() for r in range(5))
    z2 = endo_complex_matrix(s.carrier, b2)
    assert z2[3, 3] == GQ(0, -2)  # B2: e^0(10) -> -2i e^0(10)
    for g in s.generators:
        assert s.space.contains(flat_endo(g))
    span = Subspace(25, [flat_endo(g) for g in s.generators])
    assert span == s.space


def test_step0_solved_relations():
    # the solution space is exactly the family tau = 2 Re(lam), mu = 2i Im(lam)
    s = prolong_step0()
    c = s.carrier
    fam = []
    for lam in (GQ(1), I):
        tau = lam + lam.conj()
        mu = lam - lam.conj()
        cols = [[GQ(0)] * 5 for _ in range(5)]
        b = Matrix.zero(5, 5)
        from so32cr.carriers import endo_from_complex_images
        b = endo_from_complex_images(
            c,
            {
                "e^-2": [(tau, "e^-2")],
                "e^-1(10)": [(lam, "e^-1(10)")],
                "e^0(10)": [(mu, "e^0(10)")],
            },
        )
        fam.append(flat_endo(b))
    assert Subspace(25, fam) == s.space


def test_l1_subspace():
    l1 = l1_subspace()
    assert l1.dim == 6
    assert l1_endo(0, 0, 0).is_zero()
    z = endo_complex_matrix(l1.carrier, l1_endo(0, 1, 0))
    # mu = 1, nu = 0: h^0 part of B(e^-1(10)) is -E^0(01)
    assert z[5, 1].is_zero() and z[6, 1] == GQ(-1)
    assert z[3, 1] == GQ(1)


def test_step1_generators_match_stated_values():
    s = prolong_step1()
    g1, g2 = s.generators
    z1 = endo_complex_matrix(s.carrier, g1)
    # B1(e^-2) = e^-1(10) + e^-1(01); B1(e^-1(10)) = -(i/2)e^0(10) + (i/2)E^0(10)
    assert z1[1, 0] == GQ(1) and z1[2, 0] == GQ(1)
    assert z1[3, 1] == GQ(0, Fraction(-1, 2)) and z1[5, 1] == GQ(0, Fraction(1, 2))
    assert all(z1[r, 3].is_zero() for r in range(7))
    z2 = endo_complex_matrix(s.carrier, g2)
    # B2(e^-2) = i(e^-1(10) - e^-1(01)); B2(e^-1(10)) = (1/2)e^0(10) + (1/2)E^0(10)
    assert z2[1, 0] == I and z2[2, 0] == -I
    assert z2[3, 1] == GQ(Fraction(1, 2)) and z2[5, 1] == GQ(Fraction(1, 2))
    # generators are the l1 members with nu = (i/2)conj(lam), mu = -(i/2)lam
    assert g1 == l1_endo(1, GQ(0, Fraction(-1, 2)), GQ(0, Fraction(1, 2)))
    assert g2 == l1_endo(I, GQ(Fraction(1, 2)), GQ(Fraction(1, 2)))
    # and equal the projected adjoint action of the h^1 witnesses
    assert g1 == s.carrier.ad_action(-Alg.from_label("E_2^1"))
    assert g2 == s.carrier.ad_action(Alg.from_label("E_1^1"))
    assert Subspace(49, [flat_endo(g1), flat_endo(g2)]) == s.space


def test_step2_generator():
    s = prolong_step2()
    (g,) = s.generators
    z = endo_complex_matrix(s.carrier, g)
    assert z[5, 0] == GQ(1) and z[6, 0] == GQ(1)  # B(e^-2) = E^0(10)+E^0(01)
    assert z[7, 1] == I                            # B(e^-1(10)) = iE^1(10)
    assert z[8, 2] == -I                           # B(e^-1(01)) = -iE^1(01)
    assert g == gl2_endo(0, 1, I, 0)               # family (0, t, it, 0) at t=1
    assert g == s.carrier.ad_action(Alg.from_label("E^2"))
    assert Subspace(81, [flat_endo(g)]) == s.space


def test_step3_trivial():
    s = prolong_step3()
    assert s.dim == 0
    assert step3_component_equations().dim == 0
    from so32cr.carriers import gl_filtered
    assert gl_filtered(Carrier("m+h"), 5).dim == 0


def test_witness_bracket_compatibility():
    # commutators of the quotient ad-actions reproduce ad of the bracket
    witnesses = [
        (0, Alg.from_label("E_1^0")), (0, Alg.from_label("E_2^0")),
        (1, -Alg.from_label("E_2^1")), (1, Alg.from_label("E_1^1")),
        (2, Alg.from_label("E^2")),
    ]
    carrier_for = {0: "m+h0", 1: "m+h0+h1", 2: "m+h"}
    for (k, x) in witnesses:
        for (l, y) in witnesses:
            c = Carrier(carrier_for[min(k + l, 2)])
            qx, qy = c.ad_action(x), c.ad_action(y)
            assert qx @ qy - qy @ qx == c.ad_action(x.bracket(y))


def test_invariant_inner_product():
    ip = invariant_inner_product()
    g = ip.gram()
    assert g == g.transpose()
    from so32cr.so32 import symmetric_signature
    pos, neg, zero = symmetric_signature(g)
    assert (neg, zero) == (0, 0) and pos == cochain_dim(2, 1)
    n = cochain_dim(2, 1)
    c1 = Cochain(2, 1, [GQ(1)] * n)
    c2 = Cochain(2, 1, [GQ(j) for j in range(n)])
    assert ip.pair(c1, c2) == ip.pair(c2, c1)
    # the rotation generator acts skew-adjointly
    a = rotation_action_matrix(2, 1, Alg.from_label("E_2^0"))
    assert (a + a.transpose()).is_zero()


def test_gauge_image_dims_and_complementarity():
    assert gauge_image(1).dim == 4  # dim l1 - dim closed directions = 6 - 2
    for k in (1, 2, 3):
        gi, ns = gauge_image(k), normalization_space(k)
        n = cochain_dim(2, k)
        assert gi.intersect(ns).dim == 0
        assert gi.dim + ns.dim == n
        assert gi.sum(ns).dim == n


def test_normalization_ad_invariance():
    actors = {1: (5, 6), 2: (5, 6, 7, 8), 3: (5, 6, 7, 8, 9)}
    for k, idxs in actors.items():
        ns = normalization_space(k)
        for i in idxs:
            k2 = k + GRADES[i]
            for v in ns.basis_vectors():
                img = act_on_cochain(Alg.basis(i), Cochain(2, k, v))
                if cochain_dim(2, k2) == 0:
                    assert img.is_zero()
                elif k2 in (1, 2, 3):
                    assert normalization_space(k2).contains(img.coords)


def test_normalize_fixed_point_and_pure_gauge():
    for k in (2, 3):
        ns = normalization_space(k)
        v = ns.basis_vectors()[0]
        c = Cochain(2, k, v)
        b, res = normalize_ctorsion(c)
        carrier = Carrier(STEP_CARRIERS[k])
        assert res.coords == c.coords
        assert coboundary(cochain_of_endo(carrier, b, k)).is_zero()
    # pure gauge input normalizes to zero
    carrier = Carrier(STEP_CARRIERS[2])
    b0 = gl2_endo(1, GQ(0, 2), 0, GQ(3))
    c = coboundary(cochain_of_endo(carrier, b0, 2))
    _, res = normalize_ctorsion(c)
    assert res.is_zero()


def test_normalize_round_trip_random():
    rng = random.Random(99)
    for k in (1, 2, 3):
        carrier = Carrier(STEP_CARRIERS[k])
        n = cochain_dim(2, k)
        for _ in range(20):
            c = Cochain(
                2, k,
                [GQ(rng.randrange(-5, 6), rng.randrange(-5, 6)) for _ in range(n)],
            )
            b, res = normalize_ctorsion(c)
            back = coboundary(cochain_of_endo(carrier, b, k)) + res
            assert back.coords == c.coords
            assert normalization_space(k).contains(res.coords)


def test_endo_cochain_round_trip():
    carrier = Carrier("m+h0+h1")
    b = gl2_endo(GQ(1, -1), 2, I, GQ(0, 3))
    c = cochain_of_endo(carrier, b, 2)
    assert endo_of_cochain(carrier, c) == b


def test_frame_conditions_on_flat_model():
    flat = FullTorsion.flat()
    for step in (1, 2, 3):
        for f in frame_conditions(step):
            assert f.apply(flat).is_zero()
    with pytest.raises(ValueError):
        frame_conditions(4)


def test_alpha_perturbation_response():
    flat = FullTorsion.flat()
    nu = GQ(Fraction(5, 3), -2)
    pert = flat.add_term("e^-1(10)", "e^0(10)", "e^-1(10)", nu)
    alpha = frame_conditions(1)[0]
    assert alpha.apply(pert) == nu
    assert alpha.apply(flat).is_zero()


def test_beta_gauge_response():
    flat = FullTorsion.flat()
    beta = frame_conditions(1)[2]
    rng = random.Random(1)
    for _ in range(10):
        mu = GQ(rng.randrange(-3, 4), rng.randrange(-3, 4))
        nu = GQ(rng.randrange(-3, 4), rng.randrange(-3, 4))
        nup = GQ(rng.randrange(-3, 4), rng.randrange(-3, 4))
        assert beta.apply(beta_gauge_variation(flat, mu, nu, nup)) == (
            beta_gauge_response(mu, nu, nup)
        )
        # the response vanishes exactly on the l1 locus
        assert beta_gauge_response(mu, nu, nu - mu.conj()).is_zero()


def test_flat_ctorsion_degrees():
    flat = FullTorsion.flat()
    assert not flat.restrict_ctorsion(0).is_zero()
    for k in (1, 2, 3):
        c = flat.restrict_ctorsion(k)
        assert c.is_zero()
        assert normalization_space(k).contains(c.coords)
