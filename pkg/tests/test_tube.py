from fractions import Fraction

import pytest

from so32cr.scalars import GQ
from so32cr.linalg import Matrix, Subspace, rank
from so32cr.tube import (
    BASE_POINT,
    ConePoint,
    Field,
    Poly,
    ProjectivePoint,
    SAMPLE_POINTS,
    cone_fields,
    cubic_form_at,
    embed_f,
    embedding_identity_check,
    freeman_ranks_at,
    in_model,
    isotropy_algebra,
    levi_form_at,
    levi_hermitian_rank,
    levi_kernel_at,
    levi_real_gram,
    model_levi_cubic,
    quadric_eval,
    rho,
    rib_span_at,
    theta_of,
)

I = GQ(0, 1)


def test_poly_ring_and_conjugation():
    z1, zb1 = Poly.var(0), Poly.var(3)
    p = z1 * z1 + zb1 * GQ(0, 2)
    assert p.conj().conj() == p
    assert rho().is_real()
    assert not (z1 * GQ(0, 1)).is_real()
    assert rho().eval([3, 4, 5]) == GQ(0)
    assert rho().eval([1, 1, 1]) == GQ(1)


def test_cone_point_validation():
    ConePoint((GQ(3, 7), GQ(4), GQ(5)))
    with pytest.raises(ValueError):
        ConePoint((1, 1, 1))
    with pytest.raises(ValueError):
        ConePoint((GQ(3), GQ(4), GQ(-5)))


def test_cone_fields_tangency():
    l12, l13, l23, r = cone_fields()
    for f in (l12, l13, l23):
        assert f.apply(rho()).is_zero()
        assert f.is_type10()
    assert (r.apply(rho()) - rho()).is_zero()


def test_frame_rank_at_degenerate_direction():
    l12, l13, l23, _ = cone_fields()
    p = ConePoint((GQ(1), GQ(0), GQ(1)))
    m = Matrix([l12.eval(p.z), l13.eval(p.z), l23.eval(p.z)])
    assert rank(m) == 2


def test_field_bracket_is_polynomial_and_antisymmetric():
    l12, _, _, r = cone_fields()
    br = l12.bracket(r)
    assert br.comps  # stays a polynomial field
    assert (l12.bracket(r) + r.bracket(l12)).eval((1, 2, 3)) == tuple(
        GQ(0) for _ in range(6)
    )


def test_levi_rib_degeneracy_and_rank():
    _, _, _, r = cone_fields()
    l12, l13, l23, _ = cone_fields()
    for p in SAMPLE_POINTS:
        u1 = r + r.conj()
        for other in (l12 + l12.conj(), l23 + l23.conj()):
            assert levi_form_at(p, u1, other).is_zero()
        assert levi_hermitian_rank(p) == 1
        assert rank(levi_real_gram(p)) == 2


def test_rib_is_levi_kernel_and_j_invariant():
    _, _, _, r = cone_fields()
    for p in SAMPLE_POINTS:
        rib = rib_span_at(p)
        assert rib.dim == 2
        assert levi_kernel_at(p) == rib
        # J-invariance: J maps the two spanning vectors into the span
        u1 = (r + r.conj()).apply_J()
        u2 = ((r - r.conj()).scale(I)).apply_J()
        assert rib.contains(u1.eval(p.z))
        assert rib.contains(u2.eval(p.z))


def test_rib_involutivity_shadow():
    _, _, _, r = cone_fields()
    u1 = r + r.conj()
    u2 = (r - r.conj()).scale(I)
    for p in SAMPLE_POINTS:
        assert rib_span_at(p).contains(u1.bracket(u2).eval(p.z))


def test_levi_symmetry_at_samples():
    l12, l13, _, r = cone_fields()
    for p in SAMPLE_POINTS[:3]:
        fields = [
            r + r.conj(),
            (r - r.conj()).scale(I),
            l12 + l12.conj(),
            l13 + l13.conj(),
        ]
        for a in fields:
            for b in fields:
                assert levi_form_at(p, a, b) == levi_form_at(p, b, a)


def test_levi_extension_independence():
    l12, _, _, r = cone_fields()
    w = Field([Poly.var(3), Poly.const(I), Poly(), Poly.var(0), Poly(), Poly.const(2)])
    for p in SAMPLE_POINTS:
        v = l12 + l12.conj()
        base = levi_form_at(p, v, v)
        pert = v + w.scale(rho()) + w.conj().scale(rho())
        assert levi_form_at(p, pert, v) == base
        assert levi_form_at(p, v, pert) == base


def test_levi_rejects_non_sections():
    _, _, _, r = cone_fields()
    p = SAMPLE_POINTS[3]
    with pytest.raises(ValueError):
        levi_form_at(p, Field([1, 0, 0, 1, 0, 0]), r + r.conj())


def test_cubic_form_golden_value_and_linearity():
    l12, _, _, r = cone_fields()
    p = ConePoint((GQ(1), GQ(0), GQ(1)))
    v = cubic_form_at(p, r, l12.conj(), l12.conj())
    assert v == GQ(0, Fraction(-1, 4))  # frozen exact value at (1,0,1)
    assert cubic_form_at(p, r, l12.conj(), l12.conj().scale(2)) == v * GQ(2)
    assert cubic_form_at(p, r.scale(GQ(0, 3)), l12.conj(), l12.conj()) == v * GQ(0, 3)


def test_cubic_nonzero_at_all_samples():
    l12, _, _, r = cone_fields()
    for p in SAMPLE_POINTS:
        assert cubic_form_at(p, r, l12.conj(), l12.conj()) != GQ(0)


def test_cubic_extension_independence():
    l12, _, _, r = cone_fields()
    w = Field([Poly.var(3), Poly.const(I), Poly(), Poly.var(0), Poly(), Poly.const(2)])
    for p in SAMPLE_POINTS[:3]:
        base = cubic_form_at(p, r, l12.conj(), l12.conj())
        assert cubic_form_at(p, r, l12.conj() + w.scale(rho()), l12.conj()) == base


def test_cubic_membership_errors():
    l12, _, _, r = cone_fields()
    p = SAMPLE_POINTS[3]
    with pytest.raises(ValueError):
        cubic_form_at(p, l12, l12.conj(), l12.conj())  # not along the rib
    with pytest.raises(ValueError):
        cubic_form_at(p, r, l12, l12.conj())  # wrong type at the point
    with pytest.raises(ValueError):
        cubic_form_at(p, r.conj(), l12.conj(), l12.conj())  # not (1,0)


def test_freeman_ranks():
    for p in SAMPLE_POINTS:
        assert freeman_ranks_at(p) == (2, 1, 0)


def test_quadric_eval_examples():
    t = ProjectivePoint(
        (GQ(0, Fraction(-1, 2)), GQ(3), GQ(4), GQ(5), GQ(0, Fraction(-1, 2))),
        "diag",
    )
    assert quadric_eval(t) == (GQ(0), GQ(0), GQ(Fraction(5, 2)))
    assert in_model(t)
    t2 = ProjectivePoint((GQ(1), 0, 0, 0, 0), "diag")
    assert quadric_eval(t2) == (GQ(1), GQ(1), GQ(0))
    assert not in_model(t2)
    bil, herm, third = quadric_eval(BASE_POINT)
    assert bil.is_zero() and herm.is_zero() and third is None


def test_chart_conversion():
    diag = BASE_POINT.to_chart("diag")
    assert in_model(diag)
    assert diag.to_chart("antidiag").same_point(BASE_POINT)
    # scaling gives the same projective point
    scaled = ProjectivePoint(
        [GQ(0, 3) * c for c in BASE_POINT.homogeneous], "antidiag"
    )
    assert scaled.same_point(BASE_POINT)


def test_embed_examples():
    f = embed_f([3, 4, 5])
    assert [c.to_str() for c in f.homogeneous] == [
        "0/1-1/2*i", "3/1", "4/1", "5/1", "0/1-1/2*i",
    ]
    assert in_model(f)
    assert quadric_eval(f)[2] == GQ(Fraction(5, 2))
    assert in_model(embed_f([1, 0, 1]))
    boundary = embed_f([0, 0, 0])
    bil, herm, third = quadric_eval(boundary)
    assert bil.is_zero() and herm.is_zero() and third.is_zero()
    assert not in_model(boundary)


def test_embed_lands_on_quadric_off_cone():
    # for arbitrary z the two forms evaluate to (0, 2 rho(z))
    for z in ([1, 2, 3], [GQ(1, 1), GQ(0, -2), GQ(2, Fraction(1, 3))]):
        f = embed_f(z)
        bil, herm, _ = quadric_eval(f)
        assert bil.is_zero()
        assert herm == GQ(2) * rho().eval(z)


def test_embedding_identities():
    res = embedding_identity_check()
    assert res["symmetric_form_vanishes"]
    assert res["hermitian_form_is_twice_rho"]


def test_isotropy_algebra():
    iso = isotropy_algebra(BASE_POINT)
    expected = Subspace(
        10, [[1 if i == j else 0 for i in range(10)] for j in (5, 6, 7, 8, 9)]
    )
    assert iso.dim == 5 and iso == expected
    # E^2 annihilates the base point (eigenvalue zero is admitted)
    from so32cr.so32 import basis_matrices
    img = basis_matrices()[9].apply(BASE_POINT.homogeneous)
    assert all(c.is_zero() for c in img)
    scaled = ProjectivePoint(
        [GQ(Fraction(2, 3), 5) * c for c in BASE_POINT.homogeneous], "antidiag"
    )
    assert isotropy_algebra(scaled) == iso


def test_model_levi_cubic():
    levi, cubic = model_levi_cubic()
    assert levi == GQ(Fraction(-1, 2))
    assert cubic == GQ(0, Fraction(-1, 2))
    levi2, cubic2 = model_levi_cubic(2)
    assert levi2 == levi * GQ(2) and cubic2 == cubic * GQ(2)


def test_theta_kernel_is_distribution():
    # theta vanishes on the L-fields and on R only along the cone
    l12, l13, l23, r = cone_fields()
    for f in (l12, l13, l23):
        for p in SAMPLE_POINTS:
            assert theta_of(f).eval(p.z).is_zero()
            assert theta_of(f.conj()).eval(p.z).is_zero()
