import random
from collections import Counter
from fractions import Fraction

import pytest

from frobex.linalg import Matrix
from frobex.reflection import (
    GroupError,
    build_group,
    coinvariant_data,
    monomials_of_degree,
    poly_mul,
)


def test_z2_basic():
    g = build_group("Z/2")
    assert g.size == 2
    assert len(g.reflections) == 1
    assert g.eps_V[g.reflections[0].element] == -1


def test_s3_basic():
    g = build_group("S3")
    assert g.size == 6
    assert len(g.reflections) == 3
    assert g.reflection_class_count == 1
    three_cycles = [i for i in range(g.size) if g.orders[i] == 3]
    assert len(three_cycles) == 2
    for c in three_cycles:
        assert g.eps_V[c] == g.field.one  # rotations have det 1


def test_i23_isomorphic_to_s3_by_orders():
    # derived check: same multiset of element orders and reflection count
    s3 = build_group("S3")
    i23 = build_group("I2(3)")
    assert Counter(s3.orders) == Counter(i23.orders)
    assert len(i23.reflections) == len(s3.reflections) == 3


def test_group_closure_exhaustive():
    for desc in ("Z/2", "Z/4", "S3", "I2(4)", "I2(6)"):
        g = build_group(desc)
        if g.size > 12:
            continue
        for i in range(g.size):
            for j in range(g.size):
                assert g.elements[g.mult[i][j]] == g._matmul(g.elements[i], g.elements[j])


def test_alpha_pairing_normalised():
    for desc in ("Z/2", "Z/3", "S3", "S4", "I2(4)", "I2(5)"):
        g = build_group(desc)
        two = g.field.from_rational(2)
        for refl in g.reflections:
            pairing = sum(
                (a * b for a, b in zip(refl.alpha, refl.alpha_check)), g.field.zero
            )
            assert pairing == two, desc


def test_eps_product_identity():
    for desc in ("Z/3", "S3", "I2(4)"):
        g = build_group(desc)
        for w in range(g.size):
            assert g.eps_V[w] * g.eps_Vdual[w] == g.field.one


def test_reflection_rank_and_real_squares():
    for desc in ("S3", "S4", "I2(4)"):
        g = build_group(desc)
        for refl in g.reflections:
            assert g.fixed_rank_defect(refl.element) == 1
            assert g.mult[refl.element][refl.element] == 0  # real reflections square to id
    # complex cyclic group: reflections need not square to identity
    g = build_group("Z/3")
    s = g.reflections[0].element
    assert g.mult[s][s] != 0


def test_complex_cyclic_eps_values():
    g = build_group("Z/3")
    assert len(g.reflections) == 2
    vals = {g.eps_V[r.element] for r in g.reflections}
    assert g.field.zeta in vals and g.field.root_power(2) in vals


def test_unsupported_descriptor():
    for bad in ("E8", "S5", "I2(7)", "Z/1", "I2(x)"):
        with pytest.raises(GroupError):
            build_group(bad)


# ---------------------------------------------------------------------------
# coinvariant data
# ---------------------------------------------------------------------------

def test_z2_coinvariants():
    g = build_group("Z/2")
    c = coinvariant_data(g)
    assert c.inv_degrees == [2]
    assert c.basis_monos == [(0,), (1,)]
    assert c.top_degree == 1 and c.max_index == 1
    # dual of 1 is x: B(1, x) = pi(x) = 1
    assert c.dual_coords.at(1, 0) == g.field.one
    assert c.dual_coords.at(0, 0) == g.field.zero


def test_s3_coinvariants_dimension_count():
    g = build_group("S3")
    c = coinvariant_data(g)
    assert c.inv_degrees == [2, 3]
    assert c.top_degree == 3
    # derived: dim = d1 * d2 = |W| = 6
    assert len(c.basis_monos) == 6
    assert c.basis_degrees.count(3) == 1


def test_s4_coinvariants():
    g = build_group("S4")
    c = coinvariant_data(g)
    assert c.inv_degrees == [2, 3, 4]
    assert len(c.basis_monos) == 24
    assert c.top_degree == 6


def test_dihedral_coinvariants():
    for m in (4, 5, 6):
        g = build_group(f"I2({m})")
        c = coinvariant_data(g)
        assert c.inv_degrees == [2, m]
        assert len(c.basis_monos) == 2 * m


def test_top_component_skew_invariant():
    # w . (top class) is a scalar multiple of the top class, with the scalar
    # the inverse determinant character (variables span the module itself);
    # on real groups this coincides with eps itself
    for desc in ("Z/3", "S3", "I2(4)"):
        g = build_group(desc)
        c = coinvariant_data(g)
        top = {c.basis_monos[c.max_index]: g.field.one}
        for w in range(g.size):
            coords = c.reduce_coords(c.action.act_poly(w, top))
            assert coords.get(c.max_index) == c.top_character[w], (desc, w)
            assert c.top_character[w] == c.eps[w].inverse()
            assert all(k == c.max_index for k in coords)
    for desc in ("S3", "I2(4)"):
        g = build_group(desc)
        c = coinvariant_data(g)
        for w in range(g.size):
            assert c.top_character[w] == c.eps[w]  # real groups: eps = eps^-1


def test_dual_basis_pairing_is_kronecker():
    for desc in ("Z/2", "S3", "I2(4)"):
        g = build_group(desc)
        c = coinvariant_data(g)
        n = len(c.basis_monos)
        for i in range(n):
            for j in range(n):
                prod = poly_mul({c.basis_monos[i]: g.field.one}, c.dual_lift(j))
                val = c.pi_top(prod)
                assert val == (g.field.one if i == j else g.field.zero), (desc, i, j)


def test_decompose_basis_element_is_unit_vector():
    g = build_group("S3")
    c = coinvariant_data(g)
    for k, mono in enumerate(c.basis_monos):
        zs = c.decompose({mono: g.field.one})
        for i, z in enumerate(zs):
            if i == k:
                assert z.is_unit() and z.constant_value() == g.field.one
            else:
                assert not z


def test_decompose_z2_x_cubed():
    g = build_group("Z/2")
    c = coinvariant_data(g)
    zs = c.decompose({(3,): g.field.one})
    # x^3 = (x^2) * x: coefficient of the basis element x is the invariant p1
    assert str(zs[1]) == "p1"
    assert not zs[0]


def test_decompose_round_trip_random():
    rng = random.Random(31)
    for desc in ("S3", "I2(4)"):
        g = build_group(desc)
        c = coinvariant_data(g)
        for _ in range(5):
            d = rng.randint(1, 6)
            poly = {}
            for mono in monomials_of_degree(g.dim, d):
                v = rng.randint(-2, 2)
                if v:
                    poly[mono] = g.field.from_rational(v)
            if not poly:
                continue
            zs = c.decompose(poly)
            back = c.recompose(zs)
            assert back == poly


def test_dual_side_uses_contragredient_action():
    g = build_group("S3")
    cv = coinvariant_data(g, "V", "p")
    cw = coinvariant_data(g, "V*", "q")
    assert cv.inv_degrees == cw.inv_degrees
    assert len(cw.basis_monos) == 6
    # eps on the dual side is the inverse character
    for w in range(g.size):
        assert cv.eps[w] * cw.eps[w] == g.field.one
