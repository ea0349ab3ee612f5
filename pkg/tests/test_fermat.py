import cmath
import itertools

import numpy as np
import pytest

from artifact import fermat as F
from artifact import permgroup as pg
from artifact import weyl as Wy
from artifact.exact import ONE, ZERO, CycNum, det
from artifact.weyl import CarterType

OMEGA_C = cmath.exp(2j * cmath.pi / 3)


def cx(M):
    return np.array([[float(c.a) + float(c.b) * OMEGA_C for c in row] for row in M])


# -- lines ------------------------------------------------------------------

def test_fermat_lines_count_and_example():
    lines = F.fermat_lines()
    assert len(lines) == 27 and len(set(lines)) == 27
    assert F.lies_on_surface(F.FermatLine(1, 0, 0))


def test_lines_lie_on_surface_numerically():
    rng = np.random.default_rng(0)
    for line in F.fermat_lines():
        p, q = (np.array([float(c.a) + float(c.b) * OMEGA_C for c in v]) for v in line.spanning_points())
        for s, t in rng.normal(size=(5, 2)):
            x = s * p + t * q
            assert abs((x ** 3).sum()) < 1e-9


def test_lines_meet_examples():
    l00, l11, l01 = F.FermatLine(1, 0, 0), F.FermatLine(1, 1, 1), F.FermatLine(1, 0, 1)
    assert not F.lines_meet(l00, l11)
    d = F.forms_determinant(l00, l11)
    assert d in ((CycNum.omega_power(1) - 1) ** 2, -((CycNum.omega_power(1) - 1) ** 2))
    assert F.lines_meet(l00, l01)
    other = F.FermatLine(2, 0, 0)
    # the determinant oracle: numeric rank of the four stacked forms
    stacked = cx(l00.forms() + other.forms())
    assert F.lines_meet(l00, other) == (np.linalg.matrix_rank(stacked, tol=1e-9) < 4)
    with pytest.raises(ValueError):
        F.lines_meet(l00, l00)


def test_incidence_matches_numeric_rank():
    lines = F.fermat_lines()
    A = F.fermat_incidence()
    for i, j in itertools.combinations(range(27), 2):
        stacked = cx(lines[i].forms() + lines[j].forms())
        assert A[i, j] == int(np.linalg.matrix_rank(stacked, tol=1e-9) < 4)
    assert (A.sum(axis=1) == 10).all()


# -- automorphisms ------------------------------------------------------------

def test_aut_group_order_and_equation():
    G = F.fermat_aut_group()
    assert len(G) == 648 == len(set(G))
    assert all(F.preserves_equation(g) for g in G)
    assert F.preserves_equation(F.FermatAut.diagonal(1, 2, 0))
    assert F.FermatAut.coordinate_cycle(2, 3, 4) in G


def test_aut_group_is_closed():
    G = set(F.fermat_aut_group())
    gens = [F.FermatAut.diagonal(1, 0, 0), F.FermatAut.coordinate_cycle(1, 2),
            F.FermatAut.coordinate_cycle(1, 2, 3, 4)]
    assert all(g * h in G for g in G for h in gens)


def test_composition_matches_matrix_product():
    G = F.fermat_aut_group()
    for g, h in itertools.product(G[::41], G[::37]):
        assert F.projectively_equal(F.mat_mul(g.matrix(), h.matrix()), (g * h).matrix())


def test_action_on_lines_matches_matrix():
    lines = F.fermat_lines()
    for g in F.fermat_aut_group()[::29]:
        Minv = np.linalg.inv(cx(g.matrix()))
        for line in lines:
            image = g.apply_to_line(line)
            # forms of the image are forms of the line composed with g^-1
            moved = cx(line.forms()) @ Minv
            assert np.linalg.matrix_rank(np.vstack([moved, cx(image.forms())]), tol=1e-9) == 2


def numeric_type(g):
    eig = np.linalg.eigvals(cx(g.matrix()))
    for z in eig:
        rel = np.sort_complex(np.round(eig / z, 6))
        for pattern, t in (((1, 1, OMEGA_C, OMEGA_C), CarterType.A2),
                           ((1, 1, OMEGA_C ** 2, OMEGA_C ** 2), CarterType.A2),
                           ((1, 1, OMEGA_C, OMEGA_C ** 2), CarterType.A2xA2)):
            if np.allclose(rel, np.sort_complex(np.round(np.array(pattern), 6)), atol=1e-5):
                return t
    return CarterType.Other


def test_eigen_type_examples():
    assert F.eigen_type(F.FermatAut.diagonal(1, 1, 0)) is CarterType.A2
    assert F.eigen_type(F.FermatAut.diagonal(0, 1, 2)) is CarterType.A2xA2
    h = F.FermatAut.coordinate_cycle(2, 3, 4)
    for a, b, c in itertools.product(range(3), repeat=3):
        if (a + b + c) % 3 == 0:
            assert F.eigen_type(F.FermatAut.diagonal(a, b, c) * h) is CarterType.A2xA2


def test_eigen_type_matches_numeric_eigenvalues():
    for g in F.fermat_aut_group():
        assert F.eigen_type(g) is numeric_type(g), g


def test_order_three_permutations_never_a2():
    for g in F.fermat_aut_group():
        if g.d == (0, 0, 0) and g.order() == 3:
            assert F.eigen_type(g) is CarterType.A2xA2


def test_a2_census():
    census = F.a2_census()
    expected = set()
    for a in (1, 2):
        expected |= {F.FermatAut.diagonal(a, a, 0), F.FermatAut.diagonal(a, 0, a), F.FermatAut.diagonal(0, a, a)}
    assert set(census) == expected


# -- marking --------------------------------------------------------------------

@pytest.fixture(scope="module")
def marking():
    return F.find_marking()


def test_marking_is_isomorphism(marking):
    assert marking.preserves_incidence()
    assert sorted(marking.fermat_to_lattice) == list(range(27))
    assert [marking.fermat_to_lattice[f] for f in marking.sixer] == list(range(6))


def test_embedding_is_injective_homomorphism(marking):
    emb = F.embed_aut(marking)
    ident = F.FermatAut.diagonal(0, 0, 0)
    assert emb[ident] == Wy.WeylElem.identity()
    assert len(set(emb.values())) == 648
    gens = [F.FermatAut.diagonal(1, 0, 0), F.FermatAut.coordinate_cycle(1, 2),
            F.FermatAut.coordinate_cycle(1, 2, 3, 4)]
    for g in F.fermat_aut_group():
        for h in gens:
            assert emb[g * h] == emb[g] * emb[h]
    W = Wy.weyl_e6()
    assert all(w.perm in W for w in emb.values())


def test_embedded_types_agree(marking):
    emb = F.embed_aut(marking)
    for g in F.a2_census():
        assert Wy.carter_type(emb[g]) is CarterType.A2
    pairs = list(emb.items())
    lattice = Wy.carter_types_of_rows(np.array([w.perm.images for _, w in pairs]))
    assert all(F.eigen_type(g) is t for (g, _), t in zip(pairs, lattice))


def test_fermat_centralizer():
    g = F.a2_census()[0]
    H = F.embedded_group(F.find_marking(adapted_to=g))
    b = Wy.element_b()
    assert b.perm in H
    C = pg.centralizer(H, b.perm)
    assert C.order == 108 and pg.sylow3_unique(C).order == 27


# -- plane model ----------------------------------------------------------------

def test_marked_points_general_position():
    pts = F.plane_marked_points()
    assert det([p.coords for p in pts[3:]]) == ONE
    assert det([p.coords for p in pts[:3]]) != ZERO
    rep = F.general_position()
    assert len(rep.triple_determinants) == 20 and rep.ok
    numeric = np.linalg.det(cx([F.veronese_row(p) for p in pts]))
    assert abs(numeric) > 1e-6
    assert abs(numeric - complex(float(rep.conic_determinant.a) + float(rep.conic_determinant.b) * OMEGA_C)) < 1e-9


def test_plane_actions():
    pts = F.plane_marked_points()
    assert pts[3].transform(F.plane_b()) == pts[4]
    rep = F.plane_actions_check()
    assert rep.ok
    assert rep.common_fixed == []
    assert not set(rep.b_fixed) & set(rep.c_fixed)
    assert rep.commutator_exponent in (1, 2)
