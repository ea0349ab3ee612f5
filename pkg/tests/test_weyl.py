import numpy as np
import pytest

from artifact import permgroup as pg
from artifact import piclattice as P
from artifact import weyl as Wy
from artifact.exact import PolyCyc
from artifact.piclattice import PicVec


def root(l, *e):
    return PicVec(l, tuple(e))


def test_root_counts():
    R6 = Wy.roots(6)
    assert len(R6) == 72
    kinds = {"E": 0, "L": 0, "2L": 0}
    for r in R6:
        if r.l == 0:
            kinds["E"] += 1
        elif abs(r.l) == 1:
            kinds["L"] += 1
        else:
            kinds["2L"] += 1
    assert kinds == {"E": 30, "L": 40, "2L": 2}
    assert len(Wy.roots(4)) == 20
    assert len(Wy.roots(5)) == 40
    assert root(0, 0, 0, 1, 0, -1, 0) in R6


def test_roots_satisfy_definition():
    for n in (4, 5, 6):
        K = P.canonical_class(n)
        for r in Wy.roots(n):
            assert P.pairing(r, r) == -2 and P.pairing(r, K) == 0


def test_reflection_swapping_points():
    s = Wy.reflection(root(0, 1, -1, 0, 0, 0, 0))
    assert s == Wy.standard_s6((1, 2))
    assert s("L13") == P.line_index("L23") and s("Q1") == P.line_index("Q2")


def test_reflection_table_matches_formula():
    r = root(1, -1, -1, -1, 0, 0, 0)
    s = Wy.reflection(r)
    lookup = P.vector_to_line()
    for k, line in enumerate(P.lines27()):
        image = Wy.reflect(line.vector, r)
        assert s(k) == lookup[tuple(image.as_array())]
    assert s("E1") == P.line_index("L23")
    assert s("E2") == P.line_index("L13")
    assert s("E3") == P.line_index("L12")
    assert s.order() == 2


def test_reflection_rejects_non_roots():
    with pytest.raises(ValueError):
        Wy.reflection(root(1, 0, 0, 0, 0, 0, 0))


def test_generate_orders():
    assert Wy.generate(4).order == 120
    assert Wy.generate(5).order == 1920
    assert Wy.generate(6).order == 51840


def test_weyl_elements_preserve_lattice():
    G = Wy.weyl_e6()
    J = P.gram_matrix()
    K = P.canonical_class().as_array()
    for row in G.array[::997]:
        M = Wy.WeylElem(pg.Perm(row)).matrix
        assert np.array_equal(M.T @ J @ M, J) and np.array_equal(M @ K, K)


def test_carter_type_examples():
    assert Wy.carter_type(Wy.standard_s6((4, 5, 6))) is Wy.CarterType.A2
    assert Wy.carter_type(Wy.standard_s6((1, 2, 3), (4, 5, 6))) is Wy.CarterType.A2xA2
    assert Wy.carter_type(Wy.WeylElem.identity()) is Wy.CarterType.Other
    t = PolyCyc([-1, 1])
    assert Wy.kperp_char_poly(Wy.standard_s6((1, 2, 3), (4, 5, 6))) == t ** 2 * PolyCyc([1, 1, 1]) ** 2


def test_batch_census_agrees_with_exact_path():
    G = Wy.weyl_e6()
    census = Wy.carter_census(G)
    assert int(census[Wy.CarterType.A2].sum()) == 240
    assert int(census[Wy.CarterType.A2xA2].sum()) == 480
    a2 = np.nonzero(census[Wy.CarterType.A2])[0][:5]
    a2a2 = np.nonzero(census[Wy.CarterType.A2xA2])[0][:5]
    sample = np.concatenate([np.arange(0, G.order, 1297), a2, a2a2])
    batch = Wy.carter_types_of_rows(G.array[sample])
    for k, t in zip(sample, batch):
        assert Wy.carter_type(Wy.WeylElem(pg.Perm(G.array[k]))) is t


def test_standard_s6():
    assert Wy.standard_s6() == Wy.WeylElem.identity()
    b, c = Wy.element_b(), Wy.element_c()
    assert b("E4") == P.line_index("E5") and b("E1") == P.line_index("E1")
    assert c("E1") == P.line_index("E2")
    assert b * c == c * b


def test_build_r():
    r = Wy.build_r()
    assert r.order() == 3
    assert r("E1") == P.line_index("Q1") and r("E4") == P.line_index("L56")
    assert (r * r)("E1") == P.line_index("L23")
    G = Wy.weyl_e6()
    b, c = Wy.element_b(), Wy.element_c()
    B = pg.subgroup_generated(G, [b.perm, r.perm])
    BC = pg.subgroup_generated(G, [b.perm, c.perm, r.perm])
    assert (B.order, pg.is_elementary_abelian_3(B)) == (9, 2)
    assert (BC.order, pg.is_elementary_abelian_3(BC)) == (27, 3)


def test_commutes_with_set_preservers():
    r = Wy.build_r()
    for cyc in ((1, 2), (4, 5)):
        g = Wy.standard_s6(cyc)
        assert g * r == r * g
    pres = Wy.set_preservers()
    assert len(pres) == 36
    # oracle: the 36 permutations of S3 x S3 lifted to W(E6)
    lifts = {Wy.standard_s6(*[c for c in (p, q) if len(c) > 1])
             for p in ((), (1, 2), (1, 3), (2, 3), (1, 2, 3), (1, 3, 2))
             for q in ((), (4, 5), (4, 6), (5, 6), (4, 5, 6), (4, 6, 5))}
    assert set(pres) == lifts
    assert Wy.commutes_with_set_preservers(r)


def test_sylow_lemma_report():
    rep = Wy.verify_sylow_lemma()
    assert rep.class_size == 240
    assert rep.centralizer_order == 216
    assert rep.sylow_order == 27 and rep.sylow_rank == 3
    assert rep.fermat_centralizer_order == 108 and rep.fermat_sylow_order == 27
    assert rep.coincide and rep.ok


def test_centralizer_normal_sylow():
    G = Wy.weyl_e6()
    b = Wy.element_b()
    C = pg.centralizer(G, b.perm)
    Z = pg.sylow3_unique(C)
    assert pg.normalizes(C, Z)
    r, c = Wy.build_r(), Wy.element_c()
    assert {b.perm, c.perm, r.perm} <= set(Z.elements)


@pytest.mark.parametrize("k", range(0, 51840, 5183))
def test_orbit_stabilizer_in_w_e6(k):
    G = Wy.weyl_e6()
    g = pg.Perm(G.array[k])
    assert len(pg.conjugacy_class(G, g)) * pg.centralizer(G, g).order == G.order


def test_preserves_sixer():
    assert Wy.preserves_sixer(Wy.element_b())
    assert not Wy.preserves_sixer(Wy.build_r())
    arr = Wy.weyl_e6().array
    assert int((np.sort(arr[:, :6], axis=1) == np.arange(6)).all(axis=1).sum()) == 720
