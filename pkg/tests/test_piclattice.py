import itertools

import numpy as np
import pytest

from artifact import piclattice as P
from artifact.piclattice import PicVec


def vec(name):
    return P.lines27()[P.line_index(name)].vector


def test_lines27_examples():
    lines = P.lines27()
    assert len(lines) == 27
    assert vec("E1") == PicVec(0, (1, 0, 0, 0, 0, 0))
    assert vec("Q1") == PicVec(2, (0, -1, -1, -1, -1, -1))
    assert vec("L12") == PicVec(1, (-1, -1, 0, 0, 0, 0))


def test_lines_are_exceptional_curves():
    K = P.canonical_class()
    for line in P.lines27():
        assert P.pairing(line.vector, line.vector) == -1
        assert P.pairing(line.vector, K) == -1


def test_pairing_examples():
    K = P.canonical_class()
    assert P.pairing(K, K) == 3
    assert P.pairing(vec("E1"), vec("Q1")) == 0
    assert P.pairing(vec("L56"), vec("L46")) == 0
    assert P.pairing(vec("L56"), vec("L12")) == 1
    assert P.pairing(vec("E1"), vec("Q2")) == 1


def test_incidence_is_10_regular():
    A = P.intersection_matrix()
    off = A - np.diag(np.diag(A))
    assert (np.diag(A) == -1).all()
    assert set(np.unique(off)) == {0, 1}
    assert (off.sum(axis=1) == 10).all()
    assert P.incidence_graph().degrees() == [10] * 27


def test_is_sixer_examples():
    assert P.is_sixer([f"E{i}" for i in range(1, 7)])
    assert P.is_sixer(["Q1", "Q2", "Q3", "L56", "L46", "L45"])
    assert not P.is_sixer(["E1", "Q2", "E3", "E4", "E5", "E6"])


def test_sixers_match_subset_scan():
    A = P.intersection_matrix()
    scan = [s for s in itertools.combinations(range(27), 6)
            if all(A[i, j] == 0 for i, j in itertools.combinations(s, 2))]
    assert len(scan) == 72
    assert sorted(tuple(sorted(s)) for s in P.sixers()) == scan


def test_unique_transversal_examples():
    assert P.unique_transversal(["E1", "E2", "E3", "E4", "E5"]).name == "Q6"
    assert P.unique_transversal(["E2", "E3", "E4", "E5", "E6"]).name == "Q1"
    five = ["Q1", "Q2", "Q3", "L56", "L46"]
    idx = [P.line_index(x) for x in five]
    A = P.intersection_matrix()
    scan = [k for k in range(27) if all(A[k, i] == 1 for i in idx)]
    assert len(scan) == 1
    assert P.line_index(P.unique_transversal(five).tag) == scan[0]


def test_unique_transversal_exhaustive():
    for s in P.sixers():
        for five in itertools.combinations(s, 5):
            P.unique_transversal(list(five))


def test_unique_transversal_rejects_meeting_lines():
    with pytest.raises(ValueError):
        P.unique_transversal(["E1", "Q2", "E3", "E4", "E5"])


def test_extend_to_weyl_examples():
    ident = P.extend_to_weyl([f"E{i}" for i in range(1, 7)])
    assert np.array_equal(ident, np.eye(7, dtype=int))
    M = P.extend_to_weyl(["Q1", "Q2", "Q3", "L56", "L46", "L45"])
    assert np.array_equal(np.linalg.matrix_power(M, 3), np.eye(7, dtype=int))
    swap = P.extend_to_weyl(["E2", "E1", "E3", "E4", "E5", "E6"])
    perm = P.matrix_to_line_perm(swap)
    assert perm[P.line_index("L13")] == P.line_index("L23")
    assert perm[P.line_index("Q1")] == P.line_index("Q2")
    with pytest.raises(P.NotASixerError):
        P.extend_to_weyl(["E1", "Q2", "E3", "E4", "E5", "E6"])


def test_extend_to_weyl_preserves_form_and_k():
    J = P.gram_matrix()
    K = P.canonical_class().as_array()
    for s in P.sixers():
        M = P.extend_to_weyl(list(s))
        assert np.array_equal(M.T @ J @ M, J)
        assert np.array_equal(M @ K, K)
