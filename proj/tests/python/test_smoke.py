import math

import numpy as np
import pytest

import hyperspec as hs


def single_edge():
    return hs.OrientedHypergraph(2, [([0], [1])])


def test_single_edge_spectrum():
    g = single_edge()
    assert g.vertex_count == 2
    assert g.degrees == [1, 1]
    assert hs.spectrum(g) == pytest.approx([0.0, 2.0], abs=1e-12)
    assert hs.signless_spectrum(g) == pytest.approx([0.0, 2.0], abs=1e-12)


def test_matrices():
    g = single_edge()
    np.testing.assert_array_equal(hs.adjacency_matrix(g), [[0, 1], [1, 0]])
    np.testing.assert_allclose(hs.normalized_laplacian(g), [[1, -1], [-1, 1]])
    np.testing.assert_allclose(hs.signless_normalized_laplacian(g), [[1, 1], [1, 1]])


def test_closed_forms():
    s = hs.spectrum(hs.gen_lattice(3))
    assert hs.cluster_multiplicities(s) == [
        pytest.approx((0.0, 4), abs=1e-9),
        pytest.approx((1.5, 4)),
        pytest.approx((3.0, 1)),
    ]
    p = hs.predict_complete(4, 2)
    assert p["fully_exact"]
    assert [(v, k) for v, k, _ in p["entries"]] == [pytest.approx((2 / 3, 3)), (2.0, 1)]
    assert hs.spectrum(hs.gen_complete(4, 2)) == pytest.approx([2 / 3] * 3 + [2.0])

    cycle = hs.predict_hypercycle(6, 3)
    assert sorted(hs.circulant_eigenvalues(hs.hypercycle_weights(6, 3), 3)) == pytest.approx(
        [0, 0, 1 / 3, 4 / 3, 4 / 3, 3], abs=1e-12
    )
    assert cycle["order"] == 6

    uneven = hs.predict_hyperflower_l2(2, 1, 2)
    assert uneven["residual"]["count"] == 2
    assert uneven["residual"]["sum"] == 4.0


def test_eigenpairs_twins():
    g = hs.gen_hyperflower(4, 1, 3, [2])
    classes = hs.find_twin_classes(g)
    assert len(classes) == 5
    for value, vector in hs.eigenpairs(g):
        assert np.linalg.norm(vector) == pytest.approx(1.0)
        if abs(value) > 1e-6:
            for cls in classes:
                assert np.ptp(vector[cls]) <= 1e-6


def test_structure():
    g = hs.OrientedHypergraph(6, [([0, 1], [3, 4]), ([4, 5], [1, 2])])
    assert hs.is_bipartite(g) == ([0, 1, 2], [3, 4, 5])
    assert hs.is_vertex_bipartite(g) is not None
    triangle = hs.gen_graph([(0, 1), (1, 2), (2, 0)])
    assert hs.is_bipartite(triangle) is None
    path = hs.gen_graph([(0, 1), (1, 2)])
    assert hs.find_duplicate_pairs(path) == [(0, 2)]
    assert hs.find_duplicate_twin_families(path) == [[[0], [2]]]


def test_reduction_and_reorient():
    g = hs.gen_hyperflower(3, 2, 1, [2, 3])
    reduced = hs.reduce_hyperflower(g, [0, 1, 2])
    assert reduced == hs.gen_hyperflower(1, 2, 1, [2, 3])
    expected = sorted(hs.spectrum(reduced) + [1.0, 1.0])
    assert hs.spectrum(g) == pytest.approx(expected, abs=1e-9)
    assert hs.reorient(hs.reorient(g, 0), 0) == g


def test_io_round_trip():
    text = "6 2\nin: 1 2 ; out: 4 5\nin: 5 6 ; out: 2 3\n"
    g = hs.parse_hypergraph(text)
    assert hs.write_hypergraph(g) == text
    assert g.hyperedges[1] == ([4, 5], [1, 2])


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        hs.OrientedHypergraph(2, [([0, 1], [1])])
    with pytest.raises(hs.DegenerateInput):
        hs.OrientedHypergraph(3, [([0], [1])])
    with pytest.raises(hs.ParseError, match="line 2"):
        hs.parse_hypergraph("2 1\nin: 1 ; out: 9\n")
    with pytest.raises(hs.InvalidArgument):
        hs.gen_hypercycle(5, 3)


def test_trace():
    g = hs.gen_hypercycle(11, 4)
    assert math.fsum(hs.spectrum(g)) == pytest.approx(11.0)
