import pytest

from brushgame.families import (
    bouquet,
    comb,
    comb_union_seeded,
    complete,
    cycle,
    path,
    star,
    subdivided_sunlet,
    sunlet,
)


def test_path_degrees():
    assert sorted(path(3).degrees()) == [1, 1, 2]
    assert path(1).vertex_count == 1 and path(1).edge_count == 0


def test_star_center():
    g = star(5)
    assert g.vertex_count == 6
    assert g.degree(0) == 5
    assert all(g.degree(v) == 1 for v in range(1, 6))


def test_cycle_bounds():
    assert cycle(3).edge_count == 3
    with pytest.raises(ValueError):
        cycle(2)


def test_complete_counts():
    g = complete(6)
    assert g.edge_count == 15
    assert all(g.degree(v) == 5 for v in g.vertices())
    with pytest.raises(ValueError):
        complete(0)


def test_comb_shape():
    g = comb(3)
    assert g.vertex_count == 6
    assert sorted(g.degrees()) == [1, 1, 1, 2, 2, 3]
    assert comb(1).edge_count == 1  # a single edge
    assert comb(4).vertex_count == 8


def test_sunlet_all_odd_degrees():
    g = sunlet(4)
    assert g.vertex_count == 8
    assert all(d % 2 == 1 for d in g.degrees())
    with pytest.raises(ValueError):
        sunlet(2)


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 2), (5, 5)])
def test_subdivided_sunlet_counts(n, k):
    g = subdivided_sunlet(n, k)
    assert g.vertex_count == 2 * n + n * k
    # subdividing keeps the edge count at (old edges) + (new vertices)
    assert g.edge_count == 2 * n + n * k
    # threads replace k pendant edges: their leaves keep degree 1
    assert sum(1 for d in g.degrees() if d == 1) == n
    assert sum(1 for d in g.degrees() if d == 3) == n


def test_subdivided_sunlet_rejects_bad_parameters():
    with pytest.raises(ValueError):
        subdivided_sunlet(3, 4)
    with pytest.raises(ValueError):
        subdivided_sunlet(2, 1)
    with pytest.raises(ValueError):
        subdivided_sunlet(3, 0)


def test_bouquet_shape():
    g = bouquet(1)
    assert g.vertex_count == 11
    assert g.degree(0) == 10
    assert bouquet(2).vertex_count == 21
    assert bouquet(2).degree(0) == 20
    with pytest.raises(ValueError):
        bouquet(0)


def test_comb_union_seeding():
    inst = comb_union_seeded([2])
    g = inst.graph
    assert g.vertex_count == 4
    assert inst.init == {0: 1, 1: 1}
    assert all(g.degree(v) == 2 for v in inst.init)

    inst2 = comb_union_seeded([2, 3])
    assert inst2.graph.vertex_count == 10
    assert len(inst2.init) == 4
    assert all(inst2.graph.degree(v) == 2 for v in inst2.init)
    assert inst2.label == "comb_union(2,3)"


def test_comb_union_rejects_small_combs():
    with pytest.raises(ValueError):
        comb_union_seeded([1])
    with pytest.raises(ValueError):
        comb_union_seeded([])
