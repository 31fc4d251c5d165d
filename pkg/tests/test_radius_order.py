import math

import networkx as nx
import pytest

from nodalspec.errors import BadParams
from nodalspec.families import complete, cycle, path, petersen
from nodalspec.formats import encode_graph6, iter_graph6
from nodalspec.graph import is_connected
from nodalspec.radius_order import canonical_form, canonical_key, enumerate_connected, kappa_search

# OEIS A001349: connected graphs on n unlabeled nodes
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n,count", sorted(CONNECTED_COUNTS.items()))
def test_enumeration_counts(n, count):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == count
    assert all(g.n == n and is_connected(g) for g in graphs)
    assert len({canonical_key(g) for g in graphs}) == count


@pytest.mark.slow
def test_enumeration_count_n8():
    assert sum(1 for _ in enumerate_connected(8)) == 11117


def test_enumeration_small_cases_by_networkx_atlas():
    # the graph atlas lists all graphs up to 7 nodes; use it as an independent oracle for n <= 5
    for n in range(1, 6):
        atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]
        ours = list(enumerate_connected(n))
        assert len(atlas) == len(ours)
        for h in atlas:
            hits = [g for g in ours if nx.is_isomorphic(nx.Graph(list(g.edges)) if g.n > 1 else nx.empty_graph(1), h)]
            assert len(hits) == 1


def test_enumeration_limits():
    with pytest.raises(BadParams):
        list(enumerate_connected(0))
    with pytest.raises(BadParams):
        list(enumerate_connected(9))


def test_canonical_form_is_isomorphic_relabelling():
    g = petersen()
    key, h = canonical_form(g)
    assert nx.is_isomorphic(nx.Graph(list(g.edges)), nx.Graph(list(h.edges)))
    assert canonical_form(h)[0] == key
    assert canonical_key(cycle(5)) != canonical_key(path(5))


def test_kappa_examples():
    r = kappa_search(1.0, 5)
    assert r.verdict() == "Found(2)" and r.certificate == path(2)
    r = kappa_search(2.0, 5)
    assert r.kappa == 3 and r.certificate == complete(3)
    r = kappa_search(math.sqrt(2), 5)
    assert r.kappa == 3 and r.certificate.m == 2
    r = kappa_search((1 + math.sqrt(5)) / 2, 5)
    assert r.kappa == 4 and r.certificate.m == 3 and max(r.certificate.degrees()) == 2
    assert r.residual <= 1e-9
    r = kappa_search(0.0, 3)
    assert r.kappa == 1


def test_kappa_not_found():
    r = kappa_search(1.8, 6)
    assert not r.found and r.verdict() == "NotFoundUpTo(6)"
    with pytest.raises(BadParams):
        kappa_search(1.0, 9)
    with pytest.raises(BadParams):
        kappa_search(-1.0, 3)


def test_kappa_from_external_stream():
    lines = [encode_graph6(g) for n in (5, 4, 3) for g in enumerate_connected(n)]
    r = kappa_search(2.0, source=iter_graph6(lines))
    assert r.kappa == 3
    r = kappa_search(1.8, source=iter_graph6(lines))
    assert not r.found and r.n_max == 5


def test_backends_enumerate_identically(monkeypatch):
    from nodalspec._kernels import _pure
    from nodalspec import radius_order
    monkeypatch.setattr(radius_order._kernels, "canonical_label", _pure.canonical_label)
    monkeypatch.setattr(radius_order, "_levels", {1: radius_order._levels[1]})
    pure = [g.edges for g in enumerate_connected(6)]
    monkeypatch.undo()
    assert pure == [g.edges for g in enumerate_connected(6)]
