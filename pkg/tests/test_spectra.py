import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nodalspec.errors import BadParams, Disconnected, OutOfDomain
from nodalspec.families import complete, cycle, path, petersen, spider, star
from nodalspec.graph import build_graph, delete_vertex, disjoint_copies, induced_subgraph, random_connected_graph
from nodalspec.spectra import (SPIDER_LIMIT, adjacency_eigen, eigenvalues, interlacing_check, lambda1, n_lambda,
                               spectral_radius, spider_charpoly_closed, spider_charpoly_eval, spider_exceeds,
                               spider_radius, theta)


def test_small_spectra():
    assert np.allclose(adjacency_eigen(path(2)).values, [1, -1])
    s = adjacency_eigen(cycle(4))
    assert np.allclose(s.values, [2, 0, 0, -2], atol=1e-12)
    assert [g.multiplicity for g in s.groups] == [1, 2, 1]
    assert s.group(2).index == 2
    p = adjacency_eigen(petersen())
    assert [(round(g.value, 9), g.multiplicity) for g in p.groups] == [(3, 1), (1, 5), (-2, 4)]
    assert [g.index for g in p.groups] == [1, 2, 7]


@pytest.mark.parametrize("n", [3, 5, 8, 13])
def test_cycle_closed_form(n):
    expected = sorted((2 * math.cos(2 * math.pi * k / n) for k in range(n)), reverse=True)
    assert np.allclose(eigenvalues(cycle(n)), expected, atol=1e-12)


def test_group_bases_are_eigenvectors():
    g = petersen()
    a = g.adjacency()
    for grp in adjacency_eigen(g).groups:
        assert np.allclose(a @ grp.basis, grp.value * grp.basis, atol=1e-10)
        assert np.allclose(grp.basis.T @ grp.basis, np.eye(grp.multiplicity), atol=1e-10)


def test_group_lookup_errors():
    s = adjacency_eigen(cycle(4))
    with pytest.raises(BadParams):
        s.group(4)
    assert s.group_of_value(0.0).multiplicity == 2
    assert s.group_of_value(0.5) is None


def test_jacobi_matches_lapack():
    rng = np.random.default_rng(5)
    for _ in range(10):
        g = random_connected_graph(int(rng.integers(2, 25)), int(rng.integers(0, 30)), int(rng.integers(1 << 30)))
        a = adjacency_eigen(g, method="jacobi")
        b = adjacency_eigen(g)
        assert np.allclose(a.values, b.values, atol=1e-9)
        assert [x.multiplicity for x in a.groups] == [x.multiplicity for x in b.groups]


def test_charpoly_values():
    assert spider_charpoly_eval(0, 5.0) == 5.0
    assert spider_charpoly_eval(1, 2.0) == 1.0
    assert spider_charpoly_eval(2, 2.0) == 0.0
    t = 1.37
    # P_3(t) = t^4 - 5 t^2 + 3 and P_4(t) = t^5 - 6 t^3 + 7 t by expanding the recursion
    assert spider_charpoly_eval(3, t) == pytest.approx(t ** 4 - 5 * t ** 2 + 3, abs=1e-12)
    assert spider_charpoly_eval(4, t) == pytest.approx(t ** 5 - 6 * t ** 3 + 7 * t, abs=1e-12)


@pytest.mark.parametrize("t", [2.01, 2.05, 2.1, 2.5, 3.7])
def test_closed_form_matches_recursion(t):
    for ell in range(0, 25):
        rec = spider_charpoly_eval(ell, t)
        assert spider_charpoly_closed(ell, t) == pytest.approx(rec, rel=1e-9, abs=1e-9)


def test_closed_form_domain():
    with pytest.raises(OutOfDomain):
        spider_charpoly_closed(3, 2.0)


def test_spider_radius_closed_forms():
    assert spider_radius(1) == pytest.approx(math.sqrt(3), abs=1e-12)
    assert spider_radius(2) == pytest.approx(2.0, abs=1e-12)
    assert spider_radius(3) == pytest.approx(math.sqrt((5 + math.sqrt(13)) / 2), abs=1e-12)
    assert spider_radius(4) == pytest.approx(math.sqrt(3 + math.sqrt(2)), abs=1e-12)
    with pytest.raises(BadParams):
        spider_radius(0)


@pytest.mark.parametrize("ell", [1, 2, 3, 5, 8, 12])
def test_spider_radius_matches_networkx_eigensolver(ell):
    h = nx.Graph()
    for leg in range(3):
        prev = 0
        for i in range(ell):
            v = 1 + leg * ell + i
            h.add_edge(prev, v)
            prev = v
    top = max(np.linalg.eigvalsh(nx.to_numpy_array(h)))
    assert spider_radius(ell) == pytest.approx(top, abs=1e-9)


def test_theta_fixed_point():
    t = SPIDER_LIMIT
    assert abs(theta(t) * (t * t - 3) - t) < 1e-12
    assert theta(2.0) == 1.0


@pytest.mark.parametrize("lam,expected", [(1.5, 1), (2.0, 3), (2.1, 4), (1.8, 2), (0.5, 1)])
def test_n_lambda(lam, expected):
    assert n_lambda(lam) == expected


def test_n_lambda_definition_brute_force():
    # oracle: smallest ell with lambda_1(T(ell,ell,ell)) > lam via dense eigensolver
    for lam in np.linspace(0.1, 2.11, 60):
        ell = 1
        while lambda1(spider(ell, ell, ell)) <= lam + 1e-12:
            ell += 1
        assert n_lambda(float(lam)) == ell


@pytest.mark.parametrize("lam", [0.0, -1.0, SPIDER_LIMIT, 2.2])
def test_n_lambda_domain(lam):
    with pytest.raises(OutOfDomain):
        n_lambda(lam)


def test_spider_exceeds_exact_root():
    assert not spider_exceeds(2, 2.0)
    assert spider_exceeds(3, 2.0)


def power_iteration(a, iters=5000):
    # shift by I so the Perron root dominates even on bipartite graphs
    b = a + np.eye(len(a))
    v = np.ones(len(a))
    for _ in range(iters):
        v = b @ v
        v /= np.linalg.norm(v)
    return v @ a @ v, v


@pytest.mark.parametrize("g,value", [(cycle(5), 2.0), (cycle(8), 2.0), (star(3), math.sqrt(3)),
                                     (spider(2, 2, 2), 2.0), (complete(4), 3.0)])
def test_spectral_radius(g, value):
    r, v = spectral_radius(g)
    assert r == pytest.approx(value, abs=1e-10)
    assert np.all(v >= 0) and np.linalg.norm(v) == pytest.approx(1.0)
    r2, v2 = power_iteration(g.adjacency())
    assert r == pytest.approx(r2, abs=1e-9)
    assert np.allclose(v, v2, atol=1e-6)


def test_spectral_radius_disconnected():
    with pytest.raises(Disconnected):
        spectral_radius(disjoint_copies(path(2), 2))
    assert spectral_radius(build_graph(1, []))[0] == 0.0


def test_interlacing_examples():
    s2 = math.sqrt(2)
    assert interlacing_check([2, 0, 0, -2], [s2, 0, -s2])
    assert interlacing_check([2, 0, 0, -2], [2, 0, 0, -2])
    assert not interlacing_check([1, -1], [5])
    assert interlacing_check(eigenvalues(cycle(4)), eigenvalues(delete_vertex(cycle(4), 0)))
    with pytest.raises(BadParams):
        interlacing_check([1], [1, 0])


def test_interlacing_rejects_wrong_order():
    # for n = 4, m = 2: lambda_2(B) must lie in [lambda_4(A), lambda_2(A)] = [0, 2]
    assert interlacing_check([3, 2, 1, 0], [3, 0.5])
    assert not interlacing_check([3, 2, 1, 0], [3, -0.5])
    assert not interlacing_check([3, 2, 1, 0], [0.5, 0.0])


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 14), st.integers(0, 20), st.integers(0, 2 ** 31 - 1), st.data())
def test_interlacing_random_principal_submatrices(n, extra, seed, data):
    g = random_connected_graph(n, extra, seed)
    keep = data.draw(st.lists(st.integers(0, n - 1), min_size=1, unique=True))
    sub, _ = induced_subgraph(g, keep)
    assert interlacing_check(eigenvalues(g), eigenvalues(sub))
