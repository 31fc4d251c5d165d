import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nodalspec.equiangular import (AsymptoticForm, LineSystem, alpha_of_lambda, certificate_check, degree_limit,
                                   extract_lines,
                                   gram_matrix, graph_from_lines, lambda_of_alpha, lines_from_csv,
                                   lines_from_json, lines_to_csv, lines_to_json, lower_bound_construct,
                                   max_lines_formula, psd_rank, verify_lines)
from nodalspec.errors import BadParams, DimensionMismatch, NotCertified, OutOfDomain, SeedMismatch
from nodalspec.families import cycle, path, petersen
from nodalspec.graph import Graph, disjoint_copies, random_graph

K2 = path(2)


def test_alpha_lambda_maps():
    assert lambda_of_alpha(1 / 3) == pytest.approx(1.0)
    assert lambda_of_alpha(1 / 5) == pytest.approx(2.0)
    assert alpha_of_lambda(1.0) == pytest.approx(1 / 3)
    for bad in (0.0, 1.0, -0.2):
        with pytest.raises(OutOfDomain):
            lambda_of_alpha(bad)
    with pytest.raises(OutOfDomain):
        alpha_of_lambda(0.0)


def test_gram_matrix_entries():
    assert np.allclose(gram_matrix(K2, 1.0), [[1.5, -0.5], [-0.5, 1.5]])
    assert np.allclose(gram_matrix(Graph(1, ()), 0.7), [[1.2]])
    m = gram_matrix(cycle(3), 2.0)
    assert np.allclose(np.diag(m), 2.5) and np.allclose(m[~np.eye(3, dtype=bool)], -0.5)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.floats(0.0, 1.0), st.integers(0, 2 ** 31 - 1), st.floats(0.05, 0.95))
def test_scaled_gram_entrywise(n, p, seed, alpha):
    g = random_graph(n, p, seed)
    m = 2 * alpha * gram_matrix(g, lambda_of_alpha(alpha))
    assert np.allclose(np.diag(m), 1.0)
    for i in range(n):
        for j in range(n):
            if i != j:
                assert m[i, j] == pytest.approx(-alpha if g.has_edge(i, j) else alpha)


def test_psd_rank_examples():
    psd, rank, low = psd_rank(gram_matrix(K2, 1.0))
    assert psd and rank == 2 and low == pytest.approx(1.0)
    psd, _, low = psd_rank(gram_matrix(disjoint_copies(K2, 2), 0.5))
    assert not psd and low < 0
    f = np.array([1, 1, -1, -1]) / 2
    assert f @ gram_matrix(disjoint_copies(K2, 2), 0.5) @ f == pytest.approx(-0.5)
    assert psd_rank(np.zeros((3, 3))) == (True, 0, 0.0)
    with pytest.raises(BadParams):
        psd_rank(np.array([[1.0, 0.5], [0.0, 1.0]]))


def test_certificate_examples():
    c = certificate_check(disjoint_copies(K2, 7), 1 / 3, 8)
    assert c.accepted and c.rank == 8 and c.psd and c.degree_ok
    assert math.floor(6 / (1 / 3) ** 4) == 486
    c = certificate_check(disjoint_copies(cycle(3), 4), 1 / 5, 9)
    assert c.accepted and c.rank == 9
    c = certificate_check(disjoint_copies(K2, 2), 1 / 2, 4)
    assert not c.accepted and not c.psd
    assert not certificate_check(disjoint_copies(K2, 7), 1 / 3, 7).accepted
    with pytest.raises(OutOfDomain):
        certificate_check(K2, 1 / 3, 0)


@pytest.mark.parametrize("t", [1, 2, 3, 5, 9])
def test_kernel_dimension_identity(t):
    g = disjoint_copies(cycle(3), t)
    lam = 2.0
    a = g.adjacency()
    ker_a = int(np.sum(np.abs(np.linalg.eigvalsh(lam * np.eye(g.n) - a)) < 1e-9))
    ker_m = int(np.sum(np.abs(np.linalg.eigvalsh(gram_matrix(g, lam))) < 1e-9))
    assert (ker_a, ker_m) == (t, t - 1)


def test_extract_lines_examples():
    s = extract_lines(K2, 1 / 3)
    assert s.dim == 2 and s.size == 2
    assert s.vectors[0] @ s.vectors[1] == pytest.approx(-1 / 3)
    assert verify_lines(s, 1 / 3, 1e-7)
    one = extract_lines(Graph(1, ()), 0.4)
    assert one.size == 1 and np.linalg.norm(one.vectors[0]) == pytest.approx(1.0)
    assert verify_lines(one, 0.4, 1e-7)
    s = extract_lines(disjoint_copies(K2, 7), 1 / 3)
    assert s.dim == 8 and s.size == 14 and s.max_angle_residual <= 1e-7
    with pytest.raises(NotCertified):
        extract_lines(disjoint_copies(K2, 2), 1 / 2)


def test_verify_lines_rejects():
    assert not verify_lines(LineSystem(1 / 3, 2, np.eye(2)), 1 / 3, 1e-7)
    assert not verify_lines(LineSystem(1 / 3, 2, 2 * np.eye(2)), 1 / 3, 1e-7)
    with pytest.raises(DimensionMismatch):
        verify_lines(LineSystem(1 / 3, 3, np.eye(2)), 1 / 3, 1e-7)
    with pytest.raises(DimensionMismatch):
        verify_lines(LineSystem(1 / 3, 2, np.zeros((0, 2))), 1 / 3, 1e-7)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.floats(0.0, 0.6), st.integers(0, 2 ** 31 - 1), st.sampled_from([1 / 3, 1 / 5, 1 / 7, 0.25]))
def test_round_trip_on_accepted_certificates(n, p, seed, alpha):
    g = random_graph(n, p, seed)
    c = certificate_check(g, alpha, n)
    if not c.accepted:
        return
    s = extract_lines(g, alpha)
    assert s.dim == c.rank
    assert verify_lines(s, alpha, 1e-7)


def test_lower_bound_construct():
    g, s = lower_bound_construct(1 / 3, 15, K2)
    assert (g.n, s.size, s.dim) == (28, 28, 15) and verify_lines(s, 1 / 3, 1e-7)
    g, s = lower_bound_construct(1 / 5, 9, cycle(3))
    assert s.size == 12 and s.dim == 9
    with pytest.raises(SeedMismatch):
        lower_bound_construct(1 / 3, 15, cycle(3))
    # non-divisible case: padding with isolated vertices reaches the formula value
    g, s = lower_bound_construct(1 / 5, 10, cycle(3), pad=True)
    assert s.size == max_lines_formula(1 / 5, 3, 10) == 13


@pytest.mark.parametrize("d", [2, 3, 7, 15, 30])
def test_two_d_minus_two(d):
    _, s = lower_bound_construct(1 / 3, d, K2)
    assert s.size == 2 * d - 2 and verify_lines(s, 1 / 3, 1e-7)


def test_graph_from_lines_up_to_switching():
    g, s = lower_bound_construct(1 / 5, 9, cycle(3))
    h = graph_from_lines(s.vectors, 1 / 5)
    assert h.n == g.n
    # lines determine the graph only up to switching: the Seidel matrices agree after sign fixing
    signs = np.sign([row[np.flatnonzero(np.abs(row) > 1e-7)[0]] for row in s.vectors])
    seidel = lambda x: np.ones((x.n, x.n)) - np.eye(x.n) - 2 * x.adjacency()
    d = np.diag(signs)
    assert np.allclose(d @ seidel(g) @ d, seidel(h))


def test_max_lines_formula():
    assert max_lines_formula(1 / 3, 2, 15) == 28
    assert max_lines_formula(1 / 5, 3, 185) == 276
    form = max_lines_formula(1 / 5, None, 100)
    assert isinstance(form, AsymptoticForm)
    # Delta = floor(6 / 0.2^4) = 3750, n_lambda(2) = 3
    assert form.constant == 1 + 2 * 3 * 3750 ** 6 * (1 + 3750 + 3750 ** 2)
    assert degree_limit(1 / 3) == 486 and degree_limit(0.5) == 96
    with pytest.raises(BadParams):
        max_lines_formula(1 / 3, 1, 10)
    with pytest.raises(BadParams):
        max_lines_formula(1 / 3, 2, 1)


def test_serialisation_round_trip(tmp_path):
    _, s = lower_bound_construct(1 / 5, 9, cycle(3))
    text = lines_to_csv(s)
    assert len(text.splitlines()) == 12 and all(len(r.split(",")) == 9 for r in text.splitlines())
    back = lines_from_csv(text, 1 / 5)
    assert np.array_equal(back.vectors, s.vectors)
    js = lines_from_json(lines_to_json(s))
    assert js.alpha == 1 / 5 and js.dim == 9 and np.array_equal(js.vectors, s.vectors)
    with pytest.raises(DimensionMismatch):
        lines_from_csv("1,0\n0,1,0\n", 0.2)
