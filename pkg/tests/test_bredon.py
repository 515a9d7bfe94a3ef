import random

import pytest

from racgk.bredon import (CochainComplex, build_bredon_complex,
                          clique_basis_isomorphism, cohomology,
                          interval_complex, interval_tensor_kunneth,
                          inverse_limit, restriction_family, rho_surjectivity,
                          tensor_complex)
from racgk.graphs import enumerate_spherical, parse_graph
from racgk.intlinalg import is_zero, mat_mul
from racgk.kring import KRingElement
from conftest import complete_graph, edgeless_graph, path_graph


def test_complex_rejects_bad_dimensions():
    with pytest.raises(ValueError, match="columns"):
        CochainComplex([2, 1], [[[1]]])


def test_complex_rejects_nonzero_composite():
    with pytest.raises(ValueError, match="d\\^1 o d\\^0"):
        CochainComplex([1, 1, 1], [[[1]], [[1]]])


def test_k1_complex_shape():
    g = complete_graph(1)
    c = build_bredon_complex(g)
    assert c.ranks == [3, 1]
    coh = cohomology(c)
    assert coh[0] == {"degree": 0, "free_rank": 2, "torsion": []}
    assert coh[1] == {"degree": 1, "free_rank": 0, "torsion": []}


def test_p3_degree_zero_rank():
    # one summand of rank 2^|J| per clique: 1 + 2 + 2 + 2 + 4 + 4
    g = path_graph(3)
    c = build_bredon_complex(g)
    assert c.ranks[0] == 15


def test_differentials_compose_to_zero(suite_entry):
    _, graph, _ = suite_entry
    c = build_bredon_complex(graph)
    for k in range(len(c.diffs) - 1):
        assert is_zero(mat_mul(c.diffs[k + 1], c.diffs[k]))


def test_cohomology_concentrated_in_degree_zero(suite_entry):
    _, graph, d = suite_entry
    coh = cohomology(build_bredon_complex(graph))
    assert coh[0]["free_rank"] == d
    assert coh[0]["torsion"] == []
    for entry in coh[1:]:
        assert entry["free_rank"] == 0
        assert entry["torsion"] == []


def test_all_zero_differentials_give_full_rank():
    c = CochainComplex([2, 3], [[[0, 0], [0, 0], [0, 0]]])
    coh = cohomology(c)
    assert [e["free_rank"] for e in coh] == [2, 3]


def test_limit_rank_equals_clique_count(suite_entry):
    _, graph, d = suite_entry
    assert inverse_limit(graph).rank == d


def test_limit_rank_edgeless_two():
    assert inverse_limit(edgeless_graph(2)).rank == 3


def test_limit_contains_restriction_families():
    g = path_graph(3)
    cliques = enumerate_spherical(g)
    limit = inverse_limit(g, cliques)
    solver = limit.coordinates_solver()
    for c in cliques:
        vec = restriction_family(g, limit, KRingElement.monomial(g, c))
        assert solver.solve(vec) is not None


def test_rho_surjective(suite_entry):
    name, graph, d = suite_entry
    if name == "Petersen":
        pytest.skip("exercised in the acceptance suite")
    rep = rho_surjectivity(graph)
    assert rep["surjective"]
    assert rep["rank"] == d


def test_rho_bijective_on_complete_graphs():
    for n in (1, 2, 3):
        g = complete_graph(n)
        rep = rho_surjectivity(g)
        assert rep["surjective"]
        assert rep["rank"] == 2 ** n


def test_clique_basis_isomorphism(suite_entry):
    name, graph, d = suite_entry
    if name == "Petersen":
        pytest.skip("exercised in the acceptance suite")
    rep = clique_basis_isomorphism(graph)
    assert rep["isomorphism"]
    assert rep["rank"] == d


def test_interval_complex_cohomology():
    coh = cohomology(interval_complex())
    assert coh[0] == {"degree": 0, "free_rank": 1, "torsion": []}
    assert coh[1] == {"degree": 1, "free_rank": 0, "torsion": []}


def test_tensor_rank_bookkeeping():
    c = interval_complex()
    c2 = tensor_complex(c, c)
    assert c2.ranks == [4, 4, 1]
    c3 = tensor_complex(c2, c)
    assert c3.ranks == [8, 12, 6, 1]


def test_tensor_of_random_free_complexes_is_a_complex():
    rng = random.Random(67)
    for _ in range(20):
        # random two-term complexes always satisfy d o d = 0
        r0, r1 = rng.randint(1, 3), rng.randint(1, 3)
        d = [[rng.randint(-2, 2) for _ in range(r0)] for _ in range(r1)]
        c = CochainComplex([r0, r1], [d])
        tensor_complex(c, c)  # constructor asserts d o d = 0


def test_kunneth_small_cases():
    for n in (1, 2, 3, 4):
        rep = interval_tensor_kunneth(n)
        assert rep["ok"], rep
        assert rep["ranks"][0] == 2 ** n


def test_kunneth_cap():
    with pytest.raises(ValueError, match="cap"):
        interval_tensor_kunneth(7)
    with pytest.raises(ValueError):
        interval_tensor_kunneth(0)


def test_three_rank_computations_agree(suite_entry):
    name, graph, d = suite_entry
    if name == "Petersen":
        pytest.skip("exercised in the acceptance suite")
    from racgk.kring import presentation_report
    assert presentation_report(graph)["rank"] == d
    assert inverse_limit(graph).rank == d
    assert cohomology(build_bredon_complex(graph))[0]["free_rank"] == d
