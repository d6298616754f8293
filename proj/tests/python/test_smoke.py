"""Smoke tests for the Python bindings."""

import pytest

import tsskit as tk


@pytest.fixture
def path3():
    return tk.TssInstance(3, [(0, 1), (1, 2)], [1, 1, 1])


def test_instance_surface(path3):
    assert path3.vertex_count == 3
    assert path3.edge_count == 2
    assert path3.edges == [(0, 1), (1, 2)]
    assert path3.thresholds == [1, 1, 1]
    assert path3.neighbors(1) == [0, 2]
    assert path3.degree(1) == 2
    assert path3.threshold(0) == 1
    assert path3.bipartition is None
    assert "TssInstance" in repr(path3)


def test_instance_validation():
    with pytest.raises(ValueError):
        tk.TssInstance(2, [(0, 0)], [1, 1])  # self loop
    with pytest.raises(ValueError):
        tk.TssInstance(2, [(0, 1)], [1])  # threshold count


def test_text_round_trip(path3):
    text = tk.write_tss(path3)
    again = tk.parse_tss(text)
    assert again.edges == path3.edges
    assert again.thresholds == path3.thresholds
    with pytest.raises(tk.ParseError):
        tk.parse_tss("p tss 1 0\n")  # missing threshold line
    assert issubclass(tk.ParseError, ValueError)


def test_diffusion(path3):
    rounds, stamps = tk.diffuse(path3, [0])
    assert rounds == [[0], [1], [2]]
    assert stamps == [0, 1, 2]
    assert tk.influence(path3, [0]) == [0, 1, 2]
    assert tk.is_target_set(path3, [0])
    gate = tk.TssInstance(3, [(0, 1), (1, 2)], [1, 2, 1])
    assert not tk.is_target_set(gate, [0])


def test_vertex_covers(path3):
    assert tk.is_vertex_cover(path3, [1])
    assert not tk.is_vertex_cover(path3, [0])
    assert tk.exact_min_vertex_cover(path3, 3) == [1]
    assert tk.exact_min_vertex_cover(path3, 0) is None
    assert tk.is_vertex_cover(path3, tk.approx_vertex_cover(path3))
    assert tk.select_solver_cover(path3) == [1]


def test_solvers_agree():
    for seed in range(8):
        g = tk.generate_bounded_vc(2, 8, density=0.4, seed=seed)
        exact = tk.solve_optimal(g, threads=2)
        brute = tk.brute_force_tss(g)
        assert exact.size == brute.size
        assert tk.is_target_set(g, exact.witness)
        assert exact.stats["guesses"] >= 1


def test_decision(path3):
    assert tk.solve_decision(path3, [1], 1) == [1]
    assert tk.solve_decision(path3, [1], 0) is None


def test_result_formatting(path3):
    result = tk.solve_optimal(path3)
    assert result.size == 1
    text = tk.write_result(result)
    assert text.startswith("s 1\n")
    assert "SolveResult" in repr(result)


def test_greedy(path3):
    assert tk.is_target_set(path3, tk.greedy_tss(path3))


def test_setcover_surface():
    sc = tk.SetCoverInstance(3, [[0, 1], [1, 2], [2]])
    assert sc.ground_size == 3
    assert sc.uncovered_elements == []
    size, picks = tk.brute_force_setcover(sc)
    assert size == 2
    assert tk.greedy_set_cover(sc)
    graph, empties = tk.setcover_to_tss(sc)
    assert empties == []
    assert graph.vertex_count == 6
    assert graph.bipartition == ([0, 1, 2], [3, 4, 5])
    opt = tk.brute_force_tss(graph)
    assert opt.size == size
    normalized = tk.normalize_bipartite_solution(graph, opt.witness)
    assert set(normalized) <= {3, 4, 5}
    assert tk.is_target_set(graph, normalized)


def test_subdivision(path3):
    sub = tk.subdivide_to_bipartite(path3)
    assert sub.vertex_count == path3.vertex_count + path3.edge_count
    assert sub.edge_count == 2 * path3.edge_count
    assert tk.brute_force_tss(sub).size == tk.brute_force_tss(path3).size


def test_mhs():
    inst = tk.MhsInstance([0, 1, 2], [[0, 1], [1, 2]], [1, 1], 1)
    assert inst.budget == 1
    assert tk.mhs_minimize(inst) == (1, [1])
    starved = tk.MhsInstance([0, 1], [[0], [1]], [1, 1], 1)
    assert tk.mhs_minimize(starved) is None


def test_generators():
    g1 = tk.generate_bounded_vc(2, 9, density=0.5, seed=11)
    g2 = tk.generate_bounded_vc(2, 9, density=0.5, seed=11)
    assert g1.edges == g2.edges and g1.thresholds == g2.thresholds
    assert tk.is_vertex_cover(g1, [0, 1])
    sc = tk.generate_setcover(5, 4, seed=3)
    assert sc.uncovered_elements == []
    with pytest.raises(ValueError):
        tk.generate_bounded_vc(5, 3)  # cover larger than the graph
    with pytest.raises(ValueError):
        tk.generate_bounded_vc(1, 4, mode="bogus")
