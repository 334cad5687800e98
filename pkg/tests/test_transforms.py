from fractions import Fraction

import pytest

from uniwiener import errors as E
from uniwiener.canon import canonical_code
from uniwiener.families import hang_at_first, make_cycle, make_path, make_sab, make_star
from uniwiener.graph import build_unicyclic, even_degree_count, distances, wiener
from uniwiener.transforms import (
    ContractionChoice,
    ShiftSpec,
    all_shift_specs,
    bridges,
    contract_and_leaf,
    contraction_choice,
    cycle_distance_drop,
    operation_A,
    operation_A_delta_closed,
    rebalance,
    shift,
    shift_over_bridge,
)


def test_shift_four_vertex_path():
    g = make_path(3)
    spec = ShiftSpec(g, 1, 2, frozenset({0, 1}), frozenset({2, 3}))
    wxy = wiener(shift(spec, "x_to_y"))
    wyx = wiener(shift(spec, "y_to_x"))
    assert min(wxy, wyx) < wiener(g)


def test_shift_bridge_case_directions_coincide():
    g = make_path(3)
    spec = ShiftSpec(g, 1, 2, frozenset({0, 1}), frozenset({2, 3}))
    assert canonical_code(shift(spec, "x_to_y")) == canonical_code(shift(spec, "y_to_x"))


def test_shift_trivial_part():
    g = make_path(3)
    spec = ShiftSpec(g, 1, 2, frozenset({1}), frozenset({2, 3}))
    with pytest.raises(E.TrivialPartError):
        shift(spec, "x_to_y")


def test_shift_invalid_partition():
    g = make_cycle(4).graph
    spec = ShiftSpec(g, 0, 2, frozenset({0, 1}), frozenset({2, 3}))
    with pytest.raises(E.InvalidPartitionError):
        shift(spec, "x_to_y")


def test_shift_preserves_vertex_count():
    g = build_unicyclic(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5)]).graph
    for spec in all_shift_specs(g):
        if len(spec.x_side) < 2 or len(spec.y_side) < 2:
            continue
        assert shift(spec, "x_to_y").n == g.n


def test_bridges_of_unicyclic_graph_are_tree_edges():
    g = build_unicyclic(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5)])
    assert bridges(g.graph) == [(1, 5)]


def test_shift_over_bridge_path():
    g = make_path(3)
    out = shift_over_bridge(g, (1, 2))
    assert wiener(g) == 10 and wiener(out) == 9
    assert sorted(out.degree(v) for v in range(4)) == [1, 1, 1, 3]


def test_shift_over_bridge_dumbbell():
    # two triangles joined by a bridge: any graph is accepted, W must drop
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]
    from uniwiener.graph import Graph

    g = Graph.from_edges(6, edges)
    out = shift_over_bridge(g, (0, 3))
    assert wiener(out) < wiener(g)


def test_shift_over_bridge_trivial():
    with pytest.raises(E.TrivialBridgeError):
        shift_over_bridge(make_path(3), (0, 1))


def test_shift_over_bridge_not_a_bridge():
    with pytest.raises(E.NotABridgeError):
        shift_over_bridge(make_cycle(4).graph, (0, 1))
    with pytest.raises(E.NotABridgeError):
        shift_over_bridge(make_path(3), (0, 3))


def test_shift_over_bridge_parity_preserved_one_odd_end():
    g = build_unicyclic(7, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5), (3, 6)])
    # bridge (0,3): degrees 3 and 4 -> exactly one odd endpoint
    out = shift_over_bridge(g.graph, (0, 3))
    assert even_degree_count(out) == even_degree_count(g.graph)


def test_contract_c4_with_leaf():
    g = build_unicyclic(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)])
    choice = contraction_choice(g)
    assert choice.u == 1
    out = contract_and_leaf(g, choice)
    assert out.girth == 3 and out.n == 5
    assert wiener(g) == 16 and wiener(out) == 15
    assert even_degree_count(out.graph) == even_degree_count(g.graph)


def test_contract_excluded_configurations():
    pendant = hang_at_first(5, make_star(1))
    with pytest.raises(E.ExcludedConfigurationError):
        contract_and_leaf(pendant)
    two_apart = build_unicyclic(
        7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (3, 6)]
    )
    with pytest.raises(E.ExcludedConfigurationError):
        contract_and_leaf(two_apart)


def test_contract_adjacent_pendants_not_excluded():
    g = build_unicyclic(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6)])
    out = contract_and_leaf(g)
    assert wiener(out) < wiener(g)
    assert even_degree_count(out.graph) == even_degree_count(g.graph)


def test_contract_preconditions():
    with pytest.raises(E.PreconditionViolatedError):
        contract_and_leaf(make_cycle(5))  # max degree 2
    with pytest.raises(E.PreconditionViolatedError):
        contract_and_leaf(hang_at_first(3, make_star(2)))  # girth 3
    # an even-degree cycle vertex (degree 4) is allowed only once; degree-4
    # vertices are even, so the degree-parity precondition must reject them
    g = build_unicyclic(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5)])
    with pytest.raises(E.PreconditionViolatedError):
        contract_and_leaf(g)


def test_contract_rejects_bad_choice():
    g = build_unicyclic(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)])
    with pytest.raises(E.PreconditionViolatedError):
        contract_and_leaf(g, ContractionChoice(0, 3))  # d(0) = 2 not maximal


@pytest.mark.parametrize("g,expected", [(4, 1), (5, 1), (8, 6)])
def test_cycle_distance_drop_values(g, expected):
    assert cycle_distance_drop(g) == expected


def test_cycle_distance_drop_matches_brute_force():
    for g in range(4, 21):
        cyc = make_cycle(g).graph
        kept = range(1, g)  # drop vertex 0, compare with the shorter cycle
        pair_sum = sum(
            distances(cyc, u).dist[v] for u in kept for v in kept if u < v
        )
        assert cycle_distance_drop(g) == pair_sum - wiener(make_cycle(g - 1))


def test_cycle_distance_drop_rejects_triangle():
    with pytest.raises(E.GirthTooSmallError):
        cycle_distance_drop(3)


def test_rebalance_three_one():
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (0, 6)]
    g = build_unicyclic(7, edges)
    out = rebalance(g, 0, 3, 6)
    assert wiener(out) < wiener(g)
    assert sorted(len(b) for b in out.star_branches(0)) == [2, 2]
    assert even_degree_count(out.graph) == even_degree_count(g.graph)


def test_rebalance_gap_one_rejected():
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (0, 5)]
    g = build_unicyclic(6, edges)
    with pytest.raises(E.BranchesAlreadyBalancedError):
        rebalance(g, 0, 3, 5)


def test_rebalance_repeats_until_almost_balanced():
    # branches (4,1) -> (3,2): one application suffices to reach gap <= 1
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 6), (0, 7)]
    g = build_unicyclic(8, edges)
    out = rebalance(g, 0, 3, 7)
    assert sorted(len(b) for b in out.star_branches(0)) == [2, 3]
    assert wiener(out) < wiener(g)
    with pytest.raises(E.BranchesAlreadyBalancedError):
        rebalance(out, 0, out.star_branches(0)[0][0], out.star_branches(0)[1][0])


def test_rebalance_not_a_subdivided_star():
    # vertex 3 branches below the center, so the tree is not a subdivided star
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5), (4, 6)]
    g = build_unicyclic(7, edges)
    assert g.star_branches(0) is None
    with pytest.raises(E.NotASubdividedStarError):
        rebalance(g, 0, 3, 3)


def test_operation_a_girth7_star_keeps_wiener():
    g = hang_at_first(7, make_star(4))
    out = operation_A(g)
    assert wiener(g) == wiener(out) == 130
    assert out.girth == 6 and out.n == g.n
    assert even_degree_count(out.graph) == even_degree_count(g.graph)


def test_operation_a_girth4_increases_wiener():
    g = hang_at_first(4, make_star(2))
    out = operation_A(g)
    assert wiener(g) - wiener(out) == -1


def test_operation_a_errors():
    with pytest.raises(E.GirthTooSmallError):
        operation_A(hang_at_first(3, make_star(2)))
    with pytest.raises(E.NoLeafNeighborError):
        operation_A(hang_at_first(4, make_sab(2, 4)))
    with pytest.raises(E.WrongShapeError):
        operation_A(build_unicyclic(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]))
    with pytest.raises(E.WrongShapeError):
        operation_A(hang_at_first(4, make_sab(1, 3)))  # branch of length 3


def test_operation_a_delta_closed_values():
    assert operation_A_delta_closed(7, 5) == 0
    assert operation_A_delta_closed(4, 9) == -1
    assert operation_A_delta_closed(5, 2) == -3
    assert isinstance(operation_A_delta_closed(6, 3), Fraction)


def test_operation_a_delta_matches_brute_force():
    for girth in range(4, 9):
        for b in range(1, 5):
            for extra in range(0, b):
                g = hang_at_first(girth, make_sab(b, b + extra))
                delta = wiener(g) - wiener(operation_A(g))
                assert delta == operation_A_delta_closed(girth, 1 + b + extra)


def test_operation_a_independent_of_leaf_choice():
    # relabeling which pendant is "first" cannot change the result's class
    g = hang_at_first(6, make_sab(3, 4))
    base = canonical_code(operation_A(g).graph)
    perm = {0: 0, 1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 8, 7: 7, 8: 6, 9: 9}
    relabeled = build_unicyclic(10, [
        (perm[a], perm[b]) for a, b in g.graph.edges()
    ])
    assert canonical_code(operation_A(relabeled).graph) == base
