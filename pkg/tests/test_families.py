import pytest

from uniwiener import errors as E
from uniwiener.canon import canonical_code
from uniwiener.families import (
    HComposition,
    SubdividedStarSpec,
    hang_at_first,
    make_cycle,
    make_H,
    make_path,
    make_sab,
    make_star,
    pentagon_with_pendant,
    sab_spec,
    theorem1_family,
    theorem2_family,
)
from uniwiener.graph import ClassKey, build_unicyclic, even_degree_count, wiener
from uniwiener.trees import K1


def test_make_star_smallest_cases():
    assert make_star(0).size == 1  # single vertex
    assert make_star(1).size == 2  # single edge
    assert make_star(1).edges() == [(0, 1)]


def test_make_cycle_triangle():
    assert wiener(make_cycle(3)) == 3
    with pytest.raises(E.GirthTooSmallError):
        make_cycle(2)


def test_make_path_zero_edges():
    assert make_path(0).n == 1


def test_make_sab_examples():
    star4 = make_sab(4, 4)
    assert sab_spec(4, 4).lengths == (1, 1, 1, 1)  # plain 4-leaf star
    assert star4.code() == make_star(4).code()
    assert sab_spec(2, 3).lengths == (2, 1)
    assert sab_spec(3, 6).lengths == (2, 2, 2)


def test_make_sab_too_few():
    with pytest.raises(E.TooFewVerticesError):
        make_sab(4, 3)


def test_sab_spec_invariants():
    spec = sab_spec(3, 5)
    assert spec.is_almost_balanced and not spec.is_balanced
    assert sab_spec(3, 6).is_balanced
    with pytest.raises(E.VertexOutOfRangeError):
        SubdividedStarSpec(2, (1, 2))  # increasing lengths


def test_make_h_pentagon_with_pendant():
    h = make_H(HComposition(5, (make_star(1), K1, K1, K1, K1)))
    assert h.n == 6
    assert wiener(h) == 26
    assert canonical_code(h.graph) == canonical_code(pentagon_with_pendant().graph)


def test_make_h_bare_cycle():
    h = make_H(HComposition(6, (K1,) * 6))
    assert canonical_code(h.graph) == canonical_code(make_cycle(6).graph)


def test_make_h_triangle_two_leaves():
    h = make_H(HComposition(3, (make_star(2), K1, K1)))
    assert wiener(h) == 15  # join formula: 3 + 4 + 4 + 4


def test_make_h_size_exact():
    comp = HComposition(4, (make_sab(2, 3), make_star(1), K1, K1))
    assert make_H(comp).n == comp.total_vertices == 4 + 3 + 1


def test_theorem1_family_low_r():
    fam = theorem1_family(ClassKey(6, 0))
    assert len(fam) == 1
    triangle_leaf_each = build_unicyclic(
        6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]
    )
    assert canonical_code(fam[0].graph) == canonical_code(triangle_leaf_each.graph)


def test_theorem1_family_bare_cycle():
    fam = theorem1_family(ClassKey(5, 5))
    assert [canonical_code(g.graph) for g in fam] == [
        canonical_code(make_cycle(5).graph)
    ]


def test_theorem1_family_includes_pendant_pentagon():
    fam = theorem1_family(ClassKey(6, 4))
    codes = {canonical_code(g.graph) for g in fam}
    assert canonical_code(pentagon_with_pendant().graph) in codes
    assert len(fam) == 3  # girth-3 and girth-4 star shapes, plus the pentagon


def test_theorem1_family_members_realize_key():
    for n in range(3, 11):
        for r in range(n % 2, n + 1, 2):
            for g in theorem1_family(ClassKey(n, r)):
                assert g.n == n
                assert even_degree_count(g.graph) == r


def test_theorem2_family_exact_small_case():
    fam = theorem2_family(ClassKey(5, 3))
    assert len(fam) == 1
    triangle_two = build_unicyclic(5, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)])
    assert canonical_code(fam[0].graph) == canonical_code(triangle_two.graph)
    assert wiener(fam[0]) == 15


def test_theorem2_family_girth5_star_case():
    fam = theorem2_family(ClassKey(7, 5))
    assert len(fam) == 1
    assert fam[0].girth == 5
    assert wiener(fam[0]) == 39


def test_theorem2_family_rejects_bad_keys():
    with pytest.raises(E.InvalidClassKeyError):
        theorem2_family(ClassKey(9, 6))  # parity
    with pytest.raises(E.ClassKeyOutOfTheoremRangeError):
        theorem2_family(ClassKey(8, 6))  # 6 > (8+3)/2


def test_theorem2_subset_of_theorem1():
    for n in range(3, 11):
        for r in range(3, n + 1):
            if (n - r) % 2 or 2 * r > n + 3:
                continue
            t1 = {canonical_code(g.graph) for g in theorem1_family(ClassKey(n, r))}
            t2 = {canonical_code(g.graph) for g in theorem2_family(ClassKey(n, r))}
            assert t2 <= t1


def test_hang_at_first_girth():
    g = hang_at_first(7, make_star(4))
    assert g.girth == 7 and g.n == 11
    assert wiener(g) == 130
