import itertools

import pytest

from stochpoly.enumeration import (
    ResourceCapExceeded,
    count_latin_squares,
    enumerate_latin_squares,
    enumerate_vertices_bruteforce,
    enumerate_vertices_dd,
)
from stochpoly.polytope import is_vertex
from stochpoly.tensor import Tensor3, latin_to_tensor, support


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 12), (4, 576)])
def test_latin_enumeration_counts(n, expected):
    squares = enumerate_latin_squares(n)
    assert len(squares) == expected
    assert len(set(squares)) == expected  # duplicate-free
    assert count_latin_squares(n) == expected


def test_latin_count_order5():
    assert count_latin_squares(5) == 161280


def test_latin_cap():
    with pytest.raises(ResourceCapExceeded):
        enumerate_latin_squares(6)
    with pytest.raises(ResourceCapExceeded):
        count_latin_squares(6)
    with pytest.raises(ValueError):
        count_latin_squares(0)


def test_latin_enumeration_is_lexicographic():
    squares = enumerate_latin_squares(3)
    cells = [s.cells for s in squares]
    assert cells == sorted(cells)


def test_vertices_n1():
    for vs in (enumerate_vertices_dd(1), enumerate_vertices_bruteforce(1)):
        assert vs.total == 1
        assert vs.vertices[0] == Tensor3([[[1]]])
        assert vs.zero_one == 1


def test_vertices_n2_both_methods():
    expected = sorted(
        (latin_to_tensor(s) for s in enumerate_latin_squares(2)),
        key=lambda t: t.flatten(),
    )
    dd = enumerate_vertices_dd(2)
    brute = enumerate_vertices_bruteforce(2)
    assert list(dd.vertices) == expected
    assert list(brute.vertices) == expected
    assert dd.zero_one == 2 and dd.fractional == 0


def test_dd_insertion_order_does_not_matter():
    reference = enumerate_vertices_dd(2)
    indices = list(range(8))
    for order in itertools.islice(itertools.permutations(indices), 0, 24, 5):
        vs = enumerate_vertices_dd(2, insertion_order=list(order))
        assert vs.vertices == reference.vertices
    vs_rev = enumerate_vertices_dd(2, insertion_order=list(reversed(indices)))
    assert vs_rev.vertices == reference.vertices


def test_dd_insertion_order_validation():
    with pytest.raises(ValueError):
        enumerate_vertices_dd(2, insertion_order=[0, 1])


def test_cross_method_agreement_n3(dd3, brute3):
    assert dd3.vertices == brute3.vertices
    assert dd3.total == 66  # cross-validated by the independent oracle above
    assert dd3.zero_one == 12
    assert dd3.fractional == 54


def test_vertex_set_members_pass_certification(dd3, latin3_tensors, half_vertex):
    verts = set(dd3.vertices)
    assert half_vertex in verts
    for t in latin3_tensors:
        assert t in verts
    for t in dd3.vertices:
        cert = is_vertex(t)
        assert cert.verdict == "vertex"
        assert 9 <= cert.support_size <= 19  # n^2 .. 3n^2-3n+1


def test_vertex_set_is_canonically_sorted(dd3):
    flats = [t.flatten() for t in dd3.vertices]
    assert flats == sorted(flats)


def test_vertex_set_json(dd3):
    obj = dd3.to_json()
    assert obj["total"] == 66
    assert obj["zero_one"] == 12
    assert obj["fractional"] == 54
    assert len(obj["vertices"]) == 66
    assert obj["vertices"][0]["n"] == 3


def test_brute_force_caps():
    with pytest.raises(ResourceCapExceeded):
        enumerate_vertices_bruteforce(4)
    with pytest.raises(ResourceCapExceeded):
        enumerate_vertices_bruteforce(3, max_cells=1000)


def test_dd_cap():
    with pytest.raises(ResourceCapExceeded):
        enumerate_vertices_dd(3, max_cells=3)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("STOCHPOLY_MAX_CELLS", "5")  # n=2 has C(8,7) = 8 candidates
    with pytest.raises(ResourceCapExceeded):
        enumerate_vertices_bruteforce(2)
    monkeypatch.setenv("STOCHPOLY_MAX_CELLS", "not-a-number")
    with pytest.raises(ValueError):
        enumerate_vertices_bruteforce(2)


def test_latin_count_sandwiched_by_vertex_count_and_upper_bound(dd3):
    from stochpoly.bounds import bound_lzz

    f0_2 = enumerate_vertices_dd(2).total
    assert count_latin_squares(2) <= f0_2 <= bound_lzz(2)  # 2 <= 2 <= 2
    assert count_latin_squares(3) <= dd3.total <= bound_lzz(3)  # 12 <= 66 <= 10395


def test_all_zero_one_vertices_are_latin_tensors(dd3):
    zero_one = [
        t
        for t in dd3.vertices
        if all(v in (0, 1) for layer in t.entries for row in layer for v in row)
    ]
    expected = {latin_to_tensor(s) for s in enumerate_latin_squares(3)}
    assert set(zero_one) == expected


def test_fractional_vertices_have_larger_support(dd3):
    # (0,1) vertices sit at the n^2 support floor; fractional ones above it
    for t in dd3.vertices:
        size = len(support(t))
        if all(v in (0, 1) for layer in t.entries for row in layer for v in row):
            assert size == 9
        else:
            assert size > 9
