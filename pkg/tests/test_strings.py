from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from stringcone.cartan import path_diagram
from stringcone.crystal import same_labelled_graph
from stringcone.lusztig import lusztig_crystal, move_vectors
from stringcone.arquiver import build_ar
from stringcone.quiver import adapted_word, all_orientations
from stringcone.strings import (
    LetterAbsent,
    cone_points,
    cone_points_pruned,
    generate_strings,
    in_cone,
    inequalities_json,
    is_string,
    pretty_inequality,
    string_crystal,
    string_e,
    string_f,
    string_r,
    string_weight,
    strings_in_box,
)

D2 = path_diagram(2)
W2 = (1, 2, 1)


def test_r_vector_examples():
    assert string_r(D2, W2, (0, 0, 0)) == (0, 0, 0)
    assert string_r(D2, W2, (1, 1, 0)) == (1, 0, 1)
    assert string_r(D2, W2, (0, 1, 0)) == (0, 1, -1)


def test_raising_ties_break_at_last_position():
    assert string_e(D2, W2, 1, (0, 0, 0)) == (0, 0, 1)
    assert string_e(D2, W2, 2, (0, 0, 0)) == (0, 1, 0)


def test_lowering_kills_zero():
    assert string_f(D2, W2, 1, (0, 0, 0)) is None
    assert string_f(D2, W2, 2, (0, 0, 0)) is None


def test_letter_absent():
    with pytest.raises(LetterAbsent):
        string_e(D2, (1, 2, 1), 3, (0, 0, 0))


def test_membership_examples():
    assert not is_string(D2, W2, (1, 0, 0))
    assert is_string(D2, W2, (1, 1, 0))
    for m in range(3):
        assert is_string(D2, W2, (0, 0, m))


def test_generate_strings_box_two_is_the_known_cone():
    got = generate_strings(D2, W2, 2)
    expected = {
        (a1, a2, a3)
        for a1 in range(3)
        for a2 in range(3)
        for a3 in range(3)
        if a1 <= a2
    }
    assert got == frozenset(expected)
    assert len(got) == 18


def test_generate_strings_box_zero():
    assert generate_strings(D2, W2, 0) == frozenset({(0, 0, 0)})


def test_box_filter_matches_generation_a3(a3):
    q, word = a3
    d = q.diagram
    assert strings_in_box(d, word, 1) == generate_strings(d, word, 1)
    ar = build_ar(q)
    normals = move_vectors(ar, check_condition=False)
    box_points = frozenset(
        a for a in product(range(2), repeat=6) if in_cone(a, normals)
    )
    assert generate_strings(d, word, 1) == box_points


@pytest.mark.parametrize("n", range(1, 5))
def test_oracle_agreement_type_a(n):
    d = path_diagram(n)
    box = 3 if n <= 3 else 2
    for q in all_orientations(d):
        word = adapted_word(q)
        generated = generate_strings(d, word, box)
        assert strings_in_box(d, word, box) == generated
        if (box + 1) ** len(word) <= 5000:
            naive = frozenset(
                a
                for a in product(range(box + 1), repeat=len(word))
                if is_string(d, word, a)
            )
            assert naive == generated


def test_oracle_agreement_d4(d4):
    q, word = d4
    d = q.diagram
    for box in (1, 2):
        assert strings_in_box(d, word, box) == generate_strings(d, word, box)


def test_every_generated_vertex_is_a_string(a3):
    q, word = a3
    d = q.diagram
    for a in sorted(generate_strings(d, word, 2)):
        assert is_string(d, word, a)


@given(st.lists(st.integers(1, 3), min_size=0, max_size=8))
@settings(deadline=None)
def test_raise_then_lower_roundtrip(seq):
    d = path_diagram(3)
    word = (1, 3, 2, 1, 3, 2)
    a = (0,) * 6
    for i in seq:
        up = string_e(d, word, i, a)
        assert string_f(d, word, i, up) == a
        a = up
    assert is_string(d, word, a)
    for i in (1, 2, 3):
        down = string_f(d, word, i, a)
        if down is not None and is_string(d, word, down):
            assert string_e(d, word, i, down) == a


def test_weight_increment(a3):
    q, word = a3
    d = q.diagram
    for a in sorted(generate_strings(d, word, 1)):
        for i in (1, 2, 3):
            up = string_e(d, word, i, a)
            diff = tuple(
                x - y for x, y in zip(string_weight(d, word, up), string_weight(d, word, a))
            )
            assert diff == tuple(1 if j == i - 1 else 0 for j in range(3))


def test_in_cone_examples():
    K = [(1, 0, 0), (-1, 1, 0), (0, 0, 1)]
    assert in_cone((1, 2, 0), K)
    assert not in_cone((1, 0, 0), K)
    assert cone_points([], 1, 3) == frozenset(product(range(2), repeat=3))
    with pytest.raises(ValueError):
        in_cone((1, 0), K)


@given(st.data())
@settings(deadline=None, max_examples=40)
def test_pruned_scan_matches_naive(data):
    dim = data.draw(st.integers(2, 4))
    box = data.draw(st.integers(0, 3))
    normals = data.draw(
        st.lists(
            st.tuples(*[st.integers(-2, 2) for _ in range(dim)]),
            min_size=0,
            max_size=4,
        )
    )
    assert cone_points_pruned(normals, box, dim) == cone_points(normals, box, dim)


def test_pretty_forms():
    assert pretty_inequality((0, 0, 0, 1, 1, 0, -1)) == "t4+t5-t7>=0"
    assert pretty_inequality((1, 0, 0)) == "t1>=0"
    assert pretty_inequality((-1, 0, 2)) == "2t3-t1>=0"
    assert pretty_inequality((0, 0)) == "0>=0"


def test_inequalities_json_shape():
    rows = inequalities_json([(2, (0, -1, 0, 1, 0, 0))])
    assert rows == [{"type": 2, "normal": [0, -1, 0, 1, 0, 0], "pretty": "t4-t2>=0"}]


def test_string_crystal_matches_move_crystal_shape(a3):
    q, word = a3
    d = q.diagram
    ar = build_ar(q)
    for depth in (3, 6):
        g_string = string_crystal(d, word, depth)
        g_move = lusztig_crystal(ar, depth)
        assert same_labelled_graph(g_string, g_move)


def test_string_crystal_d4(d4):
    q, word = d4
    graph = string_crystal(q.diagram, word, 3)
    assert (0,) * 12 in graph.vertices
    for v, i, w in graph.edges:
        assert sum(w) == sum(v) + 1
