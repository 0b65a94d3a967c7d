import json

import pytest

from stringcone.quiver import parse_quiver
from stringcone.verify import (
    ConditionLFails,
    NotTypeAInstance,
    check_cone,
    check_conjecture,
    check_theorem_2_4,
    run_suite,
    structural_reports,
)
from stringcone.wiring import build_wiring, gp_cone


def test_theorem_a2():
    r = check_theorem_2_4(parse_quiver("2>1"), (1, 2, 1))
    assert r.passed and r.witness is None


def test_theorem_a3_typed(a3):
    q, word = a3
    assert check_theorem_2_4(q, word, strict=True).passed


def test_theorem_rejects_type_d(d4):
    with pytest.raises(NotTypeAInstance):
        check_theorem_2_4(d4[0])


def test_cone_a2_box3():
    q = parse_quiver("2>1")
    word = (1, 2, 1)
    wd = build_wiring(word, 2)
    r = check_cone(q.diagram, word, gp_cone(wd), 3)
    assert r.passed


def test_cone_a3_box2(a3):
    q, word = a3
    wd = build_wiring(word, 3)
    assert check_cone(q.diagram, word, gp_cone(wd), 2).passed


def test_cone_reports_witness_when_normal_dropped(a3):
    q, word = a3
    wd = build_wiring(word, 3)
    full = sorted(gp_cone(wd))
    # dropping a mixed-sign normal admits box points that are not strings
    pruned = [v for v in full if v != (0, 0, -1, 1, 1, 0)]
    r = check_cone(q.diagram, word, pruned, 2)
    assert not r.passed
    assert r.witness is not None


def test_conjecture_d4(d4):
    r = check_conjecture(*d4, box=1)
    assert r.passed
    assert r.check == "moves_define_cone_box1"


def test_conjecture_rejects_failing_orientation():
    q = parse_quiver("3>1,3>2,3>4")
    with pytest.raises(ConditionLFails):
        check_conjecture(q, box=1)


def test_conjecture_matches_cone_verdict_on_type_a(a3):
    q, word = a3
    wd = build_wiring(word, 3)
    via_moves = check_conjecture(q, word, box=2)
    via_paths = check_cone(q.diagram, word, gp_cone(wd), 2)
    assert via_moves.passed == via_paths.passed


def test_conjecture_every_multiplicity_one_branch_orientation():
    from stringcone.arquiver import build_ar
    from stringcone.cartan import d_diagram
    from stringcone.quiver import all_orientations, condition_L

    for q in all_orientations(d_diagram(4)):
        if condition_L(q, build_ar(q)):
            assert check_conjecture(q, box=1).passed


def _adapted_words(q, limit):
    from stringcone.cartan import cartan_matrix, num_positive_roots, simple_root
    from stringcone.quiver import is_sink, reflect_sink

    d = q.diagram
    cm = cartan_matrix(d)
    n_pos = num_positive_roots(d)
    out = []

    def extend(word, cur, images):
        if len(out) == limit:
            return
        if len(word) == n_pos:
            out.append(tuple(word))
            return
        for i in range(1, d.n + 1):
            if is_sink(cur, i) and all(x >= 0 for x in images[i - 1]):
                base = images[i - 1]
                nxt = [
                    tuple(-x for x in base)
                    if j == i - 1
                    else tuple(x - cm[i - 1][j] * y for x, y in zip(img, base))
                    for j, img in enumerate(images)
                ]
                extend(word + [i], reflect_sink(cur, i), nxt)

    extend([], q, [simple_root(d, j) for j in range(1, d.n + 1)])
    return out


def test_non_canonical_adapted_words(a3, d4):
    # every adapted word, not just the greedy one, satisfies the suite
    q3, _ = a3
    for word in _adapted_words(q3, limit=10):
        assert check_theorem_2_4(q3, word, strict=True).passed
        assert all(r.passed for r in structural_reports(q3, word))
    q4, _ = d4
    for word in _adapted_words(q4, limit=4):
        assert all(r.passed for r in structural_reports(q4, word))


def test_cone_holds_for_non_adapted_words():
    # the path-cone description is not restricted to adapted words
    from stringcone.cartan import path_diagram, simple_root, weyl_act

    d = path_diagram(3)
    words = []

    def extend(prefix):
        if len(prefix) == 6:
            words.append(tuple(prefix))
            return
        for i in (1, 2, 3):
            if all(x >= 0 for x in weyl_act(d, prefix, simple_root(d, i))):
                extend(prefix + [i])

    extend([])
    assert len(words) == 16
    for word in words:
        wd = build_wiring(word, 3)
        assert check_cone(d, word, gp_cone(wd), 2).passed


def test_structural_reports_clean_instances(a3, d4):
    for q, word in (a3, d4):
        reports = structural_reports(q, word)
        assert reports and all(r.passed for r in reports)


def test_suite_rank_two():
    summary = run_suite(2, 3)
    assert summary.ok
    # two orientations of the rank-two line plus the single-vertex case
    instances = {r.instance for r in summary.reports}
    assert len(instances) == 3


def test_suite_trivial_rank():
    assert run_suite(1, 2).ok


def test_reports_are_deterministic():
    a = run_suite(2, 2)
    b = run_suite(2, 2)
    assert [r.as_json() for r in a.reports] == [r.as_json() for r in b.reports]
    payload = json.dumps(a.as_json(), sort_keys=True)
    assert payload == json.dumps(b.as_json(), sort_keys=True)


def test_report_json_schema(a3):
    r = check_theorem_2_4(*a3)
    blob = r.as_json()
    assert set(blob) == {"instance", "check", "pass", "witness"}
    assert blob["pass"] is True
