import pytest

tc = pytest.importorskip("treecolor")


def test_tree_roundtrip():
    t = tc.BinaryTree("((..).)")
    assert str(t) == "((..).)"
    assert t.carets == 2
    assert t.internal == ["e", "0"]


def test_catalan_matches_enumeration():
    for n in range(7):
        assert len(tc.all_trees(n)) == tc.catalan(n)


def test_pair_coloring():
    p = tc.TreePair("(((..).), (.(..)))")
    assert tc.colorings_of_pair(p) in (["212"], ["313"])


def test_every_listed_coloring_is_valid():
    for t in tc.all_trees(4):
        cs = tc.normalized_colorings(t)
        assert cs
        assert all(tc.is_valid(t, c) for c in cs)


def test_sign_structure_example():
    assert len(tc.sign_structure("0 e 1")) == 3
    assert not tc.is_balanced("0 e 1")
    assert tc.is_balanced("0 e")


def test_word_to_pair_inverse():
    p = tc.word_to_pair("0 e ~1")
    q = tc.word_to_pair("1 ~e ~0")
    assert str((p * q).reduced()) == "(., .)"


def test_counts():
    partial = [sum(tc.jacobsthal(k) for k in range(1, n + 1)) for n in range(1, 10)]
    assert [tc.count_rigid(n) for n in range(1, 10)] == partial
    assert all(tc.count_acceptable(n) == tc.count_rigid(n) + tc.count_flexible(n) for n in range(1, 12))
    assert [tc.jacobsthal(n) for n in range(6)] == [0, 1, 1, 3, 5, 11]


def test_family_closed_form():
    for n in range(6, 10):
        assert tc.family_colorings("W", n) // 24 == tc.closed_form("W", n)


def test_search_is_job_independent():
    assert tc.max_coloring_search(6, 1) == tc.max_coloring_search(6, 3)
    assert tc.max_coloring_search(7)[0][0] == 5


def test_suite_runs():
    ok, detail = tc.run_suite("trichotomy", 6)
    assert ok, detail


def test_errors_raise():
    with pytest.raises(ValueError):
        tc.BinaryTree("(..(")
